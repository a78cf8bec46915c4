"""hsw: exact symmetry analysis of endomorphism algebras of permutation modules."""

__version__ = "0.1.0"
