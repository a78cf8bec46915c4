"""Exception hierarchy shared by all hsw modules.

Every domain error carries enough context to be rendered as a
machine-readable JSON object by the CLI (``type`` plus ``detail``).
"""


class HswError(Exception):
    """Base class for all domain errors raised by this package."""

    def detail(self) -> dict:
        return {"message": str(self)}


# ---------------------------------------------------------------- perm

class MalformedCycle(HswError):
    pass


class PointOutOfRange(HswError):
    pass


class RepeatedPoint(HswError):
    pass


class DegreeMismatch(HswError):
    pass


class NotTransitive(HswError):
    pass


class NotRegular(HswError):
    pass


class CapExceeded(HswError):
    """Element enumeration hit the cap; carries the partial lower bound."""

    def __init__(self, partial_count, cap):
        super().__init__(
            f"group closure exceeds cap={cap} (at least {partial_count} elements)"
        )
        self.partial_count = partial_count
        self.cap = cap

    def detail(self) -> dict:
        return {
            "message": str(self),
            "partial_count": self.partial_count,
            "cap": self.cap,
        }


# -------------------------------------------------------------- gfield

class NotPrime(HswError):
    pass


class DimensionMismatch(HswError):
    pass


# ------------------------------------------------------------ coherent

class AxiomViolation(HswError):
    pass


class DegreeTooLarge(HswError):
    pass


# ------------------------------------------------------------- algebra

class ModeInfeasible(HswError):
    pass


class SearchSpaceTooLarge(HswError):
    pass


class FieldMismatch(HswError):
    pass


class NotAssociative(HswError):
    pass


class BadUnit(HswError):
    pass


# --------------------------------------------------------------- schur

class InvalidSchurPartition(HswError):
    """Partition fails a Schur-ring axiom; carries the first witness found."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness

    def detail(self) -> dict:
        d = {"message": str(self)}
        if self.witness is not None:
            d["witness"] = self.witness
        return d


class NotAutomorphism(HswError):
    pass


class IncompatibleInputs(HswError):
    """A wedge-product hypothesis failed; names the violated hypothesis."""

    def __init__(self, hypothesis):
        super().__init__(f"wedge hypothesis violated: {hypothesis}")
        self.hypothesis = hypothesis

    def detail(self) -> dict:
        return {"message": str(self), "hypothesis": self.hypothesis}


class GroupTooLarge(HswError):
    pass


class NotCyclic(HswError):
    pass


# ------------------------------------------------------------ criteria

class NotRankThree(HswError):
    pass


class EqualSubdegrees(HswError):
    pass


class CoefficientMismatch(HswError):
    pass


# ----------------------------------------------------------------- cli

class BadParameter(HswError):
    pass


class ParseError(HswError):
    def __init__(self, message, location=None):
        super().__init__(message)
        self.location = location

    def detail(self) -> dict:
        d = {"message": str(self)}
        if self.location is not None:
            d["location"] = self.location
        return d
