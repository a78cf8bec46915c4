"""Command-line front end.

Every command emits one report: JSON is the contract (keys sorted, two
space indent, trailing newline) and the text renderer is derived from the
same dict.  Reports echo the request, tool version and mode, so a fixed
request with a fixed seed is byte-reproducible.  Exit codes: 0 success,
2 domain error (machine-readable JSON on stderr), 3 infeasible mode.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional

import numpy as np

from . import __version__
from . import algebra as alg
from . import catalog, coherent, criteria, perm, presentations, schur
from .errors import BadParameter, HswError, ModeInfeasible, ParseError

SCHEMA = "hsw/1"


def _parse_char(text: str) -> tuple[int, int]:
    parts = text.split(",")
    if len(parts) == 1:
        return int(parts[0]), 1
    if len(parts) == 2:
        return int(parts[0]), int(parts[1])
    raise BadParameter(f"bad --char value {text!r}; expected p or p,k")


def _parse_primes(text: str) -> list[int]:
    try:
        return sorted({int(x) for x in text.split(",") if x.strip()})
    except ValueError as exc:
        raise BadParameter(f"bad --primes value {text!r}") from exc


def add_group_source(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--group", help="builtin spec, e.g. dihedral:4 or psl2:8")
    parser.add_argument("--file", help="path to a group JSON file")
    parser.add_argument("--gens", help="generators in cycle notation, ';' separated")
    parser.add_argument("--degree", type=int, help="degree for --gens")


def add_mode_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--mode", choices=["det", "rand"], default="det")
    parser.add_argument("--seed", type=int, default=None)
    parser.add_argument("--trials", type=int, default=alg.DEFAULT_TRIALS)
    parser.add_argument("--cap", type=int, default=perm.DEFAULT_CAP)


def load_group(args) -> perm.PermGroup:
    sources = [s for s in (args.group, args.file, args.gens) if s]
    if len(sources) != 1:
        raise BadParameter("give exactly one group source: --group, --file or --gens")
    if args.group:
        return catalog.builtin(args.group)
    if args.file:
        try:
            with open(args.file) as fh:
                data = json.load(fh)
        except OSError as exc:
            raise ParseError(f"cannot read {args.file}: {exc}") from exc
        except json.JSONDecodeError as exc:
            raise ParseError(f"bad JSON in {args.file}: {exc}",
                             location=f"line {exc.lineno}") from exc
        return perm.group_from_json(data)
    if args.degree is None:
        raise BadParameter("--gens requires --degree")
    gens = [perm.parse_permutation(part, args.degree)
            for part in args.gens.split(";") if part.strip()]
    if not gens:
        raise BadParameter("no generators given")
    return perm.PermGroup(gens)


def _mode_of(args) -> alg.Mode:
    if args.mode == "rand":
        if args.seed is None:
            raise BadParameter("randomized mode requires --seed")
        return alg.Randomized(args.seed, args.trials)
    return alg.Deterministic()


def _render_text(value, indent: int = 0) -> list[str]:
    pad = "  " * indent
    lines: list[str] = []
    if isinstance(value, dict):
        for key in sorted(value):
            sub = value[key]
            if isinstance(sub, (dict, list)):
                lines.append(f"{pad}{key}:")
                lines.extend(_render_text(sub, indent + 1))
            else:
                lines.append(f"{pad}{key}: {sub}")
    elif isinstance(value, list):
        for item in value:
            if isinstance(item, (dict, list)):
                lines.append(f"{pad}-")
                lines.extend(_render_text(item, indent + 1))
            else:
                lines.append(f"{pad}- {item}")
    else:
        lines.append(f"{pad}{value}")
    return lines


def emit(report: dict, args) -> None:
    if args.format == "json":
        text = json.dumps(report, sort_keys=True, indent=2) + "\n"
    else:
        text = "\n".join(_render_text(report)) + "\n"
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _envelope(command: str, request: dict, result: dict) -> dict:
    return {
        "schema": SCHEMA,
        "tool": "hsw",
        "version": __version__,
        "command": command,
        "request": request,
        "result": result,
    }


def _echo_request(args, fields) -> dict:
    out = {}
    for f in fields:
        v = getattr(args, f, None)
        if v is not None:
            out[f] = v
    return out


# ------------------------------------------------------------ commands

def cmd_orbitals(args) -> dict:
    G = load_group(args)
    cfg = coherent.orbitals(G)
    axioms = coherent.verify_axioms(cfg)
    result = {
        "degree": cfg.degree,
        "transitive": cfg.transitive,
        "rank": cfg.rank,
        "valencies": cfg.valencies,
        "representatives": [[o.rep[0] + 1, o.rep[1] + 1] for o in cfg.orbitals],
        "axioms": axioms.to_json(),
    }
    if cfg.transitive:
        result["subdegrees"] = cfg.subdegrees()
    if args.tensor:
        result["tensor"] = cfg.tensor.tolist()
    return result


def cmd_algebra(args) -> dict:
    G = load_group(args)
    p, k = _parse_char(args.char)
    cfg = coherent.orbitals(G)
    A = coherent.to_algebra(cfg, p, k)
    return {"algebra": alg.algebra_to_json(A)}


def _verdict_sweep(args, kind: str) -> dict:
    G = load_group(args)
    cfg = coherent.orbitals(G)
    if args.char:
        chars = [_parse_char(args.char)]
    else:
        primes = _parse_primes(args.primes) if args.primes else criteria.primes_up_to(G.degree)
        chars = [(p, 1) for p in primes]
    decide_fn = alg.is_symmetric if kind == "symmetric" else alg.is_frobenius
    mode = _mode_of(args)
    verdicts = []
    for p, k in chars:
        A = coherent.to_algebra(cfg, p, k)
        verdicts.append({"p": p, "k": k, "verdict": decide_fn(A, mode).to_json()})
    return {"kind": kind, "per_characteristic": verdicts}


def cmd_symmetric(args) -> dict:
    return _verdict_sweep(args, "symmetric")


def cmd_frobenius(args) -> dict:
    return _verdict_sweep(args, "frobenius")


def cmd_rank3(args) -> dict:
    G = load_group(args)
    cfg = coherent.orbitals(G)
    verdict = criteria.rank3_s_test(criteria.rank3_lambda(cfg))
    return {"rank3": verdict.to_json()}


def cmd_criteria(args) -> dict:
    G = load_group(args)
    primes = _parse_primes(args.primes) if args.primes else None
    seed = args.seed if args.seed is not None else 0
    report = criteria.s_report(G, primes=primes, seed=seed,
                               trials=args.trials, cap=args.cap)
    return {"report": report.to_json()}


def cmd_schur(args) -> dict:
    seed = getattr(args, "seed", None)
    seed = 0 if seed is None else seed
    if args.schur_command == "validate":
        with open(args.partition) as fh:
            part = schur.partition_from_json(json.load(fh))
        try:
            ring = schur.validate(part)
        except HswError as exc:
            return {"valid": False, "reason": exc.detail()}
        result = {"valid": True, "rank": ring.rank, "partition": part.to_json()}
        if part.group.is_cyclic_canonical():
            result["classification"] = schur.classify_cyclic(part)
        return result
    if args.schur_command == "enumerate":
        table = schur.cyclic_table(args.order)
        rings = schur.enumerate_all(table)
        result = {
            "order": args.order,
            "count": len(rings),
            "partitions": [[list(c) for c in r.partition.cells] for r in rings],
        }
        if args.primes:
            sweeps = []
            for r in rings:
                verdicts = {}
                for p in _parse_primes(args.primes):
                    v = alg.decide(r.to_algebra(p), "symmetric", seed=seed)
                    verdicts[str(p)] = v.exists
                sweeps.append(verdicts)
            result["symmetric"] = sweeps
        return result
    if args.schur_command == "build":
        G = load_group(args)
        c = perm.find_cyclic_regular(G, args.cap)
        if c is None:
            raise BadParameter("no cyclic regular subgroup found")
        elems = [perm.identity(G.degree)]
        x = c
        while not x.is_identity():
            elems.append(x)
            x = perm.compose(x, c)
        part = schur.from_regular_action(G, elems, cap=args.cap)
        canon = schur.canonicalize_cyclic(part)
        result = {
            "regular_generator": c.cycle_string(),
            "partition": part.to_json(),
            "canonical_cyclic": canon.to_json(),
            "classification": schur.classify_cyclic(canon),
        }
        if args.char:
            p, k = _parse_char(args.char)
            ring = schur.validate(part)
            v = alg.decide(ring.to_algebra(p, k), "symmetric", seed=seed)
            result["symmetric"] = v.to_json()
        return result
    raise BadParameter(f"unknown schur subcommand {args.schur_command!r}")


def cmd_presentation(args) -> dict:
    p, k = _parse_char(args.char)
    W = presentations.build(args.type, p, k)
    seed = args.seed if args.seed is not None else 0
    form = presentations.form_t(W)
    sym = alg.decide(W.algebra, "symmetric", seed=seed)
    frob = alg.decide(W.algebra, "frobenius", seed=seed)
    return {
        "type": args.type,
        "dimension": W.dim,
        "basis": ["1" if w == "" else w for w in W.basis],
        "constants": W.algebra.constants.tolist(),
        "form_t": form.to_json(),
        "symmetric": sym.to_json(),
        "frobenius": frob.to_json(),
    }


# ------------------------------------------------------------- driver

def build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(prog="hsw", description=__doc__)
    top.add_argument("--format", choices=["json", "text"], default="json")
    top.add_argument("--out", help="write the report to this path instead of stdout")
    sub = top.add_subparsers(dest="command", required=True)

    p = sub.add_parser("orbitals", help="orbital partition, valencies, axioms")
    add_group_source(p)
    p.add_argument("--tensor", action="store_true", help="include the full tensor")
    p.set_defaults(func=cmd_orbitals, request_fields=["group", "file", "gens", "degree"])

    p = sub.add_parser("algebra", help="export the coherent algebra")
    add_group_source(p)
    p.add_argument("--char", required=True, help="characteristic p or p,k")
    p.set_defaults(func=cmd_algebra, request_fields=["group", "file", "gens", "degree", "char"])

    for name, fn in (("symmetric", cmd_symmetric), ("frobenius", cmd_frobenius)):
        p = sub.add_parser(name, help=f"{name} decision per characteristic")
        add_group_source(p)
        p.add_argument("--char", help="single characteristic p or p,k")
        p.add_argument("--primes", help="comma-separated primes (default: primes <= degree)")
        add_mode_flags(p)
        p.set_defaults(func=fn, request_fields=[
            "group", "file", "gens", "degree", "char", "primes", "mode", "seed", "trials"])

    p = sub.add_parser("rank3", help="rank-3 parameter and gcd test")
    add_group_source(p)
    p.set_defaults(func=cmd_rank3, request_fields=["group", "file", "gens", "degree"])

    p = sub.add_parser("criteria", help="full per-prime criterion report")
    add_group_source(p)
    p.add_argument("--primes", help="comma-separated primes (default: primes <= degree)")
    add_mode_flags(p)
    p.set_defaults(func=cmd_criteria, request_fields=[
        "group", "file", "gens", "degree", "primes", "mode", "seed", "trials", "cap"])

    p = sub.add_parser("schur", help="Schur ring operations")
    ssub = p.add_subparsers(dest="schur_command", required=True)
    v = ssub.add_parser("validate", help="validate a partition JSON file")
    v.add_argument("--partition", required=True, help="path to partition JSON")
    v.set_defaults(func=cmd_schur, request_fields=["partition"])
    e = ssub.add_parser("enumerate", help="all Schur rings over a cyclic group")
    e.add_argument("--order", type=int, required=True)
    e.add_argument("--primes", help="also decide symmetry at these primes")
    e.add_argument("--seed", type=int, default=None)
    e.set_defaults(func=cmd_schur, request_fields=["order", "primes"])
    b = ssub.add_parser("build", help="transfer a cyclic regular subgroup")
    add_group_source(b)
    b.add_argument("--char", help="also decide symmetry at p or p,k")
    b.add_argument("--seed", type=int, default=None)
    b.add_argument("--cap", type=int, default=perm.DEFAULT_CAP)
    b.set_defaults(func=cmd_schur, request_fields=[
        "group", "file", "gens", "degree", "char", "cap"])

    p = sub.add_parser("presentation", help="rank-2 word algebra reports")
    p.add_argument("--type", required=True, choices=sorted(presentations.BRAID_LENGTH))
    p.add_argument("--char", required=True, help="characteristic p or p,k")
    p.add_argument("--seed", type=int, default=None)
    p.set_defaults(func=cmd_presentation, request_fields=["type", "char"])

    return top


def run(argv: Optional[list[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        result = args.func(args)
    except ModeInfeasible as exc:
        err = {"schema": SCHEMA, "error": {"type": type(exc).__name__, **exc.detail()}}
        sys.stderr.write(json.dumps(err, sort_keys=True) + "\n")
        return 3
    except HswError as exc:
        err = {"schema": SCHEMA, "error": {"type": type(exc).__name__, **exc.detail()}}
        sys.stderr.write(json.dumps(err, sort_keys=True) + "\n")
        return 2
    request = _echo_request(args, args.request_fields)
    if getattr(args, "seed", None) is None and "seed" in getattr(args, "request_fields", []):
        request["seed"] = 0
    command = args.command if not hasattr(args, "schur_command") else f"schur.{args.schur_command}"
    emit(_envelope(command, request, result), args)
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
