"""Command-line front end.

Subcommands mirror the library layers: `kummer`, `og6`, and `rank4` emit
theta reports; `lattice` answers pairing/divisibility/orbit questions about
the built-in lattices; `pairing` analyzes a pairing loaded from a JSON file;
`heisenberg` and `schrodinger` expose the group computations; `sweep` runs
the property suites and reports pass/fail counts.

Every subcommand accepts --json for machine-readable output (absent optional
fields are omitted, never null).  Exit codes: 0 success, 1 domain error
(single-line diagnostic on stderr), 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import math
import sys

from .finabgrp import (
    QmodZ,
    brute_cokernel,
    is_nondegenerate,
    pairing_cokernel,
    pairing_from_dict,
    pairing_radical,
)
from .heisenberg import h_commutator, heis_elem, schrodinger_matrix
from .invariants import (
    Family,
    LineBundleInvariants,
    kum_class_invariants,
    kum_cokernel_from_class,
    report_to_dict,
    theta_report,
)
from .lattices import (
    GramLattice,
    bbf_square,
    divisibility,
    kum_orbit_split,
    lambda_kum,
    lambda_og6,
    og6_class,
)
from .sweeps import run_all

__all__ = ["main"]


def _parse_lattice(name: str) -> tuple[GramLattice, int | None]:
    if name == "og6":
        return lambda_og6(), None
    if name.startswith("kum:"):
        try:
            n = int(name.split(":", 1)[1])
        except ValueError as exc:
            raise ValueError(f"bad lattice name {name!r}") from exc
        return lambda_kum(n), n
    raise ValueError(f"unknown lattice {name!r}; use kum:<n> or og6")


def _parse_ints(text: str, what: str) -> tuple[int, ...]:
    parts = [p.strip() for p in text.split(",")]
    try:
        return tuple(int(p) for p in parts)
    except ValueError as exc:
        raise ValueError(f"bad {what} {text!r}: expected comma-separated integers") from exc


def _parse_heis_elem(d_text: str, elem_text: str):
    d = _parse_ints(d_text, "type d")
    parts = elem_text.split(";")
    if len(parts) != 3:
        raise ValueError(f"bad element {elem_text!r}: expected 't;(x1,..);(f1,..)'")
    scalar_text, x_text, f_text = (p.strip() for p in parts)
    try:
        scalar = QmodZ.parse(scalar_text)
    except ValueError as exc:
        raise ValueError(f"bad scalar {scalar_text!r}") from exc
    coords = []
    for part in (x_text, f_text):
        if not (part.startswith("(") and part.endswith(")")):
            raise ValueError(f"bad component {part!r}: expected '(c1,..,cg)'")
        coords.append(_parse_ints(part[1:-1], "component"))
    if any(len(c) != len(d) for c in coords):
        raise ValueError("component length must match the type d")
    return heis_elem(d, scalar, coords[0], coords[1])


def _bool_text(value: bool) -> str:
    return "true" if value else "false"


def _report_lines(record: dict) -> list[str]:
    lines = []
    for key, value in record.items():
        if isinstance(value, bool):
            value = _bool_text(value)
        elif isinstance(value, list):
            value = "[" + ", ".join(str(v) for v in value) + "]"
        lines.append(f"{key}: {value}")
    return lines


def _cmd_kummer(args) -> tuple[dict, list[str]]:
    q_route = args.div is not None or args.q is not None
    class_route = args.a1 is not None or args.a2 is not None or args.x is not None
    if q_route == class_route:
        raise _Usage("provide either --div and --q, or --a1, --a2 and --x")
    if q_route:
        if args.div is None or args.q is None:
            raise _Usage("the (div, q) route needs both --div and --q")
        inv = LineBundleInvariants(family=Family.KUM, div=args.div, q=args.q, n=args.n)
        record = report_to_dict(theta_report(inv))
    else:
        if args.a1 is None or args.a2 is None or args.x is None:
            raise _Usage("the class route needs --a1, --a2 and --x")
        structure = kum_cokernel_from_class(args.n, args.a1, args.a2, args.x)
        inv = kum_class_invariants(args.n, args.a1, args.a2, args.x)
        base = report_to_dict(theta_report(inv))
        assert base["cokernel"] == list(structure.invariant_factors)
        record = {"family": base["family"], "n": args.n, "a1": args.a1, "a2": args.a2,
                  "x": args.x, "b1": math.gcd(args.n + 1, args.a1),
                  "b2": math.gcd(args.n + 1, args.a2)}
        record.update((k, v) for k, v in base.items() if k not in ("family", "n"))
    return record, _report_lines(record)


def _cmd_og6(args) -> tuple[dict, list[str]]:
    inv = LineBundleInvariants(family=Family.OG6, div=args.div, q=args.q)
    record = report_to_dict(theta_report(inv))
    return record, _report_lines(record)


def _cmd_rank4(args) -> tuple[dict, list[str]]:
    inv = LineBundleInvariants(family=Family.RANK4, div=2, q=args.e)
    record = report_to_dict(theta_report(inv))
    return record, _report_lines(record)


def _cmd_lattice(args) -> tuple[dict, list[str]]:
    lat, n = _parse_lattice(args.lattice)
    vec = _parse_ints(args.vector, "vector")
    if args.question == "div":
        value = divisibility(lat, vec)
        return {"div": value}, [str(value)]
    if args.question == "q":
        value = bbf_square(lat, vec)
        return {"q": value}, [str(value)]
    if args.question == "class":
        if lat.name != "og6":
            raise ValueError("orbit classes are defined on the og6 lattice")
        cls = og6_class(vec)
        return {"class": cls.value}, [cls.value]
    if n is None:
        raise ValueError("orbit splitting is defined on kum:<n> lattices")
    split = kum_orbit_split(n, vec)
    record = {
        "x0": split.x0,
        "p": split.p,
        "q": split.q,
        "beta": list(split.beta),
        "e": list(split.e),
        "f": list(split.f),
    }
    return record, _report_lines(record)


def _load_pairing(path: str):
    try:
        with open(path, encoding="utf-8") as handle:
            doc = json.load(handle)
    except OSError as exc:
        raise ValueError(f"cannot read {path}: {exc.strerror or exc}") from exc
    except json.JSONDecodeError as exc:
        raise ValueError(f"malformed pairing document: {exc}") from exc
    return pairing_from_dict(doc)


def _cmd_pairing(args) -> tuple[dict, list[str]]:
    pairing = _load_pairing(args.file)
    if args.question == "cokernel":
        structure = brute_cokernel(pairing) if args.oracle else pairing_cokernel(pairing)
        return {"cokernel": list(structure.invariant_factors)}, [str(structure)]
    if args.question == "radical":
        structure = pairing_radical(pairing)
        return {"radical": list(structure.invariant_factors)}, [str(structure)]
    value = is_nondegenerate(pairing)
    return {"nondegenerate": value}, [_bool_text(value)]


def _cmd_heisenberg(args) -> tuple[dict, list[str]]:
    a = _parse_heis_elem(args.d, args.a)
    b = _parse_heis_elem(args.d, args.b)
    value = h_commutator(a, b)
    return {"commutator": str(value)}, [str(value)]


def _cmd_schrodinger(args) -> tuple[dict, list[str]]:
    elem = _parse_heis_elem(args.d, args.elem)
    mat = schrodinger_matrix(elem)
    record = {
        "dim": mat.dim,
        "perm": list(mat.perm),
        "phases": [str(p) for p in mat.phases],
    }
    lines = [
        f"dim: {mat.dim}",
        "perm: " + " ".join(str(p) for p in mat.perm),
        "phases: " + " ".join(str(p) for p in mat.phases),
    ]
    return record, lines


def _cmd_sweep(args) -> tuple[list, list[str]]:
    results = run_all()
    record = [{"name": r.name, "passed": r.passed, "failed": r.failed} for r in results]
    lines = [f"{r.name}: passed={r.passed} failed={r.failed}" for r in results]
    total_failed = sum(r.failed for r in results)
    lines.append(f"total: passed={sum(r.passed for r in results)} failed={total_failed}")
    if total_failed:
        raise _SweepFailure(record, lines)
    return record, lines


class _Usage(Exception):
    """Missing/conflicting flags detected after parsing: maps to exit code 2."""


class _SweepFailure(Exception):
    def __init__(self, record, lines):
        super().__init__("property sweeps reported failures")
        self.record = record
        self.lines = lines


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hktheta",
        description="Exact theta-group invariants for Kummer-type and OG6-type manifolds.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, handler, help_text):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--json", action="store_true", help="machine-readable output")
        p.set_defaults(handler=handler)
        return p

    p = add("kummer", _cmd_kummer, "theta report for the Kummer-type family")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--div", type=int)
    p.add_argument("--q", type=int)
    p.add_argument("--a1", type=int)
    p.add_argument("--a2", type=int)
    p.add_argument("--x", type=int)

    p = add("og6", _cmd_og6, "theta report for the OG6 family")
    p.add_argument("--div", type=int, required=True)
    p.add_argument("--q", type=int, required=True)

    p = add("rank4", _cmd_rank4, "theta report for the rank-4 modular sheaves")
    p.add_argument("--e", type=int, required=True)

    p = add("lattice", _cmd_lattice, "lattice pairing, divisibility, and orbit data")
    p.add_argument("question", choices=["div", "q", "class", "orbit"])
    p.add_argument("--lattice", required=True, help="kum:<n> or og6")
    p.add_argument("--vector", required=True, help="comma-separated coordinates")

    p = add("pairing", _cmd_pairing, "analyze a pairing from a JSON file")
    p.add_argument("question", choices=["cokernel", "radical", "nondeg"])
    p.add_argument("--file", required=True)
    p.add_argument("--oracle", action="store_true",
                   help="force the brute-force enumeration path (cokernel only)")

    p = add("heisenberg", _cmd_heisenberg, "Heisenberg group computations")
    p.add_argument("question", choices=["commutator"])
    p.add_argument("--d", required=True, help="type, e.g. '3,3'")
    p.add_argument("--a", required=True, help="element 't;(x1,..);(f1,..)'")
    p.add_argument("--b", required=True, help="element 't;(x1,..);(f1,..)'")

    p = add("schrodinger", _cmd_schrodinger, "exact Schrodinger matrices")
    p.add_argument("question", choices=["matrix"])
    p.add_argument("--d", required=True, help="type, e.g. '3,3'")
    p.add_argument("--elem", required=True, help="element 't;(x1,..);(f1,..)'")

    add("sweep", _cmd_sweep, "run the property suites and report pass/fail counts")
    return parser


def _emit(args, record, lines):
    if args.json:
        print(json.dumps(record))
    else:
        for line in lines:
            print(line)


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        record, lines = args.handler(args)
    except _Usage as exc:
        parser.error(str(exc))  # exits with code 2
    except _SweepFailure as exc:
        _emit(args, exc.record, exc.lines)
        return 1
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    _emit(args, record, lines)
    return 0
