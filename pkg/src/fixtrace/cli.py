"""Command line front end: one JSON report on stdout per run.

Exit status is 0 on success and 1 when the report is an error object
(2 for command-line usage errors, also reported as JSON).
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import bicat, io
from .errors import BasepointError, FixtraceError, MalformedInputError
from .invariants import (fixed_point_indices, geomcheck, lefschetz_chain, lefschetz_homological,
                         nielsen_lower_bound, reidemeister_trace)
from .simplicial import betti_numbers


class UsageError(FixtraceError):
    code = "usage"


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _basepoint(K, label) -> int:
    if label is None:
        return 0
    label = str(label)
    if label not in K.vertices:
        raise BasepointError(f"basepoint {label!r} is not a vertex of the complex")
    return K.vertices.index(label)


def _epsilon(text):
    if text is None:
        return None
    try:
        eps = Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise MalformedInputError(f"epsilon {text!r} is not a rational number") from None
    if eps <= 0:
        raise MalformedInputError("epsilon must be positive")
    return eps


def _load_pair(args):
    K = io.parse_complex(args.complex)
    return K, io.parse_map(args.map, K)


def cmd_homology(args) -> dict:
    K = io.parse_complex(args.complex)
    b = betti_numbers(K)
    return {"betti": list(b.betti), "torsion": [list(t) for t in b.torsion],
            "euler_characteristic": b.euler_characteristic()}


def cmd_lefschetz(args) -> dict:
    K, f = _load_pair(args)
    h, c = lefschetz_homological(K, f), lefschetz_chain(K, f)
    return {"homological": h, "chain": c, "agree": h == c}


def cmd_reidemeister(args) -> dict:
    K, f = _load_pair(args)
    R = reidemeister_trace(K, f, _basepoint(K, args.basepoint), args.tc_bound)
    L = lefschetz_chain(K, f)
    out = R.to_dict()
    out.update(augmentation=R.augmentation(), lefschetz=L, augmentation_matches=R.augmentation() == L)
    return out


def cmd_nielsen(args) -> dict:
    K, f = _load_pair(args)
    n, certified = nielsen_lower_bound(reidemeister_trace(K, f, _basepoint(K, args.basepoint), args.tc_bound))
    return {"nielsen_lower_bound": n, "certified": certified}


def _fixed_point_entries(K, results):
    return [{"vertex": K.vertices[x], "index": r.index, "samples": r.samples,
             "min_angular_step": r.min_step} for x, r in sorted(results.items())]


def cmd_index(args) -> dict:
    K, f = _load_pair(args)
    E = io.parse_embedding(args.embedding, K)
    results = fixed_point_indices(K, f, E, _epsilon(args.epsilon))
    total = sum(r.index for r in results.values())
    L = lefschetz_chain(K, f)
    return {"fixed_points": _fixed_point_entries(K, results), "index_sum": total,
            "lefschetz": L, "lefschetz_hopf": total == L}


def cmd_geomcheck(args) -> dict:
    K, f = _load_pair(args)
    E = io.parse_embedding(args.embedding, K)
    g = geomcheck(K, f, _basepoint(K, args.basepoint), E, _epsilon(args.epsilon), args.tc_bound)
    return {"algebraic": g.algebraic.to_dict(), "geometric": g.geometric.to_dict(),
            "indices": {K.vertices[x]: i for x, i in sorted(g.indices.items())},
            "agree": g.agree, "lefschetz": g.lefschetz, "lefschetz_hopf": g.lefschetz_hopf}


def _twist(args, G):
    return None if args.twist is None else io.parse_twist(args.twist, G)


def cmd_hh0(args) -> dict:
    G = io.parse_group(args.group)
    H = bicat.hh0(G, _twist(args, G))
    return {"rank": H.rank, "representatives": [G.format(r) for r in H.basis],
            "classes": [[G.format(x) for x in c] for c in H.classes], "twisted": H.twist is not None}


def cmd_trace(args) -> dict:
    G = io.parse_group(args.group)
    M = io.parse_matrix(args.matrix, G)
    if args.hattori_stallings:
        value = bicat.hattori_stallings(M)
    else:
        value = bicat.shadow_trace(M, _twist(args, G))
    out = value.to_dict()
    out["augmentation"] = value.augmentation()
    return out


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="fixtrace", description="Exact fixed-point invariants and group-ring traces.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def based(sp, embedding=False):
        sp.add_argument("complex")
        sp.add_argument("map")
        if embedding:
            sp.add_argument("embedding")
            sp.add_argument("--epsilon", help="sphere radius as a rational, e.g. 1/8")
        sp.add_argument("--out", help="write the report to this file instead of stdout")

    sp = sub.add_parser("homology", help="Betti numbers, torsion and Euler characteristic")
    sp.add_argument("complex")
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_homology)

    sp = sub.add_parser("lefschetz", help="Lefschetz number by the chain and homology routes")
    based(sp)
    sp.set_defaults(func=cmd_lefschetz)

    for name, func, helptext in (("reidemeister", cmd_reidemeister, "Reidemeister trace"),
                                 ("nielsen", cmd_nielsen, "Nielsen lower bound")):
        sp = sub.add_parser(name, help=helptext)
        based(sp)
        sp.add_argument("--basepoint", help="vertex label (default: first vertex)")
        sp.add_argument("--tc-bound", type=int, default=6, help="conjugator length bound (default 6)")
        sp.set_defaults(func=func)

    sp = sub.add_parser("index", help="fixed-point indices and the Lefschetz-Hopf check")
    based(sp, embedding=True)
    sp.set_defaults(func=cmd_index)

    sp = sub.add_parser("geomcheck", help="geometric against chain-level Reidemeister trace")
    based(sp, embedding=True)
    sp.add_argument("--basepoint")
    sp.add_argument("--tc-bound", type=int, default=6)
    sp.set_defaults(func=cmd_geomcheck)

    sp = sub.add_parser("hh0", help="(twisted) conjugacy class basis of HH_0(Z[G])")
    sp.add_argument("group")
    sp.add_argument("--twist", help="endomorphism file")
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_hh0)

    sp = sub.add_parser("trace", help="shadow trace of a square matrix over Z[G]")
    sp.add_argument("group")
    sp.add_argument("matrix")
    sp.add_argument("--twist", help="endomorphism file")
    sp.add_argument("--hattori-stallings", action="store_true", help="require the matrix to be idempotent")
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_trace)
    return p


def run(argv=None) -> tuple[dict, int, str | None]:
    """Parse and execute; returns ``(report, exit status, output path)``."""
    try:
        args = build_parser().parse_args(argv)
    except UsageError as exc:
        return io.error_report(exc), 2, None
    try:
        if getattr(args, "tc_bound", 0) < 0:
            raise MalformedInputError("--tc-bound must be non-negative")
        report, status = args.func(args), 0
    except FixtraceError as exc:
        report, status = io.error_report(exc), 1
    return report, status, args.out


def main(argv=None) -> int:
    report, status, out = run(argv)
    text = json.dumps(report, indent=2)
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    return status


if __name__ == "__main__":
    sys.exit(main())
