"""Command-line front end.

Subcommands: analyze (endomorphism file), braid (braid word), verify
(endomorphism file + word), selftest (randomized invariant batch).

Exit codes: 0 analysis completed, 2 input error, 3 internal invariant
violation.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from . import selfcheck
from ._backend import backend_name
from .braid import (
    GassnerConventionError,
    alexander_vanishes,
    braid_automorphism,
    gassner,
    gassner_reduced,
    parse_braid,
)
from .endo import parse_endomorphism
from .fixpoint import (
    InternalCheckError,
    fixed_point_in_commutator,
    search_fixed,
)
from .fox import jacobian, word_coords
from .laurent import poly_to_text
from .magnus import is_trivial
from .matrices import LaurentMatrix
from .words import WordError, parse_word, word_to_text


def _matrix_json(m):
    return [[poly_to_text(e) for e in row] for row in m.entries]


def _fix_json(report):
    return {
        "rank_defect_class": report.rank_defect_class,
        "witness_in_commutator": (
            None
            if report.witness_in_commutator is None
            else word_to_text(report.witness_in_commutator)
        ),
        "witness_verified": report.witness_verified,
        "cosets": [
            {
                "a": list(c.exponents),
                "status": c.status,
                "witness": None if c.witness is None else word_to_text(c.witness),
                "verified": c.verified,
            }
            for c in report.cosets
        ],
    }


def _emit(report, as_json):
    if as_json:
        print(json.dumps(report, indent=2, sort_keys=True))
        return
    _pretty(report)


def _pretty(d, indent=0):
    pad = "  " * indent
    for k, v in d.items():
        if isinstance(v, dict):
            print(f"{pad}{k}:")
            _pretty(v, indent + 1)
        elif isinstance(v, list) and v and isinstance(v[0], dict):
            print(f"{pad}{k}:")
            for item in v:
                line = ", ".join(f"{kk}={vv}" for kk, vv in item.items())
                print(f"{pad}  - {line}")
        elif isinstance(v, list) and v and isinstance(v[0], list):
            print(f"{pad}{k}:")
            for row in v:
                print(f"{pad}  [{', '.join(str(x) for x in row)}]")
        else:
            print(f"{pad}{k}: {v}")


def cmd_analyze(args):
    try:
        text = open(args.file).read()
        phi = parse_endomorphism(text)
    except OSError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except (WordError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    start = time.perf_counter()
    n = phi.rank
    j = jacobian(phi)
    jmi = j - LaurentMatrix.identity(n, n)
    report = {
        "input": {
            "file": args.file,
            "rank": n,
            "images": [word_to_text(y) for y in phi.images],
        },
        "ia": phi.is_ia(),
        "jacobian": _matrix_json(j),
        "det_JmI": poly_to_text(jmi.det()),
        "rank_JmI": jmi.rank(),
        "fix": None,
        "braid": None,
    }
    if phi.is_ia():
        fix = search_fixed(phi, args.bound, verify=not args.no_verify)
        report["fix"] = _fix_json(fix)
    report["timing"] = round(time.perf_counter() - start, 6)
    _emit(report, args.json)
    return 0


def cmd_braid(args):
    try:
        b = parse_braid(args.word, args.strands)
    except (WordError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    start = time.perf_counter()
    phi = braid_automorphism(b)
    n = phi.rank
    unreduced = gassner(b)
    reduced = gassner_reduced(unreduced)
    jmi = unreduced - LaurentMatrix.identity(n, n)
    vanishes = (
        (reduced - LaurentMatrix.identity(n - 1, reduced.nvars)).det().is_zero()
    )
    rank = jmi.rank()
    witness = fixed_point_in_commutator(phi, verify=not args.no_verify)
    findings = []
    if vanishes != (rank <= n - 2):
        findings.append("alexander vanishing disagrees with the rank-defect class")
    if not vanishes and witness is not None:
        findings.append(
            "commutator-subgroup fixed point found in the rank=n-1 edge case"
        )
    report = {
        "input": {"strands": args.strands, "braid": str(b)},
        "ia": phi.is_ia(),
        "jacobian": _matrix_json(unreduced),
        "det_JmI": poly_to_text(jmi.det()),
        "rank_JmI": rank,
        "fix": None,
        "braid": {
            "automorphism": [word_to_text(y) for y in phi.images],
            "gassner_unreduced": _matrix_json(unreduced),
            "gassner_reduced": _matrix_json(reduced),
            "alexander_vanishes": vanishes,
            "commutator_witness": None if witness is None else word_to_text(witness),
            "bridge_consistent": vanishes == (witness is not None),
            "findings": findings,
        },
        "timing": round(time.perf_counter() - start, 6),
    }
    _emit(report, args.json)
    return 0


def cmd_verify(args):
    try:
        phi = parse_endomorphism(open(args.file).read())
        g = parse_word(args.word, phi.rank)
    except OSError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except (WordError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    diff = phi.apply(g) * g.inverse()
    fixed = is_trivial(diff)
    report = {
        "input": {"file": args.file, "word": word_to_text(g)},
        "fixed": fixed,
        "trivial_word": is_trivial(g),
        "difference_coords": [poly_to_text(p) for p in word_coords(diff)],
    }
    _emit(report, args.json)
    return 0


def cmd_selftest(args):
    failures = selfcheck.run(args.seed, verbose=True)
    return 0 if failures == 0 else 3


def build_parser():
    parser = argparse.ArgumentParser(
        prog="metafix",
        description=(
            "Exact fixed-point analysis for IA-endomorphisms of free "
            f"metabelian groups (term backend: {backend_name()})"
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="analyze an endomorphism file")
    p.add_argument("file")
    p.add_argument("--bound", type=int, default=2, help="coset exponent box (default 2)")
    p.add_argument("--json", action="store_true")
    p.add_argument("--no-verify", action="store_true", help="skip oracle re-checks (testing only)")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("braid", help="analyze a pure braid word")
    p.add_argument("strands", type=int)
    p.add_argument("word")
    p.add_argument("--json", action="store_true")
    p.add_argument("--no-verify", action="store_true")
    p.set_defaults(func=cmd_braid)

    p = sub.add_parser("verify", help="check whether a word is fixed")
    p.add_argument("file")
    p.add_argument("word")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("selftest", help="run randomized invariant checks")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_selftest)

    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (GassnerConventionError, InternalCheckError) as e:
        print(f"internal invariant violation: {e}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
