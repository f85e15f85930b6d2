"""Command-line front end.

Exit codes: 0 success, 1 failed check or violation, 2 usage error,
3 I/O or validation error.  Diagnostics go to stderr; ``--json`` output is
the only thing written to stdout in JSON mode.
"""
from __future__ import annotations

import argparse
import json
import sys

from .complexes import ValidationError, builtin_complex, homology
from .explore import GenConfig, run_trials
from .files import ComplexFileError, load_complex, save_complex
from .gfp import PrimeField
from .index import index_report
from .join import join
from .reproduce import run_suite
from .rmod import describe, indecomposable, jordan_type, tensor_diagonal

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_IO = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _emit_json(obj) -> None:
    sys.stdout.write(json.dumps(obj, sort_keys=True) + "\n")


def _jt_json(jt: dict[int, int]) -> dict[str, int]:
    return {str(s): c for s, c in sorted(jt.items())}


def _source(ns):
    if ns.file and ns.builtin:
        raise UsageError("give either a complex file or --builtin, not both")
    if ns.file:
        return load_complex(ns.file)
    if not ns.builtin:
        raise UsageError("a complex file or --builtin NAME is required")
    if ns.p is None:
        raise UsageError("--builtin needs --p")
    try:
        return builtin_complex(ns.builtin, PrimeField(ns.p), ns.k)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def cmd_homology(ns) -> int:
    c = _source(ns)
    h = homology(c)
    p = c.field.p
    if ns.json:
        doc = {"name": c.name, "p": p}
        if ns.orbit:
            doc["orbit_dims"] = h.orbit_dims
            doc["reduced_orbit_dims"] = h.reduced_orbit_dims
        else:
            doc["jordan_types"] = [_jt_json(j) for j in h.jordan_types]
            doc["dims"] = h.equivariant_dims
        _emit_json(doc)
        return EXIT_OK
    for n in range(c.dim + 1):
        if ns.orbit:
            print(f"H_{n}(orbit) = F_{p}^{h.orbit_dims[n]}")
        else:
            jt = h.jordan_types[n]
            print(f"H_{n} = {describe(jt, p)}  {dict(sorted(jt.items()))}")
    return EXIT_OK


def cmd_index(ns) -> int:
    c = _source(ns)
    rep = index_report(c)
    if ns.json:
        _emit_json({"name": c.name, "p": c.field.p, **rep.to_dict()})
        return EXIT_OK
    print(f"index {rep.index}")
    print(f"height {rep.height}")
    print("hits " + " ".join("1" if f else "0" for f in rep.hit_flags))
    if not rep.connected:
        print(f"note: orbit space has {rep.orbit_h0} components", file=sys.stderr)
    return EXIT_OK


def cmd_join(ns) -> int:
    a, b = load_complex(ns.left), load_complex(ns.right)
    try:
        j = join(a, b)
    except ValueError as exc:
        raise ComplexFileError(str(exc)) from None
    save_complex(j, ns.output)
    return EXIT_OK


def cmd_tensor(ns) -> int:
    try:
        f = PrimeField(ns.p)
        m = tensor_diagonal(indecomposable(f, ns.left), indecomposable(f, ns.right))
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    jt = jordan_type(m)
    if ns.json:
        _emit_json({"p": f.p, "left": ns.left, "right": ns.right, "jordan_type": _jt_json(jt)})
    else:
        print(dict(sorted(jt.items())))
    return EXIT_OK


def cmd_paper(ns) -> int:
    try:
        results = run_suite(ns.p)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    ok = all(r.passed for r in results)
    if ns.json:
        _emit_json({"p": ns.p, "passed": ok,
                    "results": [{"name": r.name, "passed": r.passed, "detail": r.detail} for r in results]})
    else:
        for r in results:
            print(f"{'PASS' if r.passed else 'FAIL'}  {r.name}" + ("" if r.passed else f"  ({r.detail})"))
        print(f"{sum(r.passed for r in results)}/{len(results)} checks passed")
    return EXIT_OK if ok else EXIT_FAIL


def cmd_random_check(ns) -> int:
    try:
        cfg = GenConfig(PrimeField(ns.p), ns.max_dim, ns.max_rank, ns.seed, ns.trials)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    report = run_trials(cfg)
    if ns.json:
        _emit_json(report.to_dict())
    else:
        counts = report.outcomes
        print(" ".join(f"{k}={v}" for k, v in counts.items()))
    if not report.passed:
        print("additivity bounds violated", file=sys.stderr)
    return EXIT_OK if report.passed else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="zpjoin", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def source_args(sp):
        sp.add_argument("file", nargs="?", help="complex JSON file")
        sp.add_argument("--builtin", choices=["point_orbit", "lens", "U", "V"])
        sp.add_argument("--p", type=int)
        sp.add_argument("--k", type=int, help="skeleton dimension for lens")
        sp.add_argument("--json", action="store_true")

    sp = sub.add_parser("homology", help="equivariant or orbit homology")
    source_args(sp)
    sp.add_argument("--orbit", action="store_true", help="orbit-space homology dimensions")
    sp.set_defaults(func=cmd_homology)

    sp = sub.add_parser("index", help="cohomological index report")
    source_args(sp)
    sp.set_defaults(func=cmd_index)

    sp = sub.add_parser("join", help="write the join of two complexes")
    sp.add_argument("left")
    sp.add_argument("right")
    sp.add_argument("-o", "--output", required=True)
    sp.set_defaults(func=cmd_join)

    sp = sub.add_parser("tensor", help="Jordan type of tau^I R (x) tau^J R")
    sp.add_argument("--left", type=int, required=True)
    sp.add_argument("--right", type=int, required=True)
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_tensor)

    sp = sub.add_parser("paper", help="run the reproduction suite")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_paper)

    sp = sub.add_parser("random-check", help="additivity bounds on random pairs")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--trials", type=int, required=True)
    sp.add_argument("--seed", type=int, required=True)
    sp.add_argument("--max-dim", type=int, default=3)
    sp.add_argument("--max-rank", type=int, default=2)
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_random_check)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return ns.func(ns)
    except UsageError as exc:
        print(f"zpjoin {ns.command}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ComplexFileError, ValidationError, OSError) as exc:
        print(f"zpjoin {ns.command}: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
