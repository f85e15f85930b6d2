"""Reproduction suite: the published homology tables and index values.

Expected values are stored as Jordan types written through ``_mods`` as lists of
exponents i of the summands tau^i R, so each table reads like the
decomposition it encodes.
"""
from __future__ import annotations

from dataclasses import dataclass

from . import gfp
from .complexes import (complex_U, complex_V, expand, homology, homology_equivariant, homology_orbit, lens,
                        orbit_complex, orbit_projection_induced, point_orbit)
from .explore import check_additivity, check_lemmas
from .gfp import PrimeField
from .index import index
from .join import join, join_with_point
from .rmod import GroupRingElem, RModule, describe, indecomposable, jordan_type, tensor_diagonal


@dataclass
class Result:
    name: str
    passed: bool
    detail: str = ""


def _mods(p: int, *summands: int) -> dict[int, int]:
    """Jordan type of a direct sum of tau^i R, one ``i`` per summand."""
    jt: dict[int, int] = {}
    for i in summands:
        jt[p - i] = jt.get(p - i, 0) + 1
    return dict(sorted(jt.items()))


def _table(p, rows):
    return [_mods(p, *r) for r in rows]


def expected_tables(p: int) -> dict[str, list[dict[int, int]]]:
    top = p - 1
    return {
        # upper-bound counterexample U and U * Z/p
        "U": _table(p, [(top,), (), (top,), (p - 2,)]),
        "U*pt": _table(p, [(top,), (), (), (1,), (2, 0)]),
        # lower-bound counterexample V and V * Z/p
        "V": _table(p, [(top,), (p - 2,), (top,)]),
        "V*pt": _table(p, [(top,), (), (2, 0), (1,)]),
    }


EXPECTED_REDUCED_ORBIT = {"U*pt": [0, 1, 1, 2, 2], "V*pt": [0, 1, 2, 1]}
EXPECTED_INDEX = {"U": 3, "U*pt": 5, "V": 3, "V*pt": 3, "pt*pt": 2}
EXPECTED_ADDITIVITY = {"U,pt": "plus_one", "V,pt": "minus_one", "lens1,lens2": "exact"}


def _show(tables):
    return "[" + ", ".join(str(t) for t in tables) + "]"


def run_suite(p: int) -> list[Result]:
    f = PrimeField(p)
    out: list[Result] = []

    def record(name, got, want):
        out.append(Result(name, got == want, f"got {got}, expected {want}"))

    pt = point_orbit(f)
    U, V = complex_U(f), complex_V(f)
    tables = expected_tables(p)
    joined = {"U": U, "U*pt": join_with_point(U), "V": V, "V*pt": join_with_point(V)}

    t = lambda k: GroupRingElem.tau(f, k)
    record("tau^2 = g^0 - 2g + g^2", t(2).coeffs, GroupRingElem(f, (1, -2, 1) + (0,) * (p - 3)).coeffs)
    record("tensor tau^(p-1)R x tauR", jordan_type(tensor_diagonal(indecomposable(f, p - 1), indecomposable(f, 1))),
           _mods(p, 1))
    record("tensor tau^(p-2)R x tauR", jordan_type(tensor_diagonal(indecomposable(f, p - 2), indecomposable(f, 1))),
           _mods(p, 2, 0))

    ex = expand(lens(f, 1))
    record("lens 1 expands to multiplication by tau", ex.boundaries[0].tolist(), t(1).mult_matrix().tolist())
    ex = expand(U)
    record("U expands to tau, tau^(p-1), tau^2",
           [b.tolist() for b in ex.boundaries], [t(k).mult_matrix().tolist() for k in (1, p - 1, 2)])

    for key, c in joined.items():
        h = homology_equivariant(c)
        got, want = h.jordan_types, tables[key]
        out.append(Result(f"equivariant homology {key}", got == want,
                          f"got {_show(describe(j, p) for j in got)}, expected {_show(describe(j, p) for j in want)}"))

    sq = homology(U).expanded_cycles[3]
    record("tau on H_3(U~)", jordan_type(RModule(f, gfp.induce_on_subquotient(U.expanded.tau_op(3), sq))), _mods(p, p - 2))

    for key, c in (("U", U), ("V", V)):
        orb = orbit_complex(c)
        record(f"orbit complex {key} has zero differentials",
               (list(orb.dims), all(not b.any() for b in orb.boundaries)),
               ([1, 1, 1, 1] if key == "U" else [1, 2, 1], True))
    for key in EXPECTED_REDUCED_ORBIT:
        record(f"reduced orbit homology {key}", homology_orbit(joined[key]).reduced_orbit_dims,
               EXPECTED_REDUCED_ORBIT[key])
    hU = homology(U)
    record("q_* vanishes on U in positive degrees",
           [bool(orbit_projection_induced(U, n, hU).any()) for n in range(1, 4)], [False] * 3)

    for k in range(7):
        record(f"index lens {k}", index(lens(f, k)), k + 1)
    record("index pt*pt", index(join(pt, pt)), EXPECTED_INDEX["pt*pt"])
    for key, c in joined.items():
        record(f"index {key}", index(c), EXPECTED_INDEX[key])

    for k in range(4):
        for l in range(4):
            if k % 2 or l % 2:
                record(f"index lens {k} * lens {l}", index(join(lens(f, k), lens(f, l))), k + l + 2)
    for m in (1, 2):
        a = homology(join_with_point(lens(f, 2 * m - 1)))
        b = homology(lens(f, 2 * m))
        record(f"lens {2 * m - 1} * pt has the homology of lens {2 * m}",
               (a.jordan_types, a.orbit_dims), (b.jordan_types, b.orbit_dims))

    record("additivity U, pt", check_additivity(U, pt), EXPECTED_ADDITIVITY["U,pt"])
    record("additivity V, pt", check_additivity(V, pt), EXPECTED_ADDITIVITY["V,pt"])
    record("additivity lens 1, lens 2", check_additivity(lens(f, 1), lens(f, 2)), EXPECTED_ADDITIVITY["lens1,lens2"])

    for key, c in (("U", U), ("V", V)):
        failed = [f"{r.name}@{r.degree}: {r.detail}" for r in check_lemmas(c) if not r.passed]
        out.append(Result(f"join lemmas on {key}", not failed, "; ".join(failed) or "all pass"))
    return out
