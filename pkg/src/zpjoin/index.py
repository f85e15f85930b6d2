"""Cohomological index via a chain-level classifying map.

The classifying map of the covering is realized as a chain map ``phi`` from
the complex into the standard periodic resolution ``P`` of F_p over R
(``P_n = R``, differential tau in odd degrees and tau^(p-1) in even ones),
lifting the augmentation.  On orbits ``phi`` becomes the functional
``a -> eps(phi_n(a))`` on ``C_n(X)``; since ``P (x)_R F_p`` has zero
differentials, the induced map ``H_n(X) -> H_n(BZ/p) = F_p`` is nonzero
exactly when that functional is nonzero on orbit cycles.  The index is the
number of degrees where this happens.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import gfp
from .complexes import EquivariantComplex, check, orbit_complex
from .gfp import DTYPE
from .rmod import mult_matrix, ring_matmul, tau_matrix


class LiftError(RuntimeError):
    """A lifting step had no solution (cannot happen for a valid complex)."""


def resolution_differential(p: int, n: int) -> np.ndarray:
    """Group-ring coefficients of the degree-``n`` differential of ``P``."""
    t = tau_matrix(p)
    power = 1 if n % 2 else p - 1
    return gfp.matpow(t, power, p)[:, 0]


@dataclass(frozen=True, eq=False)
class ResolutionLift:
    field: object
    maps: tuple[np.ndarray, ...]  # maps[n]: shape (1, ranks[n], p)

    def check(self, c: EquivariantComplex) -> list[str]:
        """Violations of the chain-map and augmentation identities."""
        p = c.field.p
        out = []
        eps0 = self.maps[0].sum(axis=2) % p
        if np.any(eps0 != 1):
            out.append("augmentation of phi_0 is not 1 on every generator")
        for n in range(1, c.dim + 1):
            d = resolution_differential(p, n).reshape(1, 1, p)
            lhs = ring_matmul(d, self.maps[n], p)
            rhs = ring_matmul(self.maps[n - 1], c.boundary(n), p)
            if not np.array_equal(lhs, rhs):
                out.append(f"chain map identity fails in degree {n}")
        return out


def classifying_lift(c: EquivariantComplex, rng: np.random.Generator | None = None) -> ResolutionLift:
    """Lift the augmentation to a chain map into the standard resolution.

    With ``rng`` None every step takes the canonical particular solution and
    ``phi_0`` sends each generator to g^0.  Otherwise ``phi_0`` picks a random
    group element and each solution is shifted by a random kernel element.
    """
    check(c)
    p = c.field.p
    maps = []
    phi0 = np.zeros((1, c.ranks[0], p), dtype=DTYPE)
    for a in range(c.ranks[0]):
        phi0[0, a, 0 if rng is None else int(rng.integers(p))] = 1
    maps.append(phi0)
    for n in range(1, c.dim + 1):
        dmat = mult_matrix(resolution_differential(p, n), p)
        kern = gfp.kernel_basis(dmat, p)
        rhs = ring_matmul(maps[n - 1], c.boundary(n), p)[0]
        phi = np.zeros((1, c.ranks[n], p), dtype=DTYPE)
        for a in range(c.ranks[n]):
            x = gfp.solve(dmat, rhs[a], p)
            if x is None:
                raise LiftError(f"no lift for generator {a} in degree {n}")
            if rng is not None and kern.shape[1]:
                x = np.mod(x + kern @ rng.integers(p, size=kern.shape[1]), p)
            phi[0, a] = x
        maps.append(phi)
    return ResolutionLift(c.field, tuple(maps))


@dataclass(frozen=True)
class IndexReport:
    index: int
    functionals: tuple[tuple[int, ...], ...]
    hit_flags: tuple[bool, ...]
    orbit_h0: int

    @property
    def height(self) -> int:
        return self.index - 1

    @property
    def connected(self) -> bool:
        return self.orbit_h0 == 1

    @property
    def no_gaps(self) -> bool:
        k = self.hit_flags.index(False) if False in self.hit_flags else len(self.hit_flags)
        return not any(self.hit_flags[k:])

    def to_dict(self) -> dict:
        return {
            "index": self.index,
            "height": self.height,
            "functionals": [list(f) for f in self.functionals],
            "hit_flags": list(self.hit_flags),
            "connected": self.connected,
            "no_gaps": self.no_gaps,
        }


def index_report(c: EquivariantComplex, rng: np.random.Generator | None = None) -> IndexReport:
    lift = classifying_lift(c, rng)
    problems = lift.check(c)
    if problems:
        raise LiftError("; ".join(problems))
    p = c.field.p
    orb = orbit_complex(c)
    functionals, flags = [], []
    for n in range(c.dim + 1):
        f = lift.maps[n][0].sum(axis=1) % p
        cycles = gfp.kernel_basis(orb.boundary(n), p) if n else np.eye(c.ranks[0], dtype=DTYPE)
        functionals.append(tuple(int(x) for x in f))
        flags.append(bool(np.any(gfp.matmul(f.reshape(1, -1), cycles, p))))
    h0 = c.ranks[0] - gfp.rank(orb.boundary(1), p)
    return IndexReport(sum(flags), tuple(functionals), tuple(flags), h0)


def index(c: EquivariantComplex) -> int:
    return index_report(c).index
