"""Finite chain complexes of free R-modules and their homology.

A complex is stored the way one writes it by hand: a free rank per degree
and boundary matrices with group-ring entries.  ``boundaries[n - 1]`` is the
degree-``n`` boundary, an array of shape ``(ranks[n-1], ranks[n], p)`` whose
last axis holds the coefficients of g^0, ..., g^(p-1).

Homology is always computed on the expanded complex, where a generator
``a`` of degree ``n`` becomes the ``p`` cells ``g^j a`` (index ``a*p + j``).
"""
from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from functools import cached_property

import numpy as np

from . import gfp
from .gfp import DTYPE, PrimeField, Subquotient
from .rmod import GroupRingElem, RModule, JordanType, jordan_type, mult_matrix, ring_matmul, shift_matrix


class ValidationError(ValueError):
    """Raised when a complex violates one of its invariants."""

    def __init__(self, violations: list[str]):
        self.violations = list(violations)
        super().__init__("; ".join(self.violations))


@dataclass(frozen=True, eq=False)
class EquivariantComplex:
    field: PrimeField
    ranks: tuple[int, ...]
    boundaries: tuple[np.ndarray, ...]
    name: str = ""

    def __post_init__(self):
        p = self.field.p
        object.__setattr__(self, "ranks", tuple(int(r) for r in self.ranks))
        bds = []
        for n, b in enumerate(self.boundaries, start=1):
            b = np.mod(np.asarray(b, dtype=DTYPE), p)
            if n < len(self.ranks) and b.size == 0:
                b = b.reshape(self.ranks[n - 1], self.ranks[n], p)
            b.setflags(write=False)
            bds.append(b)
        object.__setattr__(self, "boundaries", tuple(bds))

    @property
    def dim(self) -> int:
        return len(self.ranks) - 1

    def boundary(self, n: int) -> np.ndarray:
        """Group-ring boundary matrix of degree ``n`` (zero outside 1..dim)."""
        p = self.field.p
        if 1 <= n <= self.dim:
            return self.boundaries[n - 1]
        rows = self.ranks[n - 1] if 1 <= n <= self.dim + 1 else 0
        cols = self.ranks[n] if 0 <= n <= self.dim else 0
        return np.zeros((rows, cols, p), dtype=DTYPE)

    def rank(self, n: int) -> int:
        return self.ranks[n] if 0 <= n <= self.dim else 0

    def entry(self, n: int, row: int, col: int) -> GroupRingElem:
        return GroupRingElem(self.field, tuple(self.boundaries[n - 1][row, col]))

    @cached_property
    def expanded(self) -> ExpandedComplex:
        return expand(self)

    def __repr__(self):
        return f"EquivariantComplex({self.name or '?'}, p={self.field.p}, ranks={list(self.ranks)})"


def validate(c: EquivariantComplex) -> list[str]:
    """All invariant violations of ``c`` (an empty list means valid)."""
    p = c.field.p
    out = []
    if not c.ranks or c.ranks[0] < 1:
        return ["ranks[0] >= 1 required"]
    for n, r in enumerate(c.ranks):
        if r < 0:
            out.append(f"negative rank at degree {n}")
    if len(c.boundaries) != c.dim:
        out.append(f"expected {c.dim} boundary matrices, got {len(c.boundaries)}")
        return out
    for n in range(1, c.dim + 1):
        b = c.boundaries[n - 1]
        want = (c.ranks[n - 1], c.ranks[n], p)
        if b.shape != want:
            out.append(f"boundary at degree {n} has shape {b.shape}, expected {want}")
    if out:
        return out
    if c.dim >= 1:
        # eps(d a) summed over all faces, not entrywise: f - e is a valid 1-cell boundary
        eps = c.boundaries[0].sum(axis=(0, 2)) % p
        if eps.any():
            col = int(np.flatnonzero(eps)[0])
            out.append(f"augmentation of boundary at degree 1 nonzero (column {col})")
    for n in range(2, c.dim + 1):
        sq = ring_matmul(c.boundaries[n - 2], c.boundaries[n - 1], p)
        if sq.any():
            out.append(f"boundary squared nonzero at degree {n}")
    return out


def check(c: EquivariantComplex) -> EquivariantComplex:
    violations = validate(c)
    if violations:
        raise ValidationError(violations)
    return c


def make_complex(field: PrimeField, ranks, boundaries, name: str = "") -> EquivariantComplex:
    """Construct and validate a complex; boundary entries may be GroupRingElems."""
    p = field.p
    arrs = []
    for n, b in enumerate(boundaries, start=1):
        rows, cols = ranks[n - 1], ranks[n]
        a = np.zeros((rows, cols, p), dtype=DTYPE)
        for i in range(rows):
            for j in range(cols):
                e = b[i][j]
                a[i, j] = e.array() if isinstance(e, GroupRingElem) else np.asarray(e, dtype=DTYPE)
        arrs.append(a)
    return check(EquivariantComplex(field, tuple(ranks), tuple(arrs), name))


@dataclass(frozen=True, eq=False)
class ExpandedComplex:
    """The F_p realization: cells ``g^j a`` with explicit generator action."""

    field: PrimeField
    dims: tuple[int, ...]
    boundaries: tuple[np.ndarray, ...]
    g_action: tuple[np.ndarray, ...]

    def boundary(self, n: int) -> np.ndarray:
        if 1 <= n < len(self.dims):
            return self.boundaries[n - 1]
        rows = self.dims[n - 1] if 1 <= n <= len(self.dims) else 0
        cols = self.dims[n] if 0 <= n < len(self.dims) else 0
        return np.zeros((rows, cols), dtype=DTYPE)

    def tau_op(self, n: int) -> np.ndarray:
        return np.mod(np.eye(self.dims[n], dtype=DTYPE) - self.g_action[n], self.field.p)


def expand_matrix(b: np.ndarray, p: int) -> np.ndarray:
    """Replace each group-ring entry by its p x p multiplication matrix."""
    rows, cols, _ = b.shape
    out = np.zeros((rows * p, cols * p), dtype=DTYPE)
    for i in range(rows):
        for j in range(cols):
            out[i * p:(i + 1) * p, j * p:(j + 1) * p] = mult_matrix(b[i, j], p)
    return out


def expand(c: EquivariantComplex) -> ExpandedComplex:
    check(c)
    p = c.field.p
    dims = tuple(p * r for r in c.ranks)
    bds = tuple(expand_matrix(b, p) for b in c.boundaries)
    shift = shift_matrix(p)
    g = tuple(np.kron(np.eye(r, dtype=DTYPE), shift) for r in c.ranks)
    return ExpandedComplex(c.field, dims, bds, g)


@dataclass(frozen=True)
class OrbitComplex:
    """Plain F_p chain complex ``C_*(X) = C_*(X~) (x)_R F_p``."""

    field: PrimeField
    dims: tuple[int, ...]
    boundaries: tuple[np.ndarray, ...]

    def boundary(self, n: int) -> np.ndarray:
        if 1 <= n < len(self.dims):
            return self.boundaries[n - 1]
        rows = self.dims[n - 1] if 1 <= n <= len(self.dims) else 0
        cols = self.dims[n] if 0 <= n < len(self.dims) else 0
        return np.zeros((rows, cols), dtype=DTYPE)


def orbit_complex(c: EquivariantComplex) -> OrbitComplex:
    check(c)
    p = c.field.p
    return OrbitComplex(c.field, c.ranks, tuple(b.sum(axis=2) % p for b in c.boundaries))


def _homology_subquotients(cx, field: PrimeField) -> list[Subquotient]:
    out = []
    for n in range(len(cx.dims)):
        z = gfp.kernel_basis(cx.boundary(n), field) if n else np.eye(cx.dims[0], dtype=DTYPE)
        b = cx.boundary(n + 1)
        out.append(gfp.subquotient(z, b, field))
    return out


@dataclass(frozen=True, eq=False)
class HomologyTable:
    """Per-degree homology: R-modules for the total space, subquotients for the orbit space."""

    field: PrimeField
    equivariant: tuple[RModule, ...] | None = None
    orbit: tuple[Subquotient, ...] | None = None
    expanded_cycles: tuple[Subquotient, ...] | None = dc_field(default=None, repr=False)

    @cached_property
    def jordan_types(self) -> list[JordanType]:
        return [jordan_type(m) for m in self.equivariant]

    @property
    def equivariant_dims(self) -> list[int]:
        return [m.dim for m in self.equivariant]

    @property
    def orbit_dims(self) -> list[int]:
        return [s.dim for s in self.orbit]

    @property
    def reduced_orbit_dims(self) -> list[int]:
        d = self.orbit_dims
        return [d[0] - 1] + d[1:]


def homology_equivariant(c: EquivariantComplex) -> HomologyTable:
    ex = c.expanded
    sqs = _homology_subquotients(ex, c.field)
    mods = tuple(
        RModule(c.field, gfp.induce_on_subquotient(ex.tau_op(n), sq)) for n, sq in enumerate(sqs)
    )
    return HomologyTable(c.field, equivariant=mods, expanded_cycles=tuple(sqs))


def homology_orbit(c: EquivariantComplex) -> HomologyTable:
    return HomologyTable(c.field, orbit=tuple(_homology_subquotients(orbit_complex(c), c.field)))


def homology(c: EquivariantComplex) -> HomologyTable:
    eq = homology_equivariant(c)
    orb = homology_orbit(c)
    return HomologyTable(c.field, eq.equivariant, orb.orbit, eq.expanded_cycles)


def orbit_projection_chain(c: EquivariantComplex, n: int) -> np.ndarray:
    """Chain-level quotient ``g^j a -> a`` in degree ``n``."""
    p = c.field.p
    return np.kron(np.eye(c.ranks[n], dtype=DTYPE), np.ones((1, p), dtype=DTYPE))


def orbit_projection_induced(c: EquivariantComplex, n: int, table: HomologyTable | None = None) -> np.ndarray:
    """Matrix of ``q_*: H_n(X~) -> H_n(X)`` on the chosen homology bases."""
    if not 0 <= n <= c.dim:
        raise ValueError(f"degree {n} outside 0..{c.dim}")
    if table is None or table.orbit is None or table.expanded_cycles is None:
        table = homology(c)
    src, dst = table.expanded_cycles[n], table.orbit[n]
    q = orbit_projection_chain(c, n)
    return gfp.matmul(dst.lift_map, gfp.matmul(q, src.quotient_reps, c.field), c.field)


def euler_characteristic(dims) -> int:
    return sum((-1) ** n * d for n, d in enumerate(dims))


# --- builders ---------------------------------------------------------------

def point_orbit(field: PrimeField) -> EquivariantComplex:
    """The free orbit Z/p: one free generator in degree 0."""
    return check(EquivariantComplex(field, (1,), (), "point_orbit"))


def lens(field: PrimeField, k: int) -> EquivariantComplex:
    """k-skeleton of the standard periodic resolution (tau, tau^(p-1), tau, ...)."""
    if k < 0:
        raise ValueError(f"lens skeleton dimension must be >= 0, got {k}")
    p = field.p
    t = GroupRingElem.tau(field)
    n_ = GroupRingElem.tau(field, p - 1)
    bds = [[[t if n % 2 else n_]] for n in range(1, k + 1)]
    return make_complex(field, [1] * (k + 1), bds, f"lens{k}")


def complex_U(field: PrimeField) -> EquivariantComplex:
    p = field.p
    t = lambda k: GroupRingElem.tau(field, k)
    return make_complex(field, [1, 1, 1, 1], [[[t(1)]], [[t(p - 1)]], [[t(2)]]], "U")


def complex_V(field: PrimeField) -> EquivariantComplex:
    p = field.p
    t = lambda k: GroupRingElem.tau(field, k)
    z = GroupRingElem.zero(field)
    return make_complex(field, [1, 2, 1], [[[t(1), z]], [[t(p - 1)], [-t(1)]]], "V")


BUILTINS = ("point_orbit", "lens", "U", "V")


def builtin_complex(name: str, field: PrimeField | int, k: int | None = None) -> EquivariantComplex:
    if not isinstance(field, PrimeField):
        field = PrimeField(field)
    if name == "point_orbit":
        return point_orbit(field)
    if name == "lens":
        if k is None:
            raise ValueError("lens needs a skeleton dimension k")
        return lens(field, k)
    if name == "U":
        return complex_U(field)
    if name == "V":
        return complex_V(field)
    raise ValueError(f"unknown builtin complex {name!r}; choose from {', '.join(BUILTINS)}")
