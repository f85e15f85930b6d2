"""Dense linear algebra over a prime field F_p.

Matrices are plain ``numpy`` integer arrays whose entries lie in ``[0, p)``.
Every routine goes through :func:`rref`, whose conventions (leftmost pivots,
pivot rows scaled to 1, free variables set to zero) make all bases and
particular solutions deterministic.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

DTYPE = np.int64


class NotInvariantError(ValueError):
    """An operator does not preserve the subspaces of a subquotient."""


@dataclass(frozen=True)
class PrimeField:
    """The field F_p for an odd prime ``p``."""

    p: int

    def __post_init__(self):
        p = self.p
        if not isinstance(p, (int, np.integer)) or p < 3 or p % 2 == 0:
            raise ValueError(f"p must be an odd prime, got {p!r}")
        d = 3
        while d * d <= p:
            if p % d == 0:
                raise ValueError(f"p must be an odd prime, got {p}")
            d += 2
        object.__setattr__(self, "p", int(p))

    def matrix(self, entries, shape=None) -> np.ndarray:
        """Coerce ``entries`` to a reduced integer matrix (negatives wrap)."""
        m = np.asarray(entries, dtype=DTYPE)
        if shape is not None:
            m = m.reshape(shape)
        return np.mod(m, self.p)

    def zeros(self, rows: int, cols: int) -> np.ndarray:
        return np.zeros((rows, cols), dtype=DTYPE)

    def identity(self, n: int) -> np.ndarray:
        return np.eye(n, dtype=DTYPE)

    def inv(self, a: int) -> int:
        return pow(int(a), -1, self.p)


def _p(field) -> int:
    return field.p if isinstance(field, PrimeField) else int(field)


def matmul(a: np.ndarray, b: np.ndarray, field) -> np.ndarray:
    # entries < p <= ~3e9 keeps int64 products exact only for small inner
    # dimensions; reduce the operands and accumulate in object mode if needed
    p = _p(field)
    if a.shape[-1] * (p - 1) ** 2 < 2**62:
        return np.mod(a @ b, p)
    return np.mod(a.astype(object) @ b.astype(object), p).astype(DTYPE)


def matpow(a: np.ndarray, k: int, field) -> np.ndarray:
    result = np.eye(a.shape[0], dtype=DTYPE)
    base = np.mod(a, _p(field))
    while k:
        if k & 1:
            result = matmul(result, base, field)
        base = matmul(base, base, field)
        k >>= 1
    return result


def rref(m: np.ndarray, field) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form of ``m`` and its pivot columns."""
    p = _p(field)
    a = np.mod(np.array(m, dtype=DTYPE, copy=True), p)
    if a.ndim != 2:
        raise ValueError("expected a 2-d matrix")
    rows, cols = a.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.flatnonzero(a[r:, c])
        if nz.size == 0:
            continue
        k = r + int(nz[0])
        if k != r:
            a[[r, k]] = a[[k, r]]
        a[r] = (a[r] * pow(int(a[r, c]), -1, p)) % p
        col = a[:, c].copy()
        col[r] = 0
        nzr = np.flatnonzero(col)
        if nzr.size:
            a[nzr] = (a[nzr] - np.outer(col[nzr], a[r])) % p
        pivots.append(c)
        r += 1
    return a, pivots


def rank(m: np.ndarray, field) -> int:
    m = np.asarray(m)
    if m.size == 0:
        return 0
    return len(rref(m, field)[1])


def solve(a: np.ndarray, b: np.ndarray, field) -> np.ndarray | None:
    """Solve ``a @ x = b``; ``None`` when ``b`` is not in the column space.

    Free variables are set to zero, so the answer is the canonical
    particular solution.
    """
    p = _p(field)
    a = np.asarray(a, dtype=DTYPE)
    b = np.mod(np.asarray(b, dtype=DTYPE).reshape(-1), p)
    if a.ndim != 2 or a.shape[0] != b.shape[0]:
        raise ValueError(
            f"dimension mismatch: matrix has {a.shape[0] if a.ndim == 2 else '?'} "
            f"rows, right-hand side has {b.shape[0]}"
        )
    cols = a.shape[1]
    if a.shape[0] == 0:
        return np.zeros(cols, dtype=DTYPE)
    red, pivots = rref(np.column_stack([a, b]), p)
    if pivots and pivots[-1] == cols:
        return None
    x = np.zeros(cols, dtype=DTYPE)
    for i, c in enumerate(pivots):
        x[c] = red[i, cols]
    return x


def kernel_basis(m: np.ndarray, field) -> np.ndarray:
    """Canonical RREF null-space basis, one basis vector per column."""
    p = _p(field)
    m = np.asarray(m, dtype=DTYPE)
    rows, cols = m.shape
    if rows == 0:
        return np.eye(cols, dtype=DTYPE)
    red, pivots = rref(m, p)
    free = [c for c in range(cols) if c not in set(pivots)]
    basis = np.zeros((cols, len(free)), dtype=DTYPE)
    for j, f in enumerate(free):
        basis[f, j] = 1
        for i, c in enumerate(pivots):
            basis[c, j] = (-red[i, f]) % p
    return basis


def column_space_basis(m: np.ndarray, field) -> np.ndarray:
    """The pivot columns of ``m`` (a basis of its image)."""
    m = np.asarray(m, dtype=DTYPE)
    if m.size == 0:
        return np.zeros((m.shape[0], 0), dtype=DTYPE)
    _, pivots = rref(m, field)
    return np.mod(m[:, pivots], _p(field))


def inverse(m: np.ndarray, field) -> np.ndarray:
    p = _p(field)
    n = m.shape[0]
    if m.shape != (n, n):
        raise ValueError("inverse of a non-square matrix")
    red, pivots = rref(np.column_stack([m, np.eye(n, dtype=DTYPE)]), p)
    if pivots[:n] != list(range(n)):
        raise ValueError("matrix is singular")
    return red[:, n:]


def extend_to_basis(cols: np.ndarray, field) -> np.ndarray:
    """Append standard basis vectors so the columns span the ambient space."""
    n = cols.shape[0]
    _, pivots = rref(np.column_stack([cols, np.eye(n, dtype=DTYPE)]), field)
    k = cols.shape[1]
    extra = [c - k for c in pivots if c >= k]
    return np.column_stack([cols, np.eye(n, dtype=DTYPE)[:, extra]]).astype(DTYPE)


@dataclass(frozen=True, eq=False)
class Subquotient:
    """A quotient ``Z / B`` of subspaces ``B <= Z <= F_p^ambient_dim``.

    ``quotient_reps`` are columns of ``cycle_basis`` completing a basis of
    ``B`` to one of ``Z``; ``lift_map`` sends a vector of ``Z`` to its
    coordinates on those representatives and kills ``B``.
    """

    field: PrimeField
    ambient_dim: int
    cycle_basis: np.ndarray
    boundary_basis: np.ndarray
    quotient_reps: np.ndarray
    lift_map: np.ndarray = field(repr=False)

    @property
    def dim(self) -> int:
        return self.quotient_reps.shape[1]

    def coordinates(self, v: np.ndarray) -> np.ndarray:
        """Quotient coordinates of a vector assumed to lie in ``Z``."""
        return matmul(self.lift_map, np.asarray(v, dtype=DTYPE).reshape(-1, 1), self.field)[:, 0]


def subquotient(cycles: np.ndarray, boundaries: np.ndarray, field: PrimeField) -> Subquotient:
    """Build ``span(cycles) / span(boundaries)``.

    Raises ``ValueError`` unless the boundaries lie in the span of the cycles.
    """
    n = cycles.shape[0]
    cycles = np.mod(np.asarray(cycles, dtype=DTYPE).reshape(n, -1), field.p)
    boundaries = np.mod(np.asarray(boundaries, dtype=DTYPE).reshape(n, -1), field.p)
    b_basis = column_space_basis(boundaries, field)
    z_basis = column_space_basis(cycles, field)
    if rank(np.column_stack([z_basis, b_basis]), field) != z_basis.shape[1]:
        raise ValueError("boundary subspace is not contained in the cycle subspace")
    nb = b_basis.shape[1]
    _, pivots = rref(np.column_stack([b_basis, z_basis]), field)
    reps = z_basis[:, [c - nb for c in pivots if c >= nb]]
    full = extend_to_basis(np.column_stack([b_basis, reps]).astype(DTYPE), field)
    coords = inverse(full, field)
    lift = coords[nb:nb + reps.shape[1], :]
    return Subquotient(field, n, z_basis, b_basis, reps, lift)


def _contained(vectors: np.ndarray, basis: np.ndarray, field) -> bool:
    if vectors.shape[1] == 0:
        return True
    r = basis.shape[1]
    return rank(np.column_stack([basis, vectors]), field) == rank(basis, field) if r else not vectors.any()


def induce_on_subquotient(op: np.ndarray, sq: Subquotient) -> np.ndarray:
    """Matrix of the operator induced by ``op`` on ``sq``."""
    f = sq.field
    op = np.mod(np.asarray(op, dtype=DTYPE), f.p)
    if op.shape != (sq.ambient_dim, sq.ambient_dim):
        raise ValueError(f"operator shape {op.shape} does not match ambient dimension {sq.ambient_dim}")
    if not _contained(matmul(op, sq.cycle_basis, f), sq.cycle_basis, f):
        raise NotInvariantError("operator does not preserve the cycle subspace")
    if not _contained(matmul(op, sq.boundary_basis, f), sq.boundary_basis, f):
        raise NotInvariantError("operator does not preserve the boundary subspace")
    return matmul(sq.lift_map, matmul(op, sq.quotient_reps, f), f)
