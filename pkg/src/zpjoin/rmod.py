"""Modules over the group algebra R = F_p[Z/p] = F_p[tau]/tau^p.

Group-ring elements are stored in the basis g^0, ..., g^(p-1) of group
elements.  A module is an F_p vector space together with the matrix of
``tau = 1 - g``; its isomorphism class is read off from the ranks of the
powers of that matrix (the Jordan type).
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import gfp
from .gfp import DTYPE, PrimeField

JordanType = dict[int, int]
"""Block size -> multiplicity, nonzero multiplicities only, sorted by size.

A block of size ``s`` is the indecomposable module ``tau^(p-s) R``.
"""


class NotNilpotentError(ValueError):
    pass


@dataclass(frozen=True)
class GroupRingElem:
    field: PrimeField
    coeffs: tuple[int, ...]

    def __post_init__(self):
        p = self.field.p
        c = tuple(int(x) % p for x in self.coeffs)
        if len(c) != p:
            raise ValueError(f"a group-ring element needs exactly {p} coefficients, got {len(c)}")
        object.__setattr__(self, "coeffs", c)

    @classmethod
    def zero(cls, field: PrimeField) -> GroupRingElem:
        return cls(field, (0,) * field.p)

    @classmethod
    def group_element(cls, field: PrimeField, k: int = 0) -> GroupRingElem:
        c = [0] * field.p
        c[k % field.p] = 1
        return cls(field, tuple(c))

    @classmethod
    def tau(cls, field: PrimeField, power: int = 1) -> GroupRingElem:
        t = cls(field, (1, -1) + (0,) * (field.p - 2))
        return t ** power

    @classmethod
    def norm(cls, field: PrimeField) -> GroupRingElem:
        return cls(field, (1,) * field.p)

    def augmentation(self) -> int:
        return sum(self.coeffs) % self.field.p

    def __add__(self, other: GroupRingElem) -> GroupRingElem:
        return GroupRingElem(self.field, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: GroupRingElem) -> GroupRingElem:
        return GroupRingElem(self.field, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> GroupRingElem:
        return GroupRingElem(self.field, tuple(-a for a in self.coeffs))

    def __mul__(self, other) -> GroupRingElem:
        if isinstance(other, int):
            return GroupRingElem(self.field, tuple(other * a for a in self.coeffs))
        p = self.field.p
        out = [0] * p
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[(i + j) % p] += a * b
        return GroupRingElem(self.field, tuple(out))

    __rmul__ = __mul__

    def __pow__(self, k: int) -> GroupRingElem:
        result = GroupRingElem.group_element(self.field, 0)
        for _ in range(k):
            result = result * self
        return result

    def array(self) -> np.ndarray:
        return np.array(self.coeffs, dtype=DTYPE)

    def mult_matrix(self) -> np.ndarray:
        """Matrix of left multiplication on R in the basis g^0..g^(p-1)."""
        return mult_matrix(self.array(), self.field.p)

    def is_zero(self) -> bool:
        return not any(self.coeffs)


def mult_matrix(coeffs: np.ndarray, p: int) -> np.ndarray:
    # column j is r * g^j, i.e. coeffs cyclically shifted down by j
    idx = (np.arange(p)[:, None] - np.arange(p)[None, :]) % p
    return np.asarray(coeffs, dtype=DTYPE)[idx]


def shift_matrix(p: int) -> np.ndarray:
    """Matrix of multiplication by the generator g on R."""
    return np.roll(np.eye(p, dtype=DTYPE), 1, axis=0)


def tau_matrix(p: int) -> np.ndarray:
    return np.mod(np.eye(p, dtype=DTYPE) - shift_matrix(p), p)


def ring_matmul(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    """Product of matrices with group-ring entries, shapes (m,n,p) x (n,k,p)."""
    out = np.zeros((a.shape[0], b.shape[1], p), dtype=DTYPE)
    for s in range(p):
        # contribution of g^s in ``a`` shifts the coefficients of ``b`` by s
        out += np.einsum("ij,jkt->ikt", a[:, :, s], np.roll(b, s, axis=2))
    return np.mod(out, p)


@dataclass(frozen=True, eq=False)
class RModule:
    """A finite-dimensional R-module given by the matrix of tau."""

    field: PrimeField
    tau_op: np.ndarray

    def __post_init__(self):
        t = np.mod(np.asarray(self.tau_op, dtype=DTYPE), self.field.p)
        if t.ndim != 2 or t.shape[0] != t.shape[1]:
            raise ValueError(f"tau operator must be square, got shape {t.shape}")
        t.setflags(write=False)
        object.__setattr__(self, "tau_op", t)

    @property
    def dim(self) -> int:
        return self.tau_op.shape[0]

    @property
    def g_op(self) -> np.ndarray:
        return np.mod(np.eye(self.dim, dtype=DTYPE) - self.tau_op, self.field.p)

    def jordan_type(self) -> JordanType:
        return jordan_type(self)

    def __repr__(self):
        return f"RModule(p={self.field.p}, {describe(self.jordan_type(), self.field.p)})"


def indecomposable(field: PrimeField, i: int) -> RModule:
    """The submodule tau^i R of R, of dimension p - i."""
    p = field.p
    if not 0 <= i <= p - 1:
        raise ValueError(f"indecomposable index must lie in [0, {p - 1}], got {i}")
    n = p - i
    return RModule(field, np.eye(n, k=-1, dtype=DTYPE))


def zero_module(field: PrimeField) -> RModule:
    return RModule(field, np.zeros((0, 0), dtype=DTYPE))


def direct_sum(*modules: RModule) -> RModule:
    if not modules:
        raise ValueError("direct_sum needs at least one module")
    f = modules[0].field
    _check_fields(*modules)
    n = sum(m.dim for m in modules)
    t = np.zeros((n, n), dtype=DTYPE)
    k = 0
    for m in modules:
        t[k:k + m.dim, k:k + m.dim] = m.tau_op
        k += m.dim
    return RModule(f, t)


def from_jordan_type(field: PrimeField, jt: JordanType) -> RModule:
    parts = [indecomposable(field, field.p - s) for s, c in sorted(jt.items()) for _ in range(c)]
    return direct_sum(*parts) if parts else zero_module(field)


def jordan_type(m: RModule) -> JordanType:
    p = m.field.p
    n = m.dim
    ranks = [n]
    power = np.eye(n, dtype=DTYPE)
    for _ in range(p):
        power = gfp.matmul(power, m.tau_op, p)
        ranks.append(gfp.rank(power, p))
    if ranks[p] != 0:
        raise NotNilpotentError(f"tau operator is not nilpotent of order <= {p}")
    # at_least[s] = number of blocks of size >= s
    at_least = [0] + [ranks[s - 1] - ranks[s] for s in range(1, p + 1)] + [0]
    jt = {s: at_least[s] - at_least[s + 1] for s in range(1, p + 1)}
    return {s: c for s, c in jt.items() if c}


def tensor_diagonal(m: RModule, n: RModule) -> RModule:
    """Tensor product over F_p with the diagonal group action.

    tau acts by ``T_m x 1 + 1 x T_n - T_m x T_n``; basis is the Kronecker
    basis with the left factor major.
    """
    _check_fields(m, n)
    p = m.field.p
    im, in_ = np.eye(m.dim, dtype=DTYPE), np.eye(n.dim, dtype=DTYPE)
    t = np.kron(m.tau_op, in_) + np.kron(im, n.tau_op) - np.kron(m.tau_op, n.tau_op)
    return RModule(m.field, np.mod(t, p))


def iso_test(m: RModule, n: RModule) -> bool:
    _check_fields(m, n)
    return jordan_type(m) == jordan_type(n)


def describe(jt: JordanType, p: int) -> str:
    """Human-readable decomposition such as ``tau^2R + R``."""
    if not jt:
        return "0"
    parts = []
    for s, c in sorted(jt.items()):
        i = p - s
        name = "R" if i == 0 else ("tauR" if i == 1 else f"tau^{i}R")
        parts.append(name if c == 1 else f"{c}*{name}")
    return " + ".join(parts)


def _check_fields(*modules: RModule) -> None:
    ps = {m.field.p for m in modules}
    if len(ps) > 1:
        raise ValueError(f"modules over different fields: p in {sorted(ps)}")
