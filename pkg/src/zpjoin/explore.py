"""Random free complexes and batch checks of the join/index identities.

Randomness is keyed: every draw uses a generator seeded by
``(seed, trial, degree, generator)``, so a trial is reproducible on its own
and trials can be evaluated in any order.
"""
from __future__ import annotations

from dataclasses import dataclass, field as dc_field

import numpy as np

from . import gfp
from .complexes import EquivariantComplex, check, homology, homology_equivariant, orbit_projection_induced
from .gfp import DTYPE, PrimeField
from .index import index_report
from .join import join, join_with_point
from .rmod import describe, indecomposable, jordan_type, tensor_diagonal

OUTCOMES = ("exact", "plus_one", "minus_one", "violation")


@dataclass(frozen=True)
class GenConfig:
    field: PrimeField
    max_dim: int = 3
    max_rank_per_degree: int = 2
    seed: int = 0
    trials: int = 100

    def __post_init__(self):
        if self.max_dim < 0 or self.max_rank_per_degree < 1 or self.trials < 1:
            raise ValueError("need max_dim >= 0, max_rank_per_degree >= 1, trials >= 1")


def _rng(cfg: GenConfig, *key: int) -> np.random.Generator:
    return np.random.default_rng([cfg.seed & 0xFFFFFFFFFFFFFFFF, cfg.field.p, *key])


def integer_kernel_basis(a: np.ndarray) -> np.ndarray:
    """Z-basis (columns) of the integer kernel of ``a``, by unimodular column reduction."""
    m = [[int(x) for x in row] for row in np.asarray(a)]
    rows = len(m)
    cols = len(m[0]) if rows else np.asarray(a).shape[1]
    u = [[int(i == j) for j in range(cols)] for i in range(cols)]

    def colop(dst, src, k):  # column dst -= k * column src
        for r in m:
            r[dst] -= k * r[src]
        for r in u:
            r[dst] -= k * r[src]

    def swap(i, j):
        for r in m:
            r[i], r[j] = r[j], r[i]
        for r in u:
            r[i], r[j] = r[j], r[i]

    k = 0
    for i in range(rows):
        while True:
            nz = [c for c in range(k, cols) if m[i][c]]
            if not nz:
                break
            piv = min(nz, key=lambda c: abs(m[i][c]))
            swap(k, piv)
            done = True
            for c in range(k + 1, cols):
                if m[i][c]:
                    colop(c, k, m[i][c] // m[i][k])
                    done = done and m[i][c] == 0
            if done:
                k += 1
                break
        if k == cols:
            break
    return np.array([r[k:] for r in u], dtype=object).reshape(cols, cols - k)


def random_free_complex(cfg: GenConfig, trial: int) -> EquivariantComplex:
    """A random valid complex, a pure function of ``(cfg, trial)``.

    Boundaries are built over the integers and reduced mod p at the end:
    the boundary of each generator is a random integral cycle of the
    expanded chains one degree down (in degree 1, of the kernel of the
    augmentation), and equivariance fixes the boundary of every translate.
    Complexes that do not lift to the integers can have non-contiguous index
    images, which no free CW complex has.
    """
    p = cfg.field.p
    top = int(_rng(cfg, trial).integers(cfg.max_dim + 1))
    ranks = [int(_rng(cfg, trial, n).integers(1, cfg.max_rank_per_degree + 1)) for n in range(top + 1)]
    bds: list[np.ndarray] = []
    prev = np.ones((1, p * ranks[0]), dtype=object)  # integral augmentation on expanded C_0
    for n in range(1, top + 1):
        cycles = integer_kernel_basis(prev)
        b = np.zeros((ranks[n - 1], ranks[n], p), dtype=object)
        for a in range(ranks[n]):
            coeffs = _rng(cfg, trial, n, a).integers(-p + 1, p, size=cycles.shape[1])
            z = cycles.dot(np.array([int(x) for x in coeffs], dtype=object))
            b[:, a, :] = z.reshape(ranks[n - 1], p)
        bds.append(b)
        prev = _expand_integral(b, p)
    reduced = tuple(np.mod(b, p).astype(DTYPE) for b in bds)
    return check(EquivariantComplex(cfg.field, tuple(ranks), reduced, f"random[{cfg.seed}:{trial}]"))


def _expand_integral(b: np.ndarray, p: int) -> np.ndarray:
    rows, cols, _ = b.shape
    idx = (np.arange(p)[:, None] - np.arange(p)[None, :]) % p
    out = np.zeros((rows * p, cols * p), dtype=object)
    for i in range(rows):
        for j in range(cols):
            out[i * p:(i + 1) * p, j * p:(j + 1) * p] = b[i, j][idx]
    return out


def classify_additivity(ia: int, ib: int, ij: int) -> str:
    s = ia + ib
    if ij == s:
        return "exact"
    if ia % 2 and ib % 2 and ij == s + 1:
        return "plus_one"
    if ia % 2 and ib % 2 and ij == s - 1:
        return "minus_one"
    return "violation"


def check_additivity(a: EquivariantComplex, b: EquivariantComplex) -> str:
    if a.field != b.field:
        raise ValueError(f"cannot compare complexes over p={a.field.p} and p={b.field.p}")
    return classify_additivity(index_report(a).index, index_report(b).index, index_report(join(a, b)).index)


@dataclass
class LemmaCheck:
    name: str
    degree: int | None
    passed: bool
    detail: str = ""


def check_lemmas(c: EquivariantComplex) -> list[LemmaCheck]:
    """Suspension, cofiber and tensor identities for ``c`` joined with a free orbit."""
    f = c.field
    p = f.p
    out: list[LemmaCheck] = []
    jc = join_with_point(c)
    hc = homology(c)
    hj = homology(jc)
    tau_r = indecomposable(f, 1)

    # H_{k+1}(X~ * Z/p) = H_k(X~) (x) tauR for k >= 1
    for k in range(1, jc.dim):
        hk = hc.equivariant[k] if k <= c.dim else None
        want = jordan_type(tensor_diagonal(hk, tau_r)) if hk is not None else {}
        got = hj.jordan_types[k + 1]
        out.append(LemmaCheck("suspension", k + 1, got == want, f"{describe(got, p)} vs {describe(want, p)}"))

    # reduced H_n(X *_p {*}) = coker(q_*)_n + ker(q_*)_{n-1}
    q = [orbit_projection_induced(c, n, hc) for n in range(c.dim + 1)]
    rk = [gfp.rank(m, p) for m in q]
    eq_dims = hc.equivariant_dims
    orb_dims = hc.orbit_dims
    red = hj.reduced_orbit_dims
    for n in range(jc.dim + 1):
        coker = 0 if n == 0 else (orb_dims[n] - rk[n] if n <= c.dim else 0)
        if n == 0:
            ker_prev = 0
        elif n == 1:
            ker_prev = eq_dims[0] - orb_dims[0]
        else:
            ker_prev = eq_dims[n - 1] - rk[n - 1] if n - 1 <= c.dim else 0
        out.append(LemmaCheck("cofiber", n, red[n] == coker + ker_prev, f"{red[n]} vs {coker}+{ker_prev}"))

    t1 = jordan_type(tensor_diagonal(indecomposable(f, p - 1), tau_r))
    t2 = jordan_type(tensor_diagonal(indecomposable(f, p - 2), tau_r))
    out.append(LemmaCheck("tensor", None, t1 == {p - 1: 1}, describe(t1, p)))
    out.append(LemmaCheck("tensor", None, t2 == {p - 2: 1, p: 1}, describe(t2, p)))
    return out


def reduced_dims(dims: list[int]) -> list[int]:
    return [dims[0] - 1] + list(dims[1:])


def kunneth_holds(a: EquivariantComplex, b: EquivariantComplex, j: EquivariantComplex | None = None) -> bool:
    """Reduced Betti numbers of the join are the shifted convolution of the factors'."""
    j = j if j is not None else join(a, b)
    ha = reduced_dims(homology_equivariant(a).equivariant_dims)
    hb = reduced_dims(homology_equivariant(b).equivariant_dims)
    hj = reduced_dims(homology_equivariant(j).equivariant_dims)
    for n in range(len(hj)):
        want = sum(ha[i] * hb[n - 1 - i] for i in range(len(ha)) if 0 <= n - 1 - i < len(hb))
        if hj[n] != want:
            return False
    return True


@dataclass
class TrialReport:
    field: PrimeField
    seed: int
    trials: list[dict] = dc_field(default_factory=list)

    @property
    def outcomes(self) -> dict[str, int]:
        counts = dict.fromkeys(OUTCOMES, 0)
        for t in self.trials:
            counts[t["outcome"]] += 1
        return counts

    @property
    def passed(self) -> bool:
        return self.outcomes["violation"] == 0

    def to_dict(self) -> dict:
        return {"p": self.field.p, "seed": self.seed, "outcomes": self.outcomes, "trials": self.trials}


def _summary(c: EquivariantComplex, rep) -> dict:
    return {
        "ranks": list(c.ranks),
        "homology_dims": homology_equivariant(c).equivariant_dims,
        "index": rep.index,
    }


def run_trials(cfg: GenConfig) -> TrialReport:
    """Index additivity over ``cfg.trials`` random pairs (trial ``t`` uses keys 2t, 2t+1)."""
    report = TrialReport(cfg.field, cfg.seed)
    for t in range(cfg.trials):
        a = random_free_complex(cfg, 2 * t)
        b = random_free_complex(cfg, 2 * t + 1)
        ra, rb = index_report(a), index_report(b)
        rj = index_report(join(a, b))
        report.trials.append({
            "trial": t,
            "a": _summary(a, ra),
            "b": _summary(b, rb),
            "join_index": rj.index,
            "outcome": classify_additivity(ra.index, rb.index, rj.index),
        })
    return report
