"""Join of two free equivariant complexes under the diagonal action.

The construction runs on expanded cells.  A pair cell ``e * f`` of degree
``m + n + 1`` gets the cellular boundary

    f - e                            m = n = 0
    f - e * (df)                     m = 0, n > 0
    (de) * f + (-1)^(m+1) e          m > 0, n = 0
    (de) * f + (-1)^(m+1) e * (df)   otherwise

and ``g`` acts by ``g(e * f) = ge * gf``.  Each diagonal orbit of pair cells
contains exactly one cell ``a * g^m b`` with ``a`` a generator of the left
complex, which serves as free R-generator; ``(g^j a) * (g^k b)`` equals
``g^j (a * g^(k-j) b)``.

Generator order in each degree: left generators, right generators, then
pairs sorted by left degree, left generator, right expanded cell.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .complexes import EquivariantComplex, ExpandedComplex, check, point_orbit
from .gfp import DTYPE


@dataclass(frozen=True)
class JoinCellLabel:
    tag: str  # "left", "right" or "pair"
    left: tuple[int, int] | None = None  # (degree, generator)
    right: tuple[int, int] | None = None  # (degree, expanded cell index)

    @property
    def degree(self) -> int:
        if self.tag == "left":
            return self.left[0]
        if self.tag == "right":
            return self.right[0]
        return self.left[0] + self.right[0] + 1


def join_labels(cx: EquivariantComplex, cy: EquivariantComplex) -> list[list[JoinCellLabel]]:
    """Free R-generators of the join, per degree."""
    p = cx.field.p
    top = cx.dim + cy.dim + 1
    labels: list[list[JoinCellLabel]] = []
    for n in range(top + 1):
        row = [JoinCellLabel("left", left=(n, a)) for a in range(cx.rank(n))]
        row += [JoinCellLabel("right", right=(n, b)) for b in range(cy.rank(n))]
        for i in range(0, n):
            j = n - 1 - i
            for a in range(cx.rank(i)):
                for f in range(cy.rank(j) * p):
                    row.append(JoinCellLabel("pair", left=(i, a), right=(j, f)))
        labels.append(row)
    return labels


def join_ranks(cx: EquivariantComplex, cy: EquivariantComplex) -> list[int]:
    p = cx.field.p
    top = cx.dim + cy.dim + 1
    return [
        cx.rank(n) + cy.rank(n) + p * sum(cx.rank(i) * cy.rank(n - 1 - i) for i in range(n))
        for n in range(top + 1)
    ]


def _pair_cell_boundary(ex: ExpandedComplex, ey: ExpandedComplex, m: int, e: int, n: int, f: int, p: int):
    """Boundary of the expanded pair cell ``e * f`` as (kind, degree, cell, coeff) terms.

    ``kind`` is "L" (left cell), "R" (right cell) or "P" (pair, cell = (e', f')).
    """
    terms = []
    sign = 1 if (m + 1) % 2 == 0 else -1
    if m == 0:
        if n == 0:
            terms.append(("R", 0, f, 1))
            terms.append(("L", 0, e, -1))
            return terms
        terms.append(("R", n, f, 1))
        df = ey.boundaries[n - 1][:, f]
        for f2 in np.flatnonzero(df):
            terms.append(("P", (0, n - 1), (e, int(f2)), -int(df[f2])))
        return terms
    de = ex.boundaries[m - 1][:, e]
    for e2 in np.flatnonzero(de):
        terms.append(("P", (m - 1, n), (int(e2), f), int(de[e2])))
    if n == 0:
        terms.append(("L", m, e, sign))
    else:
        df = ey.boundaries[n - 1][:, f]
        for f2 in np.flatnonzero(df):
            terms.append(("P", (m, n - 1), (e, int(f2)), sign * int(df[f2])))
    return terms


def join(cx: EquivariantComplex, cy: EquivariantComplex, name: str | None = None) -> EquivariantComplex:
    """The join ``X~ * Y~`` with the diagonal action, as a free R-complex."""
    if cx.field != cy.field:
        raise ValueError(f"cannot join complexes over p={cx.field.p} and p={cy.field.p}")
    check(cx)
    check(cy)
    p = cx.field.p
    ex, ey = cx.expanded, cy.expanded
    labels = join_labels(cx, cy)
    ranks = [len(row) for row in labels]

    # position of each free generator within its degree
    left_pos = {}
    right_pos = {}
    pair_pos = {}
    for n, row in enumerate(labels):
        for k, lab in enumerate(row):
            if lab.tag == "left":
                left_pos[lab.left] = k
            elif lab.tag == "right":
                right_pos[lab.right] = k
            else:
                pair_pos[(lab.left, lab.right)] = k

    def locate(kind, deg, cell):
        """Free generator and group power of an expanded join cell."""
        if kind == "L":
            a, j = divmod(cell, p)
            return left_pos[(deg, a)], j
        if kind == "R":
            b, j = divmod(cell, p)
            return right_pos[(deg, b)], j
        (m, n), (e, f) = deg, cell
        a, j = divmod(e, p)
        b, k = divmod(f, p)
        # (g^j a) * (g^k b) = g^j (a * g^(k-j) b)
        return pair_pos[((m, a), (n, b * p + (k - j) % p))], j

    bds = []
    for n in range(1, len(ranks)):
        b = np.zeros((ranks[n - 1], ranks[n], p), dtype=DTYPE)
        for col, lab in enumerate(labels[n]):
            if lab.tag == "left":
                d = cx.boundary(n)[:, lab.left[1]]
                b[_tag_slice(labels[n - 1], "left"), col] = d
                continue
            if lab.tag == "right":
                d = cy.boundary(n)[:, lab.right[1]]
                b[_tag_slice(labels[n - 1], "right"), col] = d
                continue
            (m, a), (nn, f) = lab.left, lab.right
            for kind, deg, cell, coeff in _pair_cell_boundary(ex, ey, m, a * p, nn, f, p):
                row, j = locate(kind, deg, cell)
                b[row, col, j] += coeff
        bds.append(np.mod(b, p))
    if name is None:
        name = f"join({cx.name or '?'},{cy.name or '?'})"
    return check(EquivariantComplex(cx.field, tuple(ranks), tuple(bds), name))


def _tag_slice(row_labels, tag) -> slice:
    idx = [k for k, lab in enumerate(row_labels) if lab.tag == tag]
    if not idx:
        return slice(0, 0)
    return slice(idx[0], idx[-1] + 1)


def join_with_point(c: EquivariantComplex) -> EquivariantComplex:
    """``c`` joined with the free orbit Z/p (the orbit space ``X *_p {*}``)."""
    return join(c, point_orbit(c.field), name=f"join({c.name or '?'},point_orbit)")


def expanded_join(ex: ExpandedComplex, ey: ExpandedComplex) -> tuple[list[list[tuple]], ExpandedComplex]:
    """Join of expanded complexes built cell by cell with the diagonal action.

    Independent of the orbit bookkeeping in :func:`join`; returns the cell
    labels (``("L", deg, cell)``, ``("R", deg, cell)`` or
    ``("P", (m, n), (e, f))``) and the complex.
    """
    p = ex.field.p
    dx, dy = len(ex.dims) - 1, len(ey.dims) - 1
    top = dx + dy + 1
    cells: list[list[tuple]] = []
    for n in range(top + 1):
        row = [("L", n, e) for e in range(ex.dims[n])] if n <= dx else []
        row += [("R", n, f) for f in range(ey.dims[n])] if n <= dy else []
        for m in range(0, min(n, dx + 1)):
            k = n - 1 - m
            if k > dy:
                continue
            row += [("P", (m, k), (e, f)) for e in range(ex.dims[m]) for f in range(ey.dims[k])]
        cells.append(row)
    index = [{cell: i for i, cell in enumerate(row)} for row in cells]

    def act(cell):
        kind, deg, c = cell
        if kind == "L":
            return (kind, deg, int(np.flatnonzero(ex.g_action[deg][:, c])[0]))
        if kind == "R":
            return (kind, deg, int(np.flatnonzero(ey.g_action[deg][:, c])[0]))
        e, f = c
        return (kind, deg, (int(np.flatnonzero(ex.g_action[deg[0]][:, e])[0]),
                            int(np.flatnonzero(ey.g_action[deg[1]][:, f])[0])))

    bds = []
    for n in range(1, top + 1):
        b = np.zeros((len(cells[n - 1]), len(cells[n])), dtype=DTYPE)
        for col, (kind, deg, c) in enumerate(cells[n]):
            if kind == "L":
                b[[index[n - 1][("L", n - 1, e)] for e in range(ex.dims[n - 1])], col] = ex.boundaries[n - 1][:, c]
            elif kind == "R":
                b[[index[n - 1][("R", n - 1, f)] for f in range(ey.dims[n - 1])], col] = ey.boundaries[n - 1][:, c]
            else:
                (m, k), (e, f) = deg, c
                for tk, tdeg, tcell, coeff in _pair_cell_boundary(ex, ey, m, e, k, f, p):
                    b[index[n - 1][(tk, tdeg, tcell)], col] += coeff
        bds.append(np.mod(b, p))
    g = []
    for n in range(top + 1):
        a = np.zeros((len(cells[n]), len(cells[n])), dtype=DTYPE)
        for col, cell in enumerate(cells[n]):
            a[index[n][act(cell)], col] = 1
        g.append(a)
    return cells, ExpandedComplex(ex.field, tuple(len(r) for r in cells), tuple(bds), tuple(g))
