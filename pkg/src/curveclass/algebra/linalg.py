"""Exact minors, determinants and ranks.

Minors are built row by row: the minors of rows 0..i on a column set S
are the cofactor expansions along row i of the minors of rows 0..i-1 on
S minus one column.  One pass therefore yields every maximal minor of
every leading block, i.e. X, X^X', X^X'^X'', ... in a single sweep.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from typing import Callable, Dict, List, Sequence, Tuple

from .forms import BinaryForm, PolyVector
from .univariate import exact

Cols = Tuple[int, ...]


def laplace_layers(rows: Sequence[Sequence], one, is_zero: Callable = lambda x: not x):
    """Yield, for i = 1..len(rows), a dict {column set: minor} of the
    i x i minors of the first i rows.  Zero minors are stored as None."""
    ncols = len(rows[0])
    layer: Dict[Cols, object] = {(): one}
    for i, row in enumerate(rows):
        nxt: Dict[Cols, object] = {}
        for cols in combinations(range(ncols), i + 1):
            acc = None
            for p, j in enumerate(cols):
                entry = row[j]
                if is_zero(entry):
                    continue
                sub = layer.get(cols[:p] + cols[p + 1:])
                if sub is None:
                    continue
                term = entry * sub if (i + p) % 2 == 0 else -(entry * sub)
                acc = term if acc is None else acc + term
            if acc is not None and is_zero(acc):
                acc = None
            nxt[cols] = acc
        layer = nxt
        yield layer


def determinant(matrix: Sequence[Sequence], one, zero):
    """Determinant over any commutative ring with +, -, * (no division)."""
    n = len(matrix)
    if n == 0:
        return one
    if any(len(r) != n for r in matrix):
        raise ValueError("determinant of a non-square matrix")
    last = None
    for last in laplace_layers(matrix, one):
        pass
    val = last[tuple(range(n))]
    return zero if val is None else val


def _row_degrees(rows: Sequence[PolyVector]) -> int:
    return sum(r.degree for r in rows)


def wedge(rows: Sequence[PolyVector]) -> List[PolyVector]:
    """For r = 1..len(rows): all r x r minors of the first r rows, in
    lexicographic column-set order, as PolyVectors."""
    ncols = len(rows[0])
    if any(len(r) != ncols for r in rows):
        raise ValueError("rows of unequal length")
    out = []
    one = BinaryForm.constant(1)
    for r, layer in enumerate(laplace_layers([list(row) for row in rows], one), start=1):
        deg = _row_degrees(rows[:r])
        out.append(PolyVector(
            layer[c] if layer[c] is not None else BinaryForm.zero(deg)
            for c in combinations(range(ncols), r)
        ))
    return out


def minors(rows: Sequence[PolyVector], size: int) -> PolyVector:
    """All size x size minors of the first `size` rows, lexicographic in
    the column set."""
    if size < 1 or len(rows) < size or len(rows[0]) < size:
        raise ValueError(f"need at least {size} rows and columns for {size}-minors")
    return wedge(rows[:size])[-1]


# --------------------------------------------------------------------------
# matrices over Q


def rank(matrix: Sequence[Sequence]) -> int:
    """Rank over Q by fraction-free Gaussian elimination."""
    m = [[exact(x) for x in row] for row in matrix]
    if not m:
        return 0
    nrows, ncols = len(m), len(m[0])
    r = 0
    for col in range(ncols):
        piv = next((i for i in range(r, nrows) if m[i][col]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        p = m[r][col]
        for i in range(r + 1, nrows):
            f = m[i][col]
            if f:
                m[i] = [p * a - f * b for a, b in zip(m[i], m[r])]
        r += 1
        if r == nrows:
            break
    return r


def nullspace(matrix: Sequence[Sequence]) -> List[List[Fraction]]:
    """Basis of {x : M x = 0} over Q via reduced row echelon form."""
    m = [[Fraction(x) for x in row] for row in matrix]
    ncols = len(m[0]) if m else 0
    pivots = []
    r = 0
    for col in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][col]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        p = m[r][col]
        m[r] = [x / p for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][col]:
                f = m[i][col]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(col)
        r += 1
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fcol in free:
        v = [Fraction(0)] * ncols
        v[fcol] = Fraction(1)
        for i, pcol in enumerate(pivots):
            v[pcol] = -m[i][fcol]
        basis.append(v)
    return basis


def generic_rank(rows: Sequence[PolyVector]) -> int:
    """Rank of a matrix of binary forms over the function field Q(t).

    A nonzero r x r minor has degree at most the sum of the r largest row
    degrees, so it cannot vanish at that many + 1 distinct points of the
    chart s = 1.  The maximum pointwise rank over those points is exact.
    """
    rows = [r for r in rows if not r.is_zero]
    if not rows:
        return 0
    cap = min(len(rows), len(rows[0]))
    bound = sum(sorted((r.degree for r in rows), reverse=True)[:cap])
    best = 0
    for t in range(bound + 1):
        best = max(best, rank([r.evaluate(1, t) for r in rows]))
        if best == cap:
            break
    return best
