"""Moving frames of (k+1)-planes along P^1 and their integrability.

A frame is k+1 vectors of binary forms spanning a (k+1)-plane L(t) for
generic t.  Rows may have different degrees (X and X_t do), but each row
has a single degree.  A frame comes from the k-th associated curve of a
nondegenerate curve exactly when L + L' always has dimension k+2 and the
planes are not trapped in a fixed proper subspace; then raising it to a
hyperplane field and dualizing recovers the curve.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from itertools import combinations
from typing import List, Sequence, Tuple

from .algebra import PolyVector, generic_rank, wedge
from .curves import ParamCurve, derivative_rows
from .errors import InvalidCurve, NotIntegrable


class Integrability(str, Enum):
    INTEGRABLE = "INTEGRABLE"
    FAILS_HAT_DIM = "FAILS_HAT_DIM"
    FAILS_NONDEGENERACY = "FAILS_NONDEGENERACY"


def _content_reduced(row: PolyVector) -> PolyVector:
    return row.exact_div(row.content()).normalized()


@dataclass(frozen=True)
class GrassFrame:
    ambient_dim: int
    level: int
    rows: Tuple[PolyVector, ...]

    def __post_init__(self):
        rows = tuple(self.rows)
        object.__setattr__(self, "rows", rows)
        if len(rows) != self.level + 1:
            raise InvalidCurve(f"level {self.level} frame needs {self.level + 1} rows, got {len(rows)}")
        if any(len(r) != self.ambient_dim + 1 for r in rows):
            raise InvalidCurve(f"rows must have {self.ambient_dim + 1} entries")
        if not 0 <= self.level <= self.ambient_dim - 1:
            raise InvalidCurve(f"level must be in 0..{self.ambient_dim - 1}")
        if generic_rank(rows) != self.level + 1:
            raise InvalidCurve("frame rows are linearly dependent")

    @classmethod
    def from_rows(cls, rows: Sequence[PolyVector]) -> "GrassFrame":
        rows = tuple(rows)
        return cls(len(rows[0]) - 1, len(rows) - 1, rows)

    def derived(self, order: int = 1) -> List[PolyVector]:
        """The rows followed by their t-derivatives up to ``order``; zero
        rows are dropped."""
        out = []
        for r in self.rows:
            out.extend(derivative_rows(r, order))
        return [r for r in out if not r.is_zero]

    def plucker(self) -> PolyVector:
        """Content-free Plücker coordinates of the spanned plane."""
        w = wedge(self.rows)[-1]
        return w.exact_div(w.content()).normalized()


def frame_of(curve: ParamCurve, k: int) -> GrassFrame:
    """The osculating frame X, X_t, ..., X_t^(k)."""
    return GrassFrame(curve.ambient_dim, k, tuple(derivative_rows(curve.coords, k)))


def hat(frame: GrassFrame) -> GrassFrame:
    """A frame of L + L', taken from the lexicographically first k+2 rows of
    [rows; rows'] that are generically independent."""
    k, n = frame.level, frame.ambient_dim
    if k + 1 > n - 1:
        raise ValueError("hat needs level at most n - 2")
    stack = list(frame.rows) + [r.derivative_t() for r in frame.rows]
    if generic_rank([r for r in stack if not r.is_zero]) != k + 2:
        raise NotIntegrable(f"dim(L + L') is not {k + 2}")
    for idx in combinations(range(len(stack)), k + 2):
        chosen = [stack[i] for i in idx]
        if any(r.is_zero for r in chosen):
            continue
        if generic_rank(chosen) == k + 2:
            return GrassFrame(n, k + 1, tuple(_content_reduced(r) for r in chosen))
    raise NotIntegrable("no independent row subset")  # unreachable after the rank test


def integrability_check(frame: GrassFrame) -> Integrability:
    k, n = frame.level, frame.ambient_dim
    if generic_rank(frame.derived(1)) != k + 2:
        return Integrability.FAILS_HAT_DIM
    if generic_rank(frame.derived(n)) != n + 1:
        return Integrability.FAILS_NONDEGENERACY
    return Integrability.INTEGRABLE


def star(frame: GrassFrame) -> PolyVector:
    """Normal vector of a hyperplane frame: y_i = (-1)^i times the maximal
    minor omitting column i."""
    n = frame.ambient_dim
    if frame.level != n - 1:
        raise ValueError("star needs a hyperplane frame")
    w = wedge(frame.rows)[-1]
    return PolyVector(w[n - i] if i % 2 == 0 else -w[n - i] for i in range(n + 1))


def recover_underlying(frame: GrassFrame) -> ParamCurve:
    verdict = integrability_check(frame)
    if verdict is not Integrability.INTEGRABLE:
        raise NotIntegrable(verdict.value)
    while frame.level < frame.ambient_dim - 1:
        frame = hat(frame)
    normal = star(frame)
    dual_curve = ParamCurve(normal.exact_div(normal.content()).normalized())
    return dual_curve.dual()
