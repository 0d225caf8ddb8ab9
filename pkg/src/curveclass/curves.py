"""Rational curves in P^n given by binary forms, and their associated curves.

Derivatives are taken in the affine parameter t only, so the raw
(k+1)-minors of X, X_t, ..., X_t^(k) always carry the factor
s^(k(k+1)/2).  What is left after removing it, G_k, vanishes exactly at
the ramification points: its order at p is sum_{i<k} (k-i) beta_i(p).
Writing e_k = deg G_k, the degree of the k-th associated curve is
d_k = (k+1)(d-k) - e_k and the total ramification is the second
difference of e_k.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from itertools import combinations, combinations_with_replacement
from typing import Dict, List, Optional, Sequence, Tuple

from .algebra import BinaryForm, MPoly, PolyVector, nullspace, rational_roots, resultant, valuation, wedge
from .algebra.forms import Point, normalize_point
from .algebra.multivariate import from_binary_form
from .errors import DegenerateCurve, ImproperParametrization, InternalInconsistency, InvalidCurve
from .invariants import ClassTriple, arithmetic_genus


def derivative_rows(coords: PolyVector, order: int) -> List[PolyVector]:
    """X, X_t, ..., X_t^(order)."""
    rows = [coords]
    for _ in range(order):
        rows.append(rows[-1].derivative_t())
    return rows


def s_weight(k: int) -> int:
    return k * (k + 1) // 2


class ParamCurve:
    """A nondegenerate curve t -> (x_0(t) : ... : x_n(t)) with coprime
    coordinates of common degree d."""

    def __init__(self, coords, validate: bool = True):
        if not isinstance(coords, PolyVector):
            coords = PolyVector(c if isinstance(c, BinaryForm) else BinaryForm(c) for c in coords)
        self.coords = coords
        if validate:
            self._validate()

    @classmethod
    def from_affine(cls, polys: Sequence[Sequence], degree: int | None = None) -> "ParamCurve":
        """Build from ascending affine polynomials in t, homogenized to a
        common degree (the largest one unless given)."""
        forms = [BinaryForm.from_affine(p) for p in polys]
        if degree is None:
            degree = max(f.degree for f in forms)
        return cls(PolyVector(BinaryForm.from_affine(p, degree) for p in polys))

    def _validate(self) -> None:
        n, d = self.ambient_dim, self.degree
        if n < 2:
            raise InvalidCurve("ambient dimension must be at least 2")
        if d < 1 or self.coords.is_zero:
            raise InvalidCurve("coordinates must have positive degree")
        g = self.coords.content()
        if g.degree > 0:
            raise InvalidCurve(f"coordinates share the factor {g}")
        if self.raw_wedge(n).is_zero:
            raise DegenerateCurve("curve lies in a hyperplane")

    # -- basic data --------------------------------------------------------
    @property
    def ambient_dim(self) -> int:
        return len(self.coords) - 1

    @property
    def degree(self) -> int:
        return self.coords.degree

    def __eq__(self, other) -> bool:
        return isinstance(other, ParamCurve) and self.coords == other.coords

    def __hash__(self) -> int:
        return hash(self.coords)

    def __repr__(self) -> str:
        return f"ParamCurve({', '.join(str(e) for e in self.coords)})"

    def normalized(self) -> "ParamCurve":
        return ParamCurve(self.coords.normalized(), validate=False)

    def is_proportional(self, other: "ParamCurve") -> bool:
        return self.coords.is_proportional(other.coords)

    # -- wedges --------------------------------------------------------------
    @cached_property
    def _wedges(self) -> List[PolyVector]:
        return wedge(derivative_rows(self.coords, self.ambient_dim))

    def raw_wedge(self, k: int) -> PolyVector:
        """Raw (k+1)-minors of X, ..., X_t^(k), k = 0..n."""
        return self._wedges[k]

    @cached_property
    def _contents(self) -> List[BinaryForm]:
        """G_k for k = 0..n: content of the raw minors with s^(k(k+1)/2) removed."""
        out = []
        for k, w in enumerate(self._wedges):
            if w.is_zero:
                raise DegenerateCurve(f"wedge of order {k} vanishes identically")
            g = w.content()
            m = s_weight(k)
            if g.s_order() < m:
                raise InternalInconsistency(f"s^{m} does not divide the order-{k} minors")
            out.append(g.divide_s_power(m))
        return out

    def ramification_content(self, k: int) -> BinaryForm:
        return self._contents[k]

    def content_degrees(self) -> List[int]:
        """e_0..e_n."""
        return [g.degree for g in self._contents]

    # -- invariants ------------------------------------------------------------
    def degree_sequence(self) -> List[int]:
        d, n = self.degree, self.ambient_dim
        e = self.content_degrees()
        return [(k + 1) * (d - k) - e[k] for k in range(n)]

    def total_ramification(self) -> List[int]:
        seq = [0] + self.degree_sequence() + [0]
        betas = [2 * seq[k + 1] - seq[k] - seq[k + 2] - 2 for k in range(self.ambient_dim)]
        if any(b < 0 for b in betas):
            raise InternalInconsistency(f"negative ramification {betas}")
        return betas

    def ramification_at(self, p: Point) -> List[int]:
        """beta_0(p), ..., beta_{n-1}(p) from the orders of the minors at p."""
        a, b = normalize_point(p)
        if a == 0:
            moved = self.coords.substitute(0, 1, 1, 0)  # swap s and t
        else:
            moved = self.coords.substitute(1, 0, Fraction(b) / a, 1)
        n = self.ambient_dim
        minors = wedge(derivative_rows(moved, n))
        v = [0] + [min(e.t_order() for e in w if not e.is_zero) for w in minors]
        # v[k + 1] is the order of the (k+1)-minors; v[0] stands for k = -1
        return [v[k + 2] - 2 * v[k + 1] + v[k] for k in range(n)]

    def ramification_points(self) -> List[Tuple[Point, int]]:
        """Rational roots of G_n with multiplicity; every ramification
        point is among the roots of G_n."""
        g = self._contents[self.ambient_dim]
        return rational_roots(g) if g.degree > 0 else []

    def ramification_profile(self) -> "RamificationProfile":
        at_points = {p: self.ramification_at(p) for p, _ in self.ramification_points()}
        return RamificationProfile(self.total_ramification(), at_points)

    def plucker_residuals(self) -> List[int]:
        """d_{k-1} - 2 d_k + d_{k+1} + 2 + beta_k for k = 0..n-1, with beta_k
        recomputed pointwise at the rational roots of the contents plus the
        degree left over by irrational roots."""
        n = self.ambient_dim
        seq = [0] + self.degree_sequence() + [0]
        points = [p for p, _ in self.ramification_points()]
        pointwise = [self.ramification_at(p) for p in points]
        leftover = [0]
        for k in range(n + 1):
            g = self._contents[k]
            leftover.append(g.degree - sum(valuation(g, p) for p in points) if g.degree > 0 else 0)
        out = []
        for k in range(n):
            beta = sum(b[k] for b in pointwise) + leftover[k + 2] - 2 * leftover[k + 1] + leftover[k]
            out.append(seq[k] - 2 * seq[k + 1] + seq[k + 2] + 2 + beta)
        return out

    # -- associated curves and duality --------------------------------------
    def associated(self, k: int) -> "AssociatedCurve":
        n = self.ambient_dim
        if not 1 <= k <= n - 1:
            raise ValueError(f"level must be in 1..{n - 1}, got {k}")
        raw = self.raw_wedge(k)
        plucker = raw.exact_div(raw.content()).normalized()
        return AssociatedCurve(n, k, plucker)

    def raw_dual(self) -> PolyVector:
        """Signed n-minors y_i = (-1)^i * (minor omitting column i), before
        any content is removed."""
        n = self.ambient_dim
        w = self.raw_wedge(n - 1)
        # lexicographic n-subsets of {0..n}: the one omitting i sits at n - i
        return PolyVector(w[n - i] if i % 2 == 0 else -w[n - i] for i in range(n + 1))

    def dual(self) -> "ParamCurve":
        y = self.raw_dual()
        return ParamCurve(y.exact_div(y.content()).normalized())

    def bidual_check(self) -> bool:
        return self.dual().dual().is_proportional(self)

    def duality_symmetry_check(self) -> "DualitySymmetryReport":
        dual = self.dual()
        ds, dd = self.degree_sequence(), dual.degree_sequence()
        bs, bd = self.total_ramification(), dual.total_ramification()
        n = self.ambient_dim
        return DualitySymmetryReport(
            degrees=ds, dual_degrees=dd, betas=bs, dual_betas=bd,
            degree_residuals=[dd[k] - ds[n - 1 - k] for k in range(n)],
            beta_residuals=[bd[k] - bs[n - 1 - k] for k in range(n)],
        )

    def orthogonality_pairing(self, i: int, j: int, reduced: bool = False) -> BinaryForm:
        """X_t^(i) . Y_t^(j) for the raw or content-reduced dual Y."""
        y = self.dual().coords if reduced else self.raw_dual()
        xi = derivative_rows(self.coords, i)[-1]
        yj = derivative_rows(y, j)[-1]
        return xi.dot(yj)

    def orthogonality_check(self) -> "OrthogonalityReport":
        n = self.ambient_dim
        pairs = [(i, j) for i in range(n) for j in range(n - i)]
        raw = {pq: self.orthogonality_pairing(*pq).is_zero for pq in pairs}
        red = {pq: self.orthogonality_pairing(*pq, reduced=True).is_zero for pq in pairs}
        return OrthogonalityReport(pairs, raw, red)

    # -- plane curves --------------------------------------------------------
    def plane_profile(self) -> "PlaneProfile":
        if self.ambient_dim != 2:
            raise ValueError("plane profile needs a curve in P^2")
        d = self.degree
        c = self.degree_sequence()[1]
        delta = arithmetic_genus(d)
        kappa = d * (d - 1) - c
        nodes = cusps = None
        if 2 * delta <= kappa <= 3 * delta:
            nodes, cusps = 3 * delta - kappa, kappa - 2 * delta
        return PlaneProfile(d, c, delta, kappa, nodes, cusps, self.total_ramification()[0])

    def implicitize(self) -> MPoly:
        """Primitive equation F(x0, x1, x2) of the image of a plane curve."""
        if self.ambient_dim != 2:
            raise ValueError("implicitization needs a curve in P^2")
        return implicit_equation(self)


@dataclass(frozen=True)
class RamificationProfile:
    totals: List[int]
    at_points: Dict[Point, List[int]] = field(default_factory=dict)


@dataclass(frozen=True)
class AssociatedCurve:
    ambient_dim: int
    k: int
    plucker: PolyVector

    @property
    def degree(self) -> int:
        return self.plucker.degree

    @property
    def index_sets(self) -> List[Tuple[int, ...]]:
        return list(combinations(range(self.ambient_dim + 1), self.k + 1))

    def coordinate(self, *indices: int) -> BinaryForm:
        return self.plucker[self.index_sets.index(tuple(indices))]

    def plucker_relations(self) -> List[BinaryForm]:
        return plucker_relations(self.plucker, self.ambient_dim, self.k)

    def relations_hold(self) -> bool:
        return all(r.is_zero for r in self.plucker_relations())


def plucker_relations(p: PolyVector, n: int, k: int) -> List[BinaryForm]:
    """Quadratic Plücker relations of a (k+1)-vector in dimension n+1:
    sum_l (-1)^l p[I + j_l] p[J - j_l] over I of size k, J of size k+2."""
    r = k + 1
    index = {c: i for i, c in enumerate(combinations(range(n + 1), r))}

    def coord(idx: Sequence[int]):
        if len(set(idx)) < len(idx):
            return None
        perm = sorted(range(len(idx)), key=lambda a: idx[a])
        sign = 1
        seen = [False] * len(perm)
        for a in range(len(perm)):  # parity from cycle decomposition
            if not seen[a]:
                length, b = 0, a
                while not seen[b]:
                    seen[b] = True
                    b = perm[b]
                    length += 1
                if length % 2 == 0:
                    sign = -sign
        f = p[index[tuple(sorted(idx))]]
        return f if sign > 0 else -f

    out = []
    for I in combinations(range(n + 1), r - 1):
        for J in combinations(range(n + 1), r + 1):
            acc = BinaryForm.zero(2 * p.degree)
            for l, j in enumerate(J):
                a = coord(I + (j,))
                if a is None:
                    continue
                b = coord(J[:l] + J[l + 1:])
                term = a * b
                acc = acc + (term if l % 2 == 0 else -term)
            out.append(acc)
    return out


@dataclass(frozen=True)
class DualitySymmetryReport:
    degrees: List[int]
    dual_degrees: List[int]
    betas: List[int]
    dual_betas: List[int]
    degree_residuals: List[int]
    beta_residuals: List[int]

    @property
    def passed(self) -> bool:
        return not any(self.degree_residuals) and not any(self.beta_residuals)


@dataclass(frozen=True)
class OrthogonalityReport:
    pairs: List[Tuple[int, int]]
    raw: Dict[Tuple[int, int], bool]
    reduced: Dict[Tuple[int, int], bool]

    @property
    def passed(self) -> bool:
        return all(self.raw.values())

    @property
    def reduced_passed(self) -> bool:
        return all(self.reduced.values())

    def __bool__(self) -> bool:
        return self.passed


@dataclass(frozen=True)
class PlaneProfile:
    d: int
    c: int
    delta: int
    kappa: int
    nodes: Optional[int]
    cusps: Optional[int]
    beta0: int

    @property
    def smooth(self) -> bool:
        return self.delta == 0 and self.kappa == 0

    @property
    def triple(self) -> ClassTriple:
        return ClassTriple(self.d, 0, self.c)


# --------------------------------------------------------------------------
# implicitization


VARS = ("x0", "x1", "x2")


def ternary_monomials(d: int) -> List[Tuple[int, int, int]]:
    out = []
    for combo in combinations_with_replacement(range(3), d):
        out.append(tuple(combo.count(i) for i in range(3)))
    return sorted(set(out), reverse=True)


def vanishing_forms(curve: ParamCurve, d: int) -> List[List[Fraction]]:
    """Basis of degree-d ternary forms (coefficients on ternary_monomials)
    vanishing identically on a plane curve."""
    monos = ternary_monomials(d)
    x = curve.coords
    powers = [[BinaryForm.constant(1)] for _ in range(3)]
    for i in range(3):
        for _ in range(d):
            powers[i].append(powers[i][-1] * x[i])
    cols = []
    for a, b, c in monos:
        f = powers[0][a] * powers[1][b] * powers[2][c]
        cols.append(list(f.coeffs) + [0] * (d * curve.degree + 1 - len(f.coeffs)))
    matrix = [list(row) for row in zip(*cols)]
    return nullspace(matrix)


def implicit_equation(curve: ParamCurve) -> MPoly:
    d = curve.degree
    a, b, c = (from_binary_form(f) for f in curve.coords)
    x0, x1, x2 = (MPoly.var(v) for v in VARS)
    res = resultant(x0 * b - x1 * a, x0 * c - x2 * a, "t", deg_f=d, deg_g=d)
    if not res:
        raise ImproperParametrization("elimination gave the zero polynomial")
    res = res.divide_var_power("x0", res.min_exponent("x0"))
    eq = res.primitive(VARS)
    if eq.degree() != d:
        raise ImproperParametrization(f"implicit equation has degree {eq.degree()}, expected {d}")
    if len(vanishing_forms(curve, d)) != 1:
        raise ImproperParametrization("parametrization is not birational onto its image")
    image = eq.substitute({v: f for v, f in zip(VARS, curve.coords)})
    if not (image.is_zero if isinstance(image, BinaryForm) else image == 0):
        raise InternalInconsistency("implicit equation does not vanish on the curve")
    return eq
