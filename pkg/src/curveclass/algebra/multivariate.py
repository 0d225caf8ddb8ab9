"""Sparse multivariate polynomials over Q and Sylvester resultants.

Only what elimination needs: ring arithmetic, coefficient extraction in
one variable, substitution, and a canonical primitive form for output.
"""

from __future__ import annotations

from fractions import Fraction
from functools import reduce
from math import gcd, lcm
from typing import Dict, Iterable, List, Mapping, Sequence, Tuple

from .forms import BinaryForm
from .linalg import determinant
from .univariate import Number, exact

Monomial = Tuple[Tuple[str, int], ...]


def _mono_mul(a: Monomial, b: Monomial) -> Monomial:
    exps = dict(a)
    for v, e in b:
        exps[v] = exps.get(v, 0) + e
    return tuple(sorted(exps.items()))


class MPoly:
    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Monomial, Number] | None = None):
        clean: Dict[Monomial, Number] = {}
        for m, c in (terms or {}).items():
            c = exact(c)
            if c:
                m = tuple(sorted((v, e) for v, e in m if e))
                clean[m] = exact(clean.get(m, 0) + c)
                if not clean[m]:
                    del clean[m]
        self.terms = clean

    @classmethod
    def var(cls, name: str) -> "MPoly":
        return cls({((name, 1),): 1})

    @classmethod
    def const(cls, c) -> "MPoly":
        return cls({(): c})

    @staticmethod
    def lift(x) -> "MPoly":
        return x if isinstance(x, MPoly) else MPoly.const(x)

    # -- arithmetic --------------------------------------------------------
    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = MPoly.const(other)
        if not isinstance(other, MPoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __neg__(self) -> "MPoly":
        return MPoly({m: -c for m, c in self.terms.items()})

    def __add__(self, other) -> "MPoly":
        other = MPoly.lift(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, 0) + c
        return MPoly(out)

    __radd__ = __add__

    def __sub__(self, other) -> "MPoly":
        return self + (-MPoly.lift(other))

    def __rsub__(self, other) -> "MPoly":
        return MPoly.lift(other) - self

    def __mul__(self, other) -> "MPoly":
        other = MPoly.lift(other)
        out: Dict[Monomial, Number] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = _mono_mul(m1, m2)
                out[m] = out.get(m, 0) + c1 * c2
        return MPoly(out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "MPoly":
        out = MPoly.const(1)
        for _ in range(e):
            out = out * self
        return out

    # -- structure ---------------------------------------------------------
    def variables(self) -> List[str]:
        return sorted({v for m in self.terms for v, _ in m})

    def degree(self, var: str | None = None) -> int:
        if not self.terms:
            return -1
        if var is None:
            return max(sum(e for _, e in m) for m in self.terms)
        return max(dict(m).get(var, 0) for m in self.terms)

    def is_homogeneous(self) -> bool:
        return len({sum(e for _, e in m) for m in self.terms}) <= 1

    def coefficients(self, var: str) -> List["MPoly"]:
        """Ascending coefficients with respect to ``var``."""
        out: List[Dict[Monomial, Number]] = [dict() for _ in range(max(self.degree(var), 0) + 1)]
        for m, c in self.terms.items():
            e = dict(m).get(var, 0)
            rest = tuple((v, k) for v, k in m if v != var)
            out[e][rest] = c
        return [MPoly(t) for t in out]

    def min_exponent(self, var: str) -> int:
        return min(dict(m).get(var, 0) for m in self.terms)

    def divide_var_power(self, var: str, k: int) -> "MPoly":
        out = {}
        for m, c in self.terms.items():
            exps = dict(m)
            if exps.get(var, 0) < k:
                raise ValueError(f"{var}^{k} does not divide")
            exps[var] = exps.get(var, 0) - k
            out[tuple(exps.items())] = c
        return MPoly(out)

    def substitute(self, values: Mapping[str, object]):
        """Replace variables by ring elements (numbers, MPolys, BinaryForms).

        Variables missing from ``values`` must not occur.
        """
        acc = None
        for m, c in self.terms.items():
            term = None
            for v, e in m:
                factor = values[v] ** e
                term = factor if term is None else term * factor
            term = c if term is None else term * c
            acc = term if acc is None else acc + term
        return 0 if acc is None else acc

    def ordered_terms(self, variables: Sequence[str] | None = None) -> List[Tuple[Monomial, Number]]:
        """Terms in graded lexicographic order (highest first)."""
        variables = list(variables) if variables is not None else self.variables()

        def key(item):
            exps = dict(item[0])
            return (-sum(exps.values()), [-exps.get(v, 0) for v in variables])

        return sorted(self.terms.items(), key=key)

    def primitive(self, variables: Sequence[str] | None = None) -> "MPoly":
        """Coprime integer coefficients, leading (grlex) coefficient positive."""
        if not self.terms:
            return self
        coeffs = list(self.terms.values())
        den = reduce(lcm, (Fraction(c).denominator for c in coeffs), 1)
        num = reduce(gcd, (int(c * den) for c in coeffs), 0)
        r = Fraction(num, den)
        if self.ordered_terms(variables)[0][1] < 0:
            r = -r
        return MPoly({m: c / r for m, c in self.terms.items()})

    def __repr__(self) -> str:
        return f"MPoly({str(self)!r})"

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for m, c in self.ordered_terms():
            body = "*".join(v if e == 1 else f"{v}^{e}" for v, e in m)
            mag = abs(c)
            if not body:
                term = str(mag)
            elif mag == 1:
                term = body
            else:
                term = f"{mag}*{body}"
            parts.append(("-" if c < 0 else "+", term))
        out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, term in parts[1:]:
            out += f" {sign} {term}"
        return out


def sylvester_matrix(f: Sequence[MPoly], g: Sequence[MPoly]) -> List[List[MPoly]]:
    """Sylvester matrix of two coefficient lists given in ascending order;
    list lengths fix the formal degrees."""
    m, n = len(f) - 1, len(g) - 1
    size = m + n
    zero = MPoly()
    rows = []
    fd, gd = list(reversed(f)), list(reversed(g))
    for i in range(n):
        rows.append([zero] * i + fd + [zero] * (size - m - 1 - i))
    for i in range(m):
        rows.append([zero] * i + gd + [zero] * (size - n - 1 - i))
    return rows


def resultant(f: MPoly, g: MPoly, var: str = "t",
              deg_f: int | None = None, deg_g: int | None = None) -> MPoly:
    """Res_var(f, g) as the Sylvester determinant.

    Formal degrees may exceed the actual ones; the result is then the
    resultant of the corresponding binary forms (roots at infinity count).
    """
    f, g = MPoly.lift(f), MPoly.lift(g)
    if not f or not g:
        raise ValueError("resultant with a zero polynomial")
    cf, cg = f.coefficients(var), g.coefficients(var)
    deg_f = len(cf) - 1 if deg_f is None else deg_f
    deg_g = len(cg) - 1 if deg_g is None else deg_g
    if deg_f < len(cf) - 1 or deg_g < len(cg) - 1:
        raise ValueError("formal degree below actual degree")
    cf = cf + [MPoly()] * (deg_f + 1 - len(cf))
    cg = cg + [MPoly()] * (deg_g + 1 - len(cg))
    if deg_f + deg_g == 0:
        return MPoly.const(1)
    return determinant(sylvester_matrix(cf, cg), MPoly.const(1), MPoly())


def from_binary_form(f: BinaryForm, var: str = "t") -> MPoly:
    """The affine polynomial f(1, var) as an MPoly."""
    return MPoly({((var, j),): c for j, c in enumerate(f.coeffs) if c})
