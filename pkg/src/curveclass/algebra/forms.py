"""Binary forms in (s, t) and vectors of them.

A form of degree D is stored densely: ``coeffs[j]`` is the coefficient of
``s^(D-j) t^j``.  Setting s = 1 turns the coefficient tuple directly into
the ascending affine polynomial in t, which is how gcds and root finding
are delegated to :mod:`curveclass.algebra.univariate`.

The zero form keeps a nominal degree so it can sit inside a vector of
equal-degree forms; arithmetic treats it as compatible with any degree.
"""

from __future__ import annotations

from fractions import Fraction
from functools import reduce
from math import gcd as igcd, lcm
from typing import Iterable, Iterator, List, Sequence, Tuple

from . import univariate as upoly
from .univariate import Number, exact

Point = Tuple[Number, Number]  # (s : t) coordinates of a point of P^1


class BinaryForm:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable):
        coeffs = tuple(exact(c) for c in coeffs)
        if not coeffs:
            raise ValueError("a binary form needs at least one coefficient")
        self.coeffs = coeffs

    # -- construction ------------------------------------------------------
    @classmethod
    def zero(cls, degree: int = 0) -> "BinaryForm":
        return cls((0,) * (max(degree, 0) + 1))

    @classmethod
    def constant(cls, c) -> "BinaryForm":
        return cls((c,))

    @classmethod
    def monomial(cls, s_exp: int, t_exp: int, c=1) -> "BinaryForm":
        out = [0] * (s_exp + t_exp + 1)
        out[t_exp] = c
        return cls(out)

    @classmethod
    def from_affine(cls, poly: Sequence, degree: int | None = None) -> "BinaryForm":
        """Homogenize an ascending polynomial in t to the given degree."""
        poly = upoly.trim(poly)
        if degree is None:
            degree = max(len(poly) - 1, 0)
        if len(poly) - 1 > degree:
            raise ValueError("affine degree exceeds target form degree")
        return cls(list(poly) + [0] * (degree + 1 - len(poly)))

    @classmethod
    def linear_factor(cls, p: Point) -> "BinaryForm":
        """The form b*s - a*t vanishing at p = (a : b)."""
        a, b = p
        return cls((b, -a))

    # -- basic properties --------------------------------------------------
    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __bool__(self) -> bool:
        return not self.is_zero

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = BinaryForm.constant(other)
        if not isinstance(other, BinaryForm):
            return NotImplemented
        if self.is_zero or other.is_zero:
            return self.is_zero and other.is_zero
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(("BinaryForm", 0) if self.is_zero else self.coeffs)

    def __repr__(self) -> str:
        return f"BinaryForm({str(self)!r}, degree={self.degree})"

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        D = self.degree
        parts = []
        for j, c in enumerate(self.coeffs):
            if not c:
                continue
            mono = []
            if D - j:
                mono.append("s" if D - j == 1 else f"s^{D - j}")
            if j:
                mono.append("t" if j == 1 else f"t^{j}")
            mag = abs(c)
            body = "*".join(mono)
            if not body:
                term = str(mag)
            elif mag == 1:
                term = body
            else:
                term = f"{mag}*{body}"
            parts.append(("-" if c < 0 else "+", term))
        sign, first = parts[0]
        out = ("-" if sign == "-" else "") + first
        for sign, term in parts[1:]:
            out += f" {sign} {term}"
        return out

    # -- ring operations ---------------------------------------------------
    def __neg__(self) -> "BinaryForm":
        return BinaryForm(-c for c in self.coeffs)

    def __add__(self, other) -> "BinaryForm":
        if isinstance(other, (int, Fraction)):
            other = BinaryForm.constant(other)
        if not isinstance(other, BinaryForm):
            return NotImplemented
        if other.is_zero:
            return self
        if self.is_zero:
            return other
        if self.degree != other.degree:
            raise ValueError(f"cannot add forms of degree {self.degree} and {other.degree}")
        return BinaryForm(a + b for a, b in zip(self.coeffs, other.coeffs))

    __radd__ = __add__

    def __sub__(self, other) -> "BinaryForm":
        if isinstance(other, (int, Fraction)):
            other = BinaryForm.constant(other)
        return self + (-other)

    def __rsub__(self, other) -> "BinaryForm":
        return (-self) + other

    def __mul__(self, other) -> "BinaryForm":
        if isinstance(other, (int, Fraction)):
            return BinaryForm(c * other for c in self.coeffs)
        if not isinstance(other, BinaryForm):
            return NotImplemented
        out = [0] * (self.degree + other.degree + 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                if b:
                    out[i + j] += a * b
        return BinaryForm(out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "BinaryForm":
        if e < 0:
            raise ValueError("negative power of a form")
        out = BinaryForm.constant(1)
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def __truediv__(self, c) -> "BinaryForm":
        c = Fraction(c)
        return BinaryForm(Fraction(a) / c for a in self.coeffs)

    # -- calculus and charts -----------------------------------------------
    def derivative_t(self) -> "BinaryForm":
        if self.degree == 0:
            return BinaryForm.zero(0)
        return BinaryForm(j * self.coeffs[j] for j in range(1, len(self.coeffs)))

    def derivative_s(self) -> "BinaryForm":
        D = self.degree
        if D == 0:
            return BinaryForm.zero(0)
        return BinaryForm((D - j) * self.coeffs[j] for j in range(D))

    def evaluate(self, s, t) -> Number:
        D = self.degree
        return exact(sum(c * s ** (D - j) * t ** j for j, c in enumerate(self.coeffs) if c))

    def affine(self) -> List[Number]:
        """f(1, t) as an ascending coefficient list."""
        return upoly.trim(self.coeffs)

    def u_chart(self) -> List[Number]:
        """f(u, 1) as an ascending list in u, the chart around t = infinity."""
        return upoly.trim(self.coeffs[::-1])

    def substitute(self, a, b, c, d) -> "BinaryForm":
        """f(a*s + b*t, c*s + d*t)."""
        D = self.degree
        first = BinaryForm((a, b))
        second = BinaryForm((c, d))
        out = BinaryForm.zero(D)
        for j, coef in enumerate(self.coeffs):
            if coef:
                out = out + (first ** (D - j)) * (second ** j) * coef
        return out

    # -- divisibility ------------------------------------------------------
    def s_order(self) -> int:
        """Exponent of the largest power of s dividing a nonzero form."""
        if self.is_zero:
            raise ValueError("zero form has no order")
        n = 0
        while self.coeffs[self.degree - n] == 0:
            n += 1
        return n

    def t_order(self) -> int:
        if self.is_zero:
            raise ValueError("zero form has no order")
        n = 0
        while self.coeffs[n] == 0:
            n += 1
        return n

    def divide_s_power(self, m: int) -> "BinaryForm":
        if m == 0:
            return self
        if self.is_zero:
            return BinaryForm.zero(self.degree - m)
        if any(self.coeffs[self.degree - m + 1:]):
            raise ValueError(f"s^{m} does not divide {self}")
        return BinaryForm(self.coeffs[: self.degree - m + 1])

    def exact_div(self, other: "BinaryForm") -> "BinaryForm":
        """Quotient self / other, raising ValueError unless it is exact."""
        if other.is_zero:
            raise ZeroDivisionError("division by the zero form")
        dq = self.degree - other.degree
        if self.is_zero:
            return BinaryForm.zero(max(dq, 0))
        if dq < 0:
            raise ValueError("divisor has larger degree")
        a = other.t_order()
        f = self.coeffs
        if any(f[:a]):
            raise ValueError("not divisible")
        f = f[a:]
        g = other.coeffs[a:]
        lead = Fraction(g[0])
        q: List[Number] = []
        for i in range(dq + 1):
            acc = f[i] - sum(q[l] * g[i - l] for l in range(max(0, i - len(g) + 1), i))
            q.append(exact(acc / lead))
        prod = BinaryForm(q) * BinaryForm(g)
        if prod.coeffs != tuple(f):
            raise ValueError("not divisible")
        return BinaryForm(q)

    def divides(self, other: "BinaryForm") -> bool:
        try:
            other.exact_div(self)
        except ValueError:
            return False
        return True

    # -- normalization -----------------------------------------------------
    def content(self) -> Fraction:
        return upoly.content(self.coeffs)

    def primitive(self) -> "BinaryForm":
        """Integer coefficients, gcd 1, first nonzero coefficient positive."""
        if self.is_zero:
            return self
        r = self.content()
        lead = next(c for c in self.coeffs if c)
        if lead < 0:
            r = -r
        return BinaryForm(int(c / r) for c in self.coeffs)


# --------------------------------------------------------------------------
# module-level operations


def derivative_t(f: BinaryForm) -> BinaryForm:
    return f.derivative_t()


def _gcd2(f: BinaryForm, g: BinaryForm) -> BinaryForm:
    if f.is_zero:
        return g.primitive()
    if g.is_zero:
        return f.primitive()
    m = min(f.s_order(), g.s_order())
    h = upoly.gcd_poly(f.affine(), g.affine())
    return BinaryForm(list(h) + [0] * m).primitive()


def gcd(*forms: BinaryForm) -> BinaryForm:
    """Canonical primitive gcd of one or more binary forms."""
    if len(forms) == 1 and not isinstance(forms[0], BinaryForm):
        forms = tuple(forms[0])
    if not forms or all(f.is_zero for f in forms):
        raise ValueError("gcd of zero forms is undefined")
    return reduce(_gcd2, forms)


def valuation(f: BinaryForm, p: Point) -> int:
    """Multiplicity of the point p = (a : b) as a root of f."""
    if f.is_zero:
        raise ValueError("valuation of the zero form")
    a, b = p
    if a == 0 and b == 0:
        raise ValueError("(0 : 0) is not a point")
    if a == 0:
        return f.s_order()
    # move p to (1 : 0) by t -> t + (b/a) s, then count powers of t
    return f.substitute(1, 0, Fraction(b) / Fraction(a), 1).t_order()


def normalize_point(p: Point) -> Point:
    a, b = (exact(x) for x in p)
    if a == 0:
        return (0, 1)
    return (1, exact(Fraction(b) / Fraction(a)))


def rational_roots(f: BinaryForm) -> List[Tuple[Point, int]]:
    """Rational points of P^1 where f vanishes, with multiplicities.

    Finite roots come first in ascending t, then (0 : 1) if s | f.
    """
    if f.is_zero:
        raise ValueError("zero form vanishes everywhere")
    out = []
    aff = f.affine()
    if len(aff) > 1:
        for r in upoly.rational_roots(aff):
            p = (1, exact(r))
            out.append((p, valuation(f, p)))
    m = f.s_order()
    if m:
        out.append(((0, 1), m))
    return out


# --------------------------------------------------------------------------
# vectors of forms


class PolyVector:
    """Equal-degree binary forms, e.g. the coordinates of a curve."""

    __slots__ = ("entries", "degree")

    def __init__(self, entries: Iterable[BinaryForm]):
        entries = tuple(entries)
        if not entries:
            raise ValueError("empty vector")
        degs = {e.degree for e in entries if not e.is_zero}
        if len(degs) > 1:
            raise ValueError(f"entries have mixed degrees {sorted(degs)}")
        deg = degs.pop() if degs else max(e.degree for e in entries)
        self.entries = tuple(e if not e.is_zero else BinaryForm.zero(deg) for e in entries)
        self.degree = deg

    @classmethod
    def from_coefficients(cls, rows: Sequence[Sequence]) -> "PolyVector":
        return cls(BinaryForm(r) for r in rows)

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self) -> Iterator[BinaryForm]:
        return iter(self.entries)

    def __getitem__(self, i):
        return self.entries[i]

    def __eq__(self, other) -> bool:
        if not isinstance(other, PolyVector):
            return NotImplemented
        return self.entries == other.entries

    def __hash__(self) -> int:
        return hash(self.entries)

    def __repr__(self) -> str:
        return "PolyVector(" + ", ".join(str(e) for e in self.entries) + ")"

    @property
    def is_zero(self) -> bool:
        return all(e.is_zero for e in self.entries)

    def coefficient_rows(self) -> List[List[Number]]:
        return [list(e.coeffs) for e in self.entries]

    def derivative_t(self) -> "PolyVector":
        return PolyVector(e.derivative_t() for e in self.entries)

    def dot(self, other: "PolyVector") -> BinaryForm:
        if len(self) != len(other):
            raise ValueError("length mismatch")
        acc = BinaryForm.zero(self.degree + other.degree)
        for a, b in zip(self.entries, other.entries):
            acc = acc + a * b
        return acc

    def scale(self, c) -> "PolyVector":
        return PolyVector(e * c for e in self.entries)

    def mul_form(self, f: BinaryForm) -> "PolyVector":
        return PolyVector(e * f for e in self.entries)

    def content(self) -> BinaryForm:
        return gcd(*self.entries)

    def exact_div(self, f: BinaryForm) -> "PolyVector":
        return PolyVector(e.exact_div(f) for e in self.entries)

    def divide_s_power(self, m: int) -> "PolyVector":
        return PolyVector(e.divide_s_power(m) for e in self.entries)

    def normalized(self) -> "PolyVector":
        """Scalar normalization: clear denominators, divide out the integer
        content, make the first nonzero coefficient positive."""
        if self.is_zero:
            return self
        coeffs = [c for e in self.entries for c in e.coeffs]
        den = reduce(lcm, (Fraction(c).denominator for c in coeffs), 1)
        num = reduce(igcd, (int(c * den) for c in coeffs), 0)
        r = Fraction(num, den)
        if next(c for c in coeffs if c) < 0:
            r = -r
        return PolyVector(BinaryForm(int(c / r) for c in e.coeffs) for e in self.entries)

    def reduced(self) -> Tuple["PolyVector", BinaryForm]:
        """Divide out the gcd of the entries; returns (vector, content)."""
        g = self.content()
        return self.exact_div(g).normalized(), g

    def is_proportional(self, other: "PolyVector") -> bool:
        """All 2x2 minors of the stacked pair vanish identically."""
        if len(self) != len(other) or self.is_zero or other.is_zero:
            return False
        if self.degree != other.degree:
            return False
        n = len(self)
        for i in range(n):
            for j in range(i + 1, n):
                if self[i] * other[j] != self[j] * other[i]:
                    return False
        return True

    def evaluate(self, s, t) -> List[Number]:
        return [e.evaluate(s, t) for e in self.entries]

    def substitute(self, a, b, c, d) -> "PolyVector":
        return PolyVector(e.substitute(a, b, c, d) for e in self.entries)

