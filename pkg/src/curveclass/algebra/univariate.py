"""Dense univariate polynomials over Q as ascending coefficient lists.

These are the affine-chart workhorses behind binary-form gcds and
rational root finding.  Lists are never mutated in place by callers;
every function returns a fresh, trimmed list (``[]`` is the zero
polynomial).
"""

from __future__ import annotations

from fractions import Fraction
from functools import reduce
from math import gcd, lcm
from typing import List, Sequence

Number = int | Fraction


def exact(x) -> Number:
    """Coerce ``x`` to an exact rational; integral values become ``int``."""
    if isinstance(x, bool):
        raise TypeError("booleans are not coefficients")
    if isinstance(x, int):
        return x
    if isinstance(x, Fraction):
        return x.numerator if x.denominator == 1 else x
    if isinstance(x, str):
        return exact(Fraction(x.strip()))
    raise TypeError(f"expected an exact rational, got {type(x).__name__}")


def trim(p: Sequence[Number]) -> List[Number]:
    n = len(p)
    while n and not p[n - 1]:
        n -= 1
    return [exact(c) for c in p[:n]]


def degree(p: Sequence[Number]) -> int:
    """Degree of a trimmed polynomial; -1 for zero."""
    return len(p) - 1


def add(p, q):
    if len(p) < len(q):
        p, q = q, p
    out = list(p)
    for i, c in enumerate(q):
        out[i] += c
    return trim(out)


def sub(p, q):
    return add(p, [-c for c in q])


def mul(p, q):
    if not p or not q:
        return []
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if not a:
            continue
        for j, b in enumerate(q):
            if b:
                out[i + j] += a * b
    return trim(out)


def scale(p, c):
    return trim([c * a for a in p])


def derivative(p):
    return trim([i * p[i] for i in range(1, len(p))])


def evaluate(p, x):
    acc = 0
    for c in reversed(p):
        acc = acc * x + c
    return exact(acc)


def divmod_poly(p, q):
    """Euclidean division over Q."""
    if not q:
        raise ZeroDivisionError("polynomial division by zero")
    p = list(p)
    dq = len(q) - 1
    lead = Fraction(q[-1])
    quot = [0] * max(len(p) - dq, 0)
    for i in range(len(p) - 1, dq - 1, -1):
        c = p[i]
        if not c:
            continue
        f = exact(c / lead)
        quot[i - dq] = f
        for j in range(dq + 1):
            p[i - dq + j] -= f * q[j]
    return trim(quot), trim(p[:dq])


def content(p) -> Fraction:
    """Positive rational r such that p / r has coprime integer coefficients."""
    if not p:
        return Fraction(0)
    den = reduce(lcm, (Fraction(c).denominator for c in p), 1)
    num = reduce(gcd, (int(c * den) for c in p), 0)
    return Fraction(num, den)


def primitive(p):
    """Integer primitive part with positive leading coefficient."""
    p = trim(p)
    if not p:
        return []
    r = content(p)
    if p[-1] < 0:
        r = -r
    return [int(c / r) for c in p]


def pseudo_rem(p, q):
    """lc(q)^(deg p - deg q + 1) * p mod q, staying inside Z[t]."""
    p = list(p)
    dq = len(q) - 1
    lead = q[-1]
    while len(p) - 1 >= dq and p:
        c = p[-1]
        shift = len(p) - 1 - dq
        p = [lead * a for a in p]
        for j in range(dq + 1):
            p[shift + j] -= c * q[j]
        p = trim(p)
    return p


def gcd_poly(p, q):
    """Primitive gcd over Q via the primitive PRS (no fraction growth)."""
    a, b = primitive(p), primitive(q)
    if not a:
        return b
    if not b:
        return a
    if len(a) < len(b):
        a, b = b, a
    while b:
        r = pseudo_rem(a, b)
        a, b = b, primitive(r)
    return primitive(a)


def squarefree_part(p):
    g = gcd_poly(p, derivative(p))
    q, r = divmod_poly(primitive(p), g)
    assert not r
    return primitive(q)


def shift(p, a):
    """p(t + a) via repeated synthetic division (Taylor shift)."""
    out = list(trim(p))
    n = len(out)
    for i in range(n):
        for j in range(n - 2, i - 1, -1):
            out[j] += a * out[j + 1]
    return trim(out)


def _sturm_chain(p):
    chain = [p, derivative(p)]
    while chain[-1] and degree(chain[-1]) > 0:
        _, r = divmod_poly(chain[-2], chain[-1])
        if not r:
            break
        chain.append([-c for c in r])
    return chain


def _sign_changes(chain, x) -> int:
    signs = []
    for q in chain:
        v = evaluate(q, x)
        if v:
            signs.append(v > 0)
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def rational_roots(p) -> List[Fraction]:
    """All distinct rational roots of p, ascending.

    Every rational root of a primitive integer polynomial with leading
    coefficient L lies in (1/L)Z, so the search runs on that lattice and
    splits intervals at half-lattice points, which can never be roots.
    Sturm counts prune empty intervals; no factoring of integers needed.
    """
    p = trim(p)
    if not p:
        raise ValueError("zero polynomial has every rational root")
    roots = []
    # strip the root at 0 first, it keeps the bound small
    k = 0
    while p[k] == 0:
        k += 1
    if k:
        roots.append(Fraction(0))
    q = squarefree_part(p[k:])
    if degree(q) < 1:
        return roots
    lead = abs(q[-1])
    bound = 1 + max(Fraction(abs(c), lead) for c in q[:-1])
    chain = _sturm_chain(q)

    def count(lo, hi):  # roots in (lo, hi], lo and hi never roots here
        return _sign_changes(chain, Fraction(lo, 2 * lead)) - _sign_changes(chain, Fraction(hi, 2 * lead))

    # work in units of 1/(2L): odd numerators are half-lattice points
    top = 2 * int(bound * lead) + 3
    stack = [(-top, top)]
    while stack:
        lo, hi = stack.pop()
        if count(lo, hi) == 0:
            continue
        if hi - lo == 2:
            cand = Fraction(lo + 1, 2 * lead)
            if evaluate(q, cand) == 0:
                roots.append(cand)
            continue
        mid = (lo + hi) // 2
        if mid % 2 == 0:
            mid += 1
        stack.append((lo, mid))
        stack.append((mid, hi))
    return sorted(roots)
