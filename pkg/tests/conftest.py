import random
from fractions import Fraction
from pathlib import Path

import pytest
from hypothesis import settings

from curveclass.algebra import BinaryForm, PolyVector, rank
from curveclass.curves import ParamCurve
from curveclass.errors import DegenerateCurve, InvalidCurve

# exact arithmetic has heavy-tailed timings; fixed seed keeps runs reproducible
settings.register_profile("exact", deadline=None, derandomize=True, max_examples=60)
settings.load_profile("exact")

FIXTURES = Path(__file__).parent / "fixtures"

_ACCEPTANCE_LINES = []


@pytest.fixture
def acceptance_line():
    """Record one PASS/FAIL line per acceptance criterion; the lines are
    repeated in the terminal summary."""

    def record(number, title, ok, detail=""):
        line = f"acceptance {number}: {'PASS' if ok else 'FAIL'} - {title}"
        if detail:
            line += f" ({detail})"
        print(line)
        _ACCEPTANCE_LINES.append(line)
        return ok

    return record


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(_ACCEPTANCE_LINES, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)


def fixture_path(name: str) -> str:
    return str(FIXTURES / name)


# --------------------------------------------------------------------------
# random curves


def random_rational(rng: random.Random, size: int = 5):
    num = rng.randint(-size, size)
    den = rng.choice([1, 1, 1, 2, 3])
    return Fraction(num, den)


def random_form(rng: random.Random, degree: int, size: int = 5) -> BinaryForm:
    return BinaryForm(random_rational(rng, size) for _ in range(degree + 1))


def random_curve(rng: random.Random, n: int, d: int, size: int = 5) -> ParamCurve:
    """Dense random nondegenerate curve; retries until valid."""
    while True:
        coords = PolyVector(random_form(rng, d, size) for _ in range(n + 1))
        try:
            return ParamCurve(coords)
        except (InvalidCurve, DegenerateCurve, ValueError):
            continue


def normal_form_curve(exponents, d: int, rng: random.Random | None = None) -> ParamCurve:
    """x_k = t^(e_k) plus optional random higher terms, all of degree d.
    With e_k strictly increasing and e_0 = 0 the ramification at t = 0 is
    beta_k = e_{k+1} - e_k - 1."""
    coords = []
    for e in exponents:
        aff = [0] * (d + 1)
        aff[e] = 1
        if rng is not None:
            for j in range(e + 1, d + 1):
                aff[j] = rng.randint(-2, 2)
        coords.append(BinaryForm(aff))
    return ParamCurve(PolyVector(coords))


def random_exponents(rng: random.Random, n: int, d: int):
    """0 = e_0 < e_1 < ... < e_n <= d."""
    return [0] + sorted(rng.sample(range(1, d + 1), n))


def transformed(curve: ParamCurve, rng: random.Random) -> ParamCurve:
    """Apply a random invertible constant matrix to the coordinates and a
    random rational Moebius change of the parameter."""
    n = curve.ambient_dim
    while True:
        m = [[rng.randint(-2, 2) for _ in range(n + 1)] for _ in range(n + 1)]
        if rank(m) == n + 1:
            break
    while True:
        a, b, c, dd = (rng.randint(-3, 3) for _ in range(4))
        if a * dd - b * c != 0:
            break
    x = [f.substitute(a, b, c, dd) for f in curve.coords]
    rows = []
    for i in range(n + 1):
        acc = BinaryForm.zero(curve.degree)
        for j in range(n + 1):
            acc = acc + x[j] * m[i][j]
        rows.append(acc)
    return ParamCurve(PolyVector(rows))


def curve_corpus(count: int, seed: int, dims=(2, 3, 4), max_degree: int = 6):
    """Half dense random curves, half transformed normal forms with
    prescribed ramification at a rational point."""
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        n = rng.choice(dims)
        d = rng.randint(n, max_degree)
        if len(out) % 2 == 0:
            out.append(random_curve(rng, n, d))
        else:
            out.append(transformed(normal_form_curve(random_exponents(rng, n, d), d, rng), rng))
    return out
