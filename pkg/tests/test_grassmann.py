import random

import pytest
from hypothesis import given, settings, strategies as st

from conftest import fixture_path, random_curve, random_form
from curveclass.algebra import BinaryForm, PolyVector, generic_rank, rank
from curveclass.curves import ParamCurve
from curveclass.errors import InvalidCurve, NotIntegrable
from curveclass.grassmann import (
    GrassFrame,
    Integrability,
    frame_of,
    hat,
    integrability_check,
    recover_underlying,
    star,
)
from curveclass.io import load_frame

M = BinaryForm.monomial
twisted = ParamCurve(PolyVector([M(3, 0), M(2, 1), M(1, 2), M(0, 3)]))


def vec(*forms):
    return PolyVector(forms)


def const_row(*values):
    return PolyVector([BinaryForm.constant(v) for v in values])


def test_hat_of_twisted_cubic_matches_second_associated_curve():
    h = hat(frame_of(twisted, 1))
    assert h.level == 2
    assert h.plucker() == twisted.associated(2).plucker


def test_hat_errors():
    z = BinaryForm.zero(1)
    split = GrassFrame(3, 1, (vec(M(1, 0), M(0, 1), z, z), vec(z, z, M(1, 0), M(0, 1))))
    with pytest.raises(NotIntegrable):
        hat(split)
    fixed = GrassFrame(3, 1, (const_row(1, 0, 0, 0), const_row(0, 1, 0, 0)))
    with pytest.raises(NotIntegrable):
        hat(fixed)
    with pytest.raises(ValueError):
        hat(frame_of(twisted, 2))


def test_integrability_examples():
    assert integrability_check(frame_of(twisted, 1)) is Integrability.INTEGRABLE
    assert integrability_check(load_frame(fixture_path("split_pencil_frame.json"))) is Integrability.FAILS_HAT_DIM
    planar = load_frame(fixture_path("planar_conic_frame.json"))
    assert integrability_check(planar) is Integrability.FAILS_NONDEGENERACY
    with pytest.raises(NotIntegrable):
        recover_underlying(planar)


def test_recover_twisted_cubic():
    for k in (0, 1, 2):
        assert recover_underlying(frame_of(twisted, k)).is_proportional(twisted)


def test_recover_at_top_level_is_star_then_dual():
    top = frame_of(twisted, 2)
    normal = star(top)
    direct = ParamCurve(normal.exact_div(normal.content()).normalized()).dual()
    assert recover_underlying(top).coords == direct.coords


def test_frame_validation():
    with pytest.raises(InvalidCurve):
        GrassFrame(3, 1, (const_row(1, 0, 0, 0),))
    with pytest.raises(InvalidCurve):
        GrassFrame(3, 1, (const_row(1, 0, 0, 0), const_row(2, 0, 0, 0)))
    with pytest.raises(InvalidCurve):
        GrassFrame(3, 3, tuple(const_row(*[int(i == j) for j in range(4)]) for i in range(4)))
    f = GrassFrame.from_rows([const_row(1, 0, 0), const_row(0, 1, 0)])
    assert (f.ambient_dim, f.level) == (2, 1)


def scrambled(frame: GrassFrame, rng: random.Random) -> GrassFrame:
    """Same planes, different frame: lift every row to a common degree with
    a random form, then mix the rows with an invertible constant matrix."""
    top = max(r.degree for r in frame.rows) + 1
    lifted = []
    for r in frame.rows:
        while True:
            f = random_form(rng, top - r.degree, 3)
            if not f.is_zero:
                break
        lifted.append(r.mul_form(f))
    m = len(lifted)
    while True:
        a = [[rng.randint(-2, 2) for _ in range(m)] for _ in range(m)]
        if rank(a) == m:
            break
    rows = []
    for i in range(m):
        entries = []
        for col in range(len(lifted[0])):
            acc = BinaryForm.zero(top)
            for j in range(m):
                acc = acc + lifted[j][col] * a[i][j]
            entries.append(acc)
        rows.append(PolyVector(entries))
    return GrassFrame(frame.ambient_dim, frame.level, tuple(rows))


@settings(max_examples=20)
@given(st.integers(0, 10 ** 6))
def test_scrambled_frames_round_trip(seed):
    rng = random.Random(seed)
    n = rng.choice([3, 4])
    c = random_curve(rng, n, rng.randint(n, 5), size=3)
    k = rng.randint(1, n - 1)
    frame = scrambled(frame_of(c, k), rng)
    assert frame.plucker() == c.associated(k).plucker
    assert integrability_check(frame) is Integrability.INTEGRABLE
    assert recover_underlying(frame).is_proportional(c)


@settings(max_examples=20)
@given(st.integers(0, 10 ** 6))
def test_non_integrable_random_frames(seed):
    # a pencil of lines joining two independent curves in P^3 is generically
    # not osculating: L + L' is the whole space
    rng = random.Random(seed)
    while True:
        a = random_curve(rng, 3, 3, size=3).coords
        b = random_curve(rng, 3, 3, size=3).coords
        try:
            frame = GrassFrame(3, 1, (a, b))
        except InvalidCurve:
            continue
        break
    if generic_rank(frame.derived(1)) == 4:
        assert integrability_check(frame) is Integrability.FAILS_HAT_DIM
