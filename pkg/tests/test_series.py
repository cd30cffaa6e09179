import cmath
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from numpy.polynomial import polynomial as P

from revdragon.alphabet import angle_from_fraction, digit_value
from revdragon.errors import BudgetExceeded, DegenerateParameter, MissingBeta
from revdragon.sequences import Condition, FirstDigitPolicy, RevolvingSequence, enumerate_words, validate
from revdragon.series import (
    Family,
    FamilyParams,
    eval_grc_series,
    eval_src_series,
    eval_trc_series,
    evaluate,
    make_cloud,
)

QUARTER = angle_from_fraction(1, 4)
THIRD = angle_from_fraction(1, 3)
LEVY_ALPHA = complex(0.5, -0.5)
TER_ALPHA = complex(0.5, -math.sqrt(3) / 6)
TER_BETA = TER_ALPHA.conjugate()
TER = FamilyParams(TER_ALPHA, THIRD, TER_BETA)


def seq(*digits, angle=QUARTER):
    return RevolvingSequence(angle, digits)


def poly_oracle(s, alpha, start):
    coeffs = [0j] * start + [digit_value(d, s.angle) for d in s.digits]
    return P.polyval(alpha, coeffs) if coeffs else 0j


def test_grc_examples():
    assert eval_grc_series(seq(None, None, None), LEVY_ALPHA) == 0
    assert eval_grc_series(seq(0), LEVY_ALPHA) == complex(0.5, -0.5)
    z = eval_grc_series(seq(0, None, 1), LEVY_ALPHA)
    assert z == pytest.approx(LEVY_ALPHA + 1j * LEVY_ALPHA**3, abs=1e-15)
    assert z == pytest.approx(complex(0.75, -0.75), abs=1e-15)


@given(st.lists(st.one_of(st.none(), st.integers(0, 3)), max_size=12), st.sampled_from([0, 1]))
def test_grc_matches_polynomial_oracle(digits, start):
    s = seq(*digits)
    alpha = complex(0.3, 0.55)
    assert abs(eval_grc_series(s, alpha, start) - poly_oracle(s, alpha, start)) <= 1e-13


def test_src_examples():
    alpha = complex(0.5, math.sqrt(3) / 6)
    assert eval_src_series(seq(0), alpha, 1) == alpha
    assert eval_src_series(seq(0), alpha, 0) == 1
    z = eval_src_series(seq(0, None, 0), alpha, 1)
    assert z == pytest.approx(alpha + alpha * alpha.conjugate() * alpha, abs=1e-15)


def test_src_start_zero_shifts_products():
    alpha = complex(0.2, 0.6)
    s = seq(0, None, 1, 2)
    # positions 1..4 carry 1, a, a*conj(a), a*conj(a)*a when start = 0
    a, b = alpha, alpha.conjugate()
    expected = 1 + 1j * (a * b) + (-1) * (a * b * a)
    assert eval_src_series(s, alpha, 0) == pytest.approx(expected, abs=1e-15)


def test_trc_examples():
    w = cmath.exp(2j * math.pi / 3)
    assert eval_trc_series(seq(0, angle=THIRD), TER_ALPHA, TER_BETA) == TER_ALPHA
    z = eval_trc_series(seq(0, 0, angle=THIRD), TER_ALPHA, TER_BETA)
    assert z == pytest.approx(TER_BETA + TER_ALPHA**2, abs=1e-15)
    z = eval_trc_series(seq(0, 1, angle=THIRD), TER_ALPHA, TER_BETA)
    assert z == pytest.approx(TER_ALPHA + w * TER_ALPHA**2, abs=1e-15)
    with pytest.raises(DegenerateParameter):
        eval_trc_series(seq(0, angle=THIRD), 0, TER_BETA)


def test_family_tags():
    assert Family.H1.start == 0 and Family.X1.start == 1 and Family.T.start == 1
    assert Family.X2.policy is FirstDigitPolicy.FREE
    assert Family.H2SUB1.condition is Condition.SRC
    assert Family.parse("X2_1") is Family.X2SUB1
    assert Family.T.restricted is Family.T1
    with pytest.raises(ValueError):
        Family.parse("y")


def test_params_must_contract():
    with pytest.raises(DegenerateParameter):
        FamilyParams(1.0, QUARTER)
    with pytest.raises(DegenerateParameter):
        FamilyParams(0.5, QUARTER, 1.2j)


def test_cloud_examples():
    levy = FamilyParams(LEVY_ALPHA, QUARTER)
    assert len(make_cloud(Family.X1, levy, 3)) == 8
    c = make_cloud(Family.T1, TER, 2)
    w = cmath.exp(2j * math.pi / 3)
    a, b = TER_ALPHA, TER_BETA
    expected = [0, a**2, a, b + a**2, a + w * a**2]
    assert np.allclose(c.points, expected, atol=1e-15)
    h = make_cloud(Family.H, levy, 0)
    assert h.points.tolist() == [0j]
    assert c.meta["family"] == "t1" and c.meta["count"] == "5"


def test_cloud_errors():
    with pytest.raises(MissingBeta):
        make_cloud(Family.T1, FamilyParams(TER_ALPHA, THIRD), 2)
    with pytest.raises(BudgetExceeded):
        make_cloud(Family.T, TER, 17)


FAMILY_PARAMS = [
    (Family.X1, FamilyParams(LEVY_ALPHA, QUARTER)),
    (Family.X, FamilyParams(LEVY_ALPHA, angle_from_fraction(1, 4, -1))),
    (Family.H1, FamilyParams(complex(0.5, 0.5), angle_from_fraction(1, 2))),
    (Family.H, FamilyParams(complex(0.5, 0.5), QUARTER)),
    (Family.X2SUB1, FamilyParams(complex(0.5, math.sqrt(3) / 6), angle_from_fraction(1, 12))),
    (Family.X2, FamilyParams(complex(0.4, 0.3), THIRD)),
    (Family.H2SUB1, FamilyParams(complex(0.5, math.sqrt(3) / 6), angle_from_fraction(1, 12))),
    (Family.H2, FamilyParams(complex(0.4, 0.3), angle_from_fraction(2, 5))),
    (Family.T1, TER),
    (Family.T, FamilyParams(TER_ALPHA, angle_from_fraction(1, 6), TER_BETA)),
]


@pytest.mark.parametrize("f,p", FAMILY_PARAMS)
def test_cloud_matches_per_word_evaluation(f, p):
    depth = 5
    cloud = make_cloud(f, p, depth)
    words = list(enumerate_words(f.condition, p.angle, depth, f.policy))
    assert len(cloud) == len(words)
    scalar = np.array([evaluate(f, p, w) for w in words])
    assert np.max(np.abs(cloud.points - scalar)) <= 1e-14


@pytest.mark.parametrize("f,p", FAMILY_PARAMS)
def test_cloud_is_deterministic(f, p):
    a = make_cloud(f, p, 6)
    b = make_cloud(f, p, 6)
    assert a.points.tobytes() == b.points.tobytes()
    assert a.meta == b.meta


@settings(max_examples=60, deadline=None)
@given(st.data())
def test_truncation_tail_bound(data):
    f, p = data.draw(st.sampled_from(FAMILY_PARAMS))
    n = data.draw(st.integers(1, 6))
    words = list(enumerate_words(f.condition, p.angle, n + 4, f.policy))
    w = data.draw(st.sampled_from(words))
    prefix = RevolvingSequence(p.angle, w.digits[:n])
    zero_padded = RevolvingSequence(p.angle, w.digits[:n] + (None,) * 4)
    assert evaluate(f, p, zero_padded) == pytest.approx(evaluate(f, p, prefix), abs=1e-15)
    r = abs(p.alpha)
    scale = max(1.0, abs(p.beta / p.alpha)) if p.beta is not None else 1.0
    if f.condition is Condition.TRC:
        # extension can also flip the bit of the prefix's last nonzero digit
        last = max((i for i, d in enumerate(prefix.digits, 1) if d is not None), default=None)
        upcoming = next((d for d in w.digits[n:] if d is not None), None)
        if last is not None and upcoming == w.digits[last - 1]:
            return
    # position m carries alpha**(m - 1 + start), so the tail starts at alpha**(n + start)
    bound = scale * r ** (n + f.start) / (1 - r)
    assert abs(evaluate(f, p, w) - evaluate(f, p, prefix)) <= bound + 1e-12
    assert validate(w, f.condition, f.policy)
