import math

import numpy as np
import pytest

from screened_coulomb import (
    SCREENED,
    PotentialKind,
    RadialProblem,
    eval_effective,
    eval_potential,
    harmonic_expansion,
    tail_product,
)


def test_screened_at_its_own_scale():
    # V(C, r=C) = -1/(e C); here C = r = 1
    assert eval_potential(SCREENED, 1.0, 1.0) == pytest.approx(-1.0 / math.e, rel=1e-15)


def test_coulomb_limit():
    assert eval_potential(SCREENED, 0.0, 2.0) == -0.5


def test_truncated_k1_two_term_sum():
    # -(1 - C/r)/r at C=0.1, r=1
    assert eval_potential(PotentialKind.truncated(1), 0.1, 1.0) == pytest.approx(-0.9, rel=1e-15)


def test_effective_pure_coulomb():
    assert eval_effective(RadialProblem(0, 0.0), 1.0) == -1.0


def test_effective_centrifugal_cancels_coulomb():
    assert eval_effective(RadialProblem(1, 0.0), 1.0) == pytest.approx(0.0, abs=1e-15)


def test_effective_high_l_oracle():
    # independent arithmetic: 56/(2*100^2) - exp(-0.001)/100
    expected = 56.0 / 2e4 - math.exp(-0.001) / 100.0
    assert expected == pytest.approx(-0.007190004998333751, rel=1e-15)
    assert eval_effective(RadialProblem(7, 0.1), 100.0) == pytest.approx(expected, rel=1e-14)


def test_domain_errors():
    with pytest.raises(ValueError):
        eval_potential(SCREENED, 1.0, 0.0)
    with pytest.raises(ValueError):
        eval_potential(SCREENED, 1.0, -2.0)
    with pytest.raises(ValueError):
        eval_effective(RadialProblem(0, 1.0), np.array([1.0, -1.0]))
    with pytest.raises(ValueError):
        harmonic_expansion(0.0)
    with pytest.raises(ValueError):
        tail_product(RadialProblem(0, 0.1, PotentialKind.truncated(1)), 1.0)


def test_tail_product_exact_coulomb():
    for r in (0.5, 1.0, 10.0, 1e6):
        assert tail_product(RadialProblem(0, 0.0), r) == pytest.approx(-1.0, abs=1e-14)


def test_tail_product_high_l():
    v = tail_product(RadialProblem(7, 0.1), 1e6)
    assert abs(v + 1.0) < 1e-4


def test_tail_product_l1_c1():
    v = tail_product(RadialProblem(1, 1.0), 1e3)
    assert abs(v + 1.0) < 2e-3


@pytest.mark.parametrize("l", [0, 1, 7])
@pytest.mark.parametrize("C", [0.0, 0.1, 1.0])
def test_tail_ladder_monotone_with_coarse_bound(l, C):
    problem = RadialProblem(l, C)
    ladder = [10.0**k for k in range(1, 9)]
    gaps = [abs(tail_product(problem, r) + 1.0) for r in ladder]
    for r, gap in zip(ladder, gaps):
        bound = (l * (l + 1) / 2.0 + C) * 2.0 / r
        assert gap <= bound + 1e-12
    for a, b in zip(gaps, gaps[1:]):
        assert b <= a + 1e-15


@pytest.mark.parametrize("C", [0.1, 1.0, 100.0])
def test_global_minimum_bound(C):
    r = np.logspace(-3, 5, 3000) * C
    v = eval_potential(SCREENED, C, r)
    v_min = -1.0 / (math.e * C)
    assert np.all(v >= v_min - 1e-15 * abs(v_min))
    assert eval_potential(SCREENED, C, C) == pytest.approx(v_min, rel=4e-16)


@pytest.mark.parametrize("C", [0.0, 0.1, 1.0, 100.0])
def test_attractive_everywhere(C):
    r = np.logspace(-4, 6, 2000)
    v = eval_potential(SCREENED, C, r)
    assert np.all(v <= 0.0)
    representable = C / r <= 700.0  # below that, e^(-C/r) underflows to an exact 0
    assert np.all(v[representable] < 0.0)


def test_truncations_converge_at_two_screening_lengths():
    C = 1.0
    r = 2.0 * C
    target = eval_potential(SCREENED, C, r)
    errs = [abs(eval_potential(PotentialKind.truncated(k), C, r) - target) for k in range(13)]
    for a, b in zip(errs, errs[1:]):
        if a > 1e-15 * abs(target):
            assert b <= 0.5 * a
    assert errs[12] <= 1e-13 * abs(target)


@pytest.mark.parametrize("C", [0.5, 1.0, math.e, 100.0])
def test_first_derivative_vanishes_at_minimum(C):
    h = 1e-5 * C
    fd = (eval_potential(SCREENED, C, C + h) - eval_potential(SCREENED, C, C - h)) / (2 * h)
    assert abs(fd) < 1e-8 / C**2


def test_underflow_returns_exact_zero():
    assert eval_potential(SCREENED, 1.0, 1.0 / 800.0) == 0.0
    assert eval_potential(SCREENED, 1.0, 5e-324) == 0.0  # denormal radius, no 0*inf
    vals = eval_potential(SCREENED, 1.0, np.array([1e-4, 1.0]))
    assert vals[0] == 0.0 and np.all(np.isfinite(vals))


def test_truncated_origin_behaviour_no_nan():
    # odd truncations blow up repulsively, even ones attractively; never NaN
    up = eval_potential(PotentialKind.truncated(1), 1.0, 1e-280)
    down = eval_potential(PotentialKind.truncated(2), 1.0, 1e-280)
    assert up > 0 and not math.isnan(up)
    assert down < 0 and not math.isnan(down)


@pytest.mark.parametrize("k,flagged", [(0, False), (1, False), (2, True), (3, False), (4, True)])
def test_unbounded_below_flag(k, flagged):
    assert PotentialKind.truncated(k).unbounded_below is flagged
    assert SCREENED.unbounded_below is False


def test_harmonic_expansion_values():
    exp = harmonic_expansion(1.0)
    assert exp.r_min == 1.0
    assert exp.v_min == pytest.approx(-1.0 / math.e, rel=1e-15)
    assert exp.curvature == pytest.approx(1.0 / math.e, rel=1e-15)

    exp = harmonic_expansion(100.0)
    assert exp.v_min == pytest.approx(-3.678794e-3, rel=1e-6)

    exp = harmonic_expansion(math.e)
    assert exp.r_min == math.e
    assert exp.v_min == pytest.approx(-math.e**-2, rel=1e-15)
    assert exp.curvature == pytest.approx(math.e**-4, rel=1e-15)
    assert exp.v_min < 0 < exp.curvature


def test_harmonic_expansion_matches_potential_at_minimum():
    for C in (0.3, 1.0, 42.0):
        exp = harmonic_expansion(C)
        assert eval_potential(SCREENED, C, exp.r_min) == pytest.approx(exp.v_min, rel=4e-16)


def test_problem_validation():
    with pytest.raises(ValueError):
        RadialProblem(-1, 0.1)
    with pytest.raises(ValueError):
        RadialProblem(0, -0.1)
    with pytest.raises(ValueError):
        PotentialKind.truncated(-2)
