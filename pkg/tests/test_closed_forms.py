from fractions import Fraction

import pytest

from fermischubert import closed_forms as cf
from fermischubert.grassmann import DomainError

# frozen from oracle_intersection / direct Berezin evaluation
SIGMA1_POWER = {(2, 4): 2, (2, 5): 5, (2, 6): 14, (3, 6): 42, (3, 7): 462}
ONE_SIGMA2 = {(2, 4): 1, (2, 5): 2, (3, 6): 21, (3, 7): 210}
TWO_SIGMA2 = {(2, 5): 1, (2, 6): 2, (3, 6): 11, (3, 7): 98}


@pytest.mark.parametrize("kn,value", SIGMA1_POWER.items())
def test_sigma1_power(kn, value):
    assert cf.theo1_sigma1_power(*kn) == value


@pytest.mark.parametrize("kn,value", ONE_SIGMA2.items())
def test_one_sigma2(kn, value):
    assert cf.theo1_one_sigma2(*kn) == value


@pytest.mark.parametrize("kn,value", TWO_SIGMA2.items())
def test_two_sigma2(kn, value):
    assert cf.theo1_two_sigma2(*kn) == value


def test_hypotheses_enforced():
    with pytest.raises(DomainError):
        cf.theo1_one_sigma2(1, 2)
    with pytest.raises(DomainError):
        cf.theo1_two_sigma2(1, 4)
    with pytest.raises(DomainError):
        cf.prop1_p2(1, 3)
    with pytest.raises(DomainError):
        cf.theo1_sigma1_power(3, 3)


def test_prop1_values():
    assert cf.prop1_p1(2, 4) == 0
    assert cf.prop1_p1(2, 5) == 144
    assert cf.prop1_p2(2, 5) == 144
    assert cf.prop1_p1(3, 5) == -144  # N < 2k


def test_q_decomposition_example():
    q1, q2, q3 = cf.q_decomposition(2, 5)
    assert q3 == 96
    assert (q1, q2, q3) == (144, -96, 96)


def test_q_sum_is_p2():
    for N in range(2, 12):
        for k in range(1, N):
            if k * (N - k) >= 4:
                assert sum(cf.q_decomposition(k, N)) == cf.prop1_p2(k, N)


def test_consistency_chain():
    for N in range(3, 11):
        for k in range(1, N):
            d = k * (N - k)
            ratio = cf.norm_const(k, N)
            p0 = cf.prop1_p0(k, N)
            if d >= 2:
                p1 = cf.prop1_p1(k, N)
                assert cf.theo1_one_sigma2(k, N) == Fraction(p0 - p1, 2) * ratio
            if d >= 4:
                p2 = cf.prop1_p2(k, N)
                assert cf.theo1_two_sigma2(k, N) == Fraction(p0 - 2 * p1 + p2, 4) * ratio


def test_k2_specialization():
    for N in range(4, 16):
        assert cf.theo1_sigma1_power(2, N) == cf.g2n_family(N, 0)
        assert cf.theo1_one_sigma2(2, N) == cf.g2n_family(N, 1)
        assert cf.theo1_two_sigma2(2, N) == cf.g2n_family(N, 2)


def test_grassmann_duality_symmetry():
    for N in range(2, 11):
        for k in range(1, N):
            assert cf.theo1_sigma1_power(k, N) == cf.theo1_sigma1_power(N - k, N)


def test_g2n_family():
    assert cf.g2n_family(4, 0) == 2
    assert cf.g2n_family(5, 1) == 2
    for N in range(2, 12):
        assert cf.g2n_family(N, N - 2) == 1
    with pytest.raises(DomainError):
        cf.g2n_family(4, 3)


def test_evaluate_dispatch():
    r = cf.evaluate(cf.FormulaId.THEO1_1, 3, 6)
    assert r.formula_id is cf.FormulaId.THEO1_1 and r.value == 42
    assert cf.evaluate(cf.FormulaId.NORM_CONST, 2, 4).value == Fraction(1, 12)
    assert cf.evaluate(cf.FormulaId.G2N_FAMILY, 6, 2).value == 2
    assert cf.evaluate(cf.FormulaId.Q3, 2, 5).value == 96


def test_closed_form_for():
    assert cf.closed_form_for(2, 4, 4, 0) == 2
    assert cf.closed_form_for(2, 6, 2, 3) == cf.g2n_family(6, 3)
    assert cf.closed_form_for(3, 7, 6, 3) is None
    assert cf.closed_form_for(2, 4, 3, 0) is None
