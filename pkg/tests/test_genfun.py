from collections import Counter
from fractions import Fraction

import pytest

from thomgen import catalog
from thomgen.genfun import (
    gf_equal_exact, k_function, ktilde_function, multiply_factor, reduce, weight_profile,
)
from thomgen.laurent import LaurentPoly, LinForm


def test_weight_profile_blocks():
    wp = weight_profile((2, 0, 3))
    assert wp.weights == (1, 1, 3, 3, 3)
    assert wp.exponents == (1, 0, 2, 1, 0)
    assert wp.mu == 5


@pytest.mark.parametrize("bad", [(), (0, 0), (1, -1)])
def test_bad_dimension_vectors(bad):
    with pytest.raises(ValueError):
        k_function(bad)


def test_k21_structure():
    gf = k_function((2, 1))
    forms = Counter(str(lf) for lf in gf.denominator)
    assert forms == Counter(["t3 - 2*t1", "t3 - t1 - t2", "t3 - 2*t2"])
    t1, t2, t3 = (LaurentPoly.var(3, i) for i in (1, 2, 3))
    assert gf.numerator == t1 * (t2 - t1) * (t3 - t1) * (t3 - t2)
    assert gf.homogeneous_degree == 1


def test_ktilde_numerator_is_a_monomial():
    gf = ktilde_function((0, 1, 1, 0, 1))
    t2, t3 = LaurentPoly.var(3, 2), LaurentPoly.var(3, 3)
    assert gf.numerator == t2 * t3 ** 2
    assert gf.homogeneous_degree == 1


def test_tilde_and_plain_have_the_same_degree_everywhere():
    for e in catalog.fixed_entries():
        for v in e.variants:
            assert v.build().homogeneous_degree == v.build(tilde=True).homogeneous_degree


def test_multiply_factor_folds_constants():
    gf = multiply_factor(k_function((1, 1)), LaurentPoly.const(2, 3), Fraction(1, 2))
    assert gf.scalar == Fraction(3, 2)
    assert gf.factors == k_function((1, 1)).factors
    with pytest.raises(ValueError):
        multiply_factor(gf, LaurentPoly.var(2, 1) + 1)


def test_reduce_cancels_and_keeps_the_value():
    # (t3 - t1 - t2)^2 * K_{2,1}: one copy cancels
    t1, t2, t3 = (LaurentPoly.var(3, i) for i in (1, 2, 3))
    f = t3 - t1 - t2
    gf = multiply_factor(multiply_factor(k_function((2, 1)), f), f)
    red = reduce(gf)
    assert len(red.denominator) == 2
    assert gf_equal_exact(gf, red)


def test_exact_equality():
    a, b = catalog.get("Sigma211")
    assert gf_equal_exact(a, b)
    i22 = catalog.get("I22")
    assert not gf_equal_exact(i22[0], i22[1])
    with pytest.raises(ValueError):
        gf_equal_exact(k_function((1,)), k_function((1, 1)))


def test_i22_difference_is_skew():
    # 1/2 K_{0,1,1,0,1} - K_{2,1} equals (t3-2t1-2t2) V / (2 * three forms)
    a, b = catalog.get("I22")
    t1, t2, t3 = (LaurentPoly.var(3, i) for i in (1, 2, 3))
    diff_num = (t3 - t1 * 2 - t2 * 2) * (t2 - t1) * (t3 - t2) * (t3 - t1)
    den = [LinForm([-2, 0, 1]), LinForm([-1, -1, 1]), LinForm([0, -2, 1])]
    lhs = b.numerator * b.scalar * den[2].to_poly() - a.numerator * a.scalar
    assert lhs == diff_num * Fraction(1, 2)
