import pytest
from hypothesis import HealthCheck, given, settings, strategies as st

from oracles import stable_brute_expand
from thomgen.expand import ExpansionBox, ExpansionError, expand, expand_in_box, schur_lower_bounds
from thomgen.genfun import k_function, ktilde_function, multiply_factor
from thomgen.laurent import LaurentPoly

dimvecs = st.lists(st.integers(0, 2), min_size=1, max_size=4).filter(lambda d: 1 <= sum(d) <= 3)


def small_factor(mu):
    # homogeneous linear factor with small coefficients, or nothing
    return st.one_of(
        st.none(),
        st.lists(st.integers(-2, 2), min_size=mu, max_size=mu)
        .filter(any)
        .map(lambda cs: sum((LaurentPoly.var(mu, i + 1) * c for i, c in enumerate(cs)),
                            LaurentPoly.zero(mu))),
    )


@st.composite
def instances(draw):
    d = tuple(draw(dimvecs))
    tilde = draw(st.booleans())
    gf = ktilde_function(d) if tilde else k_function(d)
    f = draw(small_factor(gf.nvars))
    if f is not None:
        gf = multiply_factor(gf, f)
    ell = draw(st.integers(-1, 2))
    return gf, ell


@pytest.mark.criterion(13)
@settings(max_examples=80, deadline=None, suppress_health_check=[HealthCheck.too_slow])
@given(instances(), st.booleans())
def test_expand_matches_brute_force(inst, schur_region):
    gf, ell = inst
    mu = gf.nvars
    lows = schur_lower_bounds(mu, ell) if schur_region else [-(ell + 1)] * mu
    got = dict(expand_in_box(gf, lows).terms)
    assert got == stable_brute_expand(gf, lows)


def test_k11():
    assert str(expand(k_function((1, 1)), 0)) == "t1*t2^-1 + 1"


def test_k21_leading_terms_at_ell3():
    s = expand(k_function((2, 1)), 3)
    assert len(s) == 12
    assert s[(1, 1, -1)] == 1 and s[(5, 0, -4)] == -8


def test_no_denominator_is_a_plain_polynomial():
    gf = k_function((3,))
    s = expand(gf, 0)
    assert s == gf.numerator


def test_every_term_lies_in_the_box():
    gf = k_function((1, 1, 1))
    for ell in range(-1, 3):
        box = ExpansionBox(ell, 3, gf.homogeneous_degree)
        assert all(box.contains(e) for e in expand(gf, ell).terms)


def test_ktilde_0111_at_ell2():
    s = expand(ktilde_function((0, 1, 1, 1)), 2)
    assert str(s) == "16*t1^4*t2*t3^-3 + 8*t1^3*t2*t3^-2 + 4*t1^2*t2*t3^-1 + 2*t1*t2 + t2*t3"


def test_ell_limits():
    gf = k_function((2, 1))
    with pytest.raises(ExpansionError):
        expand(gf, -2)
    expand(gf, -2, allow_negative_ell=True)
    with pytest.raises(ExpansionError):
        expand(gf, -4, allow_negative_ell=True)


def test_schur_region_is_wider_than_the_chern_box():
    assert schur_lower_bounds(3, 0) == [-3, -2, -1]
    gf = ktilde_function((1, 1, 1))
    wide = expand_in_box(gf, schur_lower_bounds(3, 0))
    narrow = expand(gf, 0)
    assert set(narrow.terms) <= set(wide.terms)
