from collections import Counter

import pytest

from thomgen import catalog
from thomgen.assoc import (
    QCoordinate, assoc_equations, ci_multidegree, coordinates, euler_class, format_qpoly,
)
from thomgen.genfun import k_function
from thomgen.laurent import LaurentPoly, LinForm


def lf(nvars, *terms):
    return LinForm.from_terms(nvars, terms)


def test_coordinates_of_k21():
    qs = coordinates((2, 1))
    assert [(q.i, q.j, q.k) for q in qs] == [(1, 1, 3), (1, 2, 3), (2, 2, 3)]
    assert str(qs[0]) == "q_{1,1}^3"


@pytest.mark.parametrize("d", [(2, 1), (1, 2), (3,), (0, 1, 1, 1), (2, 3, 4), (1, 1, 1, 1)])
def test_euler_class_matches_denominator(d):
    assert Counter(euler_class(d)) == Counter(k_function(d).denominator)


def test_a4_equation():
    (eq,) = assoc_equations((1, 1, 1, 1))
    assert eq.multidegree == lf(4, (4, 1), (1, -2), (2, -1))
    assert str(eq) == "q_{1,1}^2*q_{2,2}^4 - q_{1,2}^3*q_{1,3}^4"
    # every monomial has the equation's multidegree
    assert all(eq.monomial_degree(m) == eq.multidegree for m in eq.polynomial)


@pytest.mark.parametrize("d", [(2, 1), (1, 1, 1), (3,), (3, 3)])
def test_no_equations(d):
    assert assoc_equations(d) == []


def test_sigma222_equations_match_the_extra_factors():
    eqs = assoc_equations((2, 3, 4))
    got = Counter(e.multidegree for e in eqs)
    want = Counter(lf(9, (k, 1), (1, -a), (2, -b)) for k in range(6, 10) for a, b in ((2, 1), (1, 2)))
    assert got == want
    # the complete-intersection class is the product of the recorded factors
    factors = catalog.entry("Sigma222").variants[0].factor_polys()
    prod = LaurentPoly.const(9, 1)
    for f in factors:
        prod = prod * f
    assert ci_multidegree(eqs) == prod


def test_coordinate_hyperplane_counts_as_a_hypersurface():
    d = catalog.entry("Sigma211").variants[0].dimvec
    eqs = assoc_equations(d)
    assert [str(e.multidegree) for e in eqs] == ["t6 - 2*t1 - t2"]
    q = QCoordinate(2, 2, 5, 6)
    assert str(q.multidegree) == "t5 - 2*t2"
    p = ci_multidegree(eqs + [q])
    want = LaurentPoly.const(6, 1)
    for f in catalog.entry("Sigma211").variants[0].factor_polys():
        want = want * f
    assert p == want


def test_ci_needs_nvars_when_empty():
    with pytest.raises(ValueError):
        ci_multidegree([])
    assert ci_multidegree([], nvars=2) == LaurentPoly.const(2, 1)


def test_format_qpoly():
    assert format_qpoly({}) == "0"
    assert format_qpoly({((1, 1, 3), (1, 1, 3)): -2}) == "-2*q_{1,1}^3**2"
