from fractions import Fraction

import pytest

from thomgen.exprparse import ParseError, parse_dimvec, parse_factor, parse_poly, parse_rational
from thomgen.laurent import LaurentPoly, format_poly


def t(i, n=4):
    return LaurentPoly.var(n, i)


def test_dimvec():
    assert parse_dimvec("2, 1") == (2, 1)
    assert parse_dimvec("0,1,1,0,1") == (0, 1, 1, 0, 1)


@pytest.mark.parametrize("text,offset", [("2,-1", 2), ("2,,1", 2), ("", 0), ("0,0", 0), ("a", 0)])
def test_dimvec_errors(text, offset):
    with pytest.raises(ParseError) as info:
        parse_dimvec(text)
    assert info.value.position == offset
    assert f"offset {offset}" in str(info.value)


def test_factor_grammar():
    assert parse_poly("t4-2*t1-t2", 4) == t(4) - t(1) * 2 - t(2)
    assert parse_poly("(t1+t2)^2", 4) == (t(1) + t(2)) * (t(1) + t(2))
    assert parse_poly("1/2*t1", 4) == t(1) * Fraction(1, 2)
    assert parse_poly("-t1*t2^-1", 4) == -(t(1) * t(2) ** -1)
    assert parse_poly("3*t4 - 2*t1 - 2*t2 - 2*t3", 4).degree() == 1


@pytest.mark.parametrize("text,offset", [
    ("t1/t2", 2), ("t5", 0), ("t1 +", 4), ("(t1", 3), ("t1 $ t2", 3), ("(t1+t2)^-1", 9),
])
def test_factor_errors(text, offset):
    with pytest.raises(ParseError) as info:
        parse_poly(text, 4)
    assert info.value.position == offset


def test_homogeneity_check():
    with pytest.raises(ValueError):
        parse_factor("t3+t1^2", 4)
    assert parse_factor("t3+t1^2", 4, check_homogeneous=False)


def test_round_trip_on_catalog_factors():
    from thomgen import catalog
    for e in catalog.fixed_entries():
        for v in e.variants:
            for p in v.factor_polys():
                assert parse_poly(format_poly(p), v.mu) == p


def test_rational():
    assert parse_rational("-1/4") == Fraction(-1, 4)
    with pytest.raises(ParseError):
        parse_rational("1/0")
