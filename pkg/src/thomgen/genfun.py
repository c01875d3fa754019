"""Rational generating functions built from dimension vectors."""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, reduce as _fold
from typing import Iterable, Sequence

from .laurent import LaurentPoly, LinForm, try_divide_linear

DimVec = tuple[int, ...]


def check_dimvec(d: Iterable[int]) -> DimVec:
    d = tuple(int(x) for x in d)
    if not d:
        raise ValueError("dimension vector is empty")
    if any(x < 0 for x in d):
        raise ValueError(f"dimension vector {d} has a negative entry")
    if sum(d) < 1:
        raise ValueError(f"dimension vector {d} has total dimension 0")
    return d


@dataclass(frozen=True)
class WeightProfile:
    weights: tuple[int, ...]
    exponents: tuple[int, ...]

    @property
    def mu(self) -> int:
        return len(self.weights)


def weight_profile(d: Sequence[int]) -> WeightProfile:
    d = check_dimvec(d)
    weights: list[int] = []
    exponents: list[int] = []
    for k, dk in enumerate(d, start=1):
        weights.extend([k] * dk)
        exponents.extend(range(dk - 1, -1, -1))
    return WeightProfile(tuple(weights), tuple(exponents))


def denominator_forms(weights: Sequence[int]) -> list[LinForm]:
    """Forms ``t_k - t_i - t_j`` for ``i <= j < k`` with ``w(i) + w(j) <= w(k)``."""
    mu = len(weights)
    out = []
    for k in range(mu):
        for i in range(k):
            for j in range(i, k):
                if weights[i] + weights[j] <= weights[k]:
                    c = [0] * mu
                    c[k] += 1
                    c[i] -= 1
                    c[j] -= 1
                    out.append(LinForm(c))
    return out


def _check_factor(f: LaurentPoly, nvars: int) -> LaurentPoly:
    if f.nvars != nvars:
        raise ValueError(f"factor has {f.nvars} variables, expected {nvars}")
    if not f:
        raise ValueError("zero factor")
    if not f.is_homogeneous():
        raise ValueError(f"factor {f} is not homogeneous")
    return f


@dataclass(frozen=True)
class RationalGF:
    """``scalar * prod(factors) / prod(denominator)``.

    The numerator is kept as a list of homogeneous factors; expanding it is
    deferred because the Vandermonde part alone has ``mu!`` terms.
    """

    nvars: int
    scalar: Fraction = Fraction(1)
    factors: tuple[LaurentPoly, ...] = ()
    denominator: tuple[LinForm, ...] = ()
    dimvec: DimVec | None = field(default=None, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "scalar", Fraction(self.scalar))
        for f in self.factors:
            _check_factor(f, self.nvars)
        for lf in self.denominator:
            if lf.nvars != self.nvars:
                raise ValueError(f"denominator factor {lf} has wrong variable count")
            if lf.is_zero():
                raise ValueError("zero denominator factor")

    @cached_property
    def numerator(self) -> LaurentPoly:
        return _fold(lambda a, b: a * b, self.factors, LaurentPoly.const(self.nvars, 1))

    @property
    def numerator_degree(self) -> int:
        return sum(f.degree() for f in self.factors)

    @property
    def homogeneous_degree(self) -> int:
        return self.numerator_degree - len(self.denominator)

    def __str__(self):
        num = "*".join(f"({f})" for f in self.factors) or "1"
        den = "*".join(f"({lf})" for lf in self.denominator)
        s = "" if self.scalar == 1 else f"{self.scalar}*"
        return f"{s}{num}" + (f" / ({den})" if den else "")


def homogeneous_degree(gf: RationalGF) -> int:
    return gf.homogeneous_degree


def k_function(d: Sequence[int]) -> RationalGF:
    """The generating function whose expansion gives Chern-monomial coefficients."""
    d = check_dimvec(d)
    prof = weight_profile(d)
    mu = prof.mu
    factors = [LaurentPoly.monomial(prof.exponents)]
    for j in range(1, mu + 1):
        for i in range(1, j):
            factors.append(LinForm.from_terms(mu, {j: 1, i: -1}).to_poly())
    return RationalGF(mu, Fraction(1), tuple(factors), tuple(denominator_forms(prof.weights)), d)


def ktilde_function(d: Sequence[int]) -> RationalGF:
    """The generating function whose expansion gives Schur-basis coefficients."""
    d = check_dimvec(d)
    prof = weight_profile(d)
    exps = tuple(e + i for i, e in enumerate(prof.exponents))
    return RationalGF(
        prof.mu, Fraction(1), (LaurentPoly.monomial(exps),),
        tuple(denominator_forms(prof.weights)), d,
    )


def multiply_factor(gf: RationalGF, p: LaurentPoly | None = None, s=1) -> RationalGF:
    """``gf * s * p``; a constant ``p`` is folded into the scalar."""
    scalar = gf.scalar * Fraction(s)
    factors = gf.factors
    if p is not None:
        _check_factor(p, gf.nvars)
        if p.is_constant():
            scalar *= Fraction(p.constant_value())
        else:
            factors = factors + (p,)
    return RationalGF(gf.nvars, scalar, factors, gf.denominator, gf.dimvec)


def _divides_factor(f: LaurentPoly, lf: LinForm) -> LaurentPoly | None:
    if len(f) == 1:
        # monomials are units; a form with at least two terms never divides one
        return None
    return try_divide_linear(f, lf)


def reduce(gf: RationalGF) -> RationalGF:
    """Cancel denominator forms that divide the numerator exactly.

    Linear forms are irreducible, so a form divides the product of the
    numerator factors iff it divides one of them.
    """
    factors = list(gf.factors)
    scalar = gf.scalar
    remaining = []
    for lf in gf.denominator:
        for idx, f in enumerate(factors):
            q = _divides_factor(f, lf)
            if q is not None:
                if q.is_constant():
                    scalar *= Fraction(q.constant_value())
                    del factors[idx]
                else:
                    factors[idx] = q
                break
        else:
            remaining.append(lf)
    return RationalGF(gf.nvars, scalar, tuple(factors), tuple(remaining), gf.dimvec)


def _product(polys: Iterable[LaurentPoly], nvars: int) -> LaurentPoly:
    return _fold(lambda a, b: a * b, polys, LaurentPoly.const(nvars, 1))


def gf_equal_exact(a: RationalGF, b: RationalGF) -> bool:
    """Decide equality as rational functions by cross-multiplication."""
    if a.nvars != b.nvars:
        raise ValueError(f"variable-count mismatch: {a.nvars} vs {b.nvars}")
    if a.homogeneous_degree != b.homogeneous_degree:
        return False
    # factors shared by both sides cancel before anything is multiplied out
    da, db = Counter(a.denominator), Counter(b.denominator)
    common = da & db
    da -= common
    db -= common
    na, nb = Counter(a.factors), Counter(b.factors)
    shared = na & nb
    na -= shared
    nb -= shared
    lhs = _product(list(na.elements()) + [lf.to_poly() for lf in db.elements()], a.nvars)
    rhs = _product(list(nb.elements()) + [lf.to_poly() for lf in da.elements()], b.nvars)
    return lhs * a.scalar == rhs * b.scalar
