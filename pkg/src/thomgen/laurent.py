"""Sparse multivariate Laurent polynomials with exact rational coefficients.

Exponent vectors are dense integer tuples of a fixed length ``nvars``; the
variables are named ``t1 .. t{nvars}`` everywhere in this package.
"""
from __future__ import annotations

from fractions import Fraction
from numbers import Rational
from typing import Iterable, Iterator, Mapping

Exponent = tuple[int, ...]


def _normalize_coeff(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


def grlex_key(exp: Exponent):
    return (sum(exp), exp)


class LaurentPoly:
    """An immutable Laurent polynomial in ``t1..t{nvars}``.

    Zero coefficients are never stored, so two polynomials are equal exactly
    when their term maps are equal.
    """

    __slots__ = ("nvars", "_terms", "_hash")

    def __init__(self, nvars: int, terms: Mapping[Exponent, Rational] | Iterable = ()):
        if nvars < 0:
            raise ValueError("nvars must be non-negative")
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Exponent, Rational] = {}
        for exp, c in items:
            exp = tuple(int(e) for e in exp)
            if len(exp) != nvars:
                raise ValueError(f"exponent {exp} has length {len(exp)}, expected {nvars}")
            if not isinstance(c, (int, Fraction)):
                c = Fraction(c)
            acc[exp] = acc.get(exp, 0) + c
        self._terms = {e: _normalize_coeff(c) for e, c in acc.items() if c != 0}
        self.nvars = nvars
        self._hash = None

    @classmethod
    def _raw(cls, nvars: int, terms: dict) -> "LaurentPoly":
        # terms must already be canonical: tuple keys, nonzero normalized coefficients
        p = object.__new__(cls)
        p.nvars = nvars
        p._terms = terms
        p._hash = None
        return p

    # -- constructors -----------------------------------------------------

    @classmethod
    def zero(cls, nvars: int) -> "LaurentPoly":
        return cls._raw(nvars, {})

    @classmethod
    def const(cls, nvars: int, c: Rational = 1) -> "LaurentPoly":
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def monomial(cls, exp: Iterable[int], c: Rational = 1) -> "LaurentPoly":
        exp = tuple(exp)
        return cls(len(exp), {exp: c})

    @classmethod
    def var(cls, nvars: int, i: int) -> "LaurentPoly":
        """The variable ``t{i}`` (1-indexed)."""
        if not 1 <= i <= nvars:
            raise ValueError(f"t{i} is not one of t1..t{nvars}")
        exp = [0] * nvars
        exp[i - 1] = 1
        return cls._raw(nvars, {tuple(exp): 1})

    # -- inspection ---------------------------------------------------------

    @property
    def terms(self) -> Mapping[Exponent, Rational]:
        return self._terms

    def items(self) -> Iterator[tuple[Exponent, Rational]]:
        """Terms in descending graded-lex order."""
        for exp in sorted(self._terms, key=grlex_key, reverse=True):
            yield exp, self._terms[exp]

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __getitem__(self, exp) -> Rational:
        return self._terms.get(tuple(exp), 0)

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return not self._terms or (len(self._terms) == 1 and (0,) * self.nvars in self._terms)

    def constant_value(self) -> Rational:
        if not self.is_constant():
            raise ValueError("polynomial is not constant")
        return self._terms.get((0,) * self.nvars, 0)

    def degrees(self) -> set[int]:
        return {sum(e) for e in self._terms}

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    def degree(self) -> int:
        """Total degree of a nonzero homogeneous polynomial."""
        degs = self.degrees()
        if len(degs) != 1:
            raise ValueError("degree is defined only for nonzero homogeneous polynomials")
        return degs.pop()

    def top_variable(self) -> int:
        """Largest 1-based index of a variable with a nonzero exponent (0 if none)."""
        top = 0
        for exp in self._terms:
            for i in range(self.nvars, top, -1):
                if exp[i - 1]:
                    top = i
                    break
        return top

    def is_integral(self) -> bool:
        return all(isinstance(c, int) for c in self._terms.values())

    # -- arithmetic -------------------------------------------------------

    def _check(self, other: "LaurentPoly"):
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        if other.nvars != self.nvars:
            raise ValueError(f"variable-count mismatch: {self.nvars} vs {other.nvars}")
        return other

    def _coerce(self, other):
        if isinstance(other, LaurentPoly):
            return self._check(other)
        if isinstance(other, (int, Fraction)):
            return LaurentPoly.const(self.nvars, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for e, c in other._terms.items():
            v = out.get(e, 0) + c
            if v:
                out[e] = _normalize_coeff(v)
            else:
                out.pop(e, None)
        return LaurentPoly._raw(self.nvars, out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly._raw(self.nvars, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return LaurentPoly.zero(self.nvars)
            return LaurentPoly._raw(
                self.nvars, {e: _normalize_coeff(c * other) for e, c in self._terms.items()}
            )
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict[Exponent, Rational] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return LaurentPoly._raw(
            self.nvars, {e: _normalize_coeff(c) for e, c in out.items() if c != 0}
        )

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            if len(self._terms) != 1:
                raise ValueError("only monomials can be raised to negative powers")
            (e, c), = self._terms.items()
            return LaurentPoly.monomial(tuple(n * a for a in e), Fraction(1, c) ** -n)
        result = LaurentPoly.const(self.nvars, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shift(self, exp: Iterable[int]) -> "LaurentPoly":
        """Multiply by the monomial ``t**exp``."""
        exp = tuple(exp)
        return LaurentPoly._raw(
            self.nvars,
            {tuple(a + b for a, b in zip(e, exp)): c for e, c in self._terms.items()},
        )

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.is_constant() and self.constant_value() == other
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.nvars == other.nvars and self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.nvars, frozenset(self._terms.items())))
        return self._hash

    def __repr__(self):
        return f"LaurentPoly({self.nvars}, {format_poly(self)!r})"

    def __str__(self):
        return format_poly(self)


def _format_coeff(c) -> str:
    return str(c)


def format_monomial(exp: Exponent) -> str:
    parts = []
    for i, a in enumerate(exp, start=1):
        if a == 1:
            parts.append(f"t{i}")
        elif a:
            parts.append(f"t{i}^{a}")
    return "*".join(parts)


def format_poly(p: LaurentPoly) -> str:
    """Render ``p`` in the grammar accepted by :func:`thomgen.exprparse.parse_factor`."""
    if not p:
        return "0"
    out = []
    for exp, c in p.items():
        mono = format_monomial(exp)
        sign = "-" if c < 0 else "+"
        a = -c if c < 0 else c
        if not mono:
            body = _format_coeff(a)
        elif a == 1:
            body = mono
        else:
            body = f"{_format_coeff(a)}*{mono}"
        if not out:
            out.append(body if sign == "+" else f"-{body}")
        else:
            out.append(f" {sign} {body}")
    return "".join(out)


class LinForm:
    """A linear form ``sum(a_i * t_i)`` with integer coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int]):
        object.__setattr__(self, "coeffs", tuple(int(a) for a in coeffs))

    def __setattr__(self, name, value):
        raise AttributeError("LinForm is immutable")

    @classmethod
    def from_terms(cls, nvars: int, terms) -> "LinForm":
        """Build from 1-indexed ``(variable, coefficient)`` pairs; repeats accumulate."""
        coeffs = [0] * nvars
        if isinstance(terms, Mapping):
            terms = terms.items()
        for i, a in terms:
            coeffs[i - 1] += a
        return cls(coeffs)

    @classmethod
    def from_poly(cls, p: LaurentPoly) -> "LinForm":
        coeffs = [0] * p.nvars
        for exp, c in p.terms.items():
            if sum(exp) != 1 or any(a not in (0, 1) for a in exp):
                raise ValueError(f"{p} is not a linear form")
            if not isinstance(c, int):
                raise ValueError(f"{p} has non-integer coefficients")
            coeffs[exp.index(1)] = c
        return cls(coeffs)

    @property
    def nvars(self) -> int:
        return len(self.coeffs)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def top(self) -> int:
        """1-based index of the last variable with a nonzero coefficient (0 for the zero form)."""
        for i in range(len(self.coeffs), 0, -1):
            if self.coeffs[i - 1]:
                return i
        return 0

    def to_poly(self) -> LaurentPoly:
        n = len(self.coeffs)
        terms = {}
        for i, a in enumerate(self.coeffs):
            if a:
                exp = [0] * n
                exp[i] = 1
                terms[tuple(exp)] = a
        return LaurentPoly._raw(n, terms)

    def __add__(self, other: "LinForm") -> "LinForm":
        return LinForm(a + b for a, b in zip(self.coeffs, other.coeffs))

    def __sub__(self, other: "LinForm") -> "LinForm":
        return LinForm(a - b for a, b in zip(self.coeffs, other.coeffs))

    def __neg__(self) -> "LinForm":
        return LinForm(-a for a in self.coeffs)

    def __eq__(self, other):
        return isinstance(other, LinForm) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __lt__(self, other: "LinForm"):
        return self.coeffs < other.coeffs

    def __repr__(self):
        return f"LinForm({self})"

    def __str__(self):
        # top variable first, the rest in index order: "t4 - 2*t1 - t2"
        top = self.top()
        if not top:
            return "0"
        order = [top] + [i for i in range(1, top) if self.coeffs[i - 1]]
        out = []
        for i in order:
            a = self.coeffs[i - 1]
            body = f"t{i}" if abs(a) == 1 else f"{abs(a)}*t{i}"
            if not out:
                out.append(f"-{body}" if a < 0 else body)
            else:
                out.append(f" - {body}" if a < 0 else f" + {body}")
        return "".join(out)


def add(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    return a + b


def mul(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    return a * b


def vandermonde(nvars: int) -> LaurentPoly:
    """Product of ``t_j - t_i`` over ``1 <= i < j <= nvars``."""
    p = LaurentPoly.const(nvars, 1)
    for j in range(2, nvars + 1):
        for i in range(1, j):
            p = p * LinForm.from_terms(nvars, {j: 1, i: -1}).to_poly()
    return p


def try_divide_linear(p: LaurentPoly, f: LinForm) -> LaurentPoly | None:
    """Exact quotient ``p / f``, or ``None`` if ``f`` does not divide ``p``.

    Division is carried out with respect to the top variable of ``f``, where
    ``f`` is monic up to its (integer) leading coefficient; any remainder means
    no exact quotient exists.
    """
    if f.nvars != p.nvars:
        raise ValueError(f"variable-count mismatch: {p.nvars} vs {f.nvars}")
    k = f.top()
    if k == 0:
        raise ZeroDivisionError("division by the zero linear form")
    if not p:
        return p
    k -= 1
    lead = f.coeffs[k]
    rest = [(i, a) for i, a in enumerate(f.coeffs) if a and i != k]
    # clear negative exponents of t_k so the division is polynomial in t_k
    low = min(e[k] for e in p.terms)
    rem = dict(p.terms)
    quotient: dict[Exponent, Rational] = {}
    while rem:
        # leading term with respect to t_k, ties broken deterministically
        e = max(rem, key=lambda x: (x[k], x))
        if e[k] == low:
            return None
        c = rem.pop(e)
        q = _normalize_coeff(Fraction(c) / lead)
        qe = list(e)
        qe[k] -= 1
        qe = tuple(qe)
        quotient[qe] = _normalize_coeff(quotient.get(qe, 0) + q)
        if quotient[qe] == 0:
            del quotient[qe]
        # subtract q * (rest) * t^qe
        for i, a in rest:
            te = list(qe)
            te[i] += 1
            te = tuple(te)
            v = rem.get(te, 0) - q * a
            if v:
                rem[te] = _normalize_coeff(v)
            else:
                rem.pop(te, None)
    return LaurentPoly._raw(p.nvars, quotient)
