"""Thom polynomials in Chern monomials, Chern-root substitution, series equivalence."""
from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .expand import ExpansionBox, check_ell, expand_in_box, sorted_tail
from .genfun import RationalGF
from .laurent import LaurentPoly

ChernKey = tuple[int, ...]


class IntegralityError(ArithmeticError):
    """A Chern or Schur coefficient failed to come out integral."""

    def __init__(self, key, value):
        super().__init__(f"non-integral coefficient {value} at {key}")
        self.key = key
        self.value = value


def chern_key(indices: Iterable[int]) -> ChernKey | None:
    """Sorted (descending) multiset of positive indices; None if some index is negative."""
    out = []
    for j in indices:
        if j < 0:
            return None
        if j:
            out.append(j)
    return tuple(sorted(out, reverse=True))


def _render_order(key: ChernKey, mu: int):
    # graded lex, descending, on the index vector padded with c_0 factors
    padded = key + (0,) * (mu - len(key))
    return (-sum(padded), tuple(-x for x in padded))


@dataclass(frozen=True)
class ChernPolynomial:
    """Integer combination of Chern monomials ``c_{k1} c_{k2} ...`` at fixed ``ell``.

    ``terms`` keys list the nonzero indices in descending order; ``mu`` is the
    number of factors before ``c_0 = 1`` factors are dropped.
    """

    ell: int
    mu: int
    codim: int
    terms: Mapping[ChernKey, int] = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for k, v in self.terms.items():
            if v == 0:
                continue
            if isinstance(v, Fraction):
                if v.denominator != 1:
                    raise IntegralityError(k, v)
                v = v.numerator
            clean[tuple(k)] = int(v)
        object.__setattr__(self, "terms", clean)

    def __len__(self):
        return len(self.terms)

    def __getitem__(self, key) -> int:
        return self.terms.get(tuple(sorted(key, reverse=True)), 0)

    def sorted_terms(self) -> list[tuple[ChernKey, int]]:
        return sorted(self.terms.items(), key=lambda kv: _render_order(kv[0], self.mu))

    def __eq__(self, other):
        if not isinstance(other, ChernPolynomial):
            return NotImplemented
        return self.ell == other.ell and self.terms == other.terms

    def __sub__(self, other: "ChernPolynomial") -> "ChernPolynomial":
        acc = defaultdict(int, self.terms)
        for k, v in other.terms.items():
            acc[k] -= v
        return ChernPolynomial(self.ell, self.mu, self.codim, acc)

    def __str__(self):
        return render(self)


def thom_polynomial(gf: RationalGF, ell: int, allow_negative_ell: bool = False) -> ChernPolynomial:
    """Substitute ``t_k^i -> c_{ell+1+i}`` in the truncated expansion and collect terms."""
    mu = gf.nvars
    check_ell(ell, mu, allow_negative_ell)
    box = ExpansionBox(ell, mu, gf.homogeneous_degree)
    # only the multiset of exponents matters, so merge permuted terms early
    series = expand_in_box(gf, [box.min_exponent] * mu, canon=sorted_tail)
    acc: dict[ChernKey, Fraction] = defaultdict(int)
    for exp, c in series.terms.items():
        key = chern_key(ell + 1 + i for i in exp)
        if key is not None:
            acc[key] += c
    return ChernPolynomial(ell, mu, (ell + 1) * mu + gf.homogeneous_degree, acc)


def _fmt_index(j: int, ell: int, symbolic: bool) -> str:
    if not symbolic:
        return str(j)
    off = j - ell
    if off == 0:
        return "l"
    return f"l{off:+d}"


def render_monomial(key: ChernKey, mu: int, ell: int, symbolic: bool) -> str:
    idx = list(key)
    if symbolic:
        # show dropped c_0 factors as their ell-offset to keep mu factors per term
        idx += [0] * (mu - len(idx))
    if not idx:
        return "1"
    parts = []
    i = 0
    while i < len(idx):
        j = i
        while j < len(idx) and idx[j] == idx[i]:
            j += 1
        sub = _fmt_index(idx[i], ell, symbolic)
        base = f"c_{{{sub}}}" if symbolic else f"c{sub}"
        parts.append(base if j - i == 1 else f"{base}^{j - i}")
        i = j
    return " ".join(parts)


def render_terms(items: Sequence[tuple[str, int]]) -> str:
    if not items:
        return "0"
    out = []
    for mono, c in items:
        a = abs(c)
        body = mono if a == 1 and mono != "1" else (str(a) if mono == "1" else f"{a} {mono}")
        if not out:
            out.append(f"-{body}" if c < 0 else body)
        else:
            out.append(f" - {body}" if c < 0 else f" + {body}")
    return "".join(out)


def render(tp: ChernPolynomial, style: str = "numeric") -> str:
    if style not in ("numeric", "symbolic-ell"):
        raise ValueError(f"unknown style {style!r}")
    symbolic = style == "symbolic-ell"
    return render_terms(
        [(render_monomial(k, tp.mu, tp.ell, symbolic), v) for k, v in tp.sorted_terms()]
    )


def total_chern_class(targets: Sequence[LaurentPoly], sources: Sequence[LaurentPoly],
                      degree_cap: int, nvars: int) -> list[LaurentPoly]:
    """Graded pieces ``c_0..c_cap`` of ``prod(1+targets) / prod(1+sources)``."""
    one = LaurentPoly.const(nvars, 1)
    zero = LaurentPoly.zero(nvars)
    c = [one] + [zero] * degree_cap
    for b in targets:
        c = [c[k] + (b * c[k - 1] if k else zero) for k in range(degree_cap + 1)]
    for a in sources:
        # multiply by 1/(1+a): new_k = c_k - a * new_{k-1}
        new = [c[0]]
        for k in range(1, degree_cap + 1):
            new.append(c[k] - a * new[k - 1])
        c = new
    return c


def substitute_chern_roots(tp: ChernPolynomial, target_roots: Sequence[LaurentPoly],
                           source_roots: Sequence[LaurentPoly], degree_cap: int | None = None) -> LaurentPoly:
    """Evaluate ``tp`` with ``1 + c_1 + c_2 + ... = prod(1+targets)/prod(1+sources)``."""
    roots = list(target_roots) + list(source_roots)
    if not roots:
        raise ValueError("at least one root is required")
    nvars = roots[0].nvars
    if degree_cap is None:
        degree_cap = max([tp.codim] + [max(k) for k in tp.terms if k])
    need = max([0] + [max(k) for k in tp.terms if k])
    if degree_cap < need or degree_cap < tp.codim:
        raise ValueError(f"degree_cap {degree_cap} is below the codimension {max(need, tp.codim)}")
    c = total_chern_class(target_roots, source_roots, degree_cap, nvars)
    total = LaurentPoly.zero(nvars)
    for key, coeff in tp.terms.items():
        term = LaurentPoly.const(nvars, coeff)
        for j in key:
            term = term * c[j]
            if not term:
                break
        total = total + term
    return total


def first_difference(a: RationalGF, b: RationalGF, ell_max: int,
                     ell_min: int = -1) -> tuple[int, ChernKey, int, int] | str | None:
    """Witness that ``a`` and ``b`` give different Thom polynomials.

    Returns a reason string for a mu or degree mismatch, a tuple
    ``(ell, chern key, coeff in a, coeff in b)`` for the first differing term,
    or None when every ``ell`` in ``[ell_min, ell_max]`` agrees.
    """
    if a.nvars != b.nvars:
        return f"mu mismatch: {a.nvars} vs {b.nvars}"
    if a.homogeneous_degree != b.homogeneous_degree:
        return f"degree mismatch: {a.homogeneous_degree} vs {b.homogeneous_degree}"
    for ell in range(ell_min, ell_max + 1):
        ta = thom_polynomial(a, ell, allow_negative_ell=True)
        tb = thom_polynomial(b, ell, allow_negative_ell=True)
        if ta != tb:
            diff = ta - tb
            key = diff.sorted_terms()[0][0]
            return ell, key, ta.terms.get(key, 0), tb.terms.get(key, 0)
    return None


def series_equivalent(a: RationalGF, b: RationalGF, ell_max: int, ell_min: int = -1) -> bool:
    """Bounded check that ``a`` and ``b`` give equal Thom polynomials for ``ell_min..ell_max``.

    This is only a semi-decision: agreement on a finite range of ``ell`` is
    evidence, not proof, of equivalence.
    """
    return first_difference(a, b, ell_max, ell_min) is None
