"""Schur-basis expansions via determinants ``det|c_{lambda_i - i + j}|``."""
from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Sequence

from .expand import check_ell, expand_in_box, schur_lower_bounds, straightened_tail
from .genfun import RationalGF
from .thom import ChernPolynomial, IntegralityError, chern_key, render_terms

Partition = tuple[int, ...]


def straighten(seq: Sequence[int]) -> tuple[int, Partition] | None:
    """Rewrite ``Delta_seq`` as ``sign * Delta_partition``, or None when it vanishes.

    Row ``j`` of the determinant only depends on the key ``seq[j] - j``: equal
    keys give equal rows, and a key below ``-mu`` gives a zero row.
    """
    mu = len(seq)
    keys = [x - j for j, x in enumerate(seq, start=1)]
    if len(set(keys)) != mu or any(k < -mu for k in keys):
        return None
    # parity of the permutation sorting keys into decreasing order
    sign = 1
    for a in range(mu):
        for b in range(a + 1, mu):
            if keys[a] < keys[b]:
                sign = -sign
    ordered = sorted(keys, reverse=True)
    parts = [k + j for j, k in enumerate(ordered, start=1)]
    while parts and parts[-1] == 0:
        parts.pop()
    return sign, tuple(parts)


@dataclass(frozen=True)
class SchurExpansion:
    ell: int
    mu: int
    terms: Mapping[Partition, int] = field(default_factory=dict)

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

    def __getitem__(self, shape) -> int:
        shape = list(shape)
        while shape and shape[-1] == 0:
            shape.pop()
        return self.terms.get(tuple(shape), 0)

    def __len__(self):
        return len(self.terms)

    def __eq__(self, other):
        if not isinstance(other, SchurExpansion):
            return NotImplemented
        return self.ell == other.ell and self.terms == other.terms

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: tuple(-x for x in kv[0]))

    def __str__(self):
        return render_schur(self)


def render_schur(se: SchurExpansion, style: str = "numeric") -> str:
    symbolic = style == "symbolic-ell"
    items = []
    for shape, c in se.sorted_terms():
        padded = list(shape) + [0] * (se.mu - len(shape))
        if symbolic:
            subs = ["l" if p == se.ell else f"l{p - se.ell:+d}" for p in padded]
        else:
            subs = [str(p) for p in padded]
        items.append((f"D_{{{','.join(subs)}}}", c))
    return render_terms(items)


def schur_expansion(gf: RationalGF, ell: int, allow_negative_ell: bool = False) -> SchurExpansion:
    """Schur coefficients of a Thom series given by a generating function on the tilde side.

    The caller supplies a function built with :func:`thomgen.genfun.ktilde_function`.
    Straightening keeps sequences with some negative entries, so the expansion
    region is wider than the Chern-monomial box.
    """
    mu = gf.nvars
    check_ell(ell, mu, allow_negative_ell)
    series = expand_in_box(gf, schur_lower_bounds(mu, ell), canon=straightened_tail(ell))
    acc: dict[Partition, Fraction] = defaultdict(int)
    for exp, c in series.terms.items():
        st = straighten([ell + 1 + i for i in exp])
        if st is not None:
            sign, shape = st
            acc[shape] += sign * c
    return SchurExpansion(ell, mu, acc)


def _det_terms_fast(seq: Sequence[int]) -> dict[tuple[int, ...], int]:
    # Laplace expansion along the first row with memoized minors
    mu = len(seq)
    memo: dict[tuple[int, frozenset], dict] = {}

    def minor(row: int, cols: frozenset) -> dict:
        if row == mu:
            return {(): 1}
        key = (row, cols)
        if key in memo:
            return memo[key]
        acc: dict[tuple[int, ...], int] = defaultdict(int)
        sign = 1
        for j in sorted(cols):
            v = seq[row] - row + j
            if v >= 0:
                sub = minor(row + 1, cols - {j})
                for mono, c in sub.items():
                    m = tuple(sorted(mono + ((v,) if v else ()), reverse=True))
                    acc[m] += sign * c
            sign = -sign
        res = {k: v for k, v in acc.items() if v}
        memo[key] = res
        return res

    return minor(0, frozenset(range(mu)))


def delta_to_chern(shape: Sequence[int], mu: int | None = None) -> dict[tuple[int, ...], int]:
    """Chern-monomial expansion of ``Delta_shape`` as a ``{key: coeff}`` map."""
    shape = tuple(shape)
    if mu is not None and len(shape) < mu:
        shape = shape + (0,) * (mu - len(shape))
    return _det_terms_fast(shape)


def schur_to_chern(se: SchurExpansion) -> ChernPolynomial:
    acc: dict[tuple[int, ...], int] = defaultdict(int)
    codim = None
    for shape, c in se.terms.items():
        codim = sum(shape)
        for key, v in delta_to_chern(shape).items():
            acc[key] += c * v
    if codim is None:
        codim = 0
    return ChernPolynomial(se.ell, se.mu, codim, acc)
