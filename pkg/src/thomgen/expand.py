"""Iterated Laurent expansion in the regime ``t1 << t2 << ... << t_mu``.

Only terms in a finite region are produced.  For Chern monomials at relative
dimension ``ell`` the region is the box where every exponent lies in
``[-(ell+1), d + (mu-1)(ell+1)]`` and the total degree is ``d``, the
homogeneous degree of the input.  Delta symbols survive straightening for
some negative entries, so Schur expansions use per-variable lower bounds
instead (:func:`schur_lower_bounds`).
"""
from __future__ import annotations

import math
from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from operator import add

from .genfun import RationalGF
from .laurent import LaurentPoly


class ExpansionError(ValueError):
    pass


@dataclass(frozen=True)
class ExpansionBox:
    ell: int
    mu: int
    degree: int

    @property
    def min_exponent(self) -> int:
        return -(self.ell + 1)

    @property
    def max_exponent(self) -> int:
        return self.degree + (self.mu - 1) * (self.ell + 1)

    def contains(self, exp) -> bool:
        lo, hi = self.min_exponent, self.max_exponent
        return sum(exp) == self.degree and all(lo <= e <= hi for e in exp)


def check_ell(ell: int, mu: int, allow_negative: bool = False) -> None:
    if ell < -mu:
        raise ExpansionError(f"ell={ell} is below -mu={-mu}")
    if ell < -1 and not allow_negative:
        raise ExpansionError(f"ell={ell} < -1 requires allow_negative_ell")


def _integral(f: LaurentPoly) -> tuple[list, Fraction]:
    """Scale ``f`` to integer coefficients; returns (terms, factor pulled out)."""
    den = 1
    for c in f.terms.values():
        if isinstance(c, Fraction):
            den = math.lcm(den, c.denominator)
    terms = [(e, int(c * den)) for e, c in f.terms.items()]
    return terms, Fraction(1, den)


def _add_vec(a, b):
    return tuple(map(add, a, b))


def _complete_homogeneous(us: list[list], nmax: int, mu: int) -> list[dict]:
    """``h_n(u_1..u_K)`` for ``n = 0..nmax`` with each ``u`` a linear polynomial."""
    zero = (0,) * mu
    h = [{zero: 1}] + [{} for _ in range(nmax)]
    for u in us:
        new = [h[0]]
        for n in range(1, nmax + 1):
            acc = defaultdict(int, h[n])
            for e, c in new[n - 1].items():
                for f, g in u:
                    acc[_add_vec(e, f)] += c * g
            new.append({e: c for e, c in acc.items() if c})
        h = new
    return h


def expand(gf: RationalGF, ell: int, allow_negative_ell: bool = False) -> LaurentPoly:
    """All terms of the iterated Laurent expansion of ``gf`` inside the box for ``ell``."""
    mu = gf.nvars
    check_ell(ell, mu, allow_negative_ell)
    box = ExpansionBox(ell, mu, gf.homogeneous_degree)
    return expand_in_box(gf, [box.min_exponent] * mu)


def schur_lower_bounds(mu: int, ell: int) -> list[int]:
    """Smallest exponent of ``t_j`` whose Delta row ``ell+1+i_j`` can survive straightening.

    Row ``j`` of ``det|c_{lambda_i - i + j}|`` is zero only when
    ``lambda_j - j < -mu``.
    """
    return [j - mu - (ell + 1) for j in range(1, mu + 1)]


def sorted_tail(e: tuple, k: int):
    """Canonical form for symmetric consumers: exponents from ``k`` on, sorted."""
    return 1, e[:k] + tuple(sorted(e[k:], reverse=True))


def straightened_tail(ell: int):
    """Canonical form for Delta symbols: tail keys ``ell+1+e_j-j`` sorted with sign."""
    def canon(e: tuple, k: int):
        keys = [x + ell - j for j, x in enumerate(e[k:], start=k)]
        if len(set(keys)) != len(keys):
            return None
        sign = 1
        for a in range(len(keys)):
            for b in range(a + 1, len(keys)):
                if keys[a] < keys[b]:
                    sign = -sign
        keys.sort(reverse=True)
        return sign, e[:k] + tuple(x - ell + j for j, x in enumerate(keys, start=k))
    return canon


def expand_in_box(gf: RationalGF, lows, canon=None) -> LaurentPoly:
    """Expansion terms with ``exp[j] >= lows[j]`` for every ``j``.

    Fixed total degree makes the region finite: the upper bound for ``t_j`` is
    the degree minus the lower bounds of the other variables.

    ``canon(e, k)`` may rewrite each term once ``t_k..t_mu`` are final, returning
    ``(sign, exponent)`` or None to drop it.  Only the sum of the final
    exponents matters to later steps, so a consumer that only needs a
    symmetric (or alternating) function of them can merge terms early.  The
    region check assumes ``canon`` maps in-region terms to in-region terms.
    """
    mu = gf.nvars
    d = gf.homogeneous_degree
    lows = list(lows)
    if len(lows) != mu:
        raise ValueError(f"expected {mu} lower bounds, got {len(lows)}")
    slack = d - sum(lows)
    if slack < 0:
        return LaurentPoly.zero(mu)
    his = [lo + slack for lo in lows]
    # prefix sums of lower/upper bounds of t_1..t_k
    lo_prefix = [0]
    hi_prefix = [0]
    for i in range(mu):
        lo_prefix.append(lo_prefix[-1] + lows[i])
        hi_prefix.append(hi_prefix[-1] + his[i])

    # denominator forms grouped by top variable, as the u of 1/(t_k - u)
    dens: list[list[list]] = [[] for _ in range(mu)]
    for lf in gf.denominator:
        k = lf.top() - 1
        if lf.coeffs[k] != 1:
            raise ExpansionError(f"denominator factor {lf} is not monic in its top variable")
        u = []
        for i, a in enumerate(lf.coeffs[:k]):
            if a:
                e = [0] * mu
                e[i] = 1
                u.append((tuple(e), -a))
        dens[k].append(u)

    scale = gf.scalar
    start = [0] * mu
    groups: list[list[list]] = [[] for _ in range(mu)]
    monotone = [not dens[i] for i in range(mu)]
    for f in gf.factors:
        if len(f) == 1:
            (e, c), = f.terms.items()
            start = [x + y for x, y in zip(start, e)]
            scale *= c
            continue
        terms, s = _integral(f)
        scale *= s
        groups[f.top_variable() - 1].append(terms)
        for e, _ in terms:
            for i, x in enumerate(e):
                if x < 0:
                    monotone[i] = False

    state: dict[tuple, int] = {tuple(start): 1}
    for k in range(mu - 1, -1, -1):
        K = len(dens[k])
        group = groups[k]
        remaining_deg = [0] * (len(group) + 1)
        for g in range(len(group) - 1, -1, -1):
            remaining_deg[g] = remaining_deg[g + 1] + max(e[k] for e, _ in group[g])
        for g, poly in enumerate(group):
            need = lows[k] + K - remaining_deg[g + 1]
            acc = defaultdict(int)
            for e, c in state.items():
                for f, a in poly:
                    ne = _add_vec(e, f)
                    if ne[k] < need:
                        continue
                    acc[ne] += c * a
            state = {}
            for e, c in acc.items():
                if c and all(e[i] <= his[i] for i in range(k) if monotone[i]):
                    state[e] = c

        # geometric series for the denominators with top variable k
        nmax = 0
        for e in state:
            nmax = max(nmax, e[k] - lows[k] - K)
        H = _complete_homogeneous(dens[k], nmax, mu) if K else [{(0,) * mu: 1}]
        lo, hi = lows[k], his[k]
        lower_lo = lo_prefix[k]
        lower_hi = hi_prefix[k]
        # lower variables that can only grow from here: (index, low, high)
        grow = [(i, lows[i], his[i]) for i in range(k) if monotone[i]]
        fixed_floor = sum(lows[i] for i in range(k) if not monotone[i])
        acc = defaultdict(int)
        for e, c in state.items():
            a = e[k]
            s_hi = sum(e[k:])
            if K:
                Ns = range(max(K, a - hi), a - lo + 1)
            else:
                Ns = (0,) if lo <= a <= hi else ()
            for N in Ns:
                # degree left for t_1..t_k once t_k^(a-N) is final
                rest = d - (s_hi - N)
                if rest < lower_lo or rest > lower_hi:
                    continue
                base = list(e)
                base[k] = a - N
                base = tuple(base)
                for f, g in H[N - K].items():
                    ne = _add_vec(base, f)
                    floor = fixed_floor
                    for i, lo_i, hi_i in grow:
                        x = ne[i]
                        if x > hi_i:
                            break
                        floor += x if x > lo_i else lo_i
                    else:
                        if floor <= rest:
                            acc[ne] += c * g
        if canon is not None:
            merged = defaultdict(int)
            for e, c in acc.items():
                r = canon(e, k)
                if r is not None and c:
                    merged[r[1]] += r[0] * c
            acc = merged
        state = {e: c for e, c in acc.items() if c}

    out = {}
    for e, c in state.items():
        if sum(e) == d and all(lo <= x for lo, x in zip(lows, e)):
            out[e] = c * scale
    return LaurentPoly(mu, out)
