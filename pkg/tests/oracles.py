"""Slow, independent reference implementations used by the tests.

Nothing here calls the expansion or determinant code under test; polynomials
are plain ``{exponent tuple: Fraction}`` dicts.
"""
from __future__ import annotations

import itertools
from collections import defaultdict
from fractions import Fraction


def pmul(a: dict, b: dict) -> dict:
    out = defaultdict(Fraction)
    for ea, ca in a.items():
        for eb, cb in b.items():
            out[tuple(x + y for x, y in zip(ea, eb))] += ca * cb
    return {e: c for e, c in out.items() if c}


def poly_of(lp) -> dict:
    return {e: Fraction(c) for e, c in lp.terms.items()}


def geometric_factor(coeffs, order: int) -> dict:
    """``1/(t_k - u)`` truncated to ``n < order`` where the form is ``t_k - u``."""
    mu = len(coeffs)
    k = max(i for i, a in enumerate(coeffs) if a)
    assert coeffs[k] == 1
    u = {}
    for i, a in enumerate(coeffs[:k]):
        if a:
            e = [0] * mu
            e[i] = 1
            u[tuple(e)] = Fraction(-a)
    inv_tk = [0] * mu
    inv_tk[k] = -1
    inv_tk = {tuple(inv_tk): Fraction(1)}
    ratio = pmul(u, inv_tk) if u else {}
    out = {}
    power = {(0,) * mu: Fraction(1)}
    for _ in range(order):
        for e, c in power.items():
            out[e] = out.get(e, 0) + c
        if not ratio:
            break
        power = pmul(power, ratio)
    return pmul({e: c for e, c in out.items() if c}, inv_tk)


def brute_expand(gf, lows, order: int) -> dict:
    """Geometric-series expansion with every factor cut at ``order`` terms, kept to ``exp >= lows``."""
    d = gf.homogeneous_degree
    acc = {(0,) * gf.nvars: Fraction(gf.scalar)}
    for f in gf.factors:
        acc = pmul(acc, poly_of(f))
    his = [lo + d - sum(lows) for lo in lows]
    forms = sorted(gf.denominator, key=lambda lf: -lf.top())
    for n, lf in enumerate(forms):
        acc = pmul(acc, geometric_factor(lf.coeffs, order))
        k = lf.top() - 1
        if n + 1 == len(forms) or forms[n + 1].top() - 1 != k:
            # no later factor touches t_k, so its exponent is final
            acc = {e: c for e, c in acc.items() if lows[k] <= e[k] <= his[k]}
    return {e: c for e, c in acc.items()
            if sum(e) == d and all(x >= lo for x, lo in zip(e, lows))}


def stable_brute_expand(gf, lows, start: int = 6, step: int = 3, limit: int = 40) -> dict:
    """Raise the truncation order until the region stops changing."""
    prev = brute_expand(gf, lows, start)
    n = start
    while n < limit:
        n += step
        cur = brute_expand(gf, lows, n)
        if cur == prev:
            return cur
        prev = cur
    raise RuntimeError("brute-force expansion did not stabilise")


def leibniz_det_chern(seq) -> dict:
    """``det|c_{seq_i - i + j}|`` as ``{descending Chern key: coeff}`` via the Leibniz formula."""
    mu = len(seq)
    out = defaultdict(int)
    for perm in itertools.permutations(range(mu)):
        inv = sum(1 for a in range(mu) for b in range(a + 1, mu) if perm[a] > perm[b])
        idx = [seq[i] - i + perm[i] for i in range(mu)]
        if any(j < 0 for j in idx):
            continue
        key = tuple(sorted((j for j in idx if j), reverse=True))
        out[key] += -1 if inv % 2 else 1
    return {k: v for k, v in out.items() if v}
