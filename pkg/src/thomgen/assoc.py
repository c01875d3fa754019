"""Coordinates of the space of filtered commutative algebra structures.

A structure on a vector space with basis ``e_1..e_mu`` and weights ``w`` is
``e_i * e_j = sum_k q[i,j,k] e_k`` over ``w(k) >= w(i) + w(j)``.  The torus
rescaling the basis acts on ``q[i,j,k]`` with weight ``t_k - t_i - t_j``.
"""
from __future__ import annotations

from collections import Counter, defaultdict
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence, Union

from .genfun import check_dimvec, weight_profile
from .laurent import LaurentPoly, LinForm


@dataclass(frozen=True, order=True)
class QCoordinate:
    i: int
    j: int
    k: int
    nvars: int

    @property
    def multidegree(self) -> LinForm:
        return LinForm.from_terms(self.nvars, [(self.k, 1), (self.i, -1), (self.j, -1)])

    def __str__(self):
        return f"q_{{{self.i},{self.j}}}^{self.k}"


# monomial in coordinates: sorted tuple of (i, j, k) triples with repetition
QMonomial = tuple[tuple[int, int, int], ...]


@dataclass(frozen=True)
class AssocEquation:
    """The ``n``-component of ``(e_i e_j) e_k - e_i (e_j e_k)``."""

    i: int
    j: int
    k: int
    n: int
    nvars: int
    polynomial: Mapping[QMonomial, int]

    @property
    def multidegree(self) -> LinForm:
        return LinForm.from_terms(self.nvars, [(self.n, 1), (self.i, -1), (self.j, -1), (self.k, -1)])

    def monomial_degree(self, mono: QMonomial) -> LinForm:
        acc: dict[int, int] = defaultdict(int)
        for i, j, k in mono:
            acc[k] += 1
            acc[i] -= 1
            acc[j] -= 1
        return LinForm.from_terms(self.nvars, acc)

    def __str__(self):
        return format_qpoly(self.polynomial)


def format_qpoly(poly: Mapping[QMonomial, int]) -> str:
    if not poly:
        return "0"
    out = []
    for mono in sorted(poly):
        c = poly[mono]
        counts = Counter(mono)
        body = "*".join(
            f"q_{{{i},{j}}}^{k}" + (f"**{e}" if e > 1 else "")
            for (i, j, k), e in sorted(counts.items())
        )
        a = abs(c)
        body = body if a == 1 else f"{a}*{body}"
        if not out:
            out.append(f"-{body}" if c < 0 else body)
        else:
            out.append(f" - {body}" if c < 0 else f" + {body}")
    return "".join(out)



def coordinates(d: Sequence[int]) -> list[QCoordinate]:
    """All ``q[i,j,k]`` with ``i <= j`` and ``w(k) >= w(i) + w(j)``."""
    w = weight_profile(check_dimvec(d)).weights
    mu = len(w)
    out = []
    for k in range(1, mu + 1):
        for i in range(1, mu + 1):
            for j in range(i, mu + 1):
                if w[k - 1] >= w[i - 1] + w[j - 1]:
                    out.append(QCoordinate(i, j, k, mu))
    return out


def euler_class(d: Sequence[int]) -> list[LinForm]:
    """Multidegrees of all coordinates, one linear form per coordinate."""
    return [q.multidegree for q in coordinates(d)]


def _equation(w, i, j, k, n) -> dict[QMonomial, int]:
    mu = len(w)

    def q(a, b, c):
        if w[c - 1] >= w[a - 1] + w[b - 1]:
            return (min(a, b), max(a, b), c)
        return None

    acc: dict[QMonomial, int] = defaultdict(int)
    for m in range(1, mu + 1):
        x, y = q(i, j, m), q(m, k, n)
        if x and y:
            acc[tuple(sorted((x, y)))] += 1
        x, y = q(i, m, n), q(j, k, m)
        if x and y:
            acc[tuple(sorted((x, y)))] -= 1
    return {mono: c for mono, c in acc.items() if c}


def assoc_equations(d: Sequence[int]) -> list[AssocEquation]:
    """Nontrivial associativity equations, one per distinct polynomial up to sign.

    ``E(i,j,k) = -E(k,j,i)`` and ``E(i,j,i) = 0``, so only ``i < k`` is
    enumerated; identically zero polynomials are discarded.
    """
    w = weight_profile(check_dimvec(d)).weights
    mu = len(w)
    out: list[AssocEquation] = []
    seen: set = set()
    for n in range(1, mu + 1):
        for i in range(1, mu + 1):
            for k in range(i + 1, mu + 1):
                for j in range(1, mu + 1):
                    if w[i - 1] + w[j - 1] + w[k - 1] > w[n - 1]:
                        continue
                    poly = _equation(w, i, j, k, n)
                    if not poly:
                        continue
                    key = frozenset(poly.items())
                    neg = frozenset((m, -c) for m, c in poly.items())
                    if key in seen or neg in seen:
                        continue
                    seen.add(key)
                    out.append(AssocEquation(i, j, k, n, mu, poly))
    return out


Hypersurface = Union[AssocEquation, QCoordinate]


def ci_multidegree(eqs: Iterable[Hypersurface], nvars: int | None = None) -> LaurentPoly:
    """Product of the multidegrees of hypersurfaces assumed to meet as a complete intersection.

    Besides associativity equations, a vanishing coordinate ``q[i,j,k] = 0``
    counts as a hypersurface of multidegree ``t_k - t_i - t_j``.  Regularity of
    the sequence is not checked.
    """
    eqs = list(eqs)
    if nvars is None:
        if not eqs:
            raise ValueError("nvars is required for an empty equation list")
        nvars = eqs[0].nvars
    p = LaurentPoly.const(nvars, 1)
    for e in eqs:
        p = p * e.multidegree.to_poly()
    return p
