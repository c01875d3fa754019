"""Registry of published generating functions for Thom polynomials.

Each variant is a dimension vector, a list of extra polynomial factors (in the
factor grammar of :mod:`thomgen.exprparse`) and a scalar multiplier.  ``mu``,
``d`` and the per-variant ``c`` are the table values: number of variables,
homogeneous degree and linear denominator factors left after cancellation.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Callable, Iterator, Sequence

from .exprparse import parse_factor
from .genfun import RationalGF, k_function, ktilde_function, multiply_factor
from .laurent import LaurentPoly


class CatalogError(KeyError):
    pass


@dataclass(frozen=True)
class Variant:
    dimvec: tuple[int, ...]
    factors: tuple[str, ...] = ()
    scalar: Fraction = Fraction(1)
    c: int | None = None

    @property
    def mu(self) -> int:
        return sum(self.dimvec)

    def factor_polys(self) -> list[LaurentPoly]:
        return [parse_factor(f, self.mu) for f in self.factors]

    def factor_expr(self) -> str:
        if not self.factors:
            return "1"
        if len(self.factors) == 1:
            return self.factors[0]
        return "*".join(f"({f})" for f in self.factors)

    def build(self, tilde: bool = False) -> RationalGF:
        gf = ktilde_function(self.dimvec) if tilde else k_function(self.dimvec)
        for p in self.factor_polys():
            gf = multiply_factor(gf, p)
        return multiply_factor(gf, None, self.scalar)


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    mu: int
    d: int
    variants: tuple[Variant, ...]
    notes: str = ""
    params: tuple[int, ...] = ()

    @property
    def c_per_variant(self) -> list[int | None]:
        return [v.c for v in self.variants]


def V(dimvec, *factors, scalar=1, c=None) -> Variant:
    return Variant(tuple(dimvec), tuple(factors), Fraction(scalar), c)


_FIXED: list[CatalogEntry] = [
    CatalogEntry("A1", 1, 0, (V([1], c=0),), "Sigma^1"),
    CatalogEntry("A2", 2, 0, (V([1, 1], c=1),), "Sigma^{1,1}"),
    CatalogEntry("Sigma2", 2, 2, (V([2], c=0),)),
    CatalogEntry("A3", 3, 0, (V([1, 1, 1], c=3),), "Sigma^{1,1,1}"),
    CatalogEntry("I22", 3, 1, (
        V([2, 1], c=3),
        V([0, 1, 1, 0, 1], scalar=Fraction(1, 2), c=2),
    ), "Phi_{2,0}"),
    CatalogEntry("III23", 3, 2, (
        V([2, 1], "t3-t1-t2", scalar=2, c=2),
        V([1, 2], c=2),
        V([0, 1, 1, 1], c=1),
    ), "Phi_{2,1}"),
    CatalogEntry("Sigma3", 3, 6, (V([3], c=0),)),
    CatalogEntry("A4", 4, 0, (V([1, 1, 1, 1], "t4-2*t1-t2", c=7),), "Sigma^{1,1,1,1}"),
    CatalogEntry("I23", 4, 1, (
        V([2, 1, 1], "(t4-2*t1-t2)*(t4-t1-2*t2)-(t4-t2-t3)*(t4-t1-t3)", c=8),
        V([0, 1, 1, 1, 0, 1], c=5),
    )),
    CatalogEntry("III33", 4, 2, (
        V([2, 2], c=6),
        V([0, 0, 1, 1, 0, 1, 0, 1], scalar=Fraction(1, 2), c=4),
    )),
    CatalogEntry("III24", 4, 2, (
        V([1, 2, 1], c=5),
        V([1, 1, 2], c=5),
        V([0, 1, 0, 1, 1, 1], c=4),
        V([0, 0, 1, 0, 1, 1, 0, 0, 1], c=4),
    )),
    CatalogEntry("Sigma21", 4, 3, (
        V([2, 2], "t3+t4-2*t1-2*t2", scalar=2, c=6),
        V([0, 1, 1, 0, 2], c=4),
        V([0, 1, 1, 1, 1], c=3),
    ), "Sigma^{2,1}"),
    CatalogEntry("Phi30", 4, 3, (
        V([3, 1], c=6),
        V([0, 0, 1, 1, 1, 0, 0, 1], "t4-2*t1", scalar=Fraction(-1, 4), c=3),
    )),
    CatalogEntry("Phi31", 4, 4, (
        V([3, 1], "3*t4-2*t1-2*t2-2*t3", c=6),
        V([0, 2, 1, 1], c=3),
        V([0, 0, 1, 1, 1, 0, 1], scalar=Fraction(1, 2), c=2),
    )),
    CatalogEntry("Phi32", 4, 6, (
        V([3, 1], "t4-t1-t2", "t4-t2-t3", "t4-t1-t3", scalar=4, c=3),
        V([0, 1, 2, 1], c=1),
    )),
    CatalogEntry("Sigma4", 4, 12, (V([4], c=0),)),
    CatalogEntry("Sigma211", 6, 4, (
        V([0, 1, 1, 1, 1, 1, 1], "t6-2*t1-t2", "t5-2*t2", c=12),
        V([0, 0, 1, 0, 1, 1, 0, 1, 1, 0, 1], "t6-2*t1-t2"),
    ), "Sigma^{2,1,1}; the two forms are equal rational functions"),
    CatalogEntry("Sigma221", 8, 7, (
        V([0, 0, 1, 1, 0, 1, 1, 1, 1, 1, 1], "t7-2*t1-t2", "t8-2*t1-t2", "t8-t1-2*t2", c=24),
    ), "Sigma^{2,2,1}"),
    CatalogEntry("Sigma222", 9, 9, (
        V([2, 3, 4], *[f"t{k}-{a}" for k in range(6, 10) for a in ("2*t1-t2", "t1-2*t2")], c=45),
        V([0, 0, 0, 1, 1, 0, 0, 1, 1, 1, 0, 1, 1, 1, 1], "t1",
          *[f"t{k}-2*t1-t2" for k in range(7, 10)],
          *[f"t{k}-t1-2*t2" for k in range(8, 10)], c=33),
    ), "Sigma^{2,2,2}"),
    CatalogEntry("Cgamma", 6, 4, (
        V([3, 3], "t4+t5+t6-2*t1-2*t2-2*t3", scalar=4, c=18),
        V([0, 2, 1, 0, 3], c=15),
        V([0, 0, 0, 1, 1, 1, 0, 0, 1, 1, 1], scalar=Fraction(1, 2), c=11),
        V([0, 0, 1, 2, 0, 1, 0, 2], c=13),
        V([0, 0, 0, 0, 1, 1, 1, 0, 0, 1, 0, 1, 0, 1], scalar=Fraction(1, 2), c=11),
    ), "nets of conics, fixed modulus"),
    CatalogEntry("Cstar", 6, 3, (V([3, 3], c=18),), "nets of conics, all moduli"),
]

def _sigma_r(r: int) -> CatalogEntry:
    if r < 1:
        raise ValueError("Sigma needs r >= 1")
    return CatalogEntry("Sigma", r, r * (r - 1), (V([r], c=0),), f"Sigma^{r}", (r,))


def _phi(m: int, r: int) -> CatalogEntry:
    if not (m >= 1 and 0 <= r <= m - 1):
        raise ValueError("Phi needs 0 <= r <= m-1")
    return CatalogEntry(
        "Phi", m + 1, comb(m, 2) + comb(r + 1, 2),
        (V([0, m - r, r, 1], c=comb(m - r + 1, 2)),), f"Phi_{{{m},{r}}}", (m, r),
    )


def _sigma_ab(a: int, b: int) -> CatalogEntry:
    if not 1 <= b <= a:
        raise ValueError("SigmaAB needs 1 <= b <= a")
    mu = a * (b + 1) - comb(b, 2)
    d = (a - 1) * mu - (a - b) * b
    c = comb(b + 1, 2) ** 2 + b * (a - b) * (b * (a - b) + comb(b + 1, 2))
    return CatalogEntry(
        "SigmaAB", mu, d, (V([0, b, a - b, comb(b + 1, 2), b * (a - b)], c=c),),
        f"Sigma^{{{a},{b}}}", (a, b),
    )


_PARAMETRIC: dict[str, tuple[int, Callable[..., CatalogEntry], str]] = {
    "Sigma": (1, _sigma_r, "mu=r, d=r(r-1)"),
    "Phi": (2, _phi, "mu=m+1, d=C(m,2)+C(r+1,2)"),
    "SigmaAB": (2, _sigma_ab, "mu=a(b+1)-C(b,2), d=(a-1)mu-(a-b)b"),
}

_BY_NAME = {e.name: e for e in _FIXED}


def entry(name: str, *params: int) -> CatalogEntry:
    if name in _BY_NAME:
        if params:
            raise ValueError(f"{name} takes no parameters")
        return _BY_NAME[name]
    if name in _PARAMETRIC:
        arity, make, _ = _PARAMETRIC[name]
        if len(params) != arity:
            raise ValueError(f"{name} takes {arity} parameter(s), got {len(params)}")
        return make(*params)
    raise CatalogError(f"unknown catalog entry {name!r}")


def get(name: str, *params: int, tilde: bool = False) -> list[RationalGF]:
    """All recorded generating functions for ``name``."""
    return [v.build(tilde) for v in entry(name, *params).variants]


def names() -> list[str]:
    return [e.name for e in _FIXED] + list(_PARAMETRIC)


def fixed_entries() -> list[CatalogEntry]:
    return list(_FIXED)


def list_entries() -> list[tuple[str, int | str, int | str, int]]:
    out: list[tuple[str, int | str, int | str, int]] = [
        (e.name, e.mu, e.d, len(e.variants)) for e in _FIXED
    ]
    for name, (arity, _, desc) in _PARAMETRIC.items():
        mu_desc, d_desc = desc.split(", ")
        out.append((name, mu_desc, d_desc, 1))
    return out


def export_records(entries: Sequence[CatalogEntry] | None = None) -> Iterator[dict]:
    for e in entries if entries is not None else _FIXED:
        for v in e.variants:
            yield {
                "name": e.name,
                "params": list(e.params),
                "dimvec": list(v.dimvec),
                "factor": v.factor_expr(),
                "scalar": str(v.scalar),
                "mu": e.mu,
                "d": e.d,
                "c": v.c,
            }


def export_jsonl(entries: Sequence[CatalogEntry] | None = None) -> str:
    return "".join(json.dumps(r) + "\n" for r in export_records(entries))


def variant_from_record(rec: dict) -> RationalGF:
    """Rebuild a generating function from one export record."""
    dimvec = tuple(rec["dimvec"])
    gf = k_function(dimvec)
    factor = parse_factor(rec["factor"], sum(dimvec))
    gf = multiply_factor(gf, factor, Fraction(rec["scalar"]))
    return gf

