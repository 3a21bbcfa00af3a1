"""Highest monomials of the KR and evaluation modules attached to T-system cells.

Covers the dominant monomials of the horizontal T-system products and the
piecewise assignment of modules to lattice cells, at the level of
monomial combinatorics.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import sympy

from .errors import DominanceError, OverlapError
from .tsystem import SystemConfig, boundary_cell
from .ymonomial import (
    ONE,
    YMonomial,
    a_decompose,
    a_monomial,
    is_dominant,
    kr_monomial,
    nakajima_below,
    torus_to_y,
    weight,
)

__all__ = [
    "DominantFamily",
    "LatticeMapReport",
    "ONE",
    "YMonomial",
    "a_decompose",
    "a_monomial",
    "coefficient_highest",
    "eval_highest",
    "independence_check",
    "is_dominant",
    "kr_beta_highest",
    "kr_monomial",
    "lattice_cases",
    "lattice_highest",
    "lattice_map",
    "nakajima_below",
    "thm41_dominant_family",
    "torus_to_y",
    "weight",
]


def eval_highest(i: int, j: int, m: int, n: int, ell: int) -> YMonomial:
    """Highest monomial ``X_{i,i}^m X_{j,j+2m}^(ell+1-m)`` of the evaluation module ``alpha(i,j)^m``.

    Nodes ``0`` and ``n + 1`` contribute unit factors.
    """
    if not (0 <= i <= j <= n + 1 and 0 <= m <= ell + 1):
        raise ValueError(f"invalid evaluation module ({i},{j})^{m} for n={n}, ell={ell}")
    out = ONE
    if 1 <= i <= n:
        out = out * kr_monomial(i, i, m)
    if 1 <= j <= n:
        out = out * kr_monomial(j, j + 2 * m, ell + 1 - m)
    return out


def kr_beta_highest(m: int, p: int, i: int, n: int, ell: int) -> YMonomial:
    """Highest monomial ``X_{i,i+2m}^(p-m+1)`` of the KR module ``beta(m,p)^i``; ``1`` for ``i in {0, n+1}``."""
    if not 0 <= i <= n + 1:
        raise ValueError(f"node {i} is not in [0, {n + 1}]")
    if i in (0, n + 1):
        return ONE
    return kr_monomial(i, i + 2 * m, p - m + 1)


def coefficient_highest(r: int, n: int, ell: int) -> YMonomial:
    """``F_r`` as the monomial ``X_{r,r}^(ell+1)`` (unit for ``r in {0, n+1}``)."""
    if r in (0, n + 1):
        return ONE
    return kr_monomial(r, r, ell + 1)


# orthogonal relation families --------------------------------------------

@dataclass
class DominantFamily:
    i: int
    j: int
    m: int
    monomials: list
    odd: list = field(default_factory=list)
    even: list = field(default_factory=list)
    first_rhs: YMonomial = ONE
    second_rhs: YMonomial = ONE

    def checks(self, n: int) -> dict[str, bool]:
        top = self.monomials[0]
        return {
            "count": len(self.monomials) == 2 * self.m + 1,
            "distinct": len(set(self.monomials)) == len(self.monomials),
            "dominant": all(x.is_dominant() for x in self.monomials),
            "split": (len(self.odd), len(self.even)) == (self.m + 1, self.m),
            "first_rhs": bool(self.odd) and self.odd[0] == self.first_rhs,
            "second_rhs": bool(self.even) and self.even[0] == self.second_rhs,
            "below_first": all(nakajima_below(x, self.first_rhs, n) for x in self.odd),
            "below_second": all(nakajima_below(x, self.second_rhs, n) for x in self.even),
            "below_top": all(nakajima_below(x, top, n) for x in self.monomials),
        }


def thm41_dominant_family(i: int, j: int, m: int, n: int, ell: int) -> DominantFamily:
    """Dominant monomials of ``alpha(i,j)^m * alpha(i+1,j+1)^m``, in order ``M_1, ..., M_{2m+1}``.

    ``M_1`` is the product of the two highest monomials; ``M_2`` removes the
    chain ``A_{i+1,i+2m} ... A_{j,j+2m-1}``; after that the even and odd
    members alternately remove ``A_{i+1,.}`` and ``A_{i,.}``.  Odd members
    are the dominant monomials of ``alpha(i,j+1)^m * alpha(i+1,j)^m`` and even
    members those of ``alpha(i,j)^(m+1) * alpha(i+1,j+1)^(m-1)``.

    For ``i = 0`` there is no node ``0``, so only ``M_1`` and ``M_2`` exist.
    """
    if not (0 <= i < j <= n and 1 <= m <= ell):
        raise ValueError(f"need 0 <= i < j <= n and 1 <= m <= ell, got i={i}, j={j}, m={m}")
    a = lambda node, s: a_monomial(node, s, n)  # noqa: E731
    m1 = eval_highest(i, j, m, n, ell) * eval_highest(i + 1, j + 1, m, n, ell)
    chain = ONE
    for k in range(i + 1, j + 1):
        chain = chain * a(k, k + 2 * m - 1)
    m2 = m1 / chain
    mons = [m1, m2]
    if i >= 1:
        even = m2
        for r in range(1, m + 1):
            if r >= 2:
                even = even / (a(i, i + 2 * m - 2 * r + 3) * a(i + 1, i + 2 * m - 2 * r + 2))
                mons.append(even)
            mons.append(even / a(i, i + 2 * m - 2 * r + 1))
    for idx, x in enumerate(mons, start=1):
        if not x.is_dominant():
            raise DominanceError(f"M_{idx} = {x} for (i,j,m)=({i},{j},{m}) is not dominant")
    return DominantFamily(
        i, j, m, mons,
        odd=mons[0::2],
        even=mons[1::2],
        first_rhs=eval_highest(i, j + 1, m, n, ell) * eval_highest(i + 1, j, m, n, ell),
        second_rhs=eval_highest(i, j, m + 1, n, ell) * eval_highest(i + 1, j + 1, m - 1, n, ell),
    )


# lattice assignment -------------------------------------------------------

def lattice_cases(k: int, m: int, u: int, n: int, ell: int) -> list[tuple[int, YMonomial]]:
    """Every case of the piecewise module assignment that applies to ``(k, m, u)``.

    ``u`` is reduced by the period so that ``u + 2 - k - m`` lies in
    ``[0, period)``; at the seam ``0 ~ period`` both ends are evaluated.
    """
    if not (0 <= k <= n + 1 and 0 <= m <= ell + 1):
        raise ValueError(f"({k},{m}) is outside [0,{n + 1}] x [0,{ell + 1}]")
    if (k + m + u) % 2:
        raise ValueError(f"({k},{m},{u}) is off the parity lattice")
    period = 2 * (n + ell + 2)
    w0 = (u + 2 - k - m) % period
    base = k + m - 2 + w0
    cands = [base, base + period] if w0 == 0 else [base]
    out = []
    for uu in cands:
        if 0 <= uu + 2 - k - m <= 2 * (n + 1 - k):
            out.append((1, eval_highest((uu + 2 - k - m) // 2, (uu + 2 + k - m) // 2, m, n, ell)))
        if m <= uu - 2 * n + k <= 2 * ell - m + 2:
            out.append((2, kr_beta_highest(
                (uu - 2 * n + k - m) // 2, (uu - 2 * n - 2 + k + m) // 2, n + 1 - k, n, ell)))
        if 0 <= uu - 2 * n - 2 * ell - 2 + m + k <= 2 * k:
            out.append((3, eval_highest(
                (uu - 2 * n - 2 * ell + k + m - 2) // 2, (uu - k - 2 * ell + m) // 2, ell + 1 - m, n, ell)))
        if -m <= uu - 2 * ell - 2 * n - k - 2 <= m:
            out.append((4, kr_beta_highest(
                (uu - 2 - 2 * n - k + m - 2 * ell) // 2, (uu - 2 * n - 2 - k - m) // 2, k, n, ell)))
    return out


def lattice_highest(k: int, m: int, u: int, n: int, ell: int) -> YMonomial:
    """Highest monomial of the module attached to cell ``(k, m, u)``; all applicable cases must agree."""
    cases = lattice_cases(k, m, u, n, ell)
    if not cases:
        raise OverlapError(f"no case applies to ({k},{m},{u})")
    first = cases[0][1]
    for case, mono in cases[1:]:
        if mono != first:
            raise OverlapError(
                f"({k},{m},{u}): case {cases[0][0]} gives {first} but case {case} gives {mono}"
            )
    return first


@dataclass
class LatticeMapReport:
    n: int
    ell: int
    entries: list = field(default_factory=list)
    overlaps: int = 0
    failures: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures


def lattice_map(n: int, ell: int, include_corners: bool = False) -> LatticeMapReport:
    """Assignment over one period with seam, half-period, seed and boundary checks."""
    rep = LatticeMapReport(n, ell)
    config = SystemConfig(n, ell, quantum=False)
    period = config.period
    for k in range(n + 2):
        for m in range(ell + 2):
            corner = k in (0, n + 1) and m in (0, ell + 1)
            if corner and not include_corners:
                continue
            start = k + m - 2
            for u in range(start, start + period, 2):
                cases = lattice_cases(k, m, u, n, ell)
                if len(cases) > 1:
                    rep.overlaps += 1
                try:
                    mono = lattice_highest(k, m, u, n, ell)
                except OverlapError as exc:
                    rep.failures.append(("overlap", (k, m, u), str(exc)))
                    continue
                rep.entries.append(((k, m, u), [c for c, _ in cases], mono))
                try:
                    partner = lattice_highest(n + 1 - k, ell + 1 - m, u + n + ell + 2, n, ell)
                except OverlapError as exc:
                    rep.failures.append(("overlap", (n + 1 - k, ell + 1 - m, u + n + ell + 2), str(exc)))
                    continue
                if partner != mono:
                    rep.failures.append(("half-period", (k, m, u), f"{mono} != {partner}"))
                if u == start and 1 <= k <= n and 0 <= m <= ell:
                    if mono != kr_monomial(k, k + 2 * m, ell + 1 - m):
                        rep.failures.append(("seed", (k, m, u), str(mono)))
                if config.is_boundary(k, m):
                    val = boundary_cell(config, k, m, u)
                    if torus_to_y(val.leading(), n, ell) != mono:
                        rep.failures.append(("boundary", (k, m, u), f"{mono} vs {val}"))
    return rep


def independence_check(n: int, ell: int) -> bool:
    """The monomials ``X_{k,k+2m}^(ell+1-m)``, ``(k, m) in [1,n] x [0,ell]``, are algebraically independent."""
    mons = [kr_monomial(k, k + 2 * m, ell + 1 - m) for k in range(1, n + 1) for m in range(ell + 1)]
    if len(set(mons)) != len(mons):
        return False
    keys = sorted({key for x in mons for key in x.exps})
    mat = sympy.Matrix([[x.exps.get(key, 0) for key in keys] for x in mons])
    return mat.rank() == len(mons)
