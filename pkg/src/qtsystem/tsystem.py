"""Quantum T-system of type A_n x A_ell with spiral boundary conditions.

Cells ``(a, b, u)`` live on the parity lattice ``a + b + u`` even.  The
interior is ``1 <= a <= n``, ``1 <= b <= ell``; the boundary rows ``a = 0``,
``a = n + 1``, ``b = 0`` and ``b = ell + 1`` carry a coefficient ``F_r`` or
``1`` depending on ``u`` modulo the period ``2 (n + ell + 2)``.

Every interior value is obtained from

    T(a,b,u-1) * T(a,b,u+1) = t**alpha T(a+1,b,u) * T(a-1,b,u)
                            + t**beta  T(a,b+1,u) * T(a,b-1,u)

by exact left division, with ``alpha`` and ``beta`` fixed so that the
highest monomial of the quotient is bar-invariant.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import DivisionError, WindowError
from .torus import QuantumTorus, TorusElement
from .ymonomial import nakajima_below, torus_to_y

log = logging.getLogger(__name__)

SIDES = ("a=0", "a=n+1", "b=0", "b=ell+1")
BOUNDARIES = ("spiral", "unit")


@dataclass(frozen=True)
class SystemConfig:
    n: int
    ell: int
    quantum: bool = True
    boundary: str = "spiral"

    def __post_init__(self):
        if self.n < 1 or self.ell < 1:
            raise ValueError(f"need n >= 1 and ell >= 1, got n={self.n}, ell={self.ell}")
        if self.boundary not in BOUNDARIES:
            raise ValueError(f"boundary must be one of {BOUNDARIES}, got {self.boundary!r}")

    @property
    def period(self) -> int:
        return 2 * (self.n + self.ell + 2)

    @property
    def half_shift(self) -> int:
        return self.n + self.ell + 2

    def interior(self):
        return [(a, b) for a in range(1, self.n + 1) for b in range(1, self.ell + 1)]

    def is_interior(self, a: int, b: int) -> bool:
        return 1 <= a <= self.n and 1 <= b <= self.ell

    def is_boundary(self, a: int, b: int) -> bool:
        n, ell = self.n, self.ell
        if a in (0, n + 1):
            return 1 <= b <= ell
        if b in (0, ell + 1):
            return 1 <= a <= n
        return False

    def make_torus(self) -> QuantumTorus:
        return QuantumTorus(self.n, self.ell, quantum=self.quantum)


# boundary conditions ----------------------------------------------------

def _side_cases(n: int, ell: int, side: str, index: int, u: int):
    """Window coordinate and the two case windows ``(lo, hi, r_of_w)`` of a side.

    ``r_of_w`` is ``None`` for the constant-one case.
    """
    if side == "a=n+1":
        w = u + index
        cases = ((-n - 3, n - 1, lambda w: (w + n + 3) // 2), (n - 1, 2 * ell + n + 1, None))
    elif side == "a=0":
        w = u - index
        cases = ((-2, 2 * n, lambda w: (w + 2) // 2), (2 * n, 2 * n + 2 * ell + 2, None))
    elif side == "b=ell+1":
        w = u - index
        cases = (
            (ell - 1, 2 * n + ell + 1, lambda w: (w - ell + 1) // 2),
            (2 * n + ell + 1, 2 * n + 3 * ell + 3, None),
        )
    elif side == "b=0":
        w = u + index
        cases = ((-2, 2 * n, lambda w: (w + 2) // 2), (2 * n, 2 * n + 2 * ell + 2, None))
    else:
        raise ValueError(f"unknown side {side!r}; expected one of {SIDES}")
    return w, cases


def boundary_index(n: int, ell: int, side: str, index: int, u: int) -> int:
    """Index ``r`` of the coefficient ``F_r`` on a boundary cell; ``0`` means the value ``1``.

    Every case window containing ``u`` (modulo the period) is evaluated and
    the results must agree.
    """
    period = 2 * (n + ell + 2)
    w, cases = _side_cases(n, ell, side, index, u)
    if (w - cases[0][0]) % 2:
        raise ValueError(f"cell on side {side} with index {index} at u={u} is off the parity lattice")
    lo = cases[0][0]
    hi = cases[1][1]
    w0 = lo + (w - lo) % period
    found = set()
    for cand in (w0, w0 + period):
        if cand > hi:
            continue
        for clo, chi, fn in cases:
            if clo <= cand <= chi:
                r = 0 if fn is None else fn(cand)
                found.add(0 if r in (0, n + 1) else r)
    if not found:
        raise WindowError(f"side {side}, index {index}, u={u}: reduced {w0} is in no case window")
    if len(found) > 1:
        raise WindowError(f"side {side}, index {index}, u={u}: seam values disagree {sorted(found)}")
    return found.pop()


def _side_of(config: SystemConfig, a: int, b: int) -> tuple[str, int]:
    if a == 0:
        return "a=0", b
    if a == config.n + 1:
        return "a=n+1", b
    if b == 0:
        return "b=0", a
    if b == config.ell + 1:
        return "b=ell+1", a
    raise ValueError(f"({a},{b}) is not a boundary cell")


def boundary_value(config: SystemConfig, side: str, index: int, u: int, torus: QuantumTorus | None = None) -> TorusElement:
    """Value of a boundary cell: ``F_r`` or ``1`` (always ``1`` for the unit boundary)."""
    torus = torus or config.make_torus()
    r = boundary_index(config.n, config.ell, side, index, u)
    if config.boundary == "unit":
        return torus.one()
    return torus.coefficient_var(r)


def boundary_cell(config: SystemConfig, a: int, b: int, u: int, torus: QuantumTorus | None = None) -> TorusElement:
    side, index = _side_of(config, a, b)
    return boundary_value(config, side, index, u, torus)


def initial_value(config: SystemConfig, a: int, b: int, torus: QuantumTorus | None = None) -> tuple[int, TorusElement]:
    """Seed cell ``(u, X_{a,b})`` with ``u = a + b - 2``; ``b = 0`` gives ``F_a`` at ``u = a - 2``."""
    torus = torus or config.make_torus()
    if not (1 <= a <= config.n and 0 <= b <= config.ell):
        raise ValueError(f"({a},{b}) is not a seed cell")
    return a + b - 2, torus.gen(a, b)


# phases -----------------------------------------------------------------

def determine_phases(torus: QuantumTorus, lead_prev, lead_up, lead_down, lead_right, lead_left) -> tuple[int, int]:
    """Doubled powers ``(2 alpha, 2 beta)`` making the quotient's leading terms bar-invariant.

    ``lead_prev`` is the tracked leading exponent of ``T(a,b,u-1)``; the next
    four are those of ``T(a+1,b,u)``, ``T(a-1,b,u)``, ``T(a,b+1,u)`` and
    ``T(a,b-1,u)``.  The quotient's term at ``up + down - prev`` comes only
    from ``m_{-prev} * t**alpha m_up * m_down``, whose coefficient must be 1.
    """
    if not torus.quantum:
        return 0, 0
    neg_prev = tuple(-x for x in lead_prev)

    def phase(x, y):
        ph, s = torus.monomial_mul(x, y)
        return ph + torus.pairing(neg_prev, s)

    return -phase(lead_up, lead_down), -phase(lead_right, lead_left)


@dataclass(frozen=True)
class Phase:
    """Powers used at one interior step, stored doubled."""

    alpha2: int
    beta2: int
    path: str = "deterministic"

    @property
    def alpha(self) -> Fraction:
        return Fraction(self.alpha2, 2)

    @property
    def beta(self) -> Fraction:
        return Fraction(self.beta2, 2)


# evolution --------------------------------------------------------------

@dataclass
class OrbitTable:
    """Computed interior values ``T(a,b,u)`` with their phases and tracked leading exponents."""

    config: SystemConfig
    torus: QuantumTorus
    u_max: int
    values: dict = field(default_factory=dict)
    phases: dict = field(default_factory=dict)
    leads: dict = field(default_factory=dict)

    def value(self, a: int, b: int, u: int) -> TorusElement:
        """Value of any cell; boundary cells are computed on demand."""
        if self.config.is_interior(a, b):
            return self.values[(a, b, u)]
        return boundary_cell(self.config, a, b, u, self.torus)

    def lead(self, a: int, b: int, u: int):
        if self.config.is_interior(a, b):
            return self.leads[(a, b, u)]
        return max(boundary_cell(self.config, a, b, u, self.torus).terms)

    def cells(self):
        return sorted(self.values, key=lambda k: (k[2], k[0], k[1]))

    def __contains__(self, key):
        return key in self.values


def select_lead(config: SystemConfig, value: TorusElement, vert_lead, horiz_lead):
    """Leading exponent of a new value: the Nakajima-higher of the two candidate quotients.

    ``vert_lead`` and ``horiz_lead`` are ``up + down - prev`` and
    ``right + left - prev``.  Which product carries the highest monomial
    changes along the orbit, so both are compared through the map to
    ``Y``-monomials.  Incomparable or equal images fall back to the candidate
    that occurs in ``value``, preferring the vertical one.
    """
    if vert_lead == horiz_lead:
        return vert_lead
    n, ell = config.n, config.ell
    yv, yh = torus_to_y(vert_lead, n, ell), torus_to_y(horiz_lead, n, ell)
    if yv != yh:
        if nakajima_below(yh, yv, n):
            return vert_lead
        if nakajima_below(yv, yh, n):
            return horiz_lead
    if vert_lead not in value.terms and horiz_lead in value.terms:
        return horiz_lead
    return vert_lead


def _step(torus, config, prev, up, down, right, left, leads):
    """One interior step; returns ``(value, Phase)``."""
    vert = up * down
    horiz = right * left
    a2, b2 = determine_phases(torus, *leads)
    try:
        q = torus.left_divide_exact(prev, vert.shift(a2) + horiz.shift(b2))
        if q.is_bar_invariant():
            return q, Phase(a2, b2)
    except DivisionError:
        pass
    return _search_phases(torus, config, prev, vert, horiz)


def _search_phases(torus, config, prev, vert, horiz):
    """All ``(alpha, beta)`` with ``|alpha|, |beta| <= period`` giving a bar-invariant quotient.

    Divisibility only depends on ``alpha - beta`` since ``t`` is central, and
    for a fixed difference at most one overall shift is bar-invariant, so a
    single division per difference covers the whole box.
    """
    bound = 2 * config.period
    found = []
    for diff in range(-2 * bound, 2 * bound + 1):
        try:
            q0 = torus.left_divide_exact(prev, vert.shift(diff) + horiz)
        except DivisionError:
            continue
        if not q0.terms:
            continue
        c = next(iter(q0.terms.values()))
        b2 = -(max(c.terms) + min(c.terms))
        a2 = b2 + diff
        if abs(a2) > bound or abs(b2) > bound:
            continue
        q = q0.shift(b2)
        if q.is_bar_invariant():
            found.append((q, Phase(a2, b2, path="search")))
    if len(found) != 1:
        raise DivisionError(f"phase search found {len(found)} admissible (alpha, beta) pairs")
    return found[0]


def evolve(config: SystemConfig, u_max: int, keep_all: bool = False) -> OrbitTable:
    """Evolve the system forward from the seeds ``X_{a,b}`` at ``u = a + b - 2`` up to ``u_max``.

    Without ``keep_all`` only the last period of values (plus the trailing
    slices needed for the recursion) is retained.
    """
    torus = config.make_torus()
    orbit = OrbitTable(config, torus, u_max)
    values, leads = orbit.values, orbit.leads
    for a, b in config.interior():
        u0, x = initial_value(config, a, b, torus)
        if u0 <= u_max:
            values[(a, b, u0)] = x
            leads[(a, b, u0)] = x.leading()

    def cell(a, b, u):
        if config.is_interior(a, b):
            return values[(a, b, u)], leads[(a, b, u)]
        v = boundary_cell(config, a, b, u, torus)
        return v, v.leading()

    keep_from = None if keep_all else u_max - config.period + 1
    for u in range(0, u_max):
        for a, b in config.interior():
            if (a + b + u + 1) % 2 or u + 1 < a + b:
                continue
            prev, lp = values[(a, b, u - 1)], leads[(a, b, u - 1)]
            up, lu = cell(a + 1, b, u)
            down, ld = cell(a - 1, b, u)
            right, lr = cell(a, b + 1, u)
            left, ll = cell(a, b - 1, u)
            try:
                q, ph = _step(torus, config, prev, up, down, right, left, (lp, lu, ld, lr, ll))
            except DivisionError as exc:
                raise DivisionError(f"cell T_{{{a},{b}}}({u + 1}): {exc}") from exc
            if config.quantum and not q.is_bar_invariant():
                raise AssertionError(f"T_{{{a},{b}}}({u + 1}) is not bar-invariant")
            if ph.path != "deterministic":
                log.warning("T_{%d,%d}(%d) needed the phase search", a, b, u + 1)
            values[(a, b, u + 1)] = q
            orbit.phases[(a, b, u + 1)] = ph
            leads[(a, b, u + 1)] = select_lead(
                config,
                q,
                tuple(x + y - z for x, y, z in zip(lu, ld, lp)),
                tuple(x + y - z for x, y, z in zip(lr, ll, lp)),
            )
        if keep_from is not None:
            # the recursion at u+1 reads slices u and u-1
            drop = [k for k in values if k[2] < min(u - 1, keep_from)]
            for k in drop:
                del values[k]
                leads.pop(k, None)
                orbit.phases.pop(k, None)
    return orbit


# checks -----------------------------------------------------------------

@dataclass
class CheckReport:
    name: str
    checked: int = 0
    violations: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.violations

    def summary(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        line = f"{status} {self.name}: {self.checked} checked, {len(self.violations)} violations"
        if self.violations:
            line += f"; first: {self.violations[0]}"
        return line


def check_half_periodicity(orbit: OrbitTable) -> list[CheckReport]:
    """Half-period symmetry and full periodicity on every stored pair of cells."""
    config = orbit.config
    n, ell = config.n, config.ell
    half = CheckReport("half-periodicity")
    full = CheckReport("periodicity")
    for (a, b, u), val in orbit.values.items():
        partner = (n + 1 - a, ell + 1 - b, u + config.half_shift)
        if partner in orbit.values:
            half.checked += 1
            if orbit.values[partner] != val:
                half.violations.append(((a, b, u), partner))
        later = (a, b, u + config.period)
        if later in orbit.values:
            full.checked += 1
            if orbit.values[later] != val:
                full.violations.append(((a, b, u), later))
    return [half, full]


def check_coverage(orbit: OrbitTable) -> CheckReport:
    """Both periodicity comparisons are available for every cell of one full period."""
    config = orbit.config
    rep = CheckReport("coverage")
    for a, b in config.interior():
        s = a + b - 2
        for u in range(s, s + config.period, 2):
            rep.checked += 1
            need = [
                (a, b, u),
                (a, b, u + config.period),
                (config.n + 1 - a, config.ell + 1 - b, u + config.half_shift),
            ]
            missing = [k for k in need if k not in orbit.values]
            if missing:
                rep.violations.append(missing[0])
    return rep


def check_positivity(orbit: OrbitTable) -> CheckReport:
    rep = CheckReport("positivity")
    for key, val in orbit.values.items():
        rep.checked += 1
        if any(v < 0 for c in val.terms.values() for v in c.terms.values()):
            rep.violations.append(key)
    return rep


def check_bar_invariance(orbit: OrbitTable) -> CheckReport:
    rep = CheckReport("bar-invariance")
    for key, val in orbit.values.items():
        rep.checked += 1
        if not val.is_bar_invariant():
            rep.violations.append(key)
    return rep


def check_specialization(quantum: OrbitTable, classical: OrbitTable) -> CheckReport:
    """``t = 1`` image of every quantum value equals the classical value."""
    rep = CheckReport("t=1 specialization")
    for key, val in quantum.values.items():
        if key not in classical.values:
            continue
        rep.checked += 1
        if quantum.torus.specialize_t_one(val) != classical.values[key]:
            rep.violations.append(key)
    return rep


def check_phase_paths(orbit: OrbitTable) -> CheckReport:
    rep = CheckReport("deterministic phases")
    for key, ph in orbit.phases.items():
        rep.checked += 1
        if ph.path != "deterministic":
            rep.violations.append(key)
    return rep


def verification_horizon(config: SystemConfig) -> int:
    """Largest ``u`` needed so every cell of one period can be compared a full period later."""
    return config.n + config.ell - 2 + 2 * config.period


def verify(config: SystemConfig) -> tuple[OrbitTable, list[CheckReport]]:
    """Evolve over two periods and run every check; the classical comparison runs in quantum mode."""
    orbit = evolve(config, verification_horizon(config), keep_all=True)
    reports = check_half_periodicity(orbit) + [check_coverage(orbit), check_positivity(orbit)]
    if config.quantum:
        reports.append(check_bar_invariance(orbit))
        classical = evolve(
            SystemConfig(config.n, config.ell, quantum=False, boundary=config.boundary),
            orbit.u_max,
            keep_all=True,
        )
        reports.append(check_specialization(orbit, classical))
    reports.append(check_phase_paths(orbit))
    return orbit, reports


# relations --------------------------------------------------------------

@dataclass(frozen=True)
class Relation:
    """``T(a,b,u-1) * T(a,b,u+1) = t**alpha up * down + t**beta right * left``."""

    a: int
    b: int
    u: int
    phase: Phase
    vertical: tuple
    horizontal: tuple


def _factor_label(orbit: OrbitTable, a: int, b: int, u: int) -> str | None:
    config = orbit.config
    if config.is_interior(a, b):
        return f"T_{{{a},{b}}}({u})"
    val = boundary_cell(config, a, b, u, orbit.torus)
    if val == orbit.torus.one():
        return None
    return orbit.torus.render_monomial(val.leading())


def relations(orbit: OrbitTable, u_lo: int | None = None, u_hi: int | None = None) -> list[Relation]:
    """Relations whose left factor ``T(a,b,u-1)`` has ``u_lo <= u - 1 <= u_hi``.

    Defaults cover one period starting at each seed.
    """
    config = orbit.config
    out = []
    for (a, b, u1), ph in orbit.phases.items():
        u = u1 - 1
        lo = a + b - 2 if u_lo is None else u_lo
        hi = a + b - 2 + config.period - 2 if u_hi is None else u_hi
        if not lo <= u - 1 <= hi:
            continue
        vertical = tuple(f for f in (_factor_label(orbit, a + 1, b, u), _factor_label(orbit, a - 1, b, u)) if f)
        horizontal = tuple(f for f in (_factor_label(orbit, a, b + 1, u), _factor_label(orbit, a, b - 1, u)) if f)
        out.append(Relation(a, b, u, ph, vertical, horizontal))
    out.sort(key=lambda r: (r.u, r.a, r.b))
    return out


def _term(half: int, factors: tuple) -> str:
    body = " * ".join(factors) if factors else "1"
    if half == 0:
        return body
    power = "t" if half == 2 else f"t^{{{Fraction(half, 2)}}}"
    return power if not factors else f"{power} {body}"


def render_relation(rel: Relation) -> str:
    lhs = f"T_{{{rel.a},{rel.b}}}({rel.u - 1}) * T_{{{rel.a},{rel.b}}}({rel.u + 1})"
    rhs = f"{_term(rel.phase.alpha2, rel.vertical)} + {_term(rel.phase.beta2, rel.horizontal)}"
    return f"{lhs} = {rhs}"


# serialization ----------------------------------------------------------

def orbit_to_json(orbit: OrbitTable) -> dict:
    c = orbit.config
    return {
        "n": c.n,
        "ell": c.ell,
        "quantum": c.quantum,
        "boundary": c.boundary,
        "u_max": orbit.u_max,
        "cells": [
            {
                "a": a,
                "b": b,
                "u": u,
                "value": orbit.values[(a, b, u)].to_json(),
                "lead": list(orbit.leads[(a, b, u)]),
                **(
                    {
                        "alpha": str(orbit.phases[(a, b, u)].alpha),
                        "beta": str(orbit.phases[(a, b, u)].beta),
                        "path": orbit.phases[(a, b, u)].path,
                    }
                    if (a, b, u) in orbit.phases
                    else {}
                ),
            }
            for a, b, u in orbit.cells()
        ],
    }


def orbit_from_json(data: dict) -> OrbitTable:
    config = SystemConfig(data["n"], data["ell"], bool(data["quantum"]), data["boundary"])
    torus = config.make_torus()
    orbit = OrbitTable(config, torus, int(data["u_max"]))
    for cell in data["cells"]:
        key = (int(cell["a"]), int(cell["b"]), int(cell["u"]))
        orbit.values[key] = TorusElement.from_json(torus, cell["value"])
        orbit.leads[key] = tuple(int(x) for x in cell["lead"])
        if "alpha" in cell:
            alpha, beta = Fraction(cell["alpha"]), Fraction(cell["beta"])
            orbit.phases[key] = Phase(int(2 * alpha), int(2 * beta), cell["path"])
    return orbit
