"""Laurent polynomials in ``t**(1/2)`` with integer coefficients.

Exponents are stored doubled, so the key ``k`` stands for ``t**(k/2)``.
"""
from __future__ import annotations

from fractions import Fraction

from .errors import DivisionError


class TCoefficient:
    """An element of ``Z[t**(1/2), t**(-1/2)]``; immutable, zero entries pruned."""

    __slots__ = ("terms", "_hash")

    def __init__(self, terms=None):
        if terms is None:
            terms = {}
        elif isinstance(terms, int):
            terms = {0: terms} if terms else {}
        else:
            terms = {int(k): int(v) for k, v in dict(terms).items() if v}
        self.terms = terms
        self._hash = None

    @classmethod
    def monomial(cls, half_power: int, coeff: int = 1) -> "TCoefficient":
        return cls({half_power: coeff})

    @classmethod
    def _raw(cls, terms: dict) -> "TCoefficient":
        obj = cls.__new__(cls)
        obj.terms = terms
        obj._hash = None
        return obj

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, int):
            other = TCoefficient(other)
        if not isinstance(other, TCoefficient):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def __add__(self, other):
        if isinstance(other, int):
            other = TCoefficient(other)
        out = dict(self.terms)
        for k, v in other.terms.items():
            s = out.get(k, 0) + v
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        return TCoefficient._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return TCoefficient._raw({k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, int):
            other = TCoefficient(other)
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            other = TCoefficient(other)
        out: dict[int, int] = {}
        for k1, v1 in self.terms.items():
            for k2, v2 in other.terms.items():
                k = k1 + k2
                out[k] = out.get(k, 0) + v1 * v2
        return TCoefficient._raw({k: v for k, v in out.items() if v})

    __rmul__ = __mul__

    def shift(self, half_power: int) -> "TCoefficient":
        """Multiply by ``t**(half_power/2)``."""
        if not half_power:
            return self
        return TCoefficient._raw({k + half_power: v for k, v in self.terms.items()})

    def bar(self) -> "TCoefficient":
        """Substitute ``t -> 1/t``."""
        return TCoefficient._raw({-k: v for k, v in self.terms.items()})

    def is_bar_invariant(self) -> bool:
        return all(self.terms.get(-k) == v for k, v in self.terms.items())

    def at_one(self) -> int:
        return sum(self.terms.values())

    def is_unit(self) -> bool:
        return len(self.terms) == 1 and next(iter(self.terms.values())) in (1, -1)

    def exact_div(self, other: "TCoefficient") -> "TCoefficient":
        """Exact quotient ``self / other``; raises :class:`DivisionError` if not exact."""
        if not other.terms:
            raise ZeroDivisionError("division by the zero coefficient")
        if len(other.terms) == 1:
            (k0, v0), = other.terms.items()
            out = {}
            for k, v in self.terms.items():
                q, r = divmod(v, v0)
                if r:
                    raise DivisionError(f"{self} is not divisible by {other}")
                out[k - k0] = q
            return TCoefficient._raw(out)
        rem = dict(self.terms)
        top_d = max(other.terms)
        lead_d = other.terms[top_d]
        floor = min(rem, default=0) - min(other.terms)
        out = {}
        while rem:
            top = max(rem)
            if top - top_d < floor:
                raise DivisionError(f"{self} is not divisible by {other}")
            q, r = divmod(rem[top], lead_d)
            if r:
                raise DivisionError(f"{self} is not divisible by {other}")
            k = top - top_d
            out[k] = q
            for kd, vd in other.terms.items():
                s = rem.get(k + kd, 0) - q * vd
                if s:
                    rem[k + kd] = s
                else:
                    rem.pop(k + kd, None)
        return TCoefficient._raw(out)

    def render(self) -> str:
        """Text form such as ``t^{1/2}``, ``2`` or ``t^{-1} + t``; ascending powers."""
        if not self.terms:
            return "0"
        parts = []
        for k in sorted(self.terms):
            v = self.terms[k]
            power = _tpow(k)
            if not power:
                body = str(abs(v))
            elif abs(v) == 1:
                body = power
            else:
                body = f"{abs(v)} {power}"
            sign = "-" if v < 0 else "+"
            parts.append((sign, body))
        text = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text

    def __repr__(self):
        return f"TCoefficient({self.render()})"

    def __str__(self):
        return self.render()


def _tpow(k: int) -> str:
    if k == 0:
        return ""
    if k == 2:
        return "t"
    e = Fraction(k, 2)
    return f"t^{{{e}}}"


ONE = TCoefficient(1)
