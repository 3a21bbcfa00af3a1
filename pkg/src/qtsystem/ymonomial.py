"""Monomials in ``Y_{i,q^s}``, the ``A``-monomials and the Nakajima order.

Only integer powers ``s`` of ``q`` occur, so a monomial is a finitely
supported map ``(i, s) -> exponent``.  Type A is simply laced, so the
``A``-monomials use shifts ``s - 1`` and ``s + 1``.
"""
from __future__ import annotations


class YMonomial:
    """Immutable Laurent monomial ``prod Y_{i,q^s}**e``."""

    __slots__ = ("exps", "_key")

    def __init__(self, exps=None):
        self.exps = {(int(i), int(s)): int(e) for (i, s), e in (exps or {}).items() if e}
        self._key = frozenset(self.exps.items())

    @classmethod
    def y(cls, i: int, s: int, e: int = 1) -> "YMonomial":
        return cls({(i, s): e})

    def __mul__(self, other: "YMonomial") -> "YMonomial":
        out = dict(self.exps)
        for k, e in other.exps.items():
            out[k] = out.get(k, 0) + e
        return YMonomial(out)

    def __pow__(self, k: int) -> "YMonomial":
        return YMonomial({key: e * k for key, e in self.exps.items()})

    def inverse(self) -> "YMonomial":
        return self ** -1

    def __truediv__(self, other: "YMonomial") -> "YMonomial":
        return self * other.inverse()

    def __eq__(self, other):
        return isinstance(other, YMonomial) and self._key == other._key

    def __hash__(self):
        return hash(self._key)

    def __bool__(self):
        # the unit monomial is falsy, matching an empty exponent map
        return bool(self.exps)

    def is_dominant(self) -> bool:
        return all(e >= 0 for e in self.exps.values())

    def weight(self, n: int) -> tuple[int, ...]:
        """Coordinates of the weight on the fundamental weights."""
        w = [0] * n
        for (i, _), e in self.exps.items():
            w[i - 1] += e
        return tuple(w)

    def render(self) -> str:
        if not self.exps:
            return "1"
        parts = []
        for (i, s), e in sorted(self.exps.items()):
            name = f"Y_{{{i},{s}}}"
            parts.append(name if e == 1 else f"{name}^{{{e}}}")
        return " ".join(parts)

    def __repr__(self):
        return f"YMonomial({self.render()})"

    __str__ = render

    def to_json(self) -> dict:
        return {"terms": {f"{i},{s}": e for (i, s), e in sorted(self.exps.items())}}

    @classmethod
    def from_json(cls, data: dict) -> "YMonomial":
        out = {}
        for key, e in data["terms"].items():
            i, s = key.split(",")
            out[(int(i), int(s))] = int(e)
        return cls(out)


ONE = YMonomial()


def is_dominant(m: YMonomial) -> bool:
    return m.is_dominant()


def weight(m: YMonomial, n: int) -> tuple[int, ...]:
    return m.weight(n)


def kr_monomial(i: int, alpha: int, beta: int) -> YMonomial:
    """``Y_{i,q^alpha} Y_{i,q^(alpha+2)} ... `` with ``beta`` factors; ``1`` when ``beta <= 0``."""
    return YMonomial({(i, alpha + 2 * k): 1 for k in range(max(beta, 0))})


def a_monomial(i: int, s: int, n: int) -> YMonomial:
    """``A_{i,q^s} = Y_{i,s-1} Y_{i,s+1} / prod_{j ~ i} Y_{j,s}``."""
    if not 1 <= i <= n:
        raise ValueError(f"node {i} is not in [1, {n}]")
    exps = {(i, s - 1): 1, (i, s + 1): 1}
    for j in (i - 1, i + 1):
        if 1 <= j <= n:
            exps[(j, s)] = -1
    return YMonomial(exps)


def a_decompose(m: YMonomial, n: int) -> dict[tuple[int, int], int] | None:
    """Exponents ``c`` with ``m = prod A_{i,s}**c``, or ``None`` if ``m`` is not such a product.

    ``Y_{i,s+1}`` is the factor of ``A_{i,s}`` with the largest shift, so the
    top shift of the remainder determines the next ``A`` exactly.
    """
    rem = m
    out: dict[tuple[int, int], int] = {}
    if not rem.exps:
        return out
    floor = min(s for _, s in rem.exps) + 1
    while rem.exps:
        top = max(s for _, s in rem.exps)
        if top - 1 < floor:
            return None
        for (i, s), e in list(rem.exps.items()):
            if s != top:
                continue
            if not 1 <= i <= n:
                return None
            out[(i, top - 1)] = out.get((i, top - 1), 0) + e
            rem = rem / a_monomial(i, top - 1, n) ** e
    return {k: c for k, c in out.items() if c}


def nakajima_below(lower: YMonomial, upper: YMonomial, n: int) -> bool:
    """Whether ``upper / lower`` is a product of ``A``-monomials with nonnegative exponents."""
    dec = a_decompose(upper / lower, n)
    return dec is not None and all(c >= 0 for c in dec.values())


def torus_to_y(exp, n: int, ell: int) -> YMonomial:
    """Image of a torus exponent vector under ``X_{k,m} -> X_{k,k+2m}^(ell+1-m)``.

    ``exp`` follows the torus variable order ``(b, a)``; ``X_{k,0} = F_k``.
    """
    out = ONE
    variables = [(a, b) for b in range(ell + 1) for a in range(1, n + 1)]
    for (k, mm), e in zip(variables, exp):
        if e:
            out = out * kr_monomial(k, k + 2 * mm, ell + 1 - mm) ** e
    return out
