"""Inverse quantized Cartan matrix of type A_n and the quasi-commutation pairing.

The quantized Cartan matrix has ``z + 1/z`` on the diagonal and ``-1`` on
the two off-diagonals.  Its inverse is expanded as a power series in ``z``
with exact integer coefficients; the pairing used by the quantum torus is
built from sums of those coefficients.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .errors import TruncationError


def default_pmax(n: int, ell: int) -> int:
    """Truncation order large enough for every pairing of an ``A_n x A_ell`` system."""
    return 4 * (n + ell + 2)


@dataclass(frozen=True)
class CartanSeries:
    """Truncated expansion of the inverse quantized Cartan matrix.

    ``coeffs[p][a-1][c-1]`` is the coefficient of ``z**p`` in entry ``(a, c)``.
    """

    n: int
    p_max: int
    coeffs: tuple = field(repr=False)

    def __call__(self, a: int, c: int, p: int) -> int:
        if p <= 0:
            # also covers negative arguments: the expansion starts at z**1
            return 0
        if p > self.p_max:
            raise TruncationError(
                f"coefficient z^{p} requested but series truncated at {self.p_max}"
            )
        return self.coeffs[p][a - 1][c - 1]

    def entry(self, a: int, c: int) -> dict[int, int]:
        """Nonzero coefficients of entry ``(a, c)`` as ``{p: coeff}``."""
        return {
            p: self.coeffs[p][a - 1][c - 1]
            for p in range(self.p_max + 1)
            if self.coeffs[p][a - 1][c - 1]
        }

    def to_nested(self) -> dict[str, dict[str, dict[str, int]]]:
        """Nested ``{"a": {"c": {"p": coeff}}}`` mapping (nonzero entries only)."""
        return {
            str(a): {
                str(c): {str(p): v for p, v in self.entry(a, c).items()}
                for c in range(1, self.n + 1)
            }
            for a in range(1, self.n + 1)
        }

    def product_check(self) -> list[tuple[int, int, int, int]]:
        """Coefficients of ``C(z) @ inverse`` that differ from the identity.

        Returns ``(a, c, k, value)`` for every violation at orders
        ``0 <= k < p_max``; an empty list means the check passes.
        """
        bad = []
        n = self.n
        for k in range(self.p_max):
            for a in range(1, n + 1):
                for c in range(1, n + 1):
                    # (z + 1/z) on the diagonal, -1 off-diagonal
                    v = self(a, c, k + 1) + self(a, c, k - 1)
                    for b in (a - 1, a + 1):
                        if 1 <= b <= n:
                            v -= self(b, c, k)
                    want = 1 if (k == 0 and a == c) else 0
                    if v != want:
                        bad.append((a, c, k, v))
        return bad


def build_cartan_series(n: int, p_max: int) -> CartanSeries:
    """Expand the inverse of the quantized Cartan matrix of type ``A_n`` up to ``z**p_max``.

    Writing ``C(z) = z**-1 ((1 + z**2) I - z A)`` with ``A`` the adjacency
    matrix of the ``A_n`` diagram, the inverse is ``z B(z)`` where
    ``B = ((1 + z**2) I - z A)**-1`` satisfies ``B_0 = I``, ``B_1 = A`` and
    ``B_k = A B_{k-1} - B_{k-2}``.
    """
    if n < 1:
        raise ValueError(f"rank must be >= 1, got {n}")
    if p_max < 0:
        raise ValueError(f"truncation order must be >= 0, got {p_max}")

    def adj_times(m):
        # rows of A @ m: row a of the product is m[a-1] + m[a+1]
        out = []
        for a in range(n):
            row = [0] * n
            if a > 0:
                row = [x + y for x, y in zip(row, m[a - 1])]
            if a < n - 1:
                row = [x + y for x, y in zip(row, m[a + 1])]
            out.append(row)
        return out

    ident = [[int(a == c) for c in range(n)] for a in range(n)]
    zero = [[0] * n for _ in range(n)]
    blocks = [ident]
    prev, cur = zero, ident
    for _ in range(1, p_max):
        nxt = [
            [x - y for x, y in zip(r1, r0)]
            for r1, r0 in zip(adj_times(cur), prev)
        ]
        blocks.append(nxt)
        prev, cur = cur, nxt

    coeffs = [tuple(tuple(r) for r in zero)]
    coeffs += [tuple(tuple(r) for r in b) for b in blocks[:p_max]]
    return CartanSeries(n=n, p_max=p_max, coeffs=tuple(coeffs))


def _descending_sum(series: CartanSeries, a: int, c: int, hi: int, lo: int) -> int:
    """Sum of ``series(a, c, p)`` for ``p = hi, hi-2, ..., lo``; empty when ``hi < lo``."""
    return sum(series(a, c, p) for p in range(hi, lo - 1, -2))


def gamma(a: int, b: int, c: int, d: int, n: int, ell: int, series: CartanSeries) -> int:
    """Exponent ``gamma(a,b;c,d)`` entering the quasi-commutation of ``X_{a,b}`` and ``X_{c,d}``.

    Sums the ``(a, c)`` coefficients at ``2l - 2b + c - a + 1`` down to
    ``2d - 2b + c - a + 1`` in steps of two.  ``b = 0`` or ``d = 0`` refers
    to the coefficient variables.
    """
    if not (1 <= a <= n and 1 <= c <= n and 0 <= b <= ell and 0 <= d <= ell):
        raise ValueError(f"index out of range: ({a},{b};{c},{d}) for n={n}, ell={ell}")
    shift = c - a + 1 - 2 * b
    return _descending_sum(series, a, c, 2 * ell + shift, 2 * d + shift)


def coefficient_exponent_ft(r: int, rp: int, n: int, ell: int, series: CartanSeries) -> int:
    """Power of ``t`` in ``F_r * F_r' = t**k F_r' * F_r`` for ``r < r'``, summed directly."""
    if not 1 <= r < rp <= n:
        raise ValueError(f"need 1 <= r < r' <= n, got r={r}, r'={rp}, n={n}")
    return _descending_sum(series, r, rp, 2 * ell + rp - r + 1, 2 * ell + r - rp + 3)


class GammaTable:
    """All values of ``gamma`` for an ``A_n x A_ell`` system and the antisymmetric pairing.

    Variables are enumerated by ``(b, a)``: the coefficients ``X_{a,0}`` come
    first, then ``X_{a,1}`` and so on.  ``lam[i][j]`` is the exponent in
    ``x_i * x_j = t**lam[i][j] x_j * x_i``.
    """

    def __init__(self, n: int, ell: int, series: CartanSeries | None = None, classical: bool = False):
        if n < 1 or ell < 1:
            raise ValueError(f"need n >= 1 and ell >= 1, got n={n}, ell={ell}")
        self.n = n
        self.ell = ell
        self.classical = classical
        self.variables = [(a, b) for b in range(ell + 1) for a in range(1, n + 1)]
        self.index = {v: i for i, v in enumerate(self.variables)}
        size = len(self.variables)
        if classical:
            self.series = None
            self.values = {(v, w): 0 for v in self.variables for w in self.variables}
        else:
            if series is None:
                series = build_cartan_series(n, default_pmax(n, ell))
            self.series = series
            self.values = {
                (v, w): gamma(v[0], v[1], w[0], w[1], n, ell, series)
                for v in self.variables
                for w in self.variables
            }
        self.lam = tuple(
            tuple(
                self.values[(v, w)] - self.values[(w, v)] for w in self.variables
            )
            for v in self.variables
        )
        assert len(self.lam) == size

    @classmethod
    def for_system(cls, n: int, ell: int, quantum: bool = True) -> "GammaTable":
        return cls(n, ell, classical=not quantum)

    def gamma(self, v: tuple[int, int], w: tuple[int, int]) -> int:
        return self.values[(v, w)]

    def lam_pair(self, v: tuple[int, int], w: tuple[int, int]) -> int:
        return self.lam[self.index[v]][self.index[w]]

    def pairing(self, e, f) -> int:
        """Bilinear extension of the antisymmetric pairing to exponent vectors."""
        total = 0
        for i, ei in enumerate(e):
            if ei:
                row = self.lam[i]
                total += ei * sum(r * fj for r, fj in zip(row, f) if fj)
        return total
