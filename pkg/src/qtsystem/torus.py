"""Exact arithmetic in the quantum torus generated by ``X_{a,b}`` and the coefficients ``F_r``.

Elements are stored in the basis of bar-invariant (commutative) monomials
``m_e``, one per integer exponent vector ``e``.  Two basis monomials multiply
as ``m_e * m_f = t**(L(e,f)/2) m_{e+f}`` where ``L`` is the antisymmetric
pairing of :class:`~qtsystem.cartan.GammaTable`.  Variables are enumerated
by ``(b, a)``; ``X_{a,0}`` is the coefficient ``F_a``.
"""
from __future__ import annotations

from .cartan import GammaTable
from .errors import DivisionError
from .laurent import TCoefficient

DIVISION_CAP_FACTOR = 64


class QuantumTorus:
    """The algebra for an ``A_n x A_ell`` system; ``quantum=False`` gives the commutative ring."""

    def __init__(self, n: int, ell: int, quantum: bool = True, gammas: GammaTable | None = None):
        if gammas is None:
            gammas = GammaTable.for_system(n, ell, quantum=quantum)
        if (gammas.n, gammas.ell) != (n, ell):
            raise ValueError("gamma table shape does not match the torus")
        self.n = n
        self.ell = ell
        self.quantum = quantum and not gammas.classical
        self.gammas = gammas
        self.variables = gammas.variables
        self.index = gammas.index
        self.dim = len(self.variables)
        self.lam = gammas.lam
        self._zero_exp = (0,) * self.dim

    def __repr__(self):
        kind = "quantum" if self.quantum else "classical"
        return f"QuantumTorus(n={self.n}, ell={self.ell}, {kind})"

    def __eq__(self, other):
        return (
            isinstance(other, QuantumTorus)
            and (self.n, self.ell, self.quantum) == (other.n, other.ell, other.quantum)
        )

    def __hash__(self):
        return hash((self.n, self.ell, self.quantum))

    # construction -------------------------------------------------------

    def var_names(self) -> list[str]:
        return [f"X_{a}_{b}" for a, b in self.variables]

    def exponent(self, powers: dict[tuple[int, int], int] | None = None) -> tuple[int, ...]:
        e = [0] * self.dim
        for v, k in (powers or {}).items():
            e[self.index[v]] += k
        return tuple(e)

    def zero(self) -> "TorusElement":
        return TorusElement(self, {})

    def one(self) -> "TorusElement":
        return self.monomial(self._zero_exp)

    def monomial(self, exp, coeff=1) -> "TorusElement":
        coeff = coeff if isinstance(coeff, TCoefficient) else TCoefficient(coeff)
        return TorusElement(self, {tuple(exp): coeff} if coeff else {})

    def gen(self, a: int, b: int, power: int = 1) -> "TorusElement":
        """``X_{a,b}**power`` (``b = 0`` is ``F_a``)."""
        return self.monomial(self.exponent({(a, b): power}))

    def coefficient_var(self, r: int) -> "TorusElement":
        """``F_r``, with ``F_0 = F_{n+1} = 1``."""
        if r in (0, self.n + 1):
            return self.one()
        if not 1 <= r <= self.n:
            raise ValueError(f"coefficient index {r} outside [0, {self.n + 1}]")
        return self.gen(r, 0)

    def t_power(self, half_power: int) -> "TorusElement":
        return self.monomial(self._zero_exp, TCoefficient.monomial(half_power))

    # arithmetic ---------------------------------------------------------

    def pairing(self, e, f) -> int:
        if not self.quantum:
            return 0
        return self.gammas.pairing(e, f)

    def monomial_mul(self, e, f) -> tuple[int, tuple[int, ...]]:
        """``m_e * m_f = t**(phase/2) m_{e+f}``; returns the doubled phase and ``e + f``."""
        return self.pairing(e, f), tuple(x + y for x, y in zip(e, f))

    def _row_pairings(self, exps):
        """``[L^T e for e in exps]`` so that ``L(e, f) = dot(row, f)``."""
        lam = self.lam
        dim = self.dim
        rows = []
        for e in exps:
            rows.append(
                tuple(sum(e[i] * lam[i][j] for i in range(dim) if e[i]) for j in range(dim))
            )
        return rows

    def mul(self, P: "TorusElement", Q: "TorusElement") -> "TorusElement":
        acc: dict[tuple, dict[int, int]] = {}
        q_items = list(Q.terms.items())
        p_items = list(P.terms.items())
        rows = self._row_pairings([e for e, _ in p_items]) if self.quantum else None
        for idx, (e, ce) in enumerate(p_items):
            row = rows[idx] if rows else None
            for f, cf in q_items:
                ph = sum(r * x for r, x in zip(row, f) if x) if row else 0
                g = tuple(x + y for x, y in zip(e, f))
                slot = acc.setdefault(g, {})
                for k1, v1 in ce.terms.items():
                    for k2, v2 in cf.terms.items():
                        k = k1 + k2 + ph
                        slot[k] = slot.get(k, 0) + v1 * v2
        return TorusElement._from_raw(self, acc)

    def bar(self, P: "TorusElement") -> "TorusElement":
        return TorusElement(self, {e: c.bar() for e, c in P.terms.items()})

    def is_bar_invariant(self, P: "TorusElement") -> bool:
        return all(c.is_bar_invariant() for c in P.terms.values())

    def left_divide_exact(self, D: "TorusElement", N: "TorusElement") -> "TorusElement":
        """The element ``Q`` with ``D * Q = N``.

        Long division with respect to the lexicographic order on exponent
        vectors: each step cancels the leading term of the remainder.
        Raises :class:`DivisionError` when ``N`` is not left-divisible by ``D``.
        """
        if not D.terms:
            raise ZeroDivisionError("left division by zero")
        d_items = list(D.terms.items())
        d_rows = self._row_pairings([e for e, _ in d_items]) if self.quantum else None
        lead = max(D.terms)
        lead_idx = next(i for i, (e, _) in enumerate(d_items) if e == lead)
        lead_c = D.terms[lead]
        cap = DIVISION_CAP_FACTOR * (len(N.terms) + len(D.terms))

        rem: dict[tuple, TCoefficient] = dict(N.terms)
        quotient: dict[tuple, TCoefficient] = {}
        steps = 0
        while rem:
            steps += 1
            if steps > cap:
                raise DivisionError(f"left division did not terminate within {cap} steps")
            top = max(rem)
            q = tuple(x - y for x, y in zip(top, lead))
            if q in quotient:
                raise DivisionError(f"remainder cycled at exponent {q}")
            ph = sum(r * x for r, x in zip(d_rows[lead_idx], q) if x) if d_rows else 0
            c = rem[top].shift(-ph).exact_div(lead_c)
            quotient[q] = c
            for i, (d, cd) in enumerate(d_items):
                php = sum(r * x for r, x in zip(d_rows[i], q) if x) if d_rows else 0
                g = tuple(x + y for x, y in zip(d, q))
                s = rem.get(g)
                prod = (cd * c).shift(php)
                s = -prod if s is None else s - prod
                if s:
                    rem[g] = s
                else:
                    rem.pop(g, None)
        return TorusElement(self, quotient)

    def specialize_t_one(self, P: "TorusElement") -> "TorusElement":
        """Set ``t = 1``; the result lives in the commutative torus of the same shape."""
        target = QuantumTorus(self.n, self.ell, quantum=False) if self.quantum else self
        return TorusElement._from_raw(target, {e: {0: c.at_one()} for e, c in P.terms.items()})

    # rendering ----------------------------------------------------------

    def render_monomial(self, e) -> str:
        parts = []
        for (a, b), k in zip(self.variables, e):
            if not k:
                continue
            name = f"F_{a}" if b == 0 else f"X_{{{a},{b}}}"
            parts.append(name if k == 1 else f"{name}^{{{k}}}")
        return " ".join(parts) if parts else "1"


class TorusElement:
    """A finite sum of commutative monomials with ``Z[t**(1/2)]`` coefficients."""

    __slots__ = ("torus", "terms")

    def __init__(self, torus: QuantumTorus, terms: dict):
        self.torus = torus
        self.terms = {tuple(e): c for e, c in terms.items() if c}

    @classmethod
    def _from_raw(cls, torus, acc):
        obj = cls.__new__(cls)
        obj.torus = torus
        terms = {}
        for e, slot in acc.items():
            slot = {k: v for k, v in slot.items() if v}
            if slot:
                terms[e] = TCoefficient._raw(slot)
        obj.terms = terms
        return obj

    def _coerce(self, other) -> "TorusElement":
        if isinstance(other, TorusElement):
            if other.torus != self.torus:
                raise ValueError(f"mixing elements of {self.torus} and {other.torus}")
            return other
        if isinstance(other, (int, TCoefficient)):
            return self.torus.monomial(self.torus._zero_exp, other)
        raise TypeError(f"cannot combine TorusElement with {type(other).__name__}")

    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e)
            s = c if s is None else s + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return TorusElement(self.torus, out)

    __radd__ = __add__

    def __neg__(self):
        return TorusElement(self.torus, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        return self.torus.mul(self, self._coerce(other))

    def __rmul__(self, other):
        return self.torus.mul(self._coerce(other), self)

    def __eq__(self, other):
        if isinstance(other, (int, TCoefficient)):
            other = self._coerce(other)
        if not isinstance(other, TorusElement):
            return NotImplemented
        return self.torus == other.torus and self.terms == other.terms

    def __hash__(self):
        return hash((self.torus, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def shift(self, half_power: int) -> "TorusElement":
        """Multiply by ``t**(half_power/2)``."""
        return TorusElement(self.torus, {e: c.shift(half_power) for e, c in self.terms.items()})

    def bar(self) -> "TorusElement":
        return self.torus.bar(self)

    def is_bar_invariant(self) -> bool:
        return self.torus.is_bar_invariant(self)

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def leading(self) -> tuple:
        return max(self.terms)

    def ordered_terms(self) -> list[tuple[tuple, TCoefficient]]:
        """Terms in canonical order: descending monomial order."""
        return sorted(self.terms.items(), reverse=True)

    def render(self) -> str:
        if not self.terms:
            return "0"
        out = ""
        for i, (e, c) in enumerate(self.ordered_terms()):
            mono = self.torus.render_monomial(e)
            neg = False
            if len(c.terms) == 1:
                (k, v), = c.terms.items()
                neg = v < 0
                cabs = TCoefficient({k: abs(v)})
                ctext = "" if cabs == 1 else cabs.render()
            else:
                ctext = f"({c.render()})"
            if not ctext:
                body = mono
            elif mono == "1":
                body = ctext
            else:
                body = f"{ctext} {mono}"
            if i == 0:
                out = f"-{body}" if neg else body
            else:
                out += f" - {body}" if neg else f" + {body}"
        return out

    def __repr__(self):
        return f"TorusElement({self.render()})"

    __str__ = render

    def to_json(self) -> dict:
        return {
            "vars": self.torus.var_names(),
            "terms": [
                {"exp": list(e), "coeff": {str(k): v for k, v in sorted(c.terms.items())}}
                for e, c in self.ordered_terms()
            ],
        }

    @classmethod
    def from_json(cls, torus: QuantumTorus, data: dict) -> "TorusElement":
        if data.get("vars") != torus.var_names():
            raise ValueError("variable list does not match the torus")
        terms = {}
        for item in data["terms"]:
            e = tuple(int(x) for x in item["exp"])
            if len(e) != torus.dim:
                raise ValueError(f"exponent vector {e} has the wrong length")
            terms[e] = TCoefficient({int(k): int(v) for k, v in item["coeff"].items()})
        return cls(torus, terms)


def monomial_mul(e, f, torus: QuantumTorus):
    return torus.monomial_mul(e, f)


def elem_mul(P: TorusElement, Q: TorusElement) -> TorusElement:
    return P.torus.mul(P, Q)


def bar(P: TorusElement) -> TorusElement:
    return P.torus.bar(P)


def is_bar_invariant(P: TorusElement) -> bool:
    return P.torus.is_bar_invariant(P)


def left_divide_exact(D: TorusElement, N: TorusElement) -> TorusElement:
    return D.torus.left_divide_exact(D, N)


def specialize_t_one(P: TorusElement) -> TorusElement:
    return P.torus.specialize_t_one(P)
