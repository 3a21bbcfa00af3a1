import sympy

from qtsystem import QuantumTorus, TorusElement


def symbols_for(torus: QuantumTorus) -> dict:
    """Sympy symbol per torus variable: ``F1`` for coefficients, ``X11`` for ``X_{1,1}``."""
    return {
        v: sympy.Symbol(f"F{v[0]}" if v[1] == 0 else f"X{v[0]}{v[1]}")
        for v in torus.variables
    }


def to_sympy(elem: TorusElement, t=None):
    """Commutative image of ``elem``; ``t`` defaults to 1."""
    syms = symbols_for(elem.torus)
    total = 0
    for e, c in elem.terms.items():
        coeff = sum(v * (t ** sympy.Rational(k, 2) if t is not None else 1) for k, v in c.terms.items())
        mono = 1
        for v, k in zip(elem.torus.variables, e):
            mono *= syms[v] ** k
        total += coeff * mono
    return total


def same_rational(lhs, rhs) -> bool:
    return sympy.simplify(sympy.together(lhs - rhs)) == 0
