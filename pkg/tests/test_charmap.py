import pytest
from hypothesis import given, strategies as st

from qtsystem import DominanceError, OverlapError
from qtsystem.charmap import (
    coefficient_highest,
    eval_highest,
    independence_check,
    kr_beta_highest,
    lattice_cases,
    lattice_highest,
    lattice_map,
    thm41_dominant_family,
)
from qtsystem.ymonomial import (
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

Y = YMonomial.y


def test_kr_monomial():
    assert kr_monomial(2, 5, 1) == Y(2, 5)
    assert kr_monomial(2, 5, 0) == ONE
    assert kr_monomial(1, 1, 2) == Y(1, 1) * Y(1, 3)


def test_a_monomial():
    assert a_monomial(1, 4, 1) == Y(1, 3) * Y(1, 5)
    assert a_monomial(1, 4, 2) == Y(1, 3) * Y(1, 5) / Y(2, 4)
    assert a_monomial(2, 0, 3).weight(3) == (-1, 2, -1)
    with pytest.raises(ValueError):
        a_monomial(3, 0, 2)


def test_dominance():
    assert is_dominant(ONE)
    assert kr_monomial(1, 1, 3).is_dominant()
    assert not (kr_monomial(1, 1, 1) / a_monomial(1, 2, 1)).is_dominant()


def test_a_decompose_and_order():
    m = a_monomial(1, 2, 2) * a_monomial(2, 3, 2) ** 2
    assert a_decompose(m, 2) == {(1, 2): 1, (2, 3): 2}
    assert a_decompose(Y(1, 0), 2) is None
    top = kr_monomial(1, 1, 2)
    assert nakajima_below(top / a_monomial(1, 2, 1), top, 1)
    assert not nakajima_below(top, top / a_monomial(1, 2, 1), 1)
    assert nakajima_below(top, top, 1)


monomials = st.dictionaries(
    st.tuples(st.integers(1, 3), st.integers(-4, 4)), st.integers(-3, 3), max_size=5
).map(YMonomial)


@given(monomials, monomials)
def test_weight_is_a_homomorphism(x, y):
    assert weight(x * y, 3) == tuple(a + b for a, b in zip(weight(x, 3), weight(y, 3)))
    assert weight(ONE, 3) == (0, 0, 0)


@given(monomials)
def test_json_round_trip(x):
    assert YMonomial.from_json(x.to_json()) == x


def test_json_shape():
    assert (Y(1, 3) * Y(2, 4) ** 2).to_json() == {"terms": {"1,3": 1, "2,4": 2}}


# module highest monomials -----------------------------------------------

@pytest.mark.parametrize("n,ell", [(2, 2), (3, 3), (4, 2)])
def test_eval_and_kr_relations(n, ell):
    for i in range(0, n + 1):
        for m in range(0, ell + 1):
            # alpha(i, n+1)^(m+1) is the KR module beta(0, m)^i
            assert eval_highest(i, n + 1, m + 1, n, ell) == kr_beta_highest(0, m, i, n, ell)
    for i in range(1, n + 1):
        for m in range(0, ell + 2):
            assert eval_highest(i, i, m, n, ell) == coefficient_highest(i, n, ell)
        assert kr_beta_highest(0, ell, i, n, ell) == coefficient_highest(i, n, ell)
        assert kr_beta_highest(1, 1, i, n, ell) == Y(i, i + 2)
    assert kr_beta_highest(0, 1, 0, n, ell) == ONE
    assert eval_highest(0, 1, 0, n, ell) == kr_monomial(1, 1, ell + 1)


def test_eval_highest_rejects_bad_indices():
    with pytest.raises(ValueError):
        eval_highest(2, 1, 1, 2, 1)
    with pytest.raises(ValueError):
        kr_beta_highest(0, 1, 4, 2, 1)


# dominant families ------------------------------------------------------

def test_family_m1():
    fam = thm41_dominant_family(1, 2, 1, 3, 1)
    assert len(fam.monomials) == 3
    assert fam.monomials[0] == eval_highest(1, 2, 1, 3, 1) * eval_highest(2, 3, 1, 3, 1)
    assert all(fam.checks(3).values())


@pytest.mark.parametrize("n", range(2, 6))
@pytest.mark.parametrize("ell", range(1, 5))
def test_families_exhaustive(n, ell):
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            for m in range(1, ell + 1):
                fam = thm41_dominant_family(i, j, m, n, ell)
                assert all(fam.checks(n).values()), (i, j, m, fam.checks(n))


def test_family_without_node_zero():
    # node 0 carries no Y variable, so only M_1 and M_2 survive
    fam = thm41_dominant_family(0, 1, 1, 1, 1)
    assert fam.monomials == [Y(1, 1) * Y(1, 3), ONE]
    assert not fam.checks(1)["count"]


def test_family_rejects_bad_indices():
    with pytest.raises(ValueError):
        thm41_dominant_family(2, 2, 1, 3, 1)
    with pytest.raises(ValueError):
        thm41_dominant_family(1, 2, 2, 3, 1)
    assert issubclass(DominanceError, Exception)


# lattice assignment -----------------------------------------------------

@pytest.mark.parametrize("n,ell", [(n, ell) for n in range(1, 8) for ell in range(1, 9 - n)])
def test_lattice_map(n, ell):
    rep = lattice_map(n, ell)
    assert rep.passed, rep.failures[:3]
    assert lattice_map(n, ell, include_corners=True).passed
    assert independence_check(n, ell)


def test_seeds_and_coefficients():
    n, ell = 2, 2
    for k in range(1, n + 1):
        for m in range(ell + 1):
            assert lattice_highest(k, m, k + m - 2, n, ell) == kr_monomial(k, k + 2 * m, ell + 1 - m)
    assert lattice_highest(1, 0, -1, n, ell) == coefficient_highest(1, n, ell)


def test_half_period_shift():
    n, ell = 2, 1
    for k in range(n + 2):
        for m in range(ell + 2):
            for u in range(k + m - 2, k + m - 2 + 2 * (n + ell + 2), 2):
                assert lattice_highest(k, m, u, n, ell) == lattice_highest(
                    n + 1 - k, ell + 1 - m, u + n + ell + 2, n, ell
                )


def test_lattice_rejects_bad_cells():
    with pytest.raises(ValueError):
        lattice_cases(1, 1, 1, 1, 1)
    with pytest.raises(ValueError):
        lattice_cases(3, 1, 0, 1, 1)
    assert issubclass(OverlapError, Exception)


def test_torus_to_y():
    # n = 2, ell = 1 variable order: F_1, F_2, X_{1,1}, X_{2,1}
    assert torus_to_y((1, 0, 0, 0), 2, 1) == kr_monomial(1, 1, 2)
    assert torus_to_y((0, 0, 1, -1), 2, 1) == Y(1, 3) / Y(2, 4)


def test_independence_small():
    assert independence_check(1, 1)
    assert independence_check(2, 1)
