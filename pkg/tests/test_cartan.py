import pytest
import sympy

from qtsystem import (
    GammaTable,
    TruncationError,
    build_cartan_series,
    coefficient_exponent_ft,
    default_pmax,
    gamma,
)


def closed_form(a, c, n, p_max):
    """Series of ``[min]_z [n+1-max]_z / [n+1]_z`` with ``[k]_z = (z^k - z^-k)/(z - 1/z)``."""
    z = sympy.Symbol("z")

    def qint(k):
        return (z ** k - z ** -k) / (z - 1 / z)

    expr = sympy.cancel(qint(min(a, c)) * qint(n + 1 - max(a, c)) / qint(n + 1))
    poly = sympy.series(expr, z, 0, p_max + 1).removeO()
    return {p: int(poly.coeff(z, p)) for p in range(p_max + 1)}


def test_n1_matches_series_of_one_over_z_plus_inverse():
    s = build_cartan_series(1, 5)
    assert [s(1, 1, p) for p in range(6)] == [0, 1, 0, -1, 0, 1]


def test_n2_offdiagonal():
    s = build_cartan_series(2, 8)
    assert [s(1, 2, p) for p in (2, 4, 6, 8)] == [1, -1, 0, 1]


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_closed_form_oracle(n):
    p_max = 14
    s = build_cartan_series(n, p_max)
    for a in range(1, n + 1):
        for c in range(1, n + 1):
            want = closed_form(a, c, n, p_max)
            assert [s(a, c, p) for p in range(p_max + 1)] == [want[p] for p in range(p_max + 1)]


@pytest.mark.parametrize("n", range(1, 9))
def test_product_and_zero_pattern(n):
    s = build_cartan_series(n, 40)
    assert s.product_check() == []
    for a in range(1, n + 1):
        for c in range(1, n + 1):
            assert all(s(a, c, p) == 0 for p in range(-3, abs(a - c) + 1))
            assert s(a, c, abs(a - c) + 1) == 1


def test_truncation_error_and_nonpositive_orders():
    s = build_cartan_series(2, 6)
    assert s(1, 1, -5) == 0
    with pytest.raises(TruncationError):
        s(1, 1, 7)


def test_nested_json_shape():
    nested = build_cartan_series(2, 4).to_nested()
    assert nested["1"]["2"] == {"2": 1, "4": -1}
    assert nested["2"]["2"] == {"1": 1}


def test_invalid_arguments():
    with pytest.raises(ValueError):
        build_cartan_series(0, 4)
    with pytest.raises(ValueError):
        build_cartan_series(2, -1)


def test_gamma_examples():
    s = build_cartan_series(1, default_pmax(1, 1))
    assert gamma(1, 1, 1, 0, 1, 1, s) == 1
    assert gamma(1, 0, 1, 1, 1, 1, s) == -1
    assert GammaTable(1, 1).lam_pair((1, 1), (1, 0)) == 2
    assert GammaTable(1, 2).lam_pair((1, 1), (1, 2)) == -2


@pytest.mark.parametrize("n,ell,pairs", [
    (1, 1, {((1, 1), (1, 0)): 2}),
    (1, 2, {((1, 1), (1, 2)): -2, ((1, 1), (1, 0)): 0, ((1, 2), (1, 0)): 0}),
    (2, 1, {((1, 1), (2, 1)): 1, ((1, 1), (1, 0)): 1, ((1, 1), (2, 0)): 0,
            ((2, 1), (2, 0)): 1, ((2, 1), (1, 0)): 1, ((1, 0), (2, 0)): -1}),
])
def test_commutation_examples(n, ell, pairs):
    table = GammaTable(n, ell)
    for (v, w), want in pairs.items():
        assert table.lam_pair(v, w) == want
        assert table.lam_pair(w, v) == -want


@pytest.mark.parametrize("n", range(2, 9))
@pytest.mark.parametrize("ell", [1, 2, 3])
def test_ft_agrees_with_pairing(n, ell):
    table = GammaTable(n, ell)
    for r in range(1, n + 1):
        for rp in range(r + 1, n + 1):
            k = coefficient_exponent_ft(r, rp, n, ell, table.series)
            assert k == table.lam_pair((r, 0), (rp, 0))
            if rp == r + 1:
                assert k == table.series(r, r + 1, 2 * ell + 2)


def test_ft_example_and_empty_range():
    s = build_cartan_series(2, default_pmax(2, 1))
    assert coefficient_exponent_ft(1, 2, 2, 1, s) == -1
    s5 = build_cartan_series(5, 40)
    # r' - r > ell + 1 leaves an empty descending range
    assert coefficient_exponent_ft(1, 5, 5, 1, s5) == 0
    with pytest.raises(ValueError):
        coefficient_exponent_ft(2, 2, 2, 1, s)


def test_pairing_is_antisymmetric():
    table = GammaTable(3, 2)
    size = len(table.variables)
    for i in range(size):
        assert table.lam[i][i] == 0
        for j in range(size):
            assert table.lam[i][j] == -table.lam[j][i]


def test_classical_table_is_zero():
    table = GammaTable.for_system(2, 2, quantum=False)
    assert all(x == 0 for row in table.lam for x in row)
