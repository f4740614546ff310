import pytest

from seifert_flatten.laurent import LaurentPolynomial as L


def test_arithmetic_and_zero_pruning():
    p = L({1: 2, -1: 3})
    q = L({1: -2})
    assert (p + q).coeffs == {-1: 3}
    assert (p - p) == 0
    assert (p * L({2: 1})).coeffs == {3: 2, 1: 3}


def test_negative_power_of_monomial():
    a = L({1: 1})
    assert a ** -3 == L({-3: 1})
    assert L({2: -1}) ** -1 == L({-2: -1})
    with pytest.raises(ValueError):
        (a + 1) ** -1


def test_delta_squared():
    d = L({2: -1, -2: -1})
    assert (d * d).coeffs == {4: 1, 0: 2, -4: 1}


def test_substitute_and_format():
    p = L({-4: 1, 0: -1})
    assert p.substitute_power(-1) == L({4: 1, 0: -1})
    assert p.terms() == [(-4, 1), (0, -1)]
    assert "A" in p.format("A")
    assert hash(L({0: 1})) == hash(L.constant(1))
