import itertools

import pytest

from twisted_center.errors import NotAUnit, NotPrime
from twisted_center.ring_zpn import Modulus, is_prime, unit_inverse, valuation

M9 = Modulus(3, 2)


@pytest.mark.parametrize("value, expected", [(6, 1), (0, 2), (8, 0)])
def test_valuation_examples(value, expected):
    assert valuation(M9(value)) == expected


def test_zero_is_flagged():
    assert M9(0).is_zero
    assert not M9(9 + 3).is_zero


@pytest.mark.parametrize("value, expected", [(8, 8), (1, 1)])
def test_unit_inverse_examples(value, expected):
    assert unit_inverse(M9(value)) == M9(expected)


def test_unit_inverse_rejects_zero_divisor():
    with pytest.raises(NotAUnit):
        unit_inverse(M9(3))


def test_residues_are_canonical():
    assert M9(-1).value == 8
    assert M9(20) == M9(2)
    assert (M9(5) + 7).value == 3
    assert (M9(5) - M9(7)).value == 7
    assert (-M9(1)).value == 8


def test_modulus_rejects_composite():
    with pytest.raises(NotPrime):
        Modulus(6, 1)
    assert [q for q in range(20) if is_prime(q)] == [2, 3, 5, 7, 11, 13, 17, 19]


def test_mixing_moduli_is_an_error():
    with pytest.raises(ValueError):
        M9(1) + Modulus(3, 1)(1)


@pytest.mark.parametrize("p", [2, 3])
@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_inverse_exhaustive(p, n):
    mod = Modulus(p, n)
    for a in range(mod.order):
        if a % p:
            assert (mod(a) * unit_inverse(mod(a))).value == 1


@pytest.mark.parametrize("p", [2, 3])
@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_valuation_of_product_exhaustive(p, n):
    mod = Modulus(p, n)
    for a, b in itertools.product(range(1, mod.order), repeat=2):
        prod = mod(a) * mod(b)
        if prod.is_zero:
            continue
        assert valuation(prod) == min(valuation(mod(a)) + valuation(mod(b)), n)
