import itertools
import random

import numpy as np
import pytest

from twisted_center.cocycle import (
    CocycleTable,
    commutator_exponents,
    derive_pairing,
    realize_cocycle,
    validate_cocycle,
)
from twisted_center.errors import (
    NotACocycle,
    PairingOrderViolation,
    TooLargeToValidate,
    WrongDimensions,
)
from twisted_center.group_shape import enumerate_elements, shapes_with_log_order, validate_shape
from twisted_center.pairing import random_pairing, validate_pairing_matrix

Z3xZ3 = validate_shape([(1, 2)], 3)


def table_from(shape, fn):
    elems = list(enumerate_elements(shape))
    return CocycleTable.from_grid(shape, [[fn(a, b) for b in elems] for a in elems])


def first_failure(table):
    """Reference: plain triple loop over the cocycle identity."""
    shape = table.shape
    N = shape.modulus
    elems = list(enumerate_elements(shape))
    for s, t, r in itertools.product(elems, repeat=3):
        lhs = table.value(s, t) + table.value(shape.add(s, t), r)
        rhs = table.value(t, r) + table.value(s, shape.add(t, r))
        if (lhs - rhs) % N:
            return s, t, r
    return None


def test_zero_table_is_a_cocycle(example_shape):
    shape = validate_shape([(2, 1), (1, 1)], 3)
    table = table_from(shape, lambda a, b: 0)
    validate_cocycle(table)
    assert derive_pairing(table).is_zero()


def test_bilinear_example():
    table = table_from(Z3xZ3, lambda a, b: a[1] * b[0])
    assert first_failure(table) is None
    validate_cocycle(table)
    # f(e1, e2) exponent = 0 - 1
    assert derive_pairing(table).entries == ((0, 2), (1, 0))


def test_perturbed_table_fails_at_first_triple():
    table = table_from(Z3xZ3, lambda a, b: a[1] * b[0])
    values = table.values.copy()
    values[4, 5] += 1
    bad = CocycleTable(Z3xZ3, values % 3)
    expected = first_failure(bad)
    assert expected is not None
    with pytest.raises(NotACocycle) as info:
        validate_cocycle(bad)
    assert info.value.triple == expected


def test_realize_example():
    A = validate_pairing_matrix(Z3xZ3, [[0, 2], [1, 0]])
    table = realize_cocycle(A)
    assert table == table_from(Z3xZ3, lambda a, b: a[1] * b[0] % 3)


def test_realize_zero():
    A = validate_pairing_matrix(Z3xZ3, [[0, 0], [0, 0]])
    assert not realize_cocycle(A).values.any()


def test_example_round_trip(example_A):
    table = realize_cocycle(example_A)
    assert table.values.shape == (729, 729)
    assert derive_pairing(table) == example_A


@pytest.mark.slow
def test_example_realization_is_a_cocycle(example_A):
    validate_cocycle(realize_cocycle(example_A), max_order=729)


def test_validation_cap(example_A):
    with pytest.raises(TooLargeToValidate):
        validate_cocycle(realize_cocycle(example_A))
    with pytest.raises(TooLargeToValidate):
        realize_cocycle(example_A, max_order=100)


def test_pairing_order_violation():
    # on Z/9 + Z/3 the commutator of the two generators must be a multiple of 3
    shape = validate_shape([(2, 1), (1, 1)], 3)
    e1, e2 = shape.generator(0), shape.generator(1)
    table = table_from(shape, lambda a, b: 1 if (a, b) == (e1, e2) else 0)
    with pytest.raises(PairingOrderViolation):
        derive_pairing(table)


def test_wrong_table_size():
    with pytest.raises(WrongDimensions):
        CocycleTable.from_grid(Z3xZ3, [[0] * 9] * 8)


@pytest.mark.parametrize("seed", range(6))
def test_derived_pairing_is_an_antisymmetric_bipairing(seed):
    rng = random.Random(seed)
    shapes = [s for p in (2, 3) for t in range(1, 5) for s in shapes_with_log_order(p, t, 3)]
    shapes = [s for s in shapes if s.order <= 81]
    shape = rng.choice(shapes)
    table = realize_cocycle(random_pairing(shape, rng))
    # twist by a random coboundary: the commutator is unchanged
    elems = list(enumerate_elements(shape))
    c = [rng.randrange(shape.modulus) for _ in elems]
    idx = {g: i for i, g in enumerate(elems)}
    twisted = table.values.copy()
    for a, b in itertools.product(elems, repeat=2):
        twisted[idx[a], idx[b]] += c[idx[a]] + c[idx[b]] - c[idx[shape.add(a, b)]]
    twisted = CocycleTable(shape, twisted % shape.modulus)
    validate_cocycle(twisted)
    assert derive_pairing(twisted) == derive_pairing(table)

    f = commutator_exponents(twisted)
    N = shape.modulus
    assert not np.diagonal(f).any()
    assert not ((f + f.T) % N).any()
    for a, b, c3 in itertools.product(elems, repeat=3):
        ab = idx[shape.add(a, b)]
        assert (f[ab, idx[c3]] - f[idx[a], idx[c3]] - f[idx[b], idx[c3]]) % N == 0
