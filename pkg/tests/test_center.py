import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st
from sympy import Matrix

from twisted_center.center import (
    ALL_METHODS,
    analyze,
    center_trivial_by_theorem,
    generating_set,
    greg_brute_force,
    greg_from_kernel,
    mixed_rank_brute_force,
    tensor_combine,
)
from twisted_center.errors import DuplicatePrime, MethodsDisagree, TooLargeToEnumerate
from twisted_center.group_shape import enumerate_elements, shapes_with_log_order, validate_shape
from twisted_center.pairing import normalize, random_pairing, validate_pairing_matrix
from twisted_center.solver import kernel


def pairing(p, blocks, rows):
    return validate_pairing_matrix(validate_shape(blocks, p), rows)


def zero(p, blocks):
    shape = validate_shape(blocks, p)
    return validate_pairing_matrix(shape, [[0] * shape.rank for _ in range(shape.rank)])


SYMPLECTIC_2 = ([(1, 2)], [[0, 1], [1, 0]])
SYMPLECTIC_3 = ([(1, 2)], [[0, 1], [2, 0]])


def test_theorem_on_worked_example(example_A):
    assert center_trivial_by_theorem(example_A)
    # the diagonal blocks have unit determinants
    assert Matrix(example_A.block(0, 0)).det() % 3 == 1
    assert Matrix(example_A.block(1, 1)).det() % 3 == 1


def test_theorem_on_zero(example_shape):
    assert not center_trivial_by_theorem(zero(3, [(2, 2), (1, 2)]))


def test_theorem_needs_every_diagonal_block():
    # invertible off-diagonal blocks do not rescue a zero A_22
    A = pairing(3, [(2, 2), (1, 2)], [[0, 1, 1, 0], [8, 0, 0, 1], [2, 0, 0, 0], [0, 2, 0, 0]])
    assert not center_trivial_by_theorem(A)
    assert analyze(A).rank == 9


@pytest.mark.parametrize("seed", range(10))
def test_odd_antisymmetric_blocks_are_singular(seed):
    rng = random.Random(seed)
    p = rng.choice([3, 5, 7])
    size = rng.choice([1, 3, 5])
    M = [[0] * size for _ in range(size)]
    for u, v in itertools.combinations(range(size), 2):
        M[u][v] = rng.randrange(p)
        M[v][u] = -M[u][v] % p
    assert Matrix(M).det() % p == 0
    assert not center_trivial_by_theorem(pairing(p, [(1, size)], M))


def test_greg_from_kernel_examples(example_A, example_At, example_shape):
    greg = greg_from_kernel(kernel(example_At), example_shape)
    assert greg.order == 1 and greg.generators == ()
    Z = zero(3, [(2, 2), (1, 2)])
    assert greg_from_kernel(kernel(normalize(Z)), Z.shape).order == 729
    S = pairing(3, *SYMPLECTIC_3)
    assert greg_from_kernel(kernel(normalize(S)), S.shape).order == 1


def test_brute_force_examples(example_At, example_shape):
    assert greg_brute_force(example_At, example_shape).elements == {(0, 0, 0, 0)}
    Z = zero(3, [(1, 1)])
    assert greg_brute_force(normalize(Z), Z.shape).elements == {(0,), (1,), (2,)}
    S = pairing(3, *SYMPLECTIC_3)
    assert greg_brute_force(normalize(S), S.shape).elements == {(0, 0)}
    with pytest.raises(TooLargeToEnumerate):
        greg_brute_force(example_At, example_shape, max_elements=100)


def test_analyze_examples(example_A):
    r = analyze(example_A)
    assert (r.trivial, r.rank, r.methods_agreed) == (True, 1, frozenset(ALL_METHODS))
    r = analyze(zero(5, [(1, 1)]))
    assert (r.trivial, r.rank) == (False, 5)
    r = analyze(zero(2, [(2, 1)]))
    assert (r.trivial, r.rank) == (False, 4)


def test_analyze_method_selection(example_A):
    r = analyze(example_A, methods=["theorem"])
    assert r.trivial and r.rank == 1 and r.methods_agreed == {"theorem"}
    r = analyze(zero(3, [(1, 1)]), methods=["theorem"])
    assert not r.trivial and r.rank is None
    r = analyze(example_A, max_enumeration=100)
    assert r.methods_agreed == {"theorem", "kernel"}
    r = analyze(zero(3, [(2, 1), (1, 1)]), methods=["oracle"])
    assert r.rank == 27 and r.greg_generators == ((0, 1), (1, 0))
    with pytest.raises(ValueError):
        analyze(example_A, methods=["magic"])


def test_disagreement_is_fatal(monkeypatch, example_A):
    import twisted_center.center as center

    monkeypatch.setattr(center, "center_trivial_by_theorem", lambda A: False)
    with pytest.raises(MethodsDisagree) as info:
        center.analyze(example_A)
    assert info.value.witness["matrix"] == example_A.to_lists()


def test_generators_span_the_oracle_subgroup():
    A = pairing(3, [(2, 1), (1, 1)], [[0, 1], [2, 0]])
    greg = greg_brute_force(normalize(A), A.shape)
    shape = A.shape
    closure = {shape.identity()}
    for _ in range(shape.order):
        closure |= {shape.add(a, g) for a in closure for g in greg.generators}
    assert closure == greg.elements
    assert generating_set(greg.elements, shape) == greg.generators


def test_tensor_examples():
    two = analyze(zero(2, [(1, 1)]))
    three = analyze(zero(3, [(1, 1)]))
    r = tensor_combine([two, three])
    assert (r.rank, r.trivial, r.primes) == (6, False, (2, 3))
    assert r.greg_generators == ((1, 0), (0, 1))

    s2 = analyze(pairing(2, *SYMPLECTIC_2))
    s3 = analyze(pairing(3, *SYMPLECTIC_3))
    assert (s2.rank, s3.rank) == (1, 1)
    r = tensor_combine([s2, s3])
    assert (r.rank, r.trivial) == (1, True)
    assert r.rank == mixed_rank_brute_force([pairing(2, *SYMPLECTIC_2), pairing(3, *SYMPLECTIC_3)])

    r = tensor_combine([s2, three])
    assert (r.rank, r.trivial) == (3, False)
    assert r.greg_generators == ((0, 0, 1),)
    assert r.rank == mixed_rank_brute_force([pairing(2, *SYMPLECTIC_2), zero(3, [(1, 1)])])


def test_tensor_duplicate_prime():
    r = analyze(zero(3, [(1, 1)]))
    with pytest.raises(DuplicatePrime):
        tensor_combine([r, r])


SHAPES = [s for p in (2, 3) for t in range(1, 5) for s in shapes_with_log_order(p, t, 3)]


@settings(max_examples=150, deadline=None)
@given(st.sampled_from(SHAPES), st.integers(0, 2**32))
def test_oracle_set_is_a_subgroup_of_matching_size(shape, seed):
    A = random_pairing(shape, random.Random(seed))
    At = normalize(A)
    greg = greg_brute_force(At, shape)
    assert shape.identity() in greg.elements
    for a, b in itertools.product(greg.elements, repeat=2):
        assert shape.add(a, b) in greg.elements
    assert shape.order % greg.order == 0
    assert greg_from_kernel(kernel(At), shape).order == greg.order
    assert center_trivial_by_theorem(A) == (greg.order == 1)


@pytest.mark.parametrize("shape", SHAPES, ids=str)
def test_zero_pairing_is_commutative(shape):
    m = shape.rank
    r = analyze(validate_pairing_matrix(shape, [[0] * m for _ in range(m)]))
    assert r.rank == shape.order == len(list(enumerate_elements(shape)))
