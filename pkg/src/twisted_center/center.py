"""Center of a twisted group algebra of a finite abelian group.

The center is free over the base ring with basis the monomials of G_reg, the
elements whose commutator with every generator is trivial.  Three routes
compute it:

* ``theorem``: trivial iff every diagonal block A_ii is invertible;
* ``kernel``:  |G_reg| = |{g : At g = 0}| / (lifts per group element);
* ``oracle``:  test every element of G against every generator.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import prod
from typing import Iterable, Sequence

import numpy as np

from .errors import DuplicatePrime, InternalInconsistency, MethodsDisagree, TooLargeToEnumerate
from .group_shape import (
    DEFAULT_MAX_ENUMERATION,
    GroupElement,
    PGroupShape,
    fiber_order,
    group_order,
    project,
)
from .pairing import NormalizedMatrix, PairingMatrix, normalize
from .solver import KernelDescription, is_invertible, kernel

THEOREM, KERNEL, ORACLE = "theorem", "kernel", "oracle"
ALL_METHODS = (THEOREM, KERNEL, ORACLE)


@dataclass(frozen=True)
class RegularSubgroup:
    order: int
    generators: tuple[GroupElement, ...]
    elements: frozenset[GroupElement] | None = None


@dataclass(frozen=True)
class CenterReport:
    """Center of one p-primary component, or of a tensor product of them.

    ``rank`` is |G_reg|, the free rank of the center over the base ring; it
    is None when only the theorem ran on a nontrivial instance.
    ``primes`` lists the component primes; generator coordinates are those
    components' coordinates concatenated in that order.
    """

    trivial: bool
    rank: int | None
    greg_generators: tuple[GroupElement, ...]
    methods_agreed: frozenset[str]
    primes: tuple[int, ...] = ()
    group_order: int = 1
    coordinates: int = 0
    kernel: KernelDescription | None = field(default=None, compare=False, repr=False)


def center_trivial_by_theorem(A: PairingMatrix) -> bool:
    p = A.shape.p
    return all(is_invertible(A.block(i, i), p) for i in range(len(A.shape.blocks)))


def greg_from_kernel(K: KernelDescription, shape: PGroupShape) -> RegularSubgroup:
    fiber = fiber_order(shape)
    if K.size % fiber:
        raise InternalInconsistency(
            f"kernel size {K.size} is not divisible by the fiber order {fiber}"
        )
    gens = []
    for g in K.generators:
        h = project(g, shape)
        if any(h) and h not in gens:
            gens.append(h)
    return RegularSubgroup(K.size // fiber, tuple(gens))


def _element_array(shape: PGroupShape) -> np.ndarray:
    return np.indices(shape.orders, dtype=np.int64).reshape(shape.rank, -1).T


def greg_brute_force(
    At: NormalizedMatrix, shape: PGroupShape, max_elements: int = DEFAULT_MAX_ENUMERATION
) -> RegularSubgroup:
    """Keep every g whose commutation phase with each generator is zero."""
    order = group_order(shape)
    if order > max_elements:
        raise TooLargeToEnumerate(order, max_elements)
    E = _element_array(shape)
    phases = E @ np.array(At.entries, dtype=np.int64).T % At.modulus
    central = E[~phases.any(axis=1)]
    elements = frozenset(tuple(int(c) for c in row) for row in central)
    return RegularSubgroup(len(elements), generating_set(elements, shape), elements)


def generating_set(elements: Iterable[GroupElement], shape: PGroupShape) -> tuple[GroupElement, ...]:
    """Greedy generating set of the subgroup formed by ``elements``."""
    spanned = {shape.identity()}
    gens = []
    for g in sorted(elements):
        if g in spanned:
            continue
        gens.append(g)
        multiples = [shape.identity()]
        x = g
        while any(x):
            multiples.append(x)
            x = shape.add(x, g)
        spanned = {shape.add(a, b) for a in spanned for b in multiples}
    return tuple(gens)


def analyze(
    A: PairingMatrix,
    methods: Sequence[str] | None = None,
    max_enumeration: int = DEFAULT_MAX_ENUMERATION,
) -> CenterReport:
    """Run the requested methods and insist they agree.

    With ``methods=None`` the theorem and kernel routes always run and the
    oracle runs whenever |G| is within ``max_enumeration``.
    """
    shape = A.shape
    order = group_order(shape)
    if methods is None:
        methods = [THEOREM, KERNEL] + ([ORACLE] if order <= max_enumeration else [])
    unknown = set(methods) - set(ALL_METHODS)
    if unknown or not methods:
        raise ValueError(f"unknown or empty methods: {sorted(unknown)}")

    At = normalize(A)
    trivial, rank = {}, {}
    K = greg = None
    if THEOREM in methods:
        trivial[THEOREM] = center_trivial_by_theorem(A)
    if KERNEL in methods:
        K = kernel(At)
        from_kernel = greg_from_kernel(K, shape)
        rank[KERNEL] = from_kernel.order
        trivial[KERNEL] = from_kernel.order == 1
        greg = from_kernel
    if ORACLE in methods:
        from_oracle = greg_brute_force(At, shape, max_enumeration)
        rank[ORACLE] = from_oracle.order
        trivial[ORACLE] = from_oracle.order == 1
        if greg is None:
            greg = from_oracle

    if len(set(trivial.values())) > 1 or len(set(rank.values())) > 1:
        raise MethodsDisagree(
            f"methods disagree on {shape}: trivial={trivial}, rank={rank}",
            witness={"p": shape.p, "blocks": shape.blocks, "matrix": A.to_lists(),
                     "trivial": trivial, "rank": rank},
        )
    is_trivial = next(iter(trivial.values()))
    if greg is None:
        # theorem only: the rank is known exactly only in the trivial case
        return CenterReport(is_trivial, 1 if is_trivial else None, (), frozenset(methods),
                            (shape.p,), order, shape.rank)
    if order % greg.order:
        raise InternalInconsistency(f"|G_reg| = {greg.order} does not divide |G| = {order}")
    return CenterReport(is_trivial, greg.order, greg.generators, frozenset(methods),
                        (shape.p,), order, shape.rank, K)


def tensor_combine(reports: Sequence[CenterReport]) -> CenterReport:
    """Center of the tensor product of per-prime components."""
    seen = set()
    for r in reports:
        for p in r.primes:
            if p in seen:
                raise DuplicatePrime(p)
            seen.add(p)
    if not reports:
        return CenterReport(True, 1, (), frozenset(ALL_METHODS))
    total = sum(r.coordinates for r in reports)
    gens, offset = [], 0
    for r in reports:
        for g in r.greg_generators:
            gens.append((0,) * offset + tuple(g) + (0,) * (total - offset - len(g)))
        offset += r.coordinates
    return CenterReport(
        trivial=all(r.trivial for r in reports),
        rank=None if any(r.rank is None for r in reports) else prod(r.rank for r in reports),
        greg_generators=tuple(gens),
        methods_agreed=frozenset.intersection(*(r.methods_agreed for r in reports)),
        primes=tuple(p for r in reports for p in r.primes),
        group_order=prod(r.group_order for r in reports),
        coordinates=total,
    )


def mixed_rank_brute_force(
    components: Sequence[PairingMatrix], max_elements: int = DEFAULT_MAX_ENUMERATION
) -> int:
    """|G_reg| of the direct sum of the components, by direct enumeration.

    Phases are taken in Q/Z: generator u of prime p contributes
    At[u][v] / p**n1 against coordinate v of the same component and nothing
    against other primes.  Everything is scaled by the common denominator.
    """
    shapes = [A.shape for A in components]
    order = prod(group_order(s) for s in shapes)
    if order > max_elements:
        raise TooLargeToEnumerate(order, max_elements)
    denom = prod(s.modulus for s in shapes)
    m = sum(s.rank for s in shapes)
    phase = np.zeros((m, m), dtype=np.int64)
    offset = 0
    for A in components:
        k = A.shape.rank
        At = np.array(normalize(A).entries, dtype=np.int64)
        phase[offset:offset + k, offset:offset + k] = At * (denom // A.shape.modulus)
        offset += k
    orders = [q for s in shapes for q in s.orders]
    E = np.indices(orders, dtype=np.int64).reshape(m, -1).T
    central = ~((E @ phase.T) % denom).any(axis=1)
    return int(np.count_nonzero(central))
