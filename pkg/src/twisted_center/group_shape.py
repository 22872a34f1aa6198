"""Finite abelian p-groups (Z/p^n1)^m1 + ... + (Z/p^nk)^mk and their elements.

Group elements and lifted elements are plain tuples of ints.  A group element
keeps coordinate ``s`` in ``[0, p**n(s))``; a lifted element keeps every
coordinate in ``[0, p**n1)``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Iterator, NamedTuple, Sequence

from .errors import (
    EmptyShape,
    ExponentsNotStrictlyDecreasing,
    InputError,
    NotPrime,
    TooLargeToEnumerate,
)
from .ring_zpn import MAX_MODULUS, is_prime

DEFAULT_MAX_ENUMERATION = 10**6

GroupElement = tuple[int, ...]
LiftedElement = tuple[int, ...]


class GeneratorId(NamedTuple):
    """Generator e_{ij}: ``block`` j and ``position`` i are 1-based, ``flat`` is 0-based."""

    block: int
    position: int
    flat: int


@dataclass(frozen=True)
class PGroupShape:
    p: int
    blocks: tuple[tuple[int, int], ...]

    def __post_init__(self):
        object.__setattr__(
            self, "blocks", tuple((int(n), int(m)) for n, m in self.blocks)
        )

    @property
    def top_exponent(self) -> int:
        return self.blocks[0][0]

    @property
    def modulus(self) -> int:
        """p**n1, the ring the normalized matrix lives over."""
        return self.p**self.top_exponent

    @cached_property
    def exponents(self) -> tuple[int, ...]:
        """Exponent n(s) of every generator, in flat order."""
        return tuple(n for n, m in self.blocks for _ in range(m))

    @cached_property
    def orders(self) -> tuple[int, ...]:
        return tuple(self.p**n for n in self.exponents)

    @cached_property
    def block_slices(self) -> tuple[slice, ...]:
        out, start = [], 0
        for _, m in self.blocks:
            out.append(slice(start, start + m))
            start += m
        return tuple(out)

    @property
    def rank(self) -> int:
        """Number of generators m."""
        return len(self.exponents)

    @property
    def order(self) -> int:
        return group_order(self)

    def generators(self) -> list[GeneratorId]:
        gens, flat = [], 0
        for j, (_, m) in enumerate(self.blocks, start=1):
            for i in range(1, m + 1):
                gens.append(GeneratorId(j, i, flat))
                flat += 1
        return gens

    def generator(self, flat: int) -> GroupElement:
        return tuple(int(s == flat) for s in range(self.rank))

    def identity(self) -> GroupElement:
        return (0,) * self.rank

    def add(self, g: GroupElement, h: GroupElement) -> GroupElement:
        return tuple((a + b) % q for a, b, q in zip(g, h, self.orders))

    def scale(self, k: int, g: GroupElement) -> GroupElement:
        return tuple((k * a) % q for a, q in zip(g, self.orders))

    def index(self, g: GroupElement) -> int:
        """Position of ``g`` in :func:`enumerate_elements` order."""
        idx = 0
        for a, q in zip(g, self.orders):
            idx = idx * q + a
        return idx

    @property
    def fiber_exponent(self) -> int:
        """log_p of the number of lifts of one group element."""
        return sum(self.top_exponent - n for n in self.exponents)

    def __str__(self):
        parts = []
        for n, m in self.blocks:
            factor = f"Z/{self.p**n}"
            parts.append(factor if m == 1 else f"({factor})^{m}")
        return " + ".join(parts)


def validate_shape(raw: Sequence[Sequence[int]], p: int) -> PGroupShape:
    """Build a shape from ``[(exponent, multiplicity), ...]`` with exponents decreasing."""
    if not isinstance(p, int) or not is_prime(p):
        raise NotPrime(p)
    blocks = []
    for entry in raw:
        try:
            n, m = entry
        except (TypeError, ValueError):
            raise InputError(f"block {entry!r} is not an (exponent, multiplicity) pair")
        if not isinstance(n, int) or not isinstance(m, int):
            raise InputError(f"block {entry!r} must hold integers")
        if n < 1:
            raise InputError(f"exponent must be >= 1, got {n}")
        if m < 1:
            raise InputError(f"multiplicity must be >= 1, got {m}")
        blocks.append((n, m))
    if not blocks:
        raise EmptyShape("a shape needs at least one block")
    for (n_prev, _), (n, _) in zip(blocks, blocks[1:]):
        if n >= n_prev:
            raise ExponentsNotStrictlyDecreasing(
                f"exponents must be strictly decreasing, got {[b[0] for b in blocks]}"
            )
    if p ** blocks[0][0] > MAX_MODULUS:
        raise InputError(f"modulus {p}^{blocks[0][0]} is too large")
    return PGroupShape(p, tuple(blocks))


def group_order(shape: PGroupShape) -> int:
    return shape.p ** sum(n * m for n, m in shape.blocks)


def enumerate_elements(
    shape: PGroupShape, max_elements: int = DEFAULT_MAX_ENUMERATION
) -> Iterator[GroupElement]:
    """Yield every element once in lexicographic order, identity first."""
    size = group_order(shape)
    if size > max_elements:
        raise TooLargeToEnumerate(size, max_elements)
    return itertools.product(*(range(q) for q in shape.orders))


def lift(g: GroupElement, shape: PGroupShape) -> LiftedElement:
    """Canonical lift: the same integers, read mod p**n1."""
    return tuple(a % shape.modulus for a in g)


def project(l: LiftedElement, shape: PGroupShape) -> GroupElement:
    return tuple(a % q for a, q in zip(l, shape.orders))


def lifts(g: GroupElement, shape: PGroupShape) -> Iterator[LiftedElement]:
    """All lifts of ``g`` to (Z/p**n1)^m."""
    N = shape.modulus
    ranges = [range(a % q, N, q) for a, q in zip(g, shape.orders)]
    return itertools.product(*ranges)


def shapes_with_log_order(p: int, total: int, max_exponent: int) -> list[PGroupShape]:
    """All shapes with sum(n*m) == total and n1 <= max_exponent."""
    out = []

    def rec(remaining, max_n, acc):
        if remaining == 0:
            out.append(PGroupShape(p, tuple(acc)))
            return
        for n in range(min(max_n, remaining), 0, -1):
            for m in range(remaining // n, 0, -1):
                rec(remaining - n * m, n - 1, acc + [(n, m)])

    rec(total, max_exponent, [])
    return out


def fiber_order(shape: PGroupShape) -> int:
    return shape.p**shape.fiber_exponent
