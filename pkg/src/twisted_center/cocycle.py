"""Explicit 2-cocycles on small abelian p-groups, in exponent form.

A table stores e(s, t) with phi(s, t) = zeta**e(s, t) for a primitive
p**n1-th root of unity zeta.  Rows and columns follow the element order of
:func:`~twisted_center.group_shape.enumerate_elements`.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import (
    InputError,
    NotACocycle,
    PairingOrderViolation,
    TooLargeToValidate,
    WrongDimensions,
)
from .group_shape import PGroupShape, group_order
from .pairing import PairingMatrix, entry_modulus, scale_factor, validate_pairing_matrix

DEFAULT_MAX_VALIDATE = 512
DEFAULT_MAX_REALIZE = 4096


def element_array(shape: PGroupShape) -> np.ndarray:
    """All elements as rows of an (|G|, m) array, in enumeration order."""
    grids = np.indices(shape.orders, dtype=np.int64)
    return grids.reshape(shape.rank, -1).T.copy()


def _weights(shape: PGroupShape) -> np.ndarray:
    w, acc = [], 1
    for q in reversed(shape.orders):
        w.append(acc)
        acc *= q
    return np.array(w[::-1], dtype=np.int64)


def addition_table(shape: PGroupShape) -> np.ndarray:
    """``add[i, j]`` is the index of element i + element j."""
    E = element_array(shape)
    q = np.array(shape.orders, dtype=np.int64)
    sums = (E[:, None, :] + E[None, :, :]) % q
    return sums @ _weights(shape)


@dataclass(frozen=True, eq=False)
class CocycleTable:
    shape: PGroupShape
    values: np.ndarray

    @classmethod
    def from_grid(cls, shape: PGroupShape, grid: Sequence[Sequence[int]]) -> CocycleTable:
        order = group_order(shape)
        if len(grid) != order or any(len(row) != order for row in grid):
            raise WrongDimensions(f"cocycle table must be {order}x{order} for {shape}")
        try:
            values = np.array(grid, dtype=np.int64)
        except (TypeError, ValueError, OverflowError) as exc:
            raise InputError(f"cocycle table must hold integers: {exc}")
        return cls(shape, values % shape.modulus)

    def value(self, sigma, tau) -> int:
        return int(self.values[self.shape.index(sigma), self.shape.index(tau)])

    def __eq__(self, other):
        if not isinstance(other, CocycleTable):
            return NotImplemented
        return self.shape == other.shape and np.array_equal(self.values, other.values)


def validate_cocycle(table: CocycleTable, max_order: int = DEFAULT_MAX_VALIDATE) -> None:
    """Check e(s,t) + e(s+t,r) == e(t,r) + e(s,t+r) for every triple.

    Raises NotACocycle naming the lexicographically smallest failing triple.
    """
    shape = table.shape
    order = group_order(shape)
    if order > max_order:
        raise TooLargeToValidate(order, max_order)
    V = table.values
    N = shape.modulus
    add = addition_table(shape)
    for s in range(order):
        lhs = V[s][:, None] + V[add[s]]
        rhs = V + V[s][add]
        bad = np.argwhere((lhs - rhs) % N)
        if len(bad):
            t, r = bad[0]
            E = element_array(shape)
            raise NotACocycle(*(tuple(int(c) for c in E[i]) for i in (s, t, r)))


def commutator_exponents(table: CocycleTable) -> np.ndarray:
    """Exponent of f(s, t) = phi(s, t) / phi(t, s) for every pair."""
    return (table.values - table.values.T) % table.shape.modulus


def derive_pairing(table: CocycleTable) -> PairingMatrix:
    shape = table.shape
    N = shape.modulus
    gen_idx = [shape.index(shape.generator(u)) for u in range(shape.rank)]
    m = shape.rank
    grid = [[0] * m for _ in range(m)]
    for u in range(m):
        for v in range(m):
            x = int(table.values[gen_idx[u], gen_idx[v]] - table.values[gen_idx[v], gen_idx[u]]) % N
            k = scale_factor(shape, u, v)
            if x % k:
                raise PairingOrderViolation(u + 1, v + 1, x, k)
            grid[u][v] = (x // k) % entry_modulus(shape, u, v)
    # re-check rather than trust the construction
    return validate_pairing_matrix(shape, grid)


def realize_cocycle(A: PairingMatrix, max_order: int = DEFAULT_MAX_REALIZE) -> CocycleTable:
    """Bilinear cocycle e(a, b) = sum_{u > v} k_uv * x_uv * a_u * b_v mod p**n1.

    ``k_uv`` is the normalization scale, so the commutator of the result on
    generators reproduces ``A``.
    """
    shape = A.shape
    order = group_order(shape)
    if order > max_order:
        raise TooLargeToValidate(order, max_order)
    m = shape.rank
    L = np.zeros((m, m), dtype=np.int64)
    for u in range(m):
        for v in range(u):
            L[u, v] = A.entries[u][v] * scale_factor(shape, u, v) % shape.modulus
    E = element_array(shape)
    values = ((E @ L) % shape.modulus) @ E.T % shape.modulus
    return CocycleTable(shape, values)
