"""The commutator matrix of a twisted group algebra in discrete-log form.

Entry (u, v) is the exponent x with f(e_u, e_v) = w**x, where w is a root of
unity of order p**min(n_u, n_v).  Entries are stored canonically mod that
order.  Normalizing rescales every entry to an exponent of a single primitive
p**n1-th root of unity.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import cached_property
from typing import Sequence

from .errors import InputError, NonzeroDiagonal, NotAntisymmetric, WrongDimensions
from .group_shape import GeneratorId, LiftedElement, PGroupShape
from .ring_zpn import Modulus, Residue

Grid = tuple[tuple[int, ...], ...]


def entry_modulus(shape: PGroupShape, u: int, v: int) -> int:
    return shape.p ** min(shape.exponents[u], shape.exponents[v])


def scale_factor(shape: PGroupShape, u: int, v: int) -> int:
    return shape.p ** (shape.top_exponent - min(shape.exponents[u], shape.exponents[v]))


@dataclass(frozen=True)
class PairingMatrix:
    shape: PGroupShape
    entries: Grid

    def residue(self, u: int, v: int) -> Residue:
        s = self.shape
        return Modulus(s.p, min(s.exponents[u], s.exponents[v]))(self.entries[u][v])

    def block(self, i: int, j: int) -> Grid:
        """Block A_ij (0-based block indices)."""
        rows, cols = self.shape.block_slices[i], self.shape.block_slices[j]
        return tuple(row[cols] for row in self.entries[rows])

    def is_zero(self) -> bool:
        return not any(any(row) for row in self.entries)

    def to_lists(self) -> list[list[int]]:
        return [list(row) for row in self.entries]


@dataclass(frozen=True)
class NormalizedMatrix:
    shape: PGroupShape
    entries: Grid

    @property
    def modulus(self) -> int:
        return self.shape.modulus

    @cached_property
    def ring(self) -> Modulus:
        return Modulus(self.shape.p, self.shape.top_exponent)

    @property
    def size(self) -> int:
        return len(self.entries)

    def to_lists(self) -> list[list[int]]:
        return [list(row) for row in self.entries]


def validate_pairing_matrix(shape: PGroupShape, raw: Sequence[Sequence[int]]) -> PairingMatrix:
    """Canonicalize ``raw`` and check zero diagonal and antisymmetry.

    Errors report 1-based generator indices.
    """
    m = shape.rank
    if len(raw) != m or any(len(row) != m for row in raw):
        raise WrongDimensions(f"expected a {m}x{m} matrix for {shape}")
    for row in raw:
        for x in row:
            if not isinstance(x, int) or isinstance(x, bool):
                raise InputError(f"matrix entry {x!r} is not an integer")
    entries = tuple(
        tuple(raw[u][v] % entry_modulus(shape, u, v) for v in range(m)) for u in range(m)
    )
    for u in range(m):
        if entries[u][u]:
            raise NonzeroDiagonal(u + 1)
        for v in range(u + 1, m):
            q = entry_modulus(shape, u, v)
            if (entries[u][v] + entries[v][u]) % q:
                raise NotAntisymmetric(u + 1, v + 1, q)
    return PairingMatrix(shape, entries)


def normalize(A: PairingMatrix) -> NormalizedMatrix:
    shape = A.shape
    N = shape.modulus
    m = shape.rank
    entries = tuple(
        tuple(A.entries[u][v] * scale_factor(shape, u, v) % N for v in range(m))
        for u in range(m)
    )
    return NormalizedMatrix(shape, entries)


def commutation_phase(At: NormalizedMatrix, h: GeneratorId | int, g: LiftedElement) -> Residue:
    """Exponent of the primitive p**n1-th root of unity in f(h, g).

    Zero means the generator ``h`` commutes with the monomial of ``g``.
    """
    row = At.entries[h.flat if isinstance(h, GeneratorId) else h]
    if len(g) != len(row):
        raise WrongDimensions(f"element has {len(g)} coordinates, expected {len(row)}")
    return Residue(sum(a * b for a, b in zip(row, g)), At.ring)


def random_pairing(shape: PGroupShape, rng: random.Random) -> PairingMatrix:
    """Uniformly random valid pairing matrix on ``shape``."""
    m = shape.rank
    grid = [[0] * m for _ in range(m)]
    for u in range(m):
        for v in range(u + 1, m):
            q = entry_modulus(shape, u, v)
            x = rng.randrange(q)
            grid[u][v] = x
            grid[v][u] = -x % q
    return PairingMatrix(shape, tuple(map(tuple, grid)))


def format_grid(grid: Sequence[Sequence[int]], shape: PGroupShape | None = None) -> str:
    """Render a matrix with block separators when ``shape`` is given."""
    if not grid:
        return "[]"
    width = max(len(str(x)) for row in grid for x in row)
    cuts = set()
    if shape is not None:
        cuts = {sl.stop for sl in shape.block_slices[:-1]}
    lines = []
    for u, row in enumerate(grid):
        if u in cuts:
            lines.append("-" * len(lines[-1]))
        cells = []
        for v, x in enumerate(row):
            if v in cuts:
                cells.append("|")
            cells.append(str(x).rjust(width))
        lines.append(" ".join(cells))
    return "\n".join(lines)
