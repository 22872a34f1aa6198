"""Kernel of a square matrix over the chain ring Z/p**N.

:func:`diagonalize` reduces the matrix to ``diag(p**v_1, ..., p**v_r, 0, ...)``
with invertible row and column transforms.  The solution set of ``M g = 0``
is the column transform applied to the (obvious) kernel of the diagonal form.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from math import prod
from typing import Sequence

import numpy as np

from .errors import InternalInconsistency, TooLargeToEnumerate
from .group_shape import DEFAULT_MAX_ENUMERATION
from .pairing import NormalizedMatrix
from .ring_zpn import p_valuation, unit_part

Matrix = list[list[int]]


def identity(m: int) -> Matrix:
    return [[int(i == j) for j in range(m)] for i in range(m)]


def matmul(A: Sequence[Sequence[int]], B: Sequence[Sequence[int]], modulus: int) -> Matrix:
    cols = list(zip(*B))
    return [[sum(a * b for a, b in zip(row, col)) % modulus for col in cols] for row in A]


def matvec(A: Sequence[Sequence[int]], x: Sequence[int], modulus: int) -> tuple[int, ...]:
    return tuple(sum(a * b for a, b in zip(row, x)) % modulus for row in A)


def rank_mod_p(A: Sequence[Sequence[int]], p: int) -> int:
    """Rank over the field Z/p by Gaussian elimination."""
    rows = [[x % p for x in row] for row in A]
    rank = 0
    ncols = len(rows[0]) if rows else 0
    for c in range(ncols):
        pivot = next((r for r in range(rank, len(rows)) if rows[r][c]), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        inv = pow(rows[rank][c], -1, p)
        rows[rank] = [x * inv % p for x in rows[rank]]
        for r in range(len(rows)):
            if r != rank and rows[r][c]:
                f = rows[r][c]
                rows[r] = [(x - f * y) % p for x, y in zip(rows[r], rows[rank])]
        rank += 1
    return rank


def is_invertible(A: Sequence[Sequence[int]], p: int) -> bool:
    """Invertibility over Z/p**n for any n >= 1 (decided mod p)."""
    return rank_mod_p(A, p) == len(A)


@dataclass(frozen=True)
class DiagonalForm:
    p: int
    modulus: int
    diag_valuations: tuple[int, ...]
    zero_count: int
    row_transform: Matrix = field(repr=False)
    col_transform: Matrix = field(repr=False)

    @property
    def size(self) -> int:
        return len(self.diag_valuations) + self.zero_count

    def diagonal(self) -> Matrix:
        D = [[0] * self.size for _ in range(self.size)]
        for i, v in enumerate(self.diag_valuations):
            D[i][i] = self.p**v
        return D


def diagonalize(At: NormalizedMatrix, rng: random.Random | None = None) -> DiagonalForm:
    """Return R, C, D with R @ At @ C == D.

    The pivot is a minimum-valuation entry of the remaining submatrix, ties
    broken by smallest (row, col), or uniformly at random when ``rng`` is given.
    """
    p, N = At.shape.p, At.modulus
    top = At.shape.top_exponent
    m = At.size
    M = [list(row) for row in At.entries]
    R, C = identity(m), identity(m)
    valuations = []

    for k in range(m):
        best, candidates = top, []
        for i in range(k, m):
            for j in range(k, m):
                if M[i][j]:
                    v = p_valuation(M[i][j], p, top)
                    if v < best:
                        best, candidates = v, [(i, j)]
                    elif v == best:
                        candidates.append((i, j))
        if not candidates:
            break
        i, j = rng.choice(candidates) if rng is not None else candidates[0]
        M[k], M[i] = M[i], M[k]
        R[k], R[i] = R[i], R[k]
        for row in itertools.chain(M, C):
            row[k], row[j] = row[j], row[k]

        v, u = unit_part(M[k][k], p, N)
        u_inv = pow(u, -1, N)
        M[k] = [x * u_inv % N for x in M[k]]
        R[k] = [x * u_inv % N for x in R[k]]
        pk = p**v

        for i in range(k + 1, m):
            if M[i][k]:
                f = M[i][k] // pk
                M[i] = [(x - f * y) % N for x, y in zip(M[i], M[k])]
                R[i] = [(x - f * y) % N for x, y in zip(R[i], R[k])]
        for j in range(k + 1, m):
            if M[k][j]:
                f = M[k][j] // pk
                for row in itertools.chain(M, C):
                    row[j] = (row[j] - f * row[k]) % N
        valuations.append(v)

    form = DiagonalForm(p, N, tuple(valuations), m - len(valuations), R, C)
    if matmul(matmul(R, At.entries, N), C, N) != form.diagonal():
        raise InternalInconsistency("row/column transforms do not reproduce the diagonal form")
    return form


@dataclass(frozen=True)
class KernelDescription:
    """Solutions of ``At g == 0`` over (Z/p**N)^m.

    ``per_variable`` is set when the solution set is a coordinate box; entry
    ``s`` is the exponent c with ``g_s`` ranging over multiples of p**c.
    """

    p: int
    modulus: int
    size: int
    generators: tuple[tuple[int, ...], ...]
    per_variable: tuple[int, ...] | None = None
    diag_valuations: tuple[int, ...] = ()

    def describe_variables(self) -> list[str] | None:
        if self.per_variable is None:
            return None
        out = []
        for s, c in enumerate(self.per_variable, start=1):
            step = self.p**c
            if step >= self.modulus:
                out.append(f"x{s} = 0 mod {self.modulus}")
            elif step == 1:
                out.append(f"x{s} free mod {self.modulus}")
            else:
                values = range(0, self.modulus, step)
                shown = ",".join(map(str, values)) if len(values) <= 4 else (
                    f"0,{step},...,{self.modulus - step}")
                out.append(f"x{s} in {{{shown}}} mod {self.modulus}")
        return out


def kernel(At: NormalizedMatrix, form: DiagonalForm | None = None) -> KernelDescription:
    if form is None:
        form = diagonalize(At)
    p, N = form.p, form.modulus
    top = At.shape.top_exponent
    m = At.size
    r = len(form.diag_valuations)
    size = prod(p**v for v in form.diag_valuations) * N**form.zero_count

    C = form.col_transform
    coords = []
    for i, v in enumerate(form.diag_valuations):
        if v > 0:
            coords.append((i, p ** (top - v)))
    coords.extend((i, 1) for i in range(r, m))
    generators = []
    for i, scale in coords:
        g = tuple(C[s][i] * scale % N for s in range(m))
        if any(g) and g not in generators:
            generators.append(g)
    for g in generators:
        if any(matvec(At.entries, g, N)):
            raise InternalInconsistency(f"kernel generator {g} is not a solution")

    per_variable = _box_exponents(generators, p, top, m)
    if per_variable is not None and prod(p ** (top - c) for c in per_variable) != size:
        per_variable = None
    return KernelDescription(p, N, size, tuple(generators), per_variable, form.diag_valuations)


def _box_exponents(generators, p, top, m):
    # smallest valuation of each coordinate over the generators; the span is
    # contained in the box these define, and equals it iff the sizes agree
    return tuple(
        min((p_valuation(g[s], p, top) for g in generators), default=top) for s in range(m)
    )


def span(generators: Sequence[Sequence[int]], m: int, modulus: int) -> set[tuple[int, ...]]:
    """All Z-linear combinations of ``generators`` mod ``modulus``."""
    elements = {(0,) * m}
    for g in generators:
        multiples = []
        x = (0,) * m
        while True:
            multiples.append(x)
            x = tuple((a + b) % modulus for a, b in zip(x, g))
            if not any(x):
                break
        elements = {tuple((a + b) % modulus for a, b in zip(e, k)) for e in elements for k in multiples}
    return elements


def count_solutions_brute(At: NormalizedMatrix, max_vectors: int = DEFAULT_MAX_ENUMERATION) -> int:
    """Count g in (Z/p**N)^m with ``At g == 0`` by trying every vector."""
    N, m = At.modulus, At.size
    total = N**m
    if total > max_vectors:
        raise TooLargeToEnumerate(total, max_vectors)
    if m == 0:
        return 1
    vectors = np.indices((N,) * m, dtype=np.int64).reshape(m, -1)
    images = np.array(At.entries, dtype=np.int64) @ vectors % N
    return int(np.count_nonzero(~images.any(axis=0)))
