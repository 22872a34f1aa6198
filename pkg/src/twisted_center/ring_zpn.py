"""Residues modulo a prime power p**n."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import NotAUnit, NotPrime

MAX_MODULUS = 2**31


@lru_cache(maxsize=None)
def is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


def p_valuation(x: int, p: int, cap: int) -> int:
    """Largest v <= cap with p**v | x (cap when x == 0)."""
    if x == 0:
        return cap
    v = 0
    while v < cap and x % p == 0:
        x //= p
        v += 1
    return v


@dataclass(frozen=True)
class Modulus:
    p: int
    n: int

    def __post_init__(self):
        if not is_prime(self.p):
            raise NotPrime(self.p)
        if self.n < 1:
            raise ValueError(f"exponent must be >= 1, got {self.n}")
        if self.p**self.n > MAX_MODULUS:
            raise ValueError(f"modulus {self.p}**{self.n} is too large")

    @property
    def order(self) -> int:
        return self.p**self.n

    def __call__(self, value: int) -> Residue:
        return Residue(value, self)

    def __str__(self):
        return f"{self.p}^{self.n}"


@dataclass(frozen=True)
class Residue:
    """Canonical representative in [0, p**n)."""

    value: int
    modulus: Modulus

    def __post_init__(self):
        object.__setattr__(self, "value", self.value % self.modulus.order)

    def _coerce(self, other) -> int:
        if isinstance(other, Residue):
            if other.modulus != self.modulus:
                raise ValueError("residues have different moduli")
            return other.value
        return int(other)

    def __add__(self, other):
        return Residue(self.value + self._coerce(other), self.modulus)

    __radd__ = __add__

    def __sub__(self, other):
        return Residue(self.value - self._coerce(other), self.modulus)

    def __rsub__(self, other):
        return Residue(self._coerce(other) - self.value, self.modulus)

    def __mul__(self, other):
        return Residue(self.value * self._coerce(other), self.modulus)

    __rmul__ = __mul__

    def __neg__(self):
        return Residue(-self.value, self.modulus)

    def __int__(self):
        return self.value

    def __bool__(self):
        return self.value != 0

    @property
    def is_zero(self) -> bool:
        return self.value == 0

    def __repr__(self):
        return f"Residue({self.value} mod {self.modulus})"


def valuation(a: Residue) -> int:
    """p-adic valuation of ``a``; zero is reported as n (check ``a.is_zero``)."""
    return p_valuation(a.value, a.modulus.p, a.modulus.n)


def unit_inverse(a: Residue) -> Residue:
    if a.value % a.modulus.p == 0:
        raise NotAUnit(a.value, a.modulus.order)
    return Residue(pow(a.value, -1, a.modulus.order), a.modulus)


def unit_part(x: int, p: int, modulus: int) -> tuple[int, int]:
    """Split nonzero x mod ``modulus`` (a power of p) as p**v * u with u a unit."""
    x %= modulus
    if x == 0:
        raise ValueError("zero has no unit part")
    v = 0
    while x % p == 0:
        x //= p
        v += 1
    return v, x
