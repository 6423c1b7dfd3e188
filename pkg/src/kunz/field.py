"""Exact arithmetic in the prime field F_p for a runtime-chosen prime p.

The prime is a runtime value so one process can sweep several primes.
Coefficients are stored as plain ints in [0, p); FieldElement is the thin
typed wrapper used at API boundaries (points, parsed coefficients), while the
hot loops in the ideal engine work on raw ints against a FieldConfig.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import CapacityError, PreconditionError

MAX_PRIME = 2**31
EXPONENT_CAPACITY_BITS = 63

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic primality check for 0 <= n < 2^31.

    Trial division by a few small primes, then Miller-Rabin with the bases
    2, 3, 5, 7, which is exact for every n below 3 215 031 751 (> 2^31).
    """
    if n < 2:
        return False
    for q in _SMALL_PRIMES:
        if n == q:
            return True
        if n % q == 0:
            return False
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in (2, 3, 5, 7):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@dataclass(frozen=True)
class FieldConfig:
    """The field F_p. Immutable, safe to share between threads."""

    p: int

    def __post_init__(self) -> None:
        if not isinstance(self.p, int) or not 2 <= self.p < MAX_PRIME:
            raise PreconditionError(
                f"characteristic must be an integer in [2, 2^31), got {self.p!r}")
        if not is_prime(self.p):
            raise PreconditionError(f"{self.p} is not prime")

    def reduce(self, value: int) -> int:
        return value % self.p

    def inverse(self, value: int) -> int:
        value %= self.p
        if value == 0:
            raise ZeroDivisionError(f"0 is not invertible in F_{self.p}")
        return pow(value, -1, self.p)

    def element(self, value: int) -> FieldElement:
        return FieldElement(value % self.p, self)

    def __repr__(self) -> str:
        return f"FieldConfig(p={self.p})"


def frobenius_exponent(p: int, e: int) -> int:
    """Return q = p^e, refusing results that do not fit in 63 bits.

    Downstream monomial exponents scale with q, and the 63-bit cap keeps
    every exponent inside a machine word on the compiled backend.
    """
    if e < 0:
        raise PreconditionError(f"Frobenius exponent must be non-negative, got {e}")
    q = p**e
    if q.bit_length() > EXPONENT_CAPACITY_BITS:
        raise CapacityError(
            f"p^e = {p}^{e} exceeds the {EXPONENT_CAPACITY_BITS}-bit capacity")
    return q


@dataclass(frozen=True)
class FieldElement:
    """A fully reduced element of F_p."""

    value: int
    field: FieldConfig

    def __post_init__(self) -> None:
        if not 0 <= self.value < self.field.p:
            object.__setattr__(self, "value", self.value % self.field.p)

    def _check(self, other: FieldElement) -> None:
        if self.field.p != other.field.p:
            raise PreconditionError(
                f"mixed characteristics {self.field.p} and {other.field.p}")

    def __add__(self, other: FieldElement) -> FieldElement:
        self._check(other)
        return FieldElement((self.value + other.value) % self.field.p, self.field)

    def __sub__(self, other: FieldElement) -> FieldElement:
        self._check(other)
        return FieldElement((self.value - other.value) % self.field.p, self.field)

    def __mul__(self, other: FieldElement) -> FieldElement:
        self._check(other)
        return FieldElement(self.value * other.value % self.field.p, self.field)

    def __neg__(self) -> FieldElement:
        return FieldElement(-self.value % self.field.p, self.field)

    def inverse(self) -> FieldElement:
        return FieldElement(self.field.inverse(self.value), self.field)

    def __truediv__(self, other: FieldElement) -> FieldElement:
        self._check(other)
        return self * other.inverse()

    def __bool__(self) -> bool:
        return self.value != 0

    def __repr__(self) -> str:
        return f"{self.value} (mod {self.field.p})"
