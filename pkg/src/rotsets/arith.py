"""Exact arithmetic on the circle R/Z and the base-d digit-tuple codec.

Points of the circle are ``fractions.Fraction`` values in ``[0, 1)``; they are
always reduced, so equality and hashing are canonical.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Union

from .errors import NotCoprime, NotPeriodic

Angle = Fraction


def angle(value: Union[Fraction, int, str], den: int = 1) -> Fraction:
    """Build a point of the circle, reducing ``value / den`` modulo 1.

    >>> angle(8, 26)
    Fraction(4, 13)
    >>> angle("25/24")
    Fraction(1, 24)
    """
    t = Fraction(value) / den
    return t - math.floor(t)


def sigma(d: int, t: Fraction) -> Fraction:
    """The angle-multiplying map t -> d*t mod 1."""
    if d < 2:
        raise ValueError(f"degree must be >= 2, got {d}")
    return Fraction((d * t.numerator) % t.denominator, t.denominator)


def sigma_pow(d: int, k: int, t: Fraction) -> Fraction:
    if d < 2:
        raise ValueError(f"degree must be >= 2, got {d}")
    if k < 0:
        raise ValueError(f"iterate count must be >= 0, got {k}")
    den = t.denominator
    return Fraction((pow(d, k, den) * t.numerator) % den, den)


@dataclass(frozen=True, order=True)
class DigitTuple:
    """Digits ``(a_0, ..., a_{q-1})`` of the periodic base-d expansion 0.(a_0...a_{q-1}).

    Indexing is cyclic: ``T[-1]`` and ``T[q]`` are both valid. Ordering among
    tuples of equal degree and length is lexicographic, which agrees with the
    order of the corresponding angles.
    """

    degree: int
    digits: tuple

    def __post_init__(self):
        if self.degree < 2:
            raise ValueError(f"degree must be >= 2, got {self.degree}")
        digits = tuple(int(a) for a in self.digits)
        if not digits:
            raise ValueError("a digit tuple needs at least one digit")
        if any(a < 0 or a >= self.degree for a in digits):
            raise ValueError(f"digits {digits} out of range for base {self.degree}")
        object.__setattr__(self, "digits", digits)

    def __len__(self) -> int:
        return len(self.digits)

    def __getitem__(self, i: int) -> int:
        return self.digits[i % len(self.digits)]

    def __iter__(self):
        return iter(self.digits)

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.digits)) + ")"


def tuple_to_angle(T: DigitTuple) -> Fraction:
    """Value of 0.(a_0...a_{q-1}) repeating, i.e. the digit integer over d^q - 1.

    The all-(d-1) tuple denotes 1, which is the point 0 of the circle.
    """
    num = 0
    for a in T.digits:
        num = num * T.degree + a
    den = T.degree ** len(T) - 1
    return Fraction(num % den, den)


def angle_to_tuple(d: int, q: int, t: Fraction) -> DigitTuple:
    """Inverse of :func:`tuple_to_angle` for points of period dividing ``q``."""
    if q < 1:
        raise ValueError(f"tuple length must be >= 1, got {q}")
    den = d**q - 1
    num, rem = divmod(t.numerator * den, t.denominator)
    if rem or not 0 <= t < 1:
        raise NotPeriodic(f"{t} has no {q}-digit periodic base-{d} expansion")
    digits = [0] * q
    for i in range(q - 1, -1, -1):
        num, digits[i] = divmod(num, d)
    return DigitTuple(d, tuple(digits))


def tuple_shift(T: DigitTuple, k: int) -> DigitTuple:
    """Cyclic left shift by ``k`` (any integer, taken mod q); the digit form of sigma^k."""
    k %= len(T)
    return DigitTuple(T.degree, T.digits[k:] + T.digits[:k])


def exact_period(T: DigitTuple) -> int:
    q = len(T)
    for r in range(1, q + 1):
        if q % r == 0 and T.digits[r:] + T.digits[:r] == T.digits:
            return r
    raise AssertionError("unreachable: the full length is always a period")


def mod_inverse(p: int, q: int) -> int:
    """Inverse of ``p`` modulo ``q``, normalised to ``[1, q)``."""
    if q < 2:
        raise ValueError(f"modulus must be >= 2, got {q}")
    if math.gcd(p, q) != 1:
        raise NotCoprime(f"gcd({p}, {q}) = {math.gcd(p, q)} != 1")
    return pow(p, -1, q)


def binomial(n: int, k: int) -> int:
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


@dataclass(frozen=True)
class RotationNumber:
    """A reduced rotation number p/q with 1 <= p < q, caching p* = p^-1 mod q.

    Build it with :meth:`of`, which validates and computes the inverse.
    """

    p: int
    q: int
    p_star: int

    @classmethod
    def of(cls, p: int, q: int) -> "RotationNumber":
        if q < 2 or not 1 <= p < q:
            raise ValueError(f"need 1 <= p < q and q >= 2, got p={p}, q={q}")
        return cls(p, q, mod_inverse(p, q))

    def __post_init__(self):
        if (self.p * self.p_star) % self.q != 1 or not 1 <= self.p_star < self.q:
            raise ValueError(f"{self.p_star} is not the inverse of {self.p} mod {self.q}")

    def __str__(self) -> str:
        return f"{self.p}/{self.q}"


def digits_of(d: int, digits: Sequence[int]) -> DigitTuple:
    """Shorthand constructor, ``digits_of(4, [0, 1, 3, 1, 2])``."""
    return DigitTuple(d, tuple(digits))
