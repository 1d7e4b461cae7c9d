"""Rotational orbits and sets: detection, verification and decomposition."""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Tuple

from .arith import (
    DigitTuple,
    RotationNumber,
    angle_to_tuple,
    exact_period,
    sigma,
    sigma_pow,
)
from .errors import LengthMismatch, NotRotational, NotSingleOrbit


@dataclass(frozen=True)
class RotationalOrbit:
    degree: int
    rotation: RotationNumber
    angles: Tuple[Fraction, ...]
    least_tuple: DigitTuple

    @property
    def least(self) -> Fraction:
        return self.angles[0]


@dataclass(frozen=True)
class RotationalSet:
    """A sigma_d-rotational union of ``orbit_count`` interlaced orbits.

    ``raw_shift`` is the set-level ``(p_raw, size)``; ``reduced_rotation`` is
    its lowest-terms form, shared by every orbit.
    """

    degree: int
    reduced_rotation: RotationNumber
    orbit_count: int
    angles: Tuple[Fraction, ...]
    orbits: Tuple[RotationalOrbit, ...]
    raw_shift: Tuple[int, int]

    def key(self) -> Tuple[Fraction, ...]:
        return tuple(o.least for o in self.orbits)


def detect_rotation(d: int, angles: Iterable[Fraction]) -> Optional[Tuple[int, int]]:
    """Return ``(p_raw, size)`` if sigma_d shifts the sorted points by a fixed p_raw != 0.

    The shift is read off the least element's image, then checked on every point.
    """
    pts = sorted(set(angles))
    if not pts:
        return None
    size = len(pts)
    index = {t: i for i, t in enumerate(pts)}
    shift = index.get(sigma(d, pts[0]))
    if not shift:
        return None
    for i, t in enumerate(pts):
        if index.get(sigma(d, t)) != (i + shift) % size:
            return None
    return shift, size


def verify_orbit(d: int, angles: Iterable[Fraction]) -> RotationalOrbit:
    pts = tuple(sorted(set(angles)))
    found = detect_rotation(d, pts)
    if found is None:
        raise NotRotational(f"points are not sigma_{d}-rotational")
    p_raw, q = found
    if math.gcd(p_raw, q) != 1:
        raise NotSingleOrbit(
            f"shift {p_raw}/{q} is not in lowest terms: {math.gcd(p_raw, q)} orbits"
        )
    rot = RotationNumber.of(p_raw, q)
    # sigma^{p*} must advance the sorted list by exactly one place
    for i, t in enumerate(pts):
        if sigma_pow(d, rot.p_star, t) != pts[(i + 1) % q]:
            raise AssertionError(f"sigma^{rot.p_star} fails to advance {t}")
    least = angle_to_tuple(d, q, pts[0])
    if exact_period(least) != q:
        raise AssertionError(f"least tuple {least} does not have exact period {q}")
    return RotationalOrbit(d, rot, pts, least)


def _orbit_of(d: int, t: Fraction) -> list:
    out = [t]
    s = sigma(d, t)
    while s != t:
        out.append(s)
        s = sigma(d, s)
    return out


def verify_set(d: int, angles: Iterable[Fraction]) -> RotationalSet:
    pts = tuple(sorted(set(angles)))
    found = detect_rotation(d, pts)
    if found is None:
        raise NotRotational(f"points are not sigma_{d}-rotational")
    p_raw, size = found
    n = math.gcd(p_raw, size)

    label = {}
    orbits = []
    for t in pts:
        if t in label:
            continue
        members = _orbit_of(d, t)
        for s in members:
            label[s] = len(orbits)
        orbits.append(verify_orbit(d, members))
    if len(orbits) != n:
        raise AssertionError(f"expected {n} orbits, found {len(orbits)}")
    reduced = RotationNumber.of(p_raw // n, size // n)
    for o in orbits:
        if (o.rotation.p, o.rotation.q) != (reduced.p, reduced.q):
            raise AssertionError(f"orbit rotation {o.rotation} differs from {reduced}")
    for i in range(size):
        window = {label[pts[(i + j) % size]] for j in range(n)}
        if len(window) != n:
            raise AssertionError(f"orbits are not interlaced at position {i}")
    return RotationalSet(d, reduced, n, pts, tuple(orbits), (p_raw, size))


def is_rotational(d: int, angles: Iterable[Fraction]) -> bool:
    return detect_rotation(d, angles) is not None


def check_least_condition(T: DigitTuple, rot: RotationNumber) -> bool:
    """Whether ``T`` is the least point of a rotational orbit with rotation ``rot``.

    Reorders the digits as a_0, a_{p*}, a_{2p*}, ... and requires a
    nondecreasing sequence with a strict step entering position q - p.
    """
    q, p = rot.q, rot.p
    if len(T) != q:
        raise LengthMismatch(f"tuple of length {len(T)} for rotation {rot}")
    seq = [T[k * rot.p_star] for k in range(q)]
    if any(a > b for a, b in zip(seq, seq[1:])):
        return False
    return seq[q - p - 1] < seq[q - p]


def zero_preimage_between(d: int, s: Fraction, t: Fraction) -> bool:
    """True iff some j/d, 1 <= j <= d-1, lies strictly between s < t."""
    if not s < t:
        raise ValueError(f"need s < t, got {s}, {t}")
    j = math.floor(s * d) + 1
    return j <= d - 1 and Fraction(j, d) < t

