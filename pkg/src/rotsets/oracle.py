"""Brute-force ground truth: scan every fraction over d^q - 1 and test unions directly.

Nothing here uses representative sequences or interlacing; rotational
orbits and sets are found by applying sigma_d to explicit point sets.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Sequence

from .arith import RotationNumber, angle_to_tuple
from .enumeration import (
    can_interlace,
    count_orbits,
    count_sets_closed,
    count_sets_recursive,
    enumerate_rep_sequences,
    enumerate_sets,
    least_tuple_to_rep,
    orbit_from_rep,
)
from .errors import BoundExceeded
from .rotation import RotationalOrbit, RotationalSet, detect_rotation, verify_orbit, verify_set

DEFAULT_BOUND = 2**24
DEFAULT_SUBSET_BOUND = 10**6


def _periodic_cycles(d: int, q: int, bound: int) -> List[List[int]]:
    """Numerator cycles of exact length q under x -> d*x mod d^q - 1."""
    den = d**q - 1
    if den > bound:
        raise BoundExceeded(f"{d}^{q} - 1 = {den} exceeds the oracle bound {bound}")
    seen = bytearray(den)
    cycles = []
    for x in range(den):
        if seen[x]:
            continue
        cyc = [x]
        seen[x] = 1
        y = (x * d) % den
        while y != x:
            seen[y] = 1
            cyc.append(y)
            y = (y * d) % den
        if len(cyc) == q:
            cycles.append(cyc)
    return cycles


def brute_force_orbits(d: int, rot: RotationNumber, bound: int = DEFAULT_BOUND) -> List[RotationalOrbit]:
    q = rot.q
    den = d**q - 1
    found = []
    for cyc in _periodic_cycles(d, q, bound):
        pts = [Fraction(x, den) for x in cyc]
        if detect_rotation(d, pts) == (rot.p, q):
            found.append(verify_orbit(d, pts))
    found.sort(key=lambda o: o.least)
    return found


def _rotational_unions(
    d: int, orbits: Sequence[RotationalOrbit], max_k: int, subset_bound: int
) -> Dict[int, List[RotationalSet]]:
    # a sub-union of a rotational set is rotational, so failed prefixes are pruned
    found: Dict[int, List[RotationalSet]] = {k: [] for k in range(1, max_k + 1)}
    tests = 0

    def grow(last: int, size: int, pts: List[Fraction]) -> None:
        nonlocal tests
        found[size].append(verify_set(d, pts))
        if size == max_k:
            return
        for j in range(last + 1, len(orbits)):
            tests += 1
            if tests > subset_bound:
                raise BoundExceeded(f"more than {subset_bound} unions tested")
            union = pts + list(orbits[j].angles)
            if detect_rotation(d, union) is not None:
                grow(j, size + 1, union)

    for i, o in enumerate(orbits):
        grow(i, 1, list(o.angles))
    for sets in found.values():
        sets.sort(key=RotationalSet.key)
    return found


def brute_force_sets(
    d: int,
    rot: RotationNumber,
    k: int,
    bound: int = DEFAULT_BOUND,
    subset_bound: int = DEFAULT_SUBSET_BOUND,
) -> List[RotationalSet]:
    """All unions of k distinct rotational orbits that are themselves rotational.

    Unions are grown one orbit at a time and each is tested directly with
    sigma_d; ``subset_bound`` caps the number of unions tested.
    """
    if k < 1:
        raise ValueError(f"need k >= 1, got {k}")
    orbits = brute_force_orbits(d, rot, bound)
    return _rotational_unions(d, orbits, k, subset_bound)[k]


@dataclass
class OracleReport:
    d: int
    p: int
    q: int
    orbits_found: int = 0
    sets_found_by_k: List[int] = field(default_factory=list)
    mismatches: List[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.mismatches


def _keys(sets: Sequence[RotationalSet]) -> List[tuple]:
    return sorted(s.key() for s in sets)


def cross_check(
    d: int,
    rot: RotationNumber,
    bound: int = DEFAULT_BOUND,
    subset_bound: int = DEFAULT_SUBSET_BOUND,
) -> OracleReport:
    report = OracleReport(d, rot.p, rot.q)
    bad = report.mismatches

    brute = brute_force_orbits(d, rot, bound)
    report.orbits_found = len(brute)
    built = [orbit_from_rep(r, rot) for r in enumerate_rep_sequences(d, rot.q)]
    if sorted(o.least for o in built) != [o.least for o in brute]:
        bad.append("orbit least elements differ between construction and brute force")
    if {o.angles for o in built} != {o.angles for o in brute}:
        bad.append("orbit point sets differ between construction and brute force")
    if len(brute) != count_orbits(d, rot.q):
        bad.append(f"brute force found {len(brute)} orbits, expected {count_orbits(d, rot.q)}")

    recursive = count_sets_recursive(d, rot.q)
    closed = count_sets_closed(d, rot.q)
    if recursive != closed:
        bad.append(f"recursive counts {recursive} != closed counts {closed}")
    top = max(d - 1, 1)
    # search one size past the bound so an oversized set would show up
    unions = _rotational_unions(d, brute, top + 1, subset_bound)
    if unions[top + 1]:
        bad.append(f"found a rotational set with {top + 1} orbits")
    for k in range(1, top + 1):
        brute_sets = unions[k]
        report.sets_found_by_k.append(len(brute_sets))
        if _keys(brute_sets) != _keys(list(enumerate_sets(d, rot, k))):
            bad.append(f"k={k}: brute-force sets differ from clique enumeration")
        if len(brute_sets) != recursive[k - 1]:
            bad.append(f"k={k}: {len(brute_sets)} sets found, formulas give {recursive[k - 1]}")
        for s in brute_sets:
            reps = [least_tuple_to_rep(angle_to_tuple(d, rot.q, o.least), rot) for o in s.orbits]
            if not can_interlace(reps):
                bad.append(f"k={k}: set with least points {s.key()} is not interlaceable")
    return report
