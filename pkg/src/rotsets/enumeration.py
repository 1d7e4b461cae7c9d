"""Representative sequences, orbit and set construction, interlacing graphs, counts.

A sigma_d-rotational orbit with rotation number p/q corresponds to exactly
one nondecreasing length-q sequence over {0, ..., d-2} (its representative
sequence); a family of orbits unions to a rotational set exactly when their
sequences can be interlaced column by column into one nondecreasing sequence.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations_with_replacement
from typing import Dict, FrozenSet, Iterator, List, Sequence, Tuple

from .arith import (
    DigitTuple,
    RotationNumber,
    binomial,
    exact_period,
    sigma,
    tuple_to_angle,
)
from .errors import (
    DuplicateOrbit,
    InternalPeriodViolation,
    InvalidSequence,
    LengthMismatch,
    MixedParameters,
    NotInterlaceable,
    NotLeastElement,
)
from .rotation import RotationalOrbit, RotationalSet, check_least_condition, verify_orbit, verify_set


@dataclass(frozen=True, order=True)
class RepSequence:
    degree: int
    terms: Tuple[int, ...]

    def __post_init__(self):
        terms = tuple(int(b) for b in self.terms)
        object.__setattr__(self, "terms", terms)
        if self.degree < 2:
            raise InvalidSequence(f"degree must be >= 2, got {self.degree}")
        if not terms:
            raise InvalidSequence("empty sequence")
        if any(b < 0 or b > self.degree - 2 for b in terms):
            raise InvalidSequence(f"terms {terms} must lie in [0, {self.degree - 2}]")
        if any(a > b for a, b in zip(terms, terms[1:])):
            raise InvalidSequence(f"terms {terms} are not nondecreasing")

    def __len__(self) -> int:
        return len(self.terms)

    def label(self) -> str:
        """Digits run together, e.g. ``"0012"``; comma-separated once digits exceed 9."""
        if self.degree - 2 > 9:
            return ",".join(map(str, self.terms))
        return "".join(map(str, self.terms))


def rep(d: int, terms: Sequence[int]) -> RepSequence:
    return RepSequence(d, tuple(terms))


def enumerate_rep_sequences(d: int, q: int) -> Iterator[RepSequence]:
    """All C(d-2+q, d-2) representative sequences, lexicographically."""
    if d < 2 or q < 2:
        raise ValueError(f"need d >= 2 and q >= 2, got d={d}, q={q}")
    for terms in combinations_with_replacement(range(d - 1), q):
        yield RepSequence(d, terms)


def rep_to_least_tuple(seq: RepSequence, rot: RotationNumber) -> DigitTuple:
    q, p = rot.q, rot.p
    if len(seq) != q:
        raise LengthMismatch(f"sequence of length {len(seq)} for rotation {rot}")
    digits = [0] * q
    for k, b in enumerate(seq.terms):
        digits[(k * rot.p_star) % q] = b + (k >= q - p)
    return DigitTuple(seq.degree, tuple(digits))


def least_tuple_to_rep(T: DigitTuple, rot: RotationNumber) -> RepSequence:
    if not check_least_condition(T, rot):
        raise NotLeastElement(f"{T} is not the least point of a {rot} rotational orbit")
    q, p = rot.q, rot.p
    terms = tuple(T[k * rot.p_star] - (k >= q - p) for k in range(q))
    return RepSequence(T.degree, terms)


def orbit_from_rep(seq: RepSequence, rot: RotationNumber) -> RotationalOrbit:
    T = rep_to_least_tuple(seq, rot)
    if exact_period(T) != rot.q:
        raise InternalPeriodViolation(f"{T} built from {seq.terms} has period {exact_period(T)}")
    d = seq.degree
    t = tuple_to_angle(T)
    pts = [t]
    for _ in range(rot.q - 1):
        pts.append(sigma(d, pts[-1]))
    orbit = verify_orbit(d, pts)
    if (orbit.rotation.p, orbit.rotation.q) != (rot.p, rot.q) or orbit.least != t:
        raise AssertionError(f"{seq.terms} produced {orbit.rotation} with least {orbit.least}")
    return orbit


def _check_family(reps: Sequence[RepSequence]) -> None:
    if not reps:
        raise ValueError("need at least one sequence")
    shape = {(r.degree, len(r)) for r in reps}
    if len(shape) != 1:
        raise MixedParameters(f"sequences disagree on (d, q): {sorted(shape)}")


def merge(reps: Sequence[RepSequence]) -> List[int]:
    """Column-by-column merge b_0^(1), ..., b_0^(n), b_1^(1), ... of the given sequences."""
    return [r.terms[i] for i in range(len(reps[0])) for r in reps]


def can_interlace(reps: Sequence[RepSequence]) -> bool:
    # A valid interlacing order is forced to be the lexicographic one.
    _check_family(reps)
    ordered = sorted(reps)
    if any(a == b for a, b in zip(ordered, ordered[1:])):
        return False
    merged = merge(ordered)
    return all(a <= b for a, b in zip(merged, merged[1:]))


def set_from_reps(reps: Sequence[RepSequence], rot: RotationNumber) -> RotationalSet:
    _check_family(reps)
    ordered = sorted(reps)
    for a, b in zip(ordered, ordered[1:]):
        if a == b:
            raise DuplicateOrbit(f"sequence {a.terms} given twice")
    if not can_interlace(ordered):
        raise NotInterlaceable(f"sequences {[r.terms for r in ordered]} cannot be interlaced")
    pts = [t for r in ordered for t in orbit_from_rep(r, rot).angles]
    result = verify_set(ordered[0].degree, pts)
    n = len(ordered)
    if result.raw_shift != (n * rot.p, n * rot.q):
        raise AssertionError(f"unexpected set-level shift {result.raw_shift}")
    return result


def count_orbits(d: int, q: int) -> int:
    return binomial(d - 2 + q, d - 2)


def count_sets_recursive(d: int, q: int) -> List[int]:
    """N_1, ..., N_{d-1} by forward substitution through the binomial-matrix recursion."""
    counts: List[int] = []
    for k in range(1, max(d - 1, 1) + 1):
        total = binomial(d - 2 + k * q, d - 2)
        total -= sum(binomial(k - 1, j - 1) * counts[j - 1] for j in range(1, k))
        counts.append(total)
    return counts


def count_sets_closed(d: int, q: int) -> List[int]:
    return [
        sum(
            (-1) ** (k + j) * binomial(k - 1, j - 1) * binomial(d - 2 + j * q, d - 2)
            for j in range(1, k + 1)
        )
        for k in range(1, max(d - 1, 1) + 1)
    ]


def binomial_inversion_check(m: int) -> bool:
    """Exact check that [C(i-1, j-1)] and [(-1)^(i+j) C(i-1, j-1)] are inverse m x m matrices."""
    L = [[binomial(i, j) for j in range(m)] for i in range(m)]
    Linv = [[(-1) ** (i + j) * binomial(i, j) for j in range(m)] for i in range(m)]
    return all(
        sum(L[i][k] * Linv[k][j] for k in range(m)) == (i == j)
        for i in range(m)
        for j in range(m)
    )


@dataclass
class InterlacingGraph:
    """Rep sequences as vertices, joined when the pair can be interlaced.

    ``cliques_by_size[k]`` lists every k-clique as a sorted tuple of vertex
    indices, in lexicographic order.
    """

    degree: int
    rotation: RotationNumber
    vertices: List[RepSequence]
    edges: FrozenSet[Tuple[int, int]]
    cliques_by_size: Dict[int, List[Tuple[int, ...]]] = field(default_factory=dict)

    def sorted_edges(self) -> List[Tuple[int, int]]:
        return sorted(self.edges)

    @property
    def max_clique_size(self) -> int:
        return max(k for k, cl in self.cliques_by_size.items() if cl)


def build_graph(d: int, rot: RotationNumber) -> InterlacingGraph:
    vertices = list(enumerate_rep_sequences(d, rot.q))
    nv = len(vertices)
    nbrs: List[set] = [set() for _ in range(nv)]
    for u in range(nv):
        for v in range(u + 1, nv):
            if can_interlace([vertices[u], vertices[v]]):
                nbrs[u].add(v)
                nbrs[v].add(u)
    edges = frozenset((u, v) for u in range(nv) for v in nbrs[u] if u < v)

    # extend cliques only by higher-indexed common neighbours
    cliques: Dict[int, List[Tuple[int, ...]]] = {k: [] for k in range(1, d)}
    depth = max(d - 1, 1)

    def extend(clique: Tuple[int, ...], candidates: List[int]) -> None:
        cliques.setdefault(len(clique), []).append(clique)
        for i, v in enumerate(candidates):
            rest = [w for w in candidates[i + 1:] if w in nbrs[v]]
            extend(clique + (v,), rest)

    for u in range(nv):
        extend((u,), sorted(w for w in nbrs[u] if w > u))
    for k, found in cliques.items():
        if k > depth and found:
            raise AssertionError(f"found a {k}-clique, above the bound {depth}")
        for c in found:
            if not can_interlace([vertices[i] for i in c]):
                raise AssertionError(f"clique {c} is not jointly interlaceable")
        found.sort()
    return InterlacingGraph(d, rot, vertices, edges, cliques)


def enumerate_sets(d: int, rot: RotationNumber, k: int) -> Iterator[RotationalSet]:
    """Every rotational set made of exactly ``k`` orbits, via the k-cliques of the graph."""
    if not 1 <= k <= max(d - 1, 1):
        raise ValueError(f"need 1 <= k <= {max(d - 1, 1)}, got {k}")
    graph = build_graph(d, rot)
    for clique in graph.cliques_by_size.get(k, []):
        yield set_from_reps([graph.vertices[i] for i in clique], rot)


def clique_witness(d: int, q: int) -> List[RepSequence]:
    """An explicit (d-1)-clique: 0^q together with 0^(q-1)v for 1 <= v <= d-2."""
    return [RepSequence(d, (0,) * (q - 1) + (v,)) for v in range(d - 1)]
