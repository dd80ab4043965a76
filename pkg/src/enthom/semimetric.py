"""Entanglement semi-metrics on the qubit point cloud.

Two distances are built from a bipartite monotone E:

* ``"d"``      -- 1 / E(i, j): reciprocal pairwise entanglement.
* ``"dtilde"`` -- 1 / [E(i, j) + prod over every bipartition separating i
  from j of E(S + {i}, S̄ + {j})], S running over subsets of the remaining
  qubits.  The product term is nonzero exactly when no separating cut is a
  product cut, which is what makes this distance detect separability.

Entries are strictly positive or +inf (the defining denominator below
``zero_eps``); the diagonal is 0.  Neither distance satisfies the triangle
inequality, so nothing downstream may assume it.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

import numpy as np

from .errors import DiagonalQuery
from .monotones import DEFAULT_ZERO_EPS, monotone
from .statevec import PureState

DISTANCE_KINDS = ("d", "dtilde")


@dataclass(frozen=True)
class DistanceMatrix:
    """Symmetric extended-real pairwise distances over the qubit cloud."""

    n: int
    which: str
    kind: str
    entries: np.ndarray

    def __post_init__(self):
        self.entries.setflags(write=False)

    def __getitem__(self, ij) -> float:
        return float(self.entries[ij])

    def finite_edges(self) -> tuple[tuple[int, int], ...]:
        """Unordered pairs at finite distance, lexicographically sorted."""
        return tuple((i, j) for i in range(self.n) for j in range(i + 1, self.n)
                     if math.isfinite(self.entries[i, j]))

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "which": self.which,
            "kind": self.kind,
            "entries": [["inf" if math.isinf(v) else float(v) for v in row]
                        for row in self.entries],
        }


def _check_pair(n: int, i: int, j: int):
    if i == j:
        raise DiagonalQuery("distance queried on the diagonal; it is 0 by definition")
    if not (0 <= i < n and 0 <= j < n):
        raise ValueError(f"qubit pair ({i}, {j}) out of range for n={n}")


def _invert(denominator: float, zero_eps: float) -> float:
    return math.inf if denominator < zero_eps else 1.0 / denominator


def _snapped(mv) -> float:
    """Monotone value with sub-threshold noise treated as exactly 0."""
    return 0.0 if mv.is_zero else mv.value


def pair_distance(state: PureState, i: int, j: int, kind: str = "negativity",
                  zero_eps: float = DEFAULT_ZERO_EPS) -> float:
    """Reciprocal pairwise entanglement; +inf when the pair is unentangled."""
    _check_pair(state.n, i, j)
    return _invert(_snapped(monotone(state, (i,), (j,), kind, zero_eps)), zero_eps)


def separating_cuts(n: int, i: int, j: int, unordered: bool = False):
    """Bipartitions (A, B) of all n qubits with i in A and j in B.

    A = S + {i}, B = S̄ + {j} for S over the power set of the other qubits;
    each such cut arises from exactly one S, so the enumeration has no
    duplicates and ``unordered`` (deduplication of cuts equal as unordered
    set pairs) never removes anything for n >= 3.
    """
    rest = [q for q in range(n) if q != i and q != j]
    seen = set()
    for r in range(len(rest) + 1):
        for s in itertools.combinations(rest, r):
            part_a = tuple(sorted(s + (i,)))
            part_b = tuple(sorted(tuple(set(rest) - set(s)) + (j,)))
            if unordered:
                key = frozenset((part_a, part_b))
                if key in seen:
                    continue
                seen.add(key)
            yield part_a, part_b


def cut_distance(state: PureState, i: int, j: int, kind: str = "negativity",
                 zero_eps: float = DEFAULT_ZERO_EPS,
                 unordered_cuts: bool = False) -> float:
    """Distance including the product over every cut separating i from j."""
    _check_pair(state.n, i, j)
    pair = _snapped(monotone(state, (i,), (j,), kind, zero_eps))
    product = 1.0
    for part_a, part_b in separating_cuts(state.n, i, j, unordered=unordered_cuts):
        product *= _snapped(monotone(state, part_a, part_b, kind, zero_eps))
        if product == 0.0:
            break
    return _invert(pair + product, zero_eps)


def distance_matrix(state: PureState, which: str = "dtilde",
                    kind: str = "negativity",
                    zero_eps: float = DEFAULT_ZERO_EPS,
                    unordered_cuts: bool = False) -> DistanceMatrix:
    """Full symmetric matrix, one evaluation per unordered pair."""
    which = which.lower()
    if which not in DISTANCE_KINDS:
        raise ValueError(f"unknown distance {which!r}; choose from {DISTANCE_KINDS}")
    n = state.n
    m = np.zeros((n, n))
    for i in range(n):
        for j in range(i + 1, n):
            if which == "d":
                v = pair_distance(state, i, j, kind, zero_eps)
            else:
                v = cut_distance(state, i, j, kind, zero_eps, unordered_cuts)
            m[i, j] = m[j, i] = v
    return DistanceMatrix(n=n, which=which, kind=kind, entries=m)
