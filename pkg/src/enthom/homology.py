"""Persistence barcodes from filtered complexes, over the two-element field.

The boundary matrix is reduced column by column in filtration order, with
the clearing shortcut: dimensions are processed from the top down, and any
simplex identified as a pivot row (a feature that some higher column kills)
has its own column skipped, since it is guaranteed to reduce to zero.
Columns are kept as sparse index sets; addition over GF(2) is symmetric
difference and the pivot is the largest index.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

from .filtration import FilteredComplex

#: Bars not longer than this (relative to their birth scale) are discarded;
#: exact zero-length pairs and last-ulp ties between symmetric entries both
#: land here.
BAR_LENGTH_TOL = 1e-9


@dataclass(frozen=True)
class Barcode:
    """Per-dimension multiset of [birth, death) intervals, death may be inf."""

    max_dim: int
    bars: dict[int, tuple[tuple[float, float], ...]]

    def dims(self):
        return range(self.max_dim + 1)

    def count(self, dim: int, finite: bool | None = None) -> int:
        bars = self.bars.get(dim, ())
        if finite is None:
            return len(bars)
        return sum(1 for _, d in bars if math.isfinite(d) == finite)

    def to_json(self) -> dict:
        return {"dims": {
            str(k): [[b, "inf" if math.isinf(d) else d] for b, d in self.bars.get(k, ())]
            for k in self.dims()}}


@dataclass(frozen=True)
class BettiProfile:
    epsilon: float
    betti: tuple[int, ...]


def compute_barcode(fc: FilteredComplex) -> Barcode:
    """Standard persistence pairing of a sorted, face-closed filtration."""
    simplices = fc.simplices
    index = {s.vertices: i for i, s in enumerate(simplices)}
    owner: dict[int, int] = {}    # pivot row -> killing column
    reduced: dict[int, set] = {}  # pivot row -> that column's reduced support
    top = max((s.dim for s in simplices), default=0)
    for d in range(top, 0, -1):
        for j, s in enumerate(simplices):
            if s.dim != d or j in owner:  # cleared: j is already a known birth
                continue
            col = {index[f] for f in itertools.combinations(s.vertices, d)}
            while col:
                low = max(col)
                prev = reduced.get(low)
                if prev is None:
                    break
                col ^= prev
            if col:
                low = max(col)
                reduced[low] = col
                owner[low] = j

    bars: dict[int, list[tuple[float, float]]] = {k: [] for k in range(fc.max_dim + 1)}
    killers = set(owner.values())
    for i, s in enumerate(simplices):
        if i in killers:
            continue
        birth = s.birth
        if i in owner:
            death = simplices[owner[i]].birth
            if death - birth <= BAR_LENGTH_TOL * max(1.0, abs(birth)):
                continue
        else:
            death = math.inf
        bars[s.dim].append((birth, death))
    return Barcode(max_dim=fc.max_dim,
                   bars={k: tuple(sorted(v)) for k, v in bars.items()})


def betti_at(bc: Barcode, epsilon: float) -> BettiProfile:
    """Betti numbers at a scale: bars whose half-open interval contains it."""
    if epsilon < 0:
        raise ValueError("epsilon must be nonnegative")
    counts = tuple(
        sum(1 for b, d in bc.bars.get(k, ()) if b <= epsilon < d)
        for k in bc.dims())
    return BettiProfile(epsilon=epsilon, betti=counts)
