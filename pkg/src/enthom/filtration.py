"""Filtered simplicial complexes over an extended-real distance matrix.

Rips: a simplex is born when its largest pairwise distance is reached.
Cech: a simplex is born at twice the minimal enclosing ball radius of its
vertex set.  Since the input is only a semi-metric, each vertex subset is
embedded in Euclidean space on its own (classical multidimensional scaling
of that subset's distances); when the subset does not embed isometrically
the simplex falls back to its Rips birth and is flagged.

Simplices containing an infinite pairwise distance are never materialized,
so disconnected components stay disconnected at every scale.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from typing import NamedTuple

import numpy as np

from .errors import DegenerateSimplex
from .semimetric import DistanceMatrix

#: Relative size of a clamped negative Gram eigenvalue above which the
#: subset is declared non-embeddable.
EMBED_TOL = 1e-6


class Simplex(NamedTuple):
    vertices: tuple[int, ...]
    birth: float

    @property
    def dim(self) -> int:
        return len(self.vertices) - 1


@dataclass(frozen=True)
class FilteredComplex:
    """Simplices sorted by (birth, dimension, vertex tuple); face-closed."""

    n: int
    kind: str
    max_dim: int
    simplices: tuple[Simplex, ...]
    flagged: frozenset[tuple[int, ...]] = field(default_factory=frozenset)

    def to_json(self) -> list[dict]:
        return [{"vertices": list(s.vertices), "birth": float(s.birth),
                 "kind": self.kind} for s in self.simplices]


def _check_max_dim(n: int, max_dim) -> int:
    if max_dim is None:
        return n - 1
    if not (0 <= max_dim <= n - 1):
        raise ValueError(f"max_dim must be in [0, {n - 1}], got {max_dim}")
    return max_dim


def _sorted_complex(n, kind, max_dim, births, flagged=()) -> FilteredComplex:
    simplices = [Simplex(vs, b) for vs, b in births.items()]
    simplices.sort(key=lambda s: (s.birth, s.dim, s.vertices))
    return FilteredComplex(n=n, kind=kind, max_dim=max_dim,
                           simplices=tuple(simplices),
                           flagged=frozenset(flagged))


def rips_filtration(dm: DistanceMatrix, max_dim: int | None = None) -> FilteredComplex:
    """Rips complex: simplex birth = max pairwise distance among vertices."""
    n = dm.n
    max_dim = _check_max_dim(n, max_dim)
    births = {(v,): 0.0 for v in range(n)}
    for k in range(1, max_dim + 1):
        for vs in itertools.combinations(range(n), k + 1):
            b = max(dm.entries[a, c] for a, c in itertools.combinations(vs, 2))
            if math.isfinite(b):
                births[vs] = float(b)
    return _sorted_complex(n, "rips", max_dim, births)


def embed_distances(d: np.ndarray) -> tuple[np.ndarray, bool]:
    """Classical MDS embedding of an m x m distance matrix.

    Returns (coordinates, ok).  ``ok`` is False when a negative Gram
    eigenvalue larger than EMBED_TOL x the top eigenvalue had to be clamped,
    i.e. the distances are not realizable in Euclidean space.
    """
    m = d.shape[0]
    j = np.eye(m) - np.ones((m, m)) / m
    gram = -0.5 * j @ (d * d) @ j
    w, u = np.linalg.eigh(gram)
    scale = max(float(w[-1]), 0.0)
    ok = w[0] >= -EMBED_TOL * max(scale, 1e-300)
    w = np.clip(w, 0.0, None)
    return u * np.sqrt(w), ok


def min_enclosing_ball_radius(points: np.ndarray) -> float:
    """Exact minimal enclosing ball radius of at most a handful of points.

    Enumerates candidate support subsets; for each, the smallest ball with
    the subset on its boundary has its center in the subset's affine hull.
    The true ball is the smallest candidate that covers every point.
    """
    m = points.shape[0]
    best = math.inf
    for r in range(1, m + 1):
        for sub in itertools.combinations(range(m), r):
            p = points[list(sub)]
            if r == 1:
                center = p[0]
            else:
                a = p[1:] - p[0]
                gram = a @ a.T
                rhs = 0.5 * np.einsum("ij,ij->i", a, a)
                try:
                    x = np.linalg.solve(gram, rhs)
                except np.linalg.LinAlgError:
                    continue  # affinely dependent support set
                if not np.all(np.isfinite(x)):
                    continue
                center = p[0] + x @ a
            support_r = float(np.linalg.norm(p - center, axis=1).max())
            cover_r = float(np.linalg.norm(points - center, axis=1).max())
            if cover_r <= support_r * (1.0 + 1e-9) + 1e-12 and support_r < best:
                best = support_r
    return best


def cm_circumradius(d: np.ndarray) -> float:
    """Circumscribed-sphere radius from pairwise distances alone.

    Uses the bordered squared-distance (Cayley-Menger) determinant; valid
    for up to 5 points.  Raises DegenerateSimplex when the point set is
    affinely degenerate.
    """
    d = np.asarray(d, dtype=float)
    m = d.shape[0]
    if d.shape != (m, m):
        raise ValueError("expected a square distance matrix")
    if m > 5:
        raise ValueError("circumradius supported for at most 5 points")
    if not np.all(np.isfinite(d)):
        raise ValueError("all distances must be finite")
    sq = d * d
    cm = np.ones((m + 1, m + 1))
    cm[0, 0] = 0.0
    cm[1:, 1:] = sq
    det_cm = float(np.linalg.det(cm))
    # scale-aware degeneracy test: det(CM) ~ volume^2 of the simplex
    scale = max(float(sq.max()), 1.0)
    if abs(det_cm) < 1e-12 * scale ** m:
        raise DegenerateSimplex("Cayley-Menger determinant vanishes")
    r2 = -0.5 * float(np.linalg.det(sq)) / det_cm
    if r2 < 0:
        raise DegenerateSimplex(f"negative squared circumradius {r2:.3g}")
    return math.sqrt(r2)


def cech_filtration(dm: DistanceMatrix, max_dim: int | None = None) -> FilteredComplex:
    """Cech complex: simplex birth = diameter of the minimal enclosing ball.

    Edges coincide with Rips (two closed eps/2-balls meet iff d <= eps).
    For k >= 2 the vertex subset is embedded on its own; birth is clamped
    from below by facet births so the filtration stays face-monotone even
    when different subsets embed inconsistently.
    """
    n = dm.n
    max_dim = _check_max_dim(n, max_dim)
    births: dict[tuple[int, ...], float] = {(v,): 0.0 for v in range(n)}
    flagged = []
    for k in range(1, max_dim + 1):
        for vs in itertools.combinations(range(n), k + 1):
            pair_ds = [dm.entries[a, c] for a, c in itertools.combinations(vs, 2)]
            rips_birth = max(pair_ds)
            if not math.isfinite(rips_birth):
                continue
            if k == 1:
                births[vs] = float(rips_birth)
                continue
            sub = dm.entries[np.ix_(vs, vs)]
            coords, ok = embed_distances(sub)
            if ok:
                b = 2.0 * min_enclosing_ball_radius(coords)
            else:
                b = float(rips_birth)
                flagged.append(vs)
            facet_birth = max(births[f] for f in itertools.combinations(vs, k))
            births[vs] = max(b, facet_birth)
    return _sorted_complex(n, "cech", max_dim, births, flagged)
