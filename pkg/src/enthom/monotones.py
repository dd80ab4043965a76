"""Bipartite entanglement monotones evaluated on pure-state bipartitions.

Three interchangeable kinds are supported:

* ``negativity`` -- defined for every bipartition (pure cuts and mixed pair
  marginals alike); the package default.
* ``concurrence`` -- Wootters' closed form, single-qubit parts only.
* ``entropy``     -- von Neumann entropy (base 2), full bipartitions only.

Where a kind is undefined (concurrence on non-singleton parts, entropy on a
non-covering bipartition) the dispatcher falls back to negativity and records
that in ``MonotoneValue.method``.
"""

from __future__ import annotations

import os
from dataclasses import dataclass

import numpy as np

from .errors import BadBipartition, BadDimension
from .statevec import Bipartition, DensityMatrix, PureState, reduced_density

MONOTONE_KINDS = ("negativity", "concurrence", "entropy")

#: Values below this threshold count as exactly zero entanglement, so the
#: derived distance becomes +inf instead of a huge finite number.
DEFAULT_ZERO_EPS = float(os.environ.get("ENTHOM_ZERO_EPS", "1e-9"))

_SY2 = np.array([[0, 0, 0, -1],
                 [0, 0, 1, 0],
                 [0, 1, 0, 0],
                 [-1, 0, 0, 0]], dtype=float)  # sigma_y (x) sigma_y


@dataclass(frozen=True)
class MonotoneValue:
    """A monotone evaluation; ``method`` records what was actually computed."""

    value: float
    is_zero: bool
    method: str


def _check_kind(kind: str) -> str:
    if kind not in MONOTONE_KINDS:
        raise ValueError(f"unknown monotone kind {kind!r}; choose from {MONOTONE_KINDS}")
    return kind


def _wrap(value: float, method: str, zero_eps: float) -> MonotoneValue:
    value = max(0.0, float(value))
    return MonotoneValue(value=value, is_zero=value < zero_eps, method=method)


def _grouped_marginal(state: PureState, part_a, part_b) -> np.ndarray:
    """rho over part_a + part_b with part_a's qubits as the leading factor."""
    rest = [q for q in range(state.n) if q not in part_a and q not in part_b]
    t = state.amplitudes.reshape([2] * state.n)
    m = np.transpose(t, list(part_a) + list(part_b) + rest)
    m = m.reshape(2 ** (len(part_a) + len(part_b)), -1)
    return m @ m.conj().T


def negativity(state: PureState, bp: Bipartition,
               zero_eps: float = DEFAULT_ZERO_EPS) -> MonotoneValue:
    """Negativity across bp: (||rho^{T_A}||_1 - 1) / 2 on the A+B marginal."""
    if max(bp.part_a + bp.part_b) >= state.n:
        raise BadBipartition(f"bipartition {bp} out of range for n={state.n}")
    rho = _grouped_marginal(state, bp.part_a, bp.part_b)
    da, db = 2 ** len(bp.part_a), 2 ** len(bp.part_b)
    pt = rho.reshape(da, db, da, db).transpose(2, 1, 0, 3).reshape(da * db, da * db)
    eigs = np.linalg.eigvalsh(pt)
    return _wrap((np.abs(eigs).sum() - 1.0) / 2.0, "negativity", zero_eps)


def concurrence_pair(rho: DensityMatrix,
                     zero_eps: float = DEFAULT_ZERO_EPS) -> MonotoneValue:
    """Wootters concurrence of a 2-qubit density matrix.

    The mu_i (descending square roots of the spectrum of rho . rho~ with
    rho~ the spin-flipped state) are computed as the singular values of
    sqrt(rho) (sy x sy) conj(sqrt(rho)), which has the same nonzero
    spectrum but avoids a non-Hermitian eigenproblem.
    """
    if rho.num_qubits != 2:
        raise BadDimension(f"concurrence needs a 2-qubit state, got {rho.num_qubits} qubits")
    w, v = np.linalg.eigh(rho.entries)
    sqrt_rho = (v * np.sqrt(np.clip(w, 0.0, None))) @ v.conj().T
    mu = np.linalg.svd(sqrt_rho @ _SY2 @ sqrt_rho.conj(), compute_uv=False)
    return _wrap(mu[0] - mu[1] - mu[2] - mu[3], "concurrence", zero_eps)


def entanglement_entropy(state: PureState, bp: Bipartition,
                         zero_eps: float = DEFAULT_ZERO_EPS) -> MonotoneValue:
    """Entanglement entropy (base 2) across a full bipartition of the state."""
    if not bp.covers(state.n):
        raise BadBipartition(
            "entropy requires a full bipartition; entropy of a mixed marginal "
            "is not an entanglement monotone")
    rho = reduced_density(state, bp.part_a)
    lam = np.linalg.eigvalsh(rho.entries)
    lam = lam[lam > 1e-15]
    return _wrap(float(-(lam * np.log2(lam)).sum()), "entropy", zero_eps)


def monotone(state: PureState, part_a, part_b, kind: str = "negativity",
             zero_eps: float = DEFAULT_ZERO_EPS) -> MonotoneValue:
    """Evaluate the configured monotone between two disjoint qubit sets.

    Dispatches to the requested kind; where the kind is undefined for the
    given parts the negativity is used instead and the returned ``method``
    says so.
    """
    _check_kind(kind)
    bp = Bipartition(part_a=tuple(part_a), part_b=tuple(part_b))
    if kind == "concurrence":
        if len(bp.part_a) == 1 and len(bp.part_b) == 1:
            rho = reduced_density(state, bp.part_a + bp.part_b)
            return concurrence_pair(rho, zero_eps=zero_eps)
        mv = negativity(state, bp, zero_eps=zero_eps)
        return MonotoneValue(mv.value, mv.is_zero, "negativity(fallback)")
    if kind == "entropy":
        if bp.covers(state.n):
            return entanglement_entropy(state, bp, zero_eps=zero_eps)
        mv = negativity(state, bp, zero_eps=zero_eps)
        return MonotoneValue(mv.value, mv.is_zero, "negativity(fallback)")
    return negativity(state, bp, zero_eps=zero_eps)
