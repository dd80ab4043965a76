"""Multi-qubit pure states: parsing, named corpus, partial traces.

Qubit 0 is the leftmost ket label, so basis index k carries qubit q's bit
at position (n - 1 - q).  Amplitude vectors are dense (the supported sizes
are 2..6 qubits) and every state is normalized on construction.
"""

from __future__ import annotations

import json
import math
import warnings
from dataclasses import dataclass, field

import numpy as np

from .errors import (BadBipartition, BadSubset, MalformedState, UnknownState,
                     UnsupportedSize, ZeroState)

MIN_QUBITS = 2
MAX_QUBITS = 6

NORM_TOL = 1e-12
HERMITIAN_TOL = 1e-10
TRACE_TOL = 1e-10
PSD_TOL = 1e-10


@dataclass(frozen=True)
class PureState:
    """Normalized n-qubit state vector.

    ``norm_factor`` records the norm of the raw input, i.e. the factor the
    amplitudes were divided by during construction.
    """

    n: int
    amplitudes: np.ndarray
    norm_factor: float = 1.0

    def __post_init__(self):
        if not (MIN_QUBITS <= self.n <= MAX_QUBITS):
            raise UnsupportedSize(
                f"n={self.n} outside supported range [{MIN_QUBITS}, {MAX_QUBITS}]")
        if self.amplitudes.shape != (2 ** self.n,):
            raise MalformedState(
                f"expected {2 ** self.n} amplitudes, got {self.amplitudes.shape}")
        norm = np.linalg.norm(self.amplitudes)
        if abs(norm - 1.0) > NORM_TOL:
            raise MalformedState(f"state not normalized: |norm - 1| = {abs(norm - 1.0):.3g}")
        self.amplitudes.setflags(write=False)

    @property
    def dim(self) -> int:
        return 2 ** self.n


@dataclass(frozen=True)
class DensityMatrix:
    """Density operator on the qubits listed in ``dims`` (original labels)."""

    dims: tuple[int, ...]
    entries: np.ndarray

    def __post_init__(self):
        d = 2 ** len(self.dims)
        if self.entries.shape != (d, d):
            raise MalformedState(f"expected {d}x{d} matrix, got {self.entries.shape}")
        if np.max(np.abs(self.entries - self.entries.conj().T)) > HERMITIAN_TOL:
            raise MalformedState("density matrix not Hermitian")
        if abs(np.trace(self.entries).real - 1.0) > TRACE_TOL:
            raise MalformedState("density matrix trace != 1")
        if np.linalg.eigvalsh(self.entries).min() < -PSD_TOL:
            raise MalformedState("density matrix not positive semidefinite")
        self.entries.setflags(write=False)

    @property
    def num_qubits(self) -> int:
        return len(self.dims)


@dataclass(frozen=True)
class Bipartition:
    """Two disjoint nonempty qubit-index sets."""

    part_a: tuple[int, ...]
    part_b: tuple[int, ...]

    def __post_init__(self):
        a, b = tuple(sorted(self.part_a)), tuple(sorted(self.part_b))
        object.__setattr__(self, "part_a", a)
        object.__setattr__(self, "part_b", b)
        if not a or not b:
            raise BadBipartition("both parts must be nonempty")
        if set(a) & set(b):
            raise BadBipartition(f"parts overlap: {set(a) & set(b)}")
        if min(a + b) < 0:
            raise BadBipartition("negative qubit index")

    def covers(self, n: int) -> bool:
        return set(self.part_a) | set(self.part_b) == set(range(n))


def state_from_amplitudes(amps, n=None, name=None) -> PureState:
    """Build a PureState from a raw (possibly unnormalized) amplitude vector."""
    v = np.asarray(amps, dtype=complex).ravel()
    if n is None:
        n = int(round(math.log2(v.size)))
    if v.size != 2 ** n:
        raise MalformedState(f"amplitude count {v.size} != 2^{n}")
    norm = float(np.linalg.norm(v))
    if norm == 0.0:
        raise ZeroState("all-zero amplitude vector")
    if abs(norm - 1.0) > 1e-6:
        warnings.warn(f"input state{' ' + name if name else ''} normalized "
                      f"(norm was {norm:.6g})", stacklevel=2)
    return PureState(n=n, amplitudes=v / norm, norm_factor=norm)


def parse_state(text: str) -> PureState:
    """Parse the JSON state document ``{"n": int, "amplitudes": [[re, im], ...]}``."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise MalformedState(f"invalid JSON: {exc}") from exc
    if not isinstance(doc, dict) or "n" not in doc or "amplitudes" not in doc:
        raise MalformedState("document must contain fields 'n' and 'amplitudes'")
    n = doc["n"]
    if not isinstance(n, int):
        raise MalformedState(f"'n' must be an integer, got {n!r}")
    if not (MIN_QUBITS <= n <= MAX_QUBITS):
        raise UnsupportedSize(f"n={n} outside supported range [{MIN_QUBITS}, {MAX_QUBITS}]")
    pairs = doc["amplitudes"]
    if len(pairs) != 2 ** n:
        raise MalformedState(f"expected {2 ** n} amplitude pairs, got {len(pairs)}")
    try:
        v = np.array([complex(re, im) for re, im in pairs])
    except (TypeError, ValueError) as exc:
        raise MalformedState(f"amplitudes must be [re, im] pairs: {exc}") from exc
    return state_from_amplitudes(v, n=n)


def _from_kets(n: int, terms: dict[str, complex]) -> PureState:
    v = np.zeros(2 ** n, dtype=complex)
    for label, weight in terms.items():
        v[int(label, 2)] += weight
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")  # corpus weights are intentionally unnormalized
        return state_from_amplitudes(v, n=n)


def _product(*factors) -> np.ndarray:
    out = np.array([1.0 + 0j])
    for f in factors:
        out = np.kron(out, np.asarray(f, dtype=complex))
    return out


# Generic single-qubit factors for the separable corpus; chosen with unequal
# weights and one complex phase so no accidental symmetry survives.
_Q0 = np.array([2.0, 1.0]) / math.sqrt(5.0)
_Q1 = np.array([1.0, 1.0]) / math.sqrt(2.0)
_Q2 = np.array([1.0, 2.0j]) / math.sqrt(5.0)
_Q3 = np.array([1.0, -1.0]) / math.sqrt(2.0)
_PAIR = np.array([0.8, 0.0, 0.0, 0.6])  # entangled but not maximally


def _corpus() -> dict[str, PureState]:
    ghz3 = _from_kets(3, {"000": 1, "111": 1})
    states = {
        "ghz3": ghz3,
        "w3": _from_kets(3, {"100": 1, "010": 1, "001": 1}),
        "psi_b3": _from_kets(3, {"000": 1, "011": 1, "111": 1}),
        "psi_c3": _from_kets(3, {"000": 1, "001": 1, "011": 1, "111": 1}),
        "ghz4": _from_kets(4, {"0000": 1, "1111": 1}),
        "w4": _from_kets(4, {"1000": 1, "0100": 1, "0010": 1, "0001": 1}),
        "B": _from_kets(4, {"0000": 1, "0111": 1, "1101": 1}),
        "C": _from_kets(4, {"0000": 1, "0111": 1, "1010": 1, "1011": 1}),
        "Cp": _from_kets(4, {"0000": 1, "0011": 1, "1111": 1}),
        "Cpp": _from_kets(4, {"0011": 1, "1011": 1, "1101": 1, "1110": 1}),
        "D": _from_kets(4, {"0000": 1, "0001": 1, "1001": 1, "1101": 1,
                            "1011": 1, "1111": 1}),
        "Dp": _from_kets(4, {"0000": 1, "0011": 1, "0111": 1, "1110": 1, "1111": 1}),
        "Dpp": _from_kets(4, {"0000": 1, "0011": 1, "0110": 1, "0111": 1, "1011": 1}),
        "Dppp": _from_kets(4, {"0000": 1, "0001": 1, "0011": 1, "0101": 1,
                               "0111": 1, "1101": 1}),
        "E": _from_kets(4, {"0000": 2, "0011": 1, "0110": 1, "1001": 1,
                            "1100": 1, "1111": 2}),
        "F": _from_kets(4, {"0000": 1, "0011": 1, "1010": 1, "1111": 1}),
        "product3": state_from_amplitudes(_product(_Q0, _Q1, _Q2), n=3),
        "product4": state_from_amplitudes(_product(_Q0, _Q1, _Q2, _Q3), n=4),
        "bisep3": state_from_amplitudes(_product(_Q0, _PAIR), n=3),
        "trisep4": state_from_amplitudes(_product(_Q0, _Q1, _PAIR), n=4),
        "bisep4": state_from_amplitudes(_product(_Q0, ghz3.amplitudes), n=4),
    }
    return states


_NAMED: dict[str, PureState] = _corpus()

NAMED_STATES = tuple(sorted(_NAMED))


def named_state(name: str) -> PureState:
    """Return a state from the built-in corpus (ghz3, w3, B ... F, bisep4, ...)."""
    try:
        return _NAMED[name]
    except KeyError:
        raise UnknownState(f"unknown state {name!r}; known: {', '.join(NAMED_STATES)}") from None


def _check_keep(n: int, keep) -> tuple[int, ...]:
    keep = tuple(sorted(set(keep)))
    if not keep:
        raise BadSubset("keep set is empty")
    if keep[0] < 0 or keep[-1] >= n:
        raise BadSubset(f"qubit indices {keep} out of range for n={n}")
    return keep


def reduced_density(state: PureState, keep) -> DensityMatrix:
    """Partial trace of |psi><psi| onto the qubits in ``keep``."""
    keep = _check_keep(state.n, keep)
    rest = [q for q in range(state.n) if q not in keep]
    t = state.amplitudes.reshape([2] * state.n)
    m = np.transpose(t, list(keep) + rest).reshape(2 ** len(keep), -1)
    return DensityMatrix(dims=keep, entries=m @ m.conj().T)


def partial_trace(dm: DensityMatrix, keep) -> DensityMatrix:
    """Partial trace of a density matrix onto a subset of its own qubits."""
    keep = tuple(sorted(set(keep)))
    if not keep or not set(keep) <= set(dm.dims):
        raise BadSubset(f"keep {keep} not a nonempty subset of {dm.dims}")
    m = dm.num_qubits
    pos = [dm.dims.index(q) for q in keep]
    rest = [p for p in range(m) if p not in pos]
    t = dm.entries.reshape([2] * (2 * m))
    # trace out each 'rest' axis pair (row axis p, column axis m + p)
    perm = pos + rest + [m + p for p in pos] + [m + p for p in rest]
    t = np.transpose(t, perm)
    dk, dr = 2 ** len(pos), 2 ** len(rest)
    t = t.reshape(dk, dr, dk, dr)
    out = np.einsum("arbr->ab", t)
    return DensityMatrix(dims=keep, entries=out)


def permute_qubits(state: PureState, perm) -> PureState:
    """Relabel qubits: qubit q of the result is qubit perm[q] of the input."""
    perm = list(perm)
    if sorted(perm) != list(range(state.n)):
        raise BadSubset(f"{perm} is not a permutation of range({state.n})")
    t = state.amplitudes.reshape([2] * state.n)
    v = np.transpose(t, perm).ravel()
    return PureState(n=state.n, amplitudes=v.copy(), norm_factor=state.norm_factor)


def state_to_json(state: PureState) -> dict:
    """JSON-ready document in the same schema parse_state accepts."""
    return {
        "n": state.n,
        "amplitudes": [[float(a.real), float(a.imag)] for a in state.amplitudes],
    }
