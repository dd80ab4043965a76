"""Entanglement semi-metrics and persistence barcodes for multi-qubit states.

The pipeline: a pure state becomes a point cloud of qubits with pairwise
distances derived from a bipartite entanglement monotone; Rips or Cech
filtrations over those distances yield persistence barcodes; barcode
signatures plus the final graph of finite distances classify the state's
separability structure and, for fully inseparable states, its
genuine-entanglement class.
"""

from .classifier import (BarcodeSignature, ClassLabel, FinalGraph,
                         barcode_count_bound, canonical_graph_code,
                         final_graph, genuine_class, graph_name,
                         separability_class, signature_of)
from .errors import EnthomError
from .filtration import (FilteredComplex, Simplex, cech_filtration,
                         cm_circumradius, rips_filtration)
from .homology import Barcode, BettiProfile, betti_at, compute_barcode
from .monotones import (DEFAULT_ZERO_EPS, MONOTONE_KINDS, MonotoneValue,
                        concurrence_pair, entanglement_entropy, monotone,
                        negativity)
from .render import RenderSpec, render_ascii, render_svg
from .semimetric import (DistanceMatrix, cut_distance, distance_matrix,
                         pair_distance)
from .statevec import (Bipartition, DensityMatrix, NAMED_STATES, PureState,
                       named_state, parse_state, partial_trace, permute_qubits,
                       reduced_density, state_from_amplitudes, state_to_json)

__version__ = "0.1.0"

__all__ = [
    "Barcode", "BarcodeSignature", "BettiProfile", "Bipartition", "ClassLabel",
    "DEFAULT_ZERO_EPS", "DensityMatrix", "DistanceMatrix", "EnthomError",
    "FilteredComplex", "FinalGraph", "MONOTONE_KINDS", "MonotoneValue",
    "NAMED_STATES", "PureState", "RenderSpec", "Simplex",
    "barcode_count_bound", "betti_at", "canonical_graph_code",
    "cech_filtration", "cm_circumradius", "compute_barcode",
    "concurrence_pair", "cut_distance", "distance_matrix",
    "entanglement_entropy", "final_graph", "genuine_class", "graph_name",
    "monotone", "named_state", "negativity", "pair_distance", "parse_state",
    "partial_trace", "permute_qubits", "reduced_density", "render_ascii",
    "render_svg", "rips_filtration", "separability_class",
    "signature_of", "state_from_amplitudes", "state_to_json",
]
