"""Barcode signatures and entanglement-class labels.

Two classification schemes operate on barcodes:

* separability (distance "dtilde"): the infinite-H0-bar count equals the
  number of separable clusters, so the label follows from that count alone,
  with the final graph disambiguating the two 2-cluster shapes on 4 qubits.
* genuine (distance "d"): labels are looked up in a shipped resource table
  keyed by (scheme, n, signature, canonical graph code).  Keys outside the
  table come back as "unclassified" -- expected for random surveys beyond
  4 qubits -- rather than raising.

A signature compares by per-dimension (finite, infinite) bar counts only;
bar endpoints slide and stretch with the monotone choice, so they carry no
class information.  The H0 merge-multiplicity sequence is retained as
descriptive data but excluded from comparisons.
"""

from __future__ import annotations

import itertools
import json
import math
from dataclasses import dataclass, field
from functools import lru_cache
from importlib import resources

from .errors import MalformedBarcode, UnsupportedSize
from .homology import Barcode
from .semimetric import DistanceMatrix

SCHEMES = ("separability", "genuine_rips", "genuine_cech")

#: Barcode-id vocabulary: count signature -> id.  Ids 8 and 10 have no
#: realizable signature on the named corpus (see the class table file).
SIGNATURE_IDS = {
    "0,4": "B1",
    "1,3": "B2",
    "2,2": "B3",
    "3,1": "B4",
    "3,1|1,0": "B5",
    "3,1|0,1": "B6",
    "2,2|1,0": "B7",
    "3,1|3,0|1,0": "B9",
}


@dataclass(frozen=True)
class BarcodeSignature:
    """Per-dimension (finite, infinite) bar counts, trailing zeros trimmed."""

    counts: tuple[tuple[int, int], ...]
    h0_merge: tuple[int, ...] = field(default=(), compare=False)

    def key(self) -> str:
        return "|".join(f"{f},{i}" for f, i in self.counts)

    @classmethod
    def from_key(cls, key: str) -> "BarcodeSignature":
        counts = tuple(tuple(int(x) for x in part.split(",")) for part in key.split("|"))
        return cls(counts=counts)  # type: ignore[arg-type]


def signature_of(bc: Barcode) -> BarcodeSignature:
    """Extract the count signature plus the H0 merge-multiplicity sequence."""
    counts = [(bc.count(k, finite=True), bc.count(k, finite=False)) for k in bc.dims()]
    while len(counts) > 1 and counts[-1] == (0, 0):
        counts.pop()
    deaths = sorted(d for _, d in bc.bars.get(0, ()) if math.isfinite(d))
    merge: list[int] = []
    last = None
    for d in deaths:
        if last is not None and math.isclose(d, last, rel_tol=1e-9, abs_tol=1e-12):
            merge[-1] += 1
        else:
            merge.append(1)
        last = d
    return BarcodeSignature(counts=tuple(counts), h0_merge=tuple(merge))


# ---------------------------------------------------------------------------
# final graph of finite distances and its canonical form


@lru_cache(maxsize=None)
def _pair_index(n: int) -> tuple[tuple[int, int], ...]:
    return tuple(itertools.combinations(range(n), 2))


def canonical_graph_code(n: int, edges) -> str:
    """Lexicographically minimal adjacency bit string over all relabelings.

    Exhaustive over the n! vertex permutations; n <= 6 keeps this trivial.
    """
    pairs = _pair_index(n)
    edge_set = {tuple(sorted(e)) for e in edges}
    best = None
    for perm in itertools.permutations(range(n)):
        mapped = {tuple(sorted((perm[a], perm[b]))) for a, b in edge_set}
        code = "".join("1" if p in mapped else "0" for p in pairs)
        if best is None or code < best:
            best = code
    return best or ""


@dataclass(frozen=True)
class FinalGraph:
    """Graph of finite-distance pairs at scales beyond every finite entry."""

    n: int
    edges: tuple[tuple[int, int], ...]
    canonical_code: str

    def component_sizes(self) -> tuple[int, ...]:
        parent = list(range(self.n))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for a, b in self.edges:
            parent[find(a)] = find(b)
        sizes: dict[int, int] = {}
        for v in range(self.n):
            r = find(v)
            sizes[r] = sizes.get(r, 0) + 1
        return tuple(sorted(sizes.values()))


def final_graph(dm: DistanceMatrix) -> FinalGraph:
    edges = dm.finite_edges()
    return FinalGraph(n=dm.n, edges=edges,
                      canonical_code=canonical_graph_code(dm.n, edges))


_GRAPH_NAME_EDGES = {
    3: {
        "E3": (), "K2+K1": ((0, 1),), "P3": ((0, 1), (1, 2)),
        "K3": ((0, 1), (0, 2), (1, 2)),
    },
    4: {
        "E4": (), "K2+2K1": ((0, 1),), "2K2": ((0, 1), (2, 3)),
        "P3+K1": ((0, 1), (1, 2)), "K3+K1": ((0, 1), (0, 2), (1, 2)),
        "P4": ((0, 1), (1, 2), (2, 3)), "K13": ((0, 1), (0, 2), (0, 3)),
        "C4": ((0, 1), (1, 2), (2, 3), (0, 3)),
        "paw": ((0, 1), (0, 2), (1, 2), (2, 3)),
        "diamond": ((0, 1), (0, 2), (1, 2), (1, 3), (2, 3)),
        "K4": ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)),
    },
}


@lru_cache(maxsize=None)
def _graph_names(n: int) -> dict[str, str]:
    return {canonical_graph_code(n, e): name
            for name, e in _GRAPH_NAME_EDGES.get(n, {}).items()}


def graph_name(n: int, canonical_code: str) -> str:
    """Conventional name of a small graph, or a code-derived fallback."""
    return _graph_names(n).get(canonical_code, f"g{canonical_code}")


@dataclass(frozen=True)
class ClassLabel:
    scheme: str
    label: str
    signature: str = ""
    graph: str = ""


# ---------------------------------------------------------------------------
# separability scheme (rule-based)


def separability_class(bc: Barcode, n: int, fg: FinalGraph | None = None) -> ClassLabel:
    """Separability label from the infinite-H0-bar (cluster) count."""
    c = bc.count(0, finite=False)
    if c < 1 or c > n:
        raise MalformedBarcode(f"{c} infinite H0 bars is impossible for {n} points")
    sig = signature_of(bc)
    graph = fg.canonical_code if fg is not None else ""
    if c == 1:
        label = "fully-inseparable"
    elif c == n:
        label = "product"
    elif n == 3:
        label = "bi-separable"
    elif n == 4 and c == 3:
        label = "tri-separable"
    elif n == 4 and c == 2:
        if fg is not None and fg.component_sizes() == (2, 2):
            label = "bi-separable(2+2)"  # extension: the pair-pair split
        else:
            label = "bi-separable"
    else:
        label = f"{c}-separable"
    return ClassLabel(scheme="separability", label=label,
                      signature=sig.key(), graph=graph)


# ---------------------------------------------------------------------------
# genuine scheme (table-driven)


@lru_cache(maxsize=None)
def class_tables() -> dict[tuple[str, int, str, str], dict]:
    """Rows of the shipped class-table resource, keyed for lookup."""
    text = resources.files("enthom").joinpath("class_tables.json").read_text()
    table = {}
    for row in json.loads(text):
        sig = BarcodeSignature(counts=tuple(tuple(c) for c in row["signature"]))
        key = (row["scheme"], row["n"], sig.key(), row["canonical_code"])
        table[key] = row
    return table


def genuine_class(bc: Barcode, fg: FinalGraph, n: int,
                  complex_kind: str = "rips") -> ClassLabel:
    """Genuine-entanglement label for a fully inseparable state's barcode."""
    if complex_kind not in ("rips", "cech"):
        raise ValueError(f"complex_kind must be 'rips' or 'cech', got {complex_kind!r}")
    scheme = f"genuine_{complex_kind}"
    sig = signature_of(bc)
    row = class_tables().get((scheme, n, sig.key(), fg.canonical_code))
    label = row["label"] if row is not None else "unclassified"
    return ClassLabel(scheme=scheme, label=label,
                      signature=sig.key(), graph=fg.canonical_code)


# ---------------------------------------------------------------------------
# class-table generation from the named corpus

#: Class letter of each 4-qubit corpus member in the genuine scheme.
CLASS_LETTERS_4Q = {
    "ghz4": "a", "B": "b", "C": "c", "Cp": "c", "Cpp": "c",
    "D": "d", "Dp": "d", "Dpp": "d", "Dppp": "d", "w4": "d",
    "E": "e", "F": "f",
}

#: The id each class letter is documented to produce.
LETTER_IDS_4Q = {"a": "B1", "b": "B2", "c": "B3", "d": "B4", "e": "B5", "f": "B6"}

GENUINE_3Q = ("ghz3", "psi_b3", "psi_c3", "w3")
GENUINE_4Q = tuple(CLASS_LETTERS_4Q)


def _corpus_keys(kind: str, complex_kind: str):
    """(state name -> (signature key, canonical code)) over the 4q corpus."""
    from .filtration import cech_filtration, rips_filtration
    from .homology import compute_barcode
    from .semimetric import distance_matrix
    from .statevec import named_state

    build = rips_filtration if complex_kind == "rips" else cech_filtration
    out = {}
    for name in GENUINE_4Q:
        dm = distance_matrix(named_state(name), "d", kind)
        bc = compute_barcode(build(dm))
        out[name] = (signature_of(bc).key(), final_graph(dm).canonical_code)
    return out


def build_class_tables() -> list[dict]:
    """Regenerate the class-table rows the shipped resource was frozen from.

    3-qubit rows cover the full closure of reachable (signature, graph)
    keys.  4-qubit rows are generated from the named corpus under the
    default monotone, plus the one concurrence-derived Cech row (the
    all-pairs-equal triangle of the two-component class is acute under
    concurrence but obtuse under negativity, so only the former produces
    the transient hole).  When several corpus states collide on one key the
    row carries the label of the state whose documented id matches the
    computed signature.
    """
    from .filtration import cech_filtration
    from .homology import compute_barcode
    from .semimetric import distance_matrix
    from .statevec import named_state

    def code(n, edges):
        return canonical_graph_code(n, edges)

    rows = []
    # 3-qubit genuine classes: component count 3/2/1, and under cech the
    # 1-component class splits by hole presence.
    e3, edge3, p3, k3 = (code(3, _GRAPH_NAME_EDGES[3][g])
                         for g in ("E3", "K2+K1", "P3", "K3"))
    for scheme in ("genuine_rips", "genuine_cech"):
        rows.append(dict(scheme=scheme, n=3, signature=[[0, 3]],
                         canonical_code=e3, label="3q-a", source="Fig. 8"))
        rows.append(dict(scheme=scheme, n=3, signature=[[1, 2]],
                         canonical_code=edge3, label="3q-b", source="Fig. 9"))
    rows.append(dict(scheme="genuine_rips", n=3, signature=[[2, 1]],
                     canonical_code=p3, label="3q-c", source="Fig. 10"))
    rows.append(dict(scheme="genuine_rips", n=3, signature=[[2, 1]],
                     canonical_code=k3, label="3q-c", source="Fig. 10"))
    rows.append(dict(scheme="genuine_cech", n=3, signature=[[2, 1]],
                     canonical_code=p3, label="3q-c-chain", source="Fig. 10"))
    rows.append(dict(scheme="genuine_cech", n=3, signature=[[2, 1], [1, 0]],
                     canonical_code=k3, label="3q-c-W", source="Fig. 12"))
    # an obtuse triangle has no transient hole; same barcode as the chain
    rows.append(dict(scheme="genuine_cech", n=3, signature=[[2, 1]],
                     canonical_code=k3, label="3q-c-chain", source="Fig. 10"))

    # 4-qubit rows from the corpus
    for scheme, complex_kind, source in (("genuine_rips", "rips", "Table 1"),
                                         ("genuine_cech", "cech", "Table 2")):
        keys = _corpus_keys("negativity", complex_kind)
        groups: dict[tuple[str, str], list[str]] = {}
        for name, key in keys.items():
            groups.setdefault(key, []).append(name)
        # graph tags disambiguate labels only where one id spans several graphs
        per_label: dict[str, int] = {}
        for key, names in groups.items():
            bid = SIGNATURE_IDS[key[0]]
            letters = sorted({CLASS_LETTERS_4Q[s] for s in names})
            matching = [l for l in letters if LETTER_IDS_4Q[l] == bid]
            letter = matching[0] if matching else letters[0]
            base = f"4q-{letter}/{bid}" if scheme == "genuine_rips" else f"cech-{bid}"
            per_label[base] = per_label.get(base, 0) + 1
            groups[key] = (base, names)  # type: ignore[assignment]
        for (sig_key, canon), (base, names) in groups.items():
            label = base
            if per_label[base] > 1:
                label = f"{base}/graph-{graph_name(4, canon)}"
            sig = BarcodeSignature.from_key(sig_key)
            rows.append(dict(scheme=scheme, n=4,
                             signature=[list(c) for c in sig.counts],
                             canonical_code=canon, label=label, source=source))

    # Cech row reachable only under kind=concurrence: the two-component
    # class with a triangle component and a transient hole.
    dm = distance_matrix(named_state("Cpp"), "d", "concurrence")
    bc = compute_barcode(cech_filtration(dm))
    sig = signature_of(bc)
    fg = final_graph(dm)
    if sig.key() in SIGNATURE_IDS and sig.key() != "2,2":
        rows.append(dict(scheme="genuine_cech", n=4,
                         signature=[list(c) for c in sig.counts],
                         canonical_code=fg.canonical_code,
                         label=f"cech-{SIGNATURE_IDS[sig.key()]}", source="Table 2"))

    rows.sort(key=lambda r: (r["scheme"], r["n"], r["signature"], r["canonical_code"]))
    return rows


# ---------------------------------------------------------------------------
# upper bound on the number of distinct barcodes


def barcode_count_bound(n: int) -> int:
    """Sum over e of (unlabeled graphs with e edges) x e!.

    Unlabeled counts come from brute-force canonicalization of all labeled
    graphs on n vertices.
    """
    if not (2 <= n <= 5):
        raise UnsupportedSize(f"bound supported for 2 <= n <= 5, got n={n}")
    pairs = _pair_index(n)
    npairs = len(pairs)
    pair_pos = {p: k for k, p in enumerate(pairs)}
    perm_maps = []
    for perm in itertools.permutations(range(n)):
        perm_maps.append(tuple(pair_pos[tuple(sorted((perm[a], perm[b])))]
                               for a, b in pairs))
    seen_by_edges: dict[int, set[int]] = {}
    for mask in range(1 << npairs):
        canon = mask
        for pm in perm_maps:
            mapped = 0
            rem = mask
            while rem:
                k = (rem & -rem).bit_length() - 1
                mapped |= 1 << pm[k]
                rem &= rem - 1
            if mapped < canon:
                canon = mapped
        seen_by_edges.setdefault(bin(mask).count("1"), set()).add(canon)
    return sum(len(canons) * math.factorial(e) for e, canons in seen_by_edges.items())
