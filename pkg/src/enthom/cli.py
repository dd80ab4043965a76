"""Command-line front end: analyze, classify, survey, bound.

Exit codes: 0 on success, 2 on usage or input errors (one-line diagnostic
on stderr), 1 on internal invariant violations.  With ``--output json``
everything on stdout is a single JSON document; runs with identical flags
and seed are byte-identical.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
from dataclasses import dataclass

import numpy as np

from .classifier import final_graph, genuine_class, separability_class, signature_of
from .errors import EnthomError
from .filtration import cech_filtration, rips_filtration
from .homology import compute_barcode
from .monotones import MONOTONE_KINDS
from .render import RenderSpec, render_ascii, render_svg
from .semimetric import DISTANCE_KINDS, distance_matrix
from .statevec import NAMED_STATES, named_state, parse_state, state_to_json


def _zero_eps_default() -> float:
    return float(os.environ.get("ENTHOM_ZERO_EPS", "1e-9"))


@dataclass
class RunConfig:
    state: str | None = None
    state_file: str | None = None
    distance: str = "dtilde"
    complex_kind: str = "rips"
    monotone: str = "negativity"
    max_dim: int | None = None
    zero_eps: float | None = None
    output: str = "json"
    seed: int = 0
    samples: int = 0

    def resolved_zero_eps(self) -> float:
        return self.zero_eps if self.zero_eps is not None else _zero_eps_default()


def _config(args) -> RunConfig:
    return RunConfig(
        state=getattr(args, "state", None),
        state_file=getattr(args, "state_file", None),
        distance=getattr(args, "distance", "dtilde"),
        complex_kind=getattr(args, "complex", "rips"),
        monotone=getattr(args, "monotone", "negativity"),
        max_dim=getattr(args, "max_dim", None),
        zero_eps=getattr(args, "zero_eps", None),
        output=getattr(args, "output", "json"),
        seed=getattr(args, "seed", 0),
        samples=getattr(args, "samples", 0),
    )


def _load_state(cfg: RunConfig):
    if (cfg.state is None) == (cfg.state_file is None):
        raise EnthomError("provide exactly one of --state or --state-file")
    if cfg.state is not None:
        return named_state(cfg.state), cfg.state
    with open(cfg.state_file, encoding="utf-8") as fh:
        return parse_state(fh.read()), os.path.basename(cfg.state_file)


def _filtration(dm, cfg: RunConfig):
    build = rips_filtration if cfg.complex_kind == "rips" else cech_filtration
    return build(dm, cfg.max_dim)


def _emit(doc: dict) -> int:
    print(json.dumps(doc, sort_keys=True))
    return 0


def cmd_analyze(args) -> int:
    cfg = _config(args)
    state, name = _load_state(cfg)
    eps = cfg.resolved_zero_eps()
    dm = distance_matrix(state, cfg.distance, cfg.monotone, zero_eps=eps)
    bc = compute_barcode(_filtration(dm, cfg))
    sig = signature_of(bc)
    if cfg.output == "ascii":
        sys.stdout.write(render_ascii(bc, RenderSpec()))
        return 0
    if cfg.output == "svg":
        sys.stdout.write(render_svg(bc, RenderSpec()))
        return 0
    doc = {
        "state": dict(state_to_json(state), name=name),
        "distance_matrix": dm.to_json(),
        "barcode": bc.to_json(),
        "signature": {"key": sig.key(), "h0_merge": list(sig.h0_merge)},
    }
    return _emit(doc)


def _label_doc(cl) -> dict:
    return {"label": cl.label, "signature": cl.signature, "graph": cl.graph}


def cmd_classify(args) -> int:
    cfg = _config(args)
    state, name = _load_state(cfg)
    eps = cfg.resolved_zero_eps()
    dm_sep = distance_matrix(state, "dtilde", cfg.monotone, zero_eps=eps)
    bc_sep = compute_barcode(rips_filtration(dm_sep, cfg.max_dim))
    sep = separability_class(bc_sep, state.n, final_graph(dm_sep))
    doc = {"state": name, "n": state.n,
           "separability": _label_doc(sep),
           "genuine_rips": None, "genuine_cech": None}
    if sep.label == "fully-inseparable":
        dm = distance_matrix(state, "d", cfg.monotone, zero_eps=eps)
        fg = final_graph(dm)
        for kind, build in (("rips", rips_filtration), ("cech", cech_filtration)):
            bc = compute_barcode(build(dm, cfg.max_dim))
            doc[f"genuine_{kind}"] = _label_doc(genuine_class(bc, fg, state.n, kind))
    return _emit(doc)


def random_pure_state(n: int, rng) -> "np.ndarray":
    """Haar-distributed state: normalized i.i.d. complex Gaussian amplitudes."""
    v = rng.standard_normal(2 ** n) + 1j * rng.standard_normal(2 ** n)
    return v / np.linalg.norm(v)


def cmd_survey(args) -> int:
    cfg = _config(args)
    n = args.n
    if not (3 <= n <= 5):
        raise EnthomError(f"survey supports 3 <= n <= 5, got n={n}")
    eps = cfg.resolved_zero_eps()
    rng = np.random.default_rng(cfg.seed)
    from .statevec import PureState

    tally: dict[tuple[str, str], int] = {}
    kept = 0
    for _ in range(cfg.samples):
        state = PureState(n=n, amplitudes=random_pure_state(n, rng))
        dm_sep = distance_matrix(state, "dtilde", cfg.monotone, zero_eps=eps)
        if not all(math.isfinite(v) for v in dm_sep.entries[np.triu_indices(n, 1)]):
            continue  # not fully inseparable
        kept += 1
        dm = distance_matrix(state, "d", cfg.monotone, zero_eps=eps)
        bc = compute_barcode(_filtration(dm, cfg))
        cl = genuine_class(bc, final_graph(dm), n, cfg.complex_kind)
        key = (cl.signature, cl.label)
        tally[key] = tally.get(key, 0) + 1
    doc = {
        "n": n, "samples": cfg.samples, "seed": cfg.seed, "kept": kept,
        "monotone": cfg.monotone, "complex": cfg.complex_kind,
        "signatures": [{"signature": sig, "label": label, "count": count}
                       for (sig, label), count in sorted(tally.items())],
    }
    return _emit(doc)


def cmd_bound(args) -> int:
    from .classifier import barcode_count_bound
    return _emit({"n": args.n, "bound": barcode_count_bound(args.n)})


def _add_state_flags(p: argparse.ArgumentParser):
    p.add_argument("--state", choices=NAMED_STATES, help="named corpus state")
    p.add_argument("--state-file", help="JSON state document path")


def _add_common_flags(p: argparse.ArgumentParser, with_distance=True):
    if with_distance:
        p.add_argument("--distance", choices=DISTANCE_KINDS, default="dtilde")
    p.add_argument("--complex", choices=("rips", "cech"), default="rips")
    p.add_argument("--monotone", choices=MONOTONE_KINDS, default="negativity")
    p.add_argument("--max-dim", type=int, default=None)
    p.add_argument("--zero-eps", type=float, default=None,
                   help="zero threshold (default: ENTHOM_ZERO_EPS or 1e-9)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="enthom",
        description="entanglement semi-metrics, barcodes, and classification "
                    "for multi-qubit pure states")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="distance matrix, barcode, signature")
    _add_state_flags(p)
    _add_common_flags(p)
    p.add_argument("--output", choices=("json", "ascii", "svg"), default="json")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("classify", help="separability and genuine-class labels")
    _add_state_flags(p)
    _add_common_flags(p, with_distance=False)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("survey", help="signature frequencies over random states")
    p.add_argument("n", type=int, help="qubit count (3..5)")
    p.add_argument("--samples", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)
    _add_common_flags(p, with_distance=False)
    p.set_defaults(func=cmd_survey)

    p = sub.add_parser("bound", help="upper bound on distinct barcode counts")
    p.add_argument("n", type=int, help="qubit count (2..5)")
    p.set_defaults(func=cmd_bound)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except EnthomError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except Exception as exc:  # pragma: no cover - internal invariant violations
        print(f"internal error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
