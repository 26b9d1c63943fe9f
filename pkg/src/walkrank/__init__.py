"""Incremental PageRank via stored random walks, with adversarial
arrival-order constructions and work-scaling experiments."""

from .adversary import (ArrivalScript, FamilyParams, build_binary,
                        build_dary, harmonic, load_script,
                        predicted_row_updates, predicted_total,
                        random_order, save_script, tree_rows)
from .experiment import (CSV_HEADER, ExponentFit, RowCheck, RunRecord,
                         fit_exponent, read_csv, replay, sweep, verify_rows,
                         write_csv)
from .graph import (DuplicateEdgeError, DynGraph, GraphError, NodeRangeError,
                    SelfLoopError, read_edge_list, write_edge_list)
from .pagerank import (aggregate_oracle, estimate, expected_visits,
                       total_variation, write_scores_csv)
from .walks import (MissingEdgeError, UpdateStats, Walk, WalkStore,
                    generate_walk, init_store, make_rng, on_edge_arrival,
                    sample_budget, store_from_walks, visit_counts)

__version__ = "0.1.0"

__all__ = [
    "ArrivalScript", "FamilyParams", "build_binary", "build_dary",
    "harmonic", "load_script", "predicted_row_updates", "predicted_total",
    "random_order", "save_script", "tree_rows",
    "CSV_HEADER", "ExponentFit", "RowCheck", "RunRecord", "fit_exponent",
    "read_csv", "replay", "sweep", "verify_rows", "write_csv",
    "DuplicateEdgeError", "DynGraph", "GraphError", "NodeRangeError",
    "SelfLoopError", "read_edge_list", "write_edge_list",
    "aggregate_oracle", "estimate", "expected_visits", "total_variation",
    "write_scores_csv",
    "MissingEdgeError", "UpdateStats", "Walk", "WalkStore", "generate_walk",
    "init_store", "make_rng", "on_edge_arrival", "sample_budget",
    "store_from_walks", "visit_counts",
    "__version__",
]
