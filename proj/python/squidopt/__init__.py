"""Sparkling Squid Algorithm, PSO and GA on a shared benchmark registry."""

from ._squidopt import (
    ExperimentResult,
    ExportError,
    NonFiniteObjective,
    OptResult,
    TraceRecord,
    evaluate,
    export_results,
    known_optimum,
    list_functions,
    minimize,
    minimize_callable,
    results_csv,
    results_json,
    run_experiment,
    run_suite,
    sample_arcsine,
    summary,
)

__all__ = [
    "ExperimentResult",
    "ExportError",
    "NonFiniteObjective",
    "OptResult",
    "TraceRecord",
    "evaluate",
    "export_results",
    "known_optimum",
    "list_functions",
    "minimize",
    "minimize_callable",
    "results_csv",
    "results_json",
    "run_experiment",
    "run_suite",
    "sample_arcsine",
    "summary",
]
