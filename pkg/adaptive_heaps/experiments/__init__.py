"""Workload generation, metric collection and conjecture probes"""
from adaptive_heaps.experiments.probes import ProbeId, ProbeRow, ProbeSummary, parse_sizes, probe, probe_degree_bound
from adaptive_heaps.experiments.runner import CSV_COLUMNS, MetricsRow, run, run_trial, write_rows_csv
from adaptive_heaps.experiments.workloads import GeneratorKind, WorkloadMode, WorkloadSpec, generate, generate_keys

__all__ = [
    "CSV_COLUMNS",
    "GeneratorKind",
    "MetricsRow",
    "ProbeId",
    "ProbeRow",
    "ProbeSummary",
    "WorkloadMode",
    "WorkloadSpec",
    "generate",
    "generate_keys",
    "parse_sizes",
    "probe",
    "probe_degree_bound",
    "run",
    "run_trial",
    "write_rows_csv",
]
