"""Structure, per-cycle and differential validators"""
from adaptive_heaps.validation.cycles import (
    validate_consolidate_record,
    validate_degree_growth,
    validate_pairing_cycle,
)
from adaptive_heaps.validation.differential import DifferentialReport, differential_run, validation_hook
from adaptive_heaps.validation.shrink import shrink_trace
from adaptive_heaps.validation.structure import validate_fib, validate_single_root, validate_structure

__all__ = [
    "DifferentialReport",
    "differential_run",
    "shrink_trace",
    "validate_consolidate_record",
    "validate_degree_growth",
    "validate_fib",
    "validate_pairing_cycle",
    "validate_single_root",
    "validate_structure",
    "validation_hook",
]
