"""
Per-cycle validators for the pairing-like heap's consolidation.

Snapshots are tuples of (key, seq); seq identifies a node across snapshots.
Local minima on a root list use the circular convention.
"""
import logging
import math
from typing import Dict, Mapping, Sequence

from adaptive_heaps.core.schemas import ValidationReport
from adaptive_heaps.heaps.pairing_like import ConsolidateRecord, RootEntry
from adaptive_heaps.measures.presortedness import local_minima

logger = logging.getLogger(__name__)


def validate_pairing_cycle(before: Sequence[RootEntry], after: Sequence[RootEntry]) -> ValidationReport:
    """Every circular local minimum of `before` must survive into `after`"""
    report = ValidationReport(check="local_minimum_survival")
    minima = local_minima(list(before), circular=True)
    report.observations["local_minima"] = [key for key, _ in minima]
    survivors = {seq for _, seq in after}
    for key, seq in minima:
        if seq not in survivors:
            report.fail("local-minimum", f"Local minimum {key} of the previous cycle was linked away", [key])
            break
    return report


def validate_degree_growth(k: int, deltas: Mapping[int, int]) -> ValidationReport:
    """Degree gained by any node during one consolidate is below 2 lg k"""
    report = ValidationReport(check="degree_growth")
    worst = max(deltas.values(), default=0)
    report.observations["max_increase"] = worst
    if k < 2:
        return report
    bound = 2 * math.log2(k)
    report.observations["bound"] = bound
    if worst >= bound:
        report.fail("degree-growth", f"Degree increase {worst} is not below 2 lg {k} = {bound:.3f}")
    return report


def validate_consolidate_record(record: ConsolidateRecord) -> ValidationReport:
    """Both walk bounds over every consecutive cycle pair of one consolidate"""
    report = ValidationReport(check="pairing_consolidate")
    for i in range(len(record.cycles) - 1):
        step = validate_pairing_cycle(record.cycles[i], record.cycles[i + 1])
        if not step.passed:
            step.violations[0].message = f"cycle {i} -> {i + 1}: {step.violations[0].message}"
            report.merge(step)
            break
    report.merge(validate_degree_growth(record.k, record.degree_deltas))
    counts: Dict[str, int] = {"k": record.k, "cycles": len(record.cycles) - 1, "iterations": record.iterations}
    report.observations.update(counts)
    if not report.passed:
        logger.error(report.summary())
    return report
