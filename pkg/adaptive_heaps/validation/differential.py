"""
Differential testing against the sorted-list oracle.

The trace is replayed on the oracle first; an invalid trace (bad ordinal, key
increase) raises TraceError there and is never a divergence. The subject is
then replayed with a per-op hook that validates its structure. Outputs are
compared step by step and the earliest disagreement, validator failure or
subject exception is reported along with a shrunk failing trace.
"""
import logging
from typing import Any, Callable, List, Optional, Tuple, Union

from pydantic import BaseModel, Field

from adaptive_heaps.core.errors import ValidationFailure
from adaptive_heaps.core.schemas import ValidationReport
from adaptive_heaps.core.types import HeapKind, Key, PriorityQueue
from adaptive_heaps.heaps import PairingLikeHeap, heap_kind, make_heap
from adaptive_heaps.oracle.oracle_heap import OracleHeap
from adaptive_heaps.oracle.trace import Delete, ExtractMin, Op, OpTrace, TraceReplayer, format_trace
from adaptive_heaps.validation.cycles import validate_consolidate_record
from adaptive_heaps.validation.shrink import shrink_trace
from adaptive_heaps.validation.structure import validate_single_root

logger = logging.getLogger(__name__)

Outputs = List[Tuple[int, Optional[Key]]]


class DifferentialReport(BaseModel):
    """Outcome of replaying one trace on a subject heap and on the oracle"""
    subject: str = Field(..., description="Heap id of the subject")
    passed: bool = True
    steps: int = Field(0, description="Ops executed on the subject, nested ops included")
    outputs_compared: int = 0
    divergence_step: Optional[int] = Field(None, description="Step of the first divergence")
    expected: Optional[Key] = None
    actual: Optional[Key] = None
    message: Optional[str] = None
    validation: Optional[ValidationReport] = Field(None, description="Failed validator report, if any")
    shrunk_trace: Optional[str] = Field(None, description="Minimised failing trace in text format")

    def __bool__(self) -> bool:
        return self.passed

    def summary(self) -> str:
        if self.passed:
            return f"{self.subject}: pass ({self.steps} steps, {self.outputs_compared} outputs)"
        return f"{self.subject}: DIVERGED at step {self.divergence_step}: {self.message}"


def oracle_outputs(trace: OpTrace) -> Tuple[Outputs, int]:
    """(outputs, final size) of the oracle; raises TraceError on invalid traces"""
    replayer = TraceReplayer(OracleHeap)
    outputs = replayer.replay(trace)
    return outputs, len(replayer.heap)


def validation_hook(validate: bool = True) -> Callable[[int, Op, PriorityQueue], None]:
    """after_op hook raising ValidationFailure on the first violated check.

    With validate=False only the pairing-like per-consolidate checks run, and
    only if the heap keeps a cycle log.
    """
    def after_op(step: int, op: Op, heap: PriorityQueue) -> None:
        if validate:
            report = heap.validate()
            if not report.passed:
                raise ValidationFailure(report, step)
        if isinstance(heap, PairingLikeHeap):
            if isinstance(op, (ExtractMin, Delete)):
                report = validate_single_root(heap)
                if not report.passed:
                    raise ValidationFailure(report, step)
            for record in heap.cycle_log:
                report = validate_consolidate_record(record)
                if not report.passed:
                    raise ValidationFailure(report, step)
            heap.cycle_log.clear()

    return after_op


def _compare(
    trace: OpTrace, subject: HeapKind, validate: bool, heap_options: dict
) -> DifferentialReport:
    expected, expected_size = oracle_outputs(trace)
    report = DifferentialReport(subject=subject.value)

    replayer = TraceReplayer(lambda: make_heap(subject, **heap_options), validation_hook(validate))
    stop_step: Optional[int] = None
    stop_message: Optional[str] = None
    try:
        replayer.replay(trace)
    except ValidationFailure as e:
        stop_step, stop_message = e.step, e.report.summary()
        report.validation = e.report
    except Exception as e:
        stop_step, stop_message = replayer.step, f"subject raised {type(e).__name__}: {e}"
    report.steps = replayer.step

    actual = replayer.outputs
    for (step, want), (_, got) in zip(expected, actual):
        if want != got:
            if stop_step is None or step < stop_step:
                report.passed = False
                report.divergence_step = step
                report.expected, report.actual = want, got
                report.message = f"expected {want}, subject returned {got}"
                report.validation = None
            break
        report.outputs_compared += 1

    if report.passed and stop_step is not None:
        report.passed = False
        report.divergence_step = stop_step
        report.message = stop_message
    elif report.passed and len(replayer.heap) != expected_size:
        report.passed = False
        report.divergence_step = report.steps
        report.message = f"final size {len(replayer.heap)}, oracle has {expected_size}"
    return report


def differential_run(
    trace: OpTrace,
    subject: Union[str, HeapKind],
    validate: bool = True,
    shrink: bool = True,
    **heap_options: Any,
) -> DifferentialReport:
    """Replay trace on subject and oracle, reporting the first divergence.

    heap_options are passed to the subject's constructor, e.g. cycle_log=True
    for the pairing-like heap.
    """
    kind = heap_kind(subject)
    report = _compare(trace, kind, validate, heap_options)
    if report.passed:
        logger.debug(report.summary())
        return report

    logger.error(report.summary())
    if shrink:
        def still_fails(candidate: OpTrace) -> bool:
            return not _compare(candidate, kind, validate, heap_options).passed

        report.shrunk_trace = format_trace(shrink_trace(trace, still_fails))
    return report
