"""
Experiment runner: replay a workload on a heap and collect one metrics row per
trial.
"""
import csv
import logging
import time
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path
from typing import Iterable, List, Optional, Union

from pydantic import BaseModel, Field

from adaptive_heaps.core.config import settings
from adaptive_heaps.core.errors import ValidationFailure
from adaptive_heaps.core.schemas import ValidationReport
from adaptive_heaps.core.types import HeapKind, Key
from adaptive_heaps.experiments.workloads import WorkloadMode, WorkloadSpec, generate, generate_keys
from adaptive_heaps.heaps import make_heap
from adaptive_heaps.measures import measure_all
from adaptive_heaps.oracle.trace import TraceReplayer
from adaptive_heaps.validation.differential import validation_hook

logger = logging.getLogger(__name__)


class MetricsRow(BaseModel):
    """One (workload, trial) measurement. Field order is the CSV column order."""
    schema_version: int = Field(default_factory=lambda: settings.CSV_SCHEMA_VERSION)
    heap: HeapKind
    generator: str = Field(..., description="Generator label, e.g. runs:4")
    mode: str
    n: int
    seed: int
    trial: int
    comparisons: int = 0
    links: int = 0
    cuts: int = 0
    cascading_cuts: int = 0
    consolidate_calls: int = 0
    consolidate_cycles: int = 0
    max_degree: int = 0
    runs: int = 0
    inversions: int = 0
    local_min_depth: int = 0
    wall_time_ns: int = 0


CSV_COLUMNS: List[str] = list(MetricsRow.model_fields)


def _check_sorted_output(keys: List[Key], outputs: list) -> Optional[ValidationReport]:
    extracted = [key for _, key in outputs]
    if extracted == sorted(keys):
        return None
    report = ValidationReport(check="sort_output")
    for i, (got, want) in enumerate(zip(extracted, sorted(keys))):
        if got != want:
            report.fail("sort-order", f"Extract #{i} returned {got}, expected {want}")
            break
    else:
        report.fail("sort-order", f"{len(extracted)} keys extracted, expected {len(keys)}")
    return report


def run_trial(spec: WorkloadSpec, trial: int, validate: bool = False) -> MetricsRow:
    """Replay spec with seed spec.seed + trial on a fresh heap"""
    trial_spec = spec.with_seed(spec.seed + trial)
    trace = generate(trial_spec)
    keys = generate_keys(trial_spec)

    options = {"cycle_log": True} if validate and spec.heap is HeapKind.PAIRING else {}
    hook = validation_hook(validate) if validate else None
    replayer = TraceReplayer(lambda: make_heap(spec.heap, **options), hook)
    start = time.perf_counter_ns()
    replayer.replay(trace)
    elapsed = time.perf_counter_ns() - start

    if validate and spec.mode is WorkloadMode.SORT:
        report = _check_sorted_output(keys, replayer.outputs)
        if report is not None:
            raise ValidationFailure(report)

    metrics = replayer.heap.metrics  # type: ignore[attr-defined]
    measures = measure_all(keys) if keys else {"runs": 0, "inversions": 0, "local_min_depth": 0}
    return MetricsRow(
        heap=spec.heap,
        generator=spec.gen_label,
        mode=spec.mode.value,
        n=len(keys),
        seed=trial_spec.seed,
        trial=trial,
        comparisons=metrics.comparisons,
        links=metrics.links,
        cuts=metrics.cuts,
        cascading_cuts=metrics.cascading_cuts,
        consolidate_calls=metrics.consolidate_calls,
        consolidate_cycles=metrics.consolidate_cycles,
        max_degree=metrics.max_degree_seen,
        wall_time_ns=elapsed,
        **measures,
    )


def run(
    spec: WorkloadSpec,
    trials: Optional[int] = None,
    validate: bool = False,
    max_workers: Optional[int] = None,
) -> List[MetricsRow]:
    """One row per trial; trials fan out to a process pool when max_workers > 1"""
    trials = trials if trials is not None else settings.DEFAULT_TRIALS
    workers = max_workers if max_workers is not None else settings.MAX_WORKERS
    logger.info(
        f"Running {spec.heap.value} on {spec.gen_label} n={spec.n} mode={spec.mode.value} "
        f"trials={trials} validate={validate}"
    )
    if workers > 1 and trials > 1:
        with ProcessPoolExecutor(max_workers=min(workers, trials)) as pool:
            futures = [pool.submit(run_trial, spec, t, validate) for t in range(trials)]
            rows = [f.result() for f in futures]
    else:
        rows = [run_trial(spec, t, validate) for t in range(trials)]
    mean = sum(r.comparisons for r in rows) / max(len(rows), 1)
    logger.info(f"Finished {len(rows)} trials, mean comparisons {mean:.1f}")
    return rows


def write_rows_csv(rows: Iterable[BaseModel], path: Union[str, Path], columns: Optional[List[str]] = None) -> Path:
    """Write rows under a fixed header (CSV_COLUMNS unless columns is given)"""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    columns = columns or CSV_COLUMNS
    count = 0
    with path.open("w", newline="") as f:
        writer = csv.DictWriter(f, fieldnames=columns)
        writer.writeheader()
        for row in rows:
            writer.writerow(row.model_dump(mode="json"))
            count += 1
    logger.info(f"Wrote {count} rows to {path}")
    return path
