"""
Conjecture probes.

Each probe sweeps input sizes, writes every measurement to <id>.csv and a
summary with per-size means, normalised ratios and a log-log slope to
<id>_summary.json. Conjectured bounds are reported next to the data; nothing
here asserts them.
"""
import logging
import re
from enum import Enum
from pathlib import Path
from typing import Dict, List, Optional, Sequence, Tuple, Union

import numpy as np
from pydantic import BaseModel, Field

from adaptive_heaps.core.config import settings
from adaptive_heaps.core.errors import WorkloadError
from adaptive_heaps.core.types import HeapKind
from adaptive_heaps.core.utils import lg
from adaptive_heaps.experiments.runner import MetricsRow, run, write_rows_csv
from adaptive_heaps.experiments.workloads import WorkloadMode, WorkloadSpec

logger = logging.getLogger(__name__)


class ProbeId(str, Enum):
    FIB_AMORTIZED = "fib-amortized"
    PAIRING_DEGREE = "pairing-degree"
    NK = "nk"


PROBE_ALIASES = {"nk-characterization": ProbeId.NK}

CONJECTURES: Dict[ProbeId, str] = {
    ProbeId.FIB_AMORTIZED: "extract-min costs O(lg n) amortized: comparisons / (n lg n) stays bounded",
    ProbeId.PAIRING_DEGREE: "pairing-like heap degrees are O(lg n): max_degree / lg n stays bounded",
    ProbeId.NK: "sorting cost is Theta(n k) for local-minima depth k: comparisons / (n k) stays bounded",
}


class ProbeRow(BaseModel):
    """One probe measurement"""
    probe: ProbeId
    heap: HeapKind
    generator: str
    mode: str
    n: int
    trial: int
    k: int = Field(..., description="Local-minima depth of the input keys")
    lg_n: float
    cost: int = Field(..., description="Key comparisons")
    links: int
    max_degree: int


PROBE_COLUMNS: List[str] = list(ProbeRow.model_fields)


class ProbeStat(BaseModel):
    """Means over the trials of one (workload, n) group"""
    heap: HeapKind
    generator: str
    mode: str
    n: int
    trials: int
    mean_cost: float
    mean_k: float
    max_degree: int
    cost_per_nk: float
    cost_per_nlgn: float
    degree_per_lgn: float


class ProbeSummary(BaseModel):
    probe: ProbeId
    conjecture: str = Field(..., description="Bound being probed; reported, never asserted")
    sizes: List[int]
    trials: int
    seed: int
    stats: List[ProbeStat] = Field(default_factory=list)
    cost_slopes: Dict[str, Optional[float]] = Field(
        default_factory=dict, description="log-log slope of mean cost against n, per workload"
    )
    degree_monotone: Dict[str, bool] = Field(
        default_factory=dict, description="Whether max degree never decreases as n grows, per workload"
    )


def probe_id(value: Union[str, ProbeId]) -> ProbeId:
    if isinstance(value, ProbeId):
        return value
    value = value.strip().lower()
    if value in PROBE_ALIASES:
        return PROBE_ALIASES[value]
    try:
        return ProbeId(value)
    except ValueError:
        known = ", ".join(p.value for p in ProbeId)
        raise WorkloadError(f"Unknown probe {value!r}; expected one of {known}")


_POWER = re.compile(r"^2\^(\d+)$")


def _parse_size(token: str) -> int:
    token = token.strip()
    match = _POWER.match(token)
    if match:
        return 2 ** int(match.group(1))
    if token.isdigit():
        return int(token)
    raise WorkloadError(f"Cannot parse size {token!r}; use N, 2^E, 2^A..2^B or a comma list")


def parse_sizes(text: str) -> List[int]:
    """'2^8..2^12' -> every power of two in range; '100,2^10' -> a list"""
    text = text.strip()
    if ".." in text:
        lo_text, _, hi_text = text.partition("..")
        lo_match, hi_match = _POWER.match(lo_text.strip()), _POWER.match(hi_text.strip())
        if not lo_match or not hi_match:
            raise WorkloadError(f"Size ranges must be powers of two, e.g. 2^8..2^16, got {text!r}")
        lo, hi = int(lo_match.group(1)), int(hi_match.group(1))
        if lo > hi:
            raise WorkloadError(f"Empty size range {text!r}")
        return [2 ** e for e in range(lo, hi + 1)]
    sizes = [_parse_size(t) for t in text.split(",") if t.strip()]
    if not sizes or any(n <= 0 for n in sizes):
        raise WorkloadError(f"Sizes must be positive, got {text!r}")
    return sizes


def _rows_from(probe: ProbeId, metrics: List[MetricsRow]) -> List[ProbeRow]:
    return [
        ProbeRow(
            probe=probe,
            heap=m.heap,
            generator=m.generator,
            mode=m.mode,
            n=m.n,
            trial=m.trial,
            k=m.local_min_depth,
            lg_n=lg(m.n),
            cost=m.comparisons,
            links=m.links,
            max_degree=m.max_degree,
        )
        for m in metrics
    ]


def probe_degree_bound(
    n_values: Sequence[int],
    trials: int,
    generator: str = "random",
    seed: Optional[int] = None,
    heap: HeapKind = HeapKind.PAIRING,
) -> List[ProbeRow]:
    """Max degree per (n, trial) over insert-all / extract-all with decrease-keys interleaved"""
    seed = seed if seed is not None else settings.DEFAULT_SEED
    rows: List[ProbeRow] = []
    for n in n_values:
        spec = WorkloadSpec.from_gen(generator, n=n, seed=seed, heap=heap, mode=WorkloadMode.DIJKSTRA)
        rows.extend(_rows_from(ProbeId.PAIRING_DEGREE, run(spec, trials)))
    return rows


def _workloads(probe: ProbeId) -> List[Tuple[HeapKind, str, WorkloadMode]]:
    if probe is ProbeId.FIB_AMORTIZED:
        return [
            (HeapKind.FIB, "random", WorkloadMode.SORT),
            (HeapKind.FIB, "random", WorkloadMode.DIJKSTRA),
        ]
    if probe is ProbeId.NK:
        return [
            (heap, gen, WorkloadMode.SORT)
            for heap in (HeapKind.PAIRING, HeapKind.FIB)
            for gen in ("sorted", "reverse", "sawtooth:16", "runs:8", "random")
        ]
    raise WorkloadError(f"Probe {probe.value} has no fixed workload list")


def collect(probe: ProbeId, sizes: Sequence[int], trials: int, seed: int) -> List[ProbeRow]:
    if probe is ProbeId.PAIRING_DEGREE:
        return probe_degree_bound(sizes, trials, seed=seed)
    rows: List[ProbeRow] = []
    for heap, gen, mode in _workloads(probe):
        for n in sizes:
            spec = WorkloadSpec.from_gen(gen, n=n, seed=seed, heap=heap, mode=mode)
            rows.extend(_rows_from(probe, run(spec, trials)))
    return rows


def _slope(ns: List[int], costs: List[float]) -> Optional[float]:
    """Least-squares slope of log2(cost) against log2(n)"""
    points = [(n, c) for n, c in zip(ns, costs) if n > 0 and c > 0]
    if len({n for n, _ in points}) < 2:
        return None
    x = np.log2(np.array([n for n, _ in points], dtype=float))
    y = np.log2(np.array([c for _, c in points], dtype=float))
    return float(np.polyfit(x, y, 1)[0])


def summarize(probe: ProbeId, rows: List[ProbeRow], sizes: Sequence[int], trials: int, seed: int) -> ProbeSummary:
    summary = ProbeSummary(
        probe=probe, conjecture=CONJECTURES[probe], sizes=list(sizes), trials=trials, seed=seed
    )
    groups: Dict[Tuple[HeapKind, str, str], Dict[int, List[ProbeRow]]] = {}
    for row in rows:
        groups.setdefault((row.heap, row.generator, row.mode), {}).setdefault(row.n, []).append(row)

    for (heap, gen, mode), by_n in groups.items():
        label = f"{heap.value}/{gen}/{mode}"
        ns = sorted(by_n)
        means: List[float] = []
        degrees: List[int] = []
        for n in ns:
            group = by_n[n]
            cost = float(np.mean([r.cost for r in group]))
            k = float(np.mean([r.k for r in group]))
            degree = max(r.max_degree for r in group)
            lg_n = lg(n)
            summary.stats.append(
                ProbeStat(
                    heap=heap,
                    generator=gen,
                    mode=mode,
                    n=n,
                    trials=len(group),
                    mean_cost=cost,
                    mean_k=k,
                    max_degree=degree,
                    cost_per_nk=cost / (n * max(k, 1.0)),
                    cost_per_nlgn=cost / (n * lg_n) if lg_n > 0 else 0.0,
                    degree_per_lgn=degree / lg_n if lg_n > 0 else 0.0,
                )
            )
            means.append(cost)
            degrees.append(degree)
        summary.cost_slopes[label] = _slope(ns, means)
        summary.degree_monotone[label] = all(a <= b for a, b in zip(degrees, degrees[1:]))
        if not summary.degree_monotone[label]:
            logger.warning(f"{probe.value}: max degree is not monotone in n for {label}: {degrees}")
    return summary


def probe(
    probe_name: Union[str, ProbeId],
    sizes: Sequence[int],
    trials: int = 1,
    out_dir: Union[str, Path, None] = None,
    seed: Optional[int] = None,
) -> ProbeSummary:
    """Run one probe and write <id>.csv and <id>_summary.json under out_dir"""
    pid = probe_id(probe_name)
    seed = seed if seed is not None else settings.DEFAULT_SEED
    out = Path(out_dir if out_dir is not None else settings.OUTPUT_DIR)
    logger.info(f"Probe {pid.value}: sizes={list(sizes)} trials={trials} -> {out}")

    rows = collect(pid, sizes, trials, seed)
    write_rows_csv(rows, out / f"{pid.value}.csv", columns=PROBE_COLUMNS)
    summary = summarize(pid, rows, sizes, trials, seed)
    summary_path = out / f"{pid.value}_summary.json"
    summary_path.write_text(summary.model_dump_json(indent=2))
    logger.info(f"Wrote summary to {summary_path}")
    return summary
