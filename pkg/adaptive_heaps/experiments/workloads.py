"""
Workload generation.

A WorkloadSpec names an input generator, a size, a seed, a heap and a mode;
generate() turns it into an OpTrace. Everything is derived from
random.Random(seed), so (generator, n, seed, mode) fixes the trace.
"""
import heapq
import logging
import random
from enum import Enum
from pathlib import Path
from typing import Dict, List, Optional, Tuple

from pydantic import BaseModel, Field, model_validator

from adaptive_heaps.core.config import settings
from adaptive_heaps.core.errors import WorkloadError
from adaptive_heaps.core.types import HeapKind, Key
from adaptive_heaps.oracle.trace import DecreaseKey, ExtractMin, Insert, Op, OpTrace, UnionBlock, load_trace

logger = logging.getLogger(__name__)


class GeneratorKind(str, Enum):
    """Input key generators"""
    RANDOM = "random"
    SORTED = "sorted"
    REVERSE = "reverse"
    RUNS = "runs"
    SWAPS = "swaps"
    SAWTOOTH = "sawtooth"
    TRACE = "trace"


class WorkloadMode(str, Enum):
    """How keys become operations"""
    SORT = "sort"
    DIJKSTRA = "dijkstra"
    REPLAY = "replay"


# Generators that take a positive integer argument after the colon
_INT_ARG = {GeneratorKind.RUNS, GeneratorKind.SWAPS, GeneratorKind.SAWTOOTH}


class WorkloadSpec(BaseModel):
    """One workload: which keys, how many, which heap, which op pattern"""
    generator: GeneratorKind = Field(..., description="Input key generator")
    gen_arg: Optional[str] = Field(None, description="R for runs, S for swaps, P for sawtooth, path for trace")
    n: int = Field(0, ge=0, description="Number of keys")
    seed: int = Field(default_factory=lambda: settings.DEFAULT_SEED, description="Seed for random.Random")
    heap: HeapKind = Field(HeapKind.FIB, description="Heap under test")
    mode: WorkloadMode = Field(WorkloadMode.SORT, description="Operation pattern")

    @model_validator(mode="after")
    def check_generator_arg(self) -> "WorkloadSpec":
        if self.generator in _INT_ARG:
            if self.gen_arg is None or not self.gen_arg.isdigit() or int(self.gen_arg) <= 0:
                raise ValueError(f"{self.generator.value} needs a positive integer argument, e.g. {self.generator.value}:4")
        elif self.generator is GeneratorKind.TRACE:
            if not self.gen_arg:
                raise ValueError("trace needs a file, e.g. trace:workload.txt")
        elif self.gen_arg is not None:
            raise ValueError(f"{self.generator.value} takes no argument")
        if self.mode is WorkloadMode.REPLAY and self.generator is not GeneratorKind.TRACE:
            raise ValueError("replay mode needs the trace generator")
        return self

    @staticmethod
    def parse_gen(text: str) -> Tuple[GeneratorKind, Optional[str]]:
        """Split 'kind[:arg]' into the generator and its argument"""
        name, sep, arg = text.partition(":")
        try:
            kind = GeneratorKind(name.strip().lower())
        except ValueError:
            known = ", ".join(k.value for k in GeneratorKind)
            raise WorkloadError(f"Unknown generator {name!r}; expected one of {known}")
        return kind, (arg.strip() if sep else None)

    @classmethod
    def from_gen(cls, gen: str, **kwargs: object) -> "WorkloadSpec":
        kind, arg = cls.parse_gen(gen)
        if kind is GeneratorKind.TRACE and "mode" not in kwargs:
            kwargs["mode"] = WorkloadMode.REPLAY
        try:
            return cls(generator=kind, gen_arg=arg, **kwargs)  # type: ignore[arg-type]
        except ValueError as e:
            raise WorkloadError(str(e)) from e

    @property
    def gen_label(self) -> str:
        return self.generator.value if self.gen_arg is None else f"{self.generator.value}:{self.gen_arg}"

    def with_seed(self, seed: int) -> "WorkloadSpec":
        return self.model_copy(update={"seed": seed})


def _runs_keys(rng: random.Random, n: int, r: int) -> List[Key]:
    """A permutation of 1..n cut into r contiguous blocks, each sorted"""
    keys = list(range(1, n + 1))
    rng.shuffle(keys)
    r = min(r, max(n, 1))
    bounds = [n * i // r for i in range(r + 1)]
    out: List[Key] = []
    for lo, hi in zip(bounds, bounds[1:]):
        out.extend(sorted(keys[lo:hi]))
    return out


def _swaps_keys(rng: random.Random, n: int, s: int) -> List[Key]:
    """1..n with s random transpositions"""
    keys = list(range(1, n + 1))
    if n < 2:
        return keys
    for _ in range(s):
        i, j = rng.randrange(n), rng.randrange(n)
        keys[i], keys[j] = keys[j], keys[i]
    return keys


def _sawtooth_keys(n: int, period: int) -> List[Key]:
    """Distinct keys rising in teeth of `period` consecutive positions"""
    stride = n // period + 1
    return [(i % period) * stride + i // period for i in range(n)]


def _trace_keys(trace: OpTrace) -> List[Key]:
    keys: List[Key] = []
    for op in trace:
        if isinstance(op, Insert):
            keys.append(op.key)
        elif isinstance(op, UnionBlock):
            keys.extend(_trace_keys(op.trace))
    return keys


def generate_keys(spec: WorkloadSpec) -> List[Key]:
    """Input keys in insertion order"""
    rng = random.Random(spec.seed)
    n = spec.n
    gen = spec.generator
    if gen is GeneratorKind.RANDOM:
        keys = list(range(1, n + 1))
        rng.shuffle(keys)
        return keys
    if gen is GeneratorKind.SORTED:
        return list(range(1, n + 1))
    if gen is GeneratorKind.REVERSE:
        return list(range(n, 0, -1))
    if gen is GeneratorKind.RUNS:
        return _runs_keys(rng, n, int(spec.gen_arg))  # type: ignore[arg-type]
    if gen is GeneratorKind.SWAPS:
        return _swaps_keys(rng, n, int(spec.gen_arg))  # type: ignore[arg-type]
    if gen is GeneratorKind.SAWTOOTH:
        return _sawtooth_keys(n, int(spec.gen_arg))  # type: ignore[arg-type]
    if gen is GeneratorKind.TRACE:
        return _trace_keys(_load(spec))
    raise WorkloadError(f"Unknown generator {gen!r}")


def _load(spec: WorkloadSpec) -> OpTrace:
    path = Path(spec.gen_arg or "")
    if not path.is_file():
        raise WorkloadError(f"Trace file {path} does not exist")
    return load_trace(path)


def _dijkstra_ops(rng: random.Random, keys: List[Key]) -> List[Op]:
    """Insert every key, then extract until empty with 0-2 decrease-keys after each.

    Like Dijkstra's relaxations, a decreased key never drops below the last
    extracted key. A lazy-deletion heapq mirrors the live keys.
    """
    ops: List[Op] = [Insert(k) for k in keys]
    live: Dict[int, Key] = dict(enumerate(keys))
    # Live ordinals with swap-remove, for O(1) random picks
    pool: List[int] = list(range(len(keys)))
    where: Dict[int, int] = {o: o for o in pool}
    mirror: List[Tuple[Key, int]] = [(k, i) for i, k in enumerate(keys)]
    heapq.heapify(mirror)
    while live:
        key, ordinal = heapq.heappop(mirror)
        if live.get(ordinal) != key:
            continue
        del live[ordinal]
        last = pool.pop()
        if last != ordinal:
            pool[where[ordinal]] = last
            where[last] = where[ordinal]
        del where[ordinal]
        ops.append(ExtractMin())
        if not live:
            break
        for _ in range(rng.randint(0, 2)):
            target = pool[rng.randrange(len(pool))]
            current = live[target]
            if current <= key:
                continue
            new_key = rng.randint(key, current)
            live[target] = new_key
            heapq.heappush(mirror, (new_key, target))
            ops.append(DecreaseKey(target, new_key))
    return ops


def generate(spec: WorkloadSpec) -> OpTrace:
    """Deterministic trace for spec"""
    if spec.mode is WorkloadMode.REPLAY or spec.generator is GeneratorKind.TRACE:
        trace = _load(spec)
        logger.debug(f"Loaded {trace.total_ops()} ops from {spec.gen_arg}")
        return trace

    keys = generate_keys(spec)
    if spec.mode is WorkloadMode.SORT:
        ops: List[Op] = [Insert(k) for k in keys]
        ops.extend(ExtractMin() for _ in keys)
    else:
        # Separate stream so the key permutation matches sort mode
        ops = _dijkstra_ops(random.Random(spec.seed ^ 0xD1A), keys)
    logger.debug(f"Generated {len(ops)} ops for {spec.gen_label} n={spec.n} seed={spec.seed}")
    return OpTrace(tuple(ops))
