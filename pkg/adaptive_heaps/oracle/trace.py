"""
Operation traces: the replayable, implementation-independent description of a
priority-queue workload.

Text format, one operation per line:

    i <key>             insert
    x                   extract-min
    f                   find-min
    d <ordinal> <key>   decrease-key
    del <ordinal>       delete
    u {                 union with a heap built from the nested block
    }

Ordinals number inserts in execution order across the whole trace, nested
union blocks included. '#' starts a comment line; blank lines are ignored.
"""
import itertools
import logging
import random
from dataclasses import dataclass, field
from enum import Enum
from pathlib import Path
from typing import Callable, Dict, Iterator, List, Optional, Sequence, Tuple, Union

from adaptive_heaps.core.errors import TraceError, TraceFormatError
from adaptive_heaps.core.types import KEY_MAX, KEY_MIN, Key, NodeHandle, PriorityQueue

logger = logging.getLogger(__name__)


class OpKind(str, Enum):
    INSERT = "i"
    EXTRACT_MIN = "x"
    FIND_MIN = "f"
    DECREASE_KEY = "d"
    DELETE = "del"
    UNION = "u"


@dataclass(frozen=True)
class Insert:
    key: Key
    kind = OpKind.INSERT


@dataclass(frozen=True)
class ExtractMin:
    kind = OpKind.EXTRACT_MIN


@dataclass(frozen=True)
class FindMin:
    kind = OpKind.FIND_MIN


@dataclass(frozen=True)
class DecreaseKey:
    ordinal: int
    new_key: Key
    kind = OpKind.DECREASE_KEY


@dataclass(frozen=True)
class Delete:
    ordinal: int
    kind = OpKind.DELETE


@dataclass(frozen=True)
class UnionBlock:
    """Build a second heap from `trace`, then union it into the current one"""
    trace: "OpTrace"
    kind = OpKind.UNION


Op = Union[Insert, ExtractMin, FindMin, DecreaseKey, Delete, UnionBlock]


@dataclass(frozen=True)
class OpTrace:
    ops: Tuple[Op, ...] = field(default_factory=tuple)

    @classmethod
    def of(cls, ops: Sequence[Op]) -> "OpTrace":
        return cls(tuple(ops))

    def __len__(self) -> int:
        return len(self.ops)

    def __iter__(self) -> Iterator[Op]:
        return iter(self.ops)

    def __getitem__(self, index: int) -> Op:
        return self.ops[index]

    def total_ops(self) -> int:
        """Operation count with nested union blocks expanded"""
        return sum(1 + (op.trace.total_ops() if isinstance(op, UnionBlock) else 0) for op in self.ops)

    def insert_count(self) -> int:
        return sum(
            op.trace.insert_count() if isinstance(op, UnionBlock) else int(isinstance(op, Insert))
            for op in self.ops
        )

    def without(self, start: int, stop: int) -> "OpTrace":
        """Copy with ops[start:stop] removed"""
        return OpTrace(self.ops[:start] + self.ops[stop:])

    def __str__(self) -> str:
        return format_trace(self)


# ----------------------------------------------------------------------
# Text format


def _parse_int(token: str, line_no: int, what: str) -> int:
    try:
        value = int(token, 10)
    except ValueError:
        raise TraceFormatError(f"{what} must be a decimal integer, got {token!r}", line_no)
    return value


def _parse_key(token: str, line_no: int) -> Key:
    key = _parse_int(token, line_no, "key")
    if not KEY_MIN <= key <= KEY_MAX:
        raise TraceFormatError(f"key {key} is outside the signed 64-bit range", line_no)
    return key


def _parse_ordinal(token: str, line_no: int) -> int:
    ordinal = _parse_int(token, line_no, "ordinal")
    if ordinal < 0:
        raise TraceFormatError(f"ordinal {ordinal} is negative", line_no)
    return ordinal


def parse_trace(text: str) -> OpTrace:
    """Parse the text format; raises TraceFormatError with the offending line"""
    stack: List[Tuple[List[Op], int]] = [([], 0)]
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        head, args = tokens[0], tokens[1:]
        ops = stack[-1][0]

        if head == "i" and len(args) == 1:
            ops.append(Insert(_parse_key(args[0], line_no)))
        elif head == "x" and not args:
            ops.append(ExtractMin())
        elif head == "f" and not args:
            ops.append(FindMin())
        elif head == "d" and len(args) == 2:
            ops.append(DecreaseKey(_parse_ordinal(args[0], line_no), _parse_key(args[1], line_no)))
        elif head == "del" and len(args) == 1:
            ops.append(Delete(_parse_ordinal(args[0], line_no)))
        elif head == "u" and args == ["{"]:
            stack.append(([], line_no))
        elif head == "}" and not args:
            if len(stack) == 1:
                raise TraceFormatError("'}' without a matching 'u {'", line_no)
            nested, _ = stack.pop()
            stack[-1][0].append(UnionBlock(OpTrace(tuple(nested))))
        else:
            raise TraceFormatError(f"cannot parse {line!r}", line_no)

    if len(stack) > 1:
        raise TraceFormatError("unterminated 'u {' block", stack[-1][1])
    return OpTrace(tuple(stack[0][0]))


def _format_lines(trace: OpTrace, depth: int, out: List[str]) -> None:
    pad = "  " * depth
    for op in trace:
        if isinstance(op, Insert):
            out.append(f"{pad}i {op.key}")
        elif isinstance(op, ExtractMin):
            out.append(f"{pad}x")
        elif isinstance(op, FindMin):
            out.append(f"{pad}f")
        elif isinstance(op, DecreaseKey):
            out.append(f"{pad}d {op.ordinal} {op.new_key}")
        elif isinstance(op, Delete):
            out.append(f"{pad}del {op.ordinal}")
        else:
            out.append(f"{pad}u {{")
            _format_lines(op.trace, depth + 1, out)
            out.append(f"{pad}}}")


def format_trace(trace: OpTrace) -> str:
    lines: List[str] = []
    _format_lines(trace, 0, lines)
    return "\n".join(lines) + ("\n" if lines else "")


def load_trace(path: Union[str, Path]) -> OpTrace:
    path = Path(path)
    logger.debug(f"Loading trace from {path}")
    return parse_trace(path.read_text())


def dump_trace(trace: OpTrace, path: Union[str, Path]) -> None:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(format_trace(trace))
    logger.info(f"Wrote {trace.total_ops()} ops to {path}")


# ----------------------------------------------------------------------
# Replay


@dataclass
class _Level:
    """One heap under replay with its ordinal <-> handle maps"""
    heap: PriorityQueue
    by_ordinal: Dict[int, NodeHandle] = field(default_factory=dict)
    by_handle: Dict[NodeHandle, int] = field(default_factory=dict)

    def bind(self, ordinal: int, handle: NodeHandle) -> None:
        self.by_ordinal[ordinal] = handle
        self.by_handle[handle] = ordinal

    def release(self, handle: NodeHandle) -> None:
        # Handles inserted outside the replayer were never bound
        ordinal = self.by_handle.pop(handle, None)
        if ordinal is not None:
            del self.by_ordinal[ordinal]

    def lookup(self, ordinal: int) -> NodeHandle:
        handle = self.by_ordinal.get(ordinal)
        if handle is None:
            raise TraceError(f"Ordinal {ordinal} does not name a live node of this heap")
        return handle


AfterOp = Callable[[int, Op, PriorityQueue], None]


class TraceReplayer:
    """Replays traces against heaps made by `factory`.

    Every executed op, including those inside union blocks, gets a step
    number. outputs holds (step, key) for each ExtractMin and FindMin, key
    being None on an empty heap. after_op(step, op, heap) runs after each op
    on the heap the op was applied to.
    """

    def __init__(
        self,
        factory: Callable[[], PriorityQueue],
        after_op: Optional[AfterOp] = None,
        heap: Optional[PriorityQueue] = None,
    ):
        self.factory = factory
        self.after_op = after_op
        self._top = _Level(heap if heap is not None else factory())
        self.outputs: List[Tuple[int, Optional[Key]]] = []
        self.next_ordinal = 0
        self.step = 0

    @property
    def heap(self) -> PriorityQueue:
        return self._top.heap

    def handle_of(self, ordinal: int) -> NodeHandle:
        return self._top.lookup(ordinal)

    def live_ordinals(self) -> List[int]:
        return list(self._top.by_ordinal)

    def replay(self, trace: OpTrace) -> List[Tuple[int, Optional[Key]]]:
        self._run(trace, self._top)
        return self.outputs

    def apply(self, op: Op) -> Optional[Key]:
        """Apply one op to the top-level heap"""
        return self._apply(op, self._top)

    def _run(self, trace: OpTrace, level: _Level) -> None:
        for op in trace:
            self._apply(op, level)

    def _apply(self, op: Op, level: _Level) -> Optional[Key]:
        heap = level.heap
        result: Optional[Key] = None
        if isinstance(op, Insert):
            level.bind(self.next_ordinal, heap.insert(op.key))
            self.next_ordinal += 1
        elif isinstance(op, ExtractMin):
            entry = heap.find_min()
            result = heap.extract_min()
            if entry is not None:
                level.release(entry[0])
        elif isinstance(op, FindMin):
            entry = heap.find_min()
            result = None if entry is None else entry[1]
        elif isinstance(op, DecreaseKey):
            handle = level.lookup(op.ordinal)
            current = heap.key_of(handle)  # type: ignore[attr-defined]
            if op.new_key > current:
                raise TraceError(f"Decrease-key of ordinal {op.ordinal} from {current} to {op.new_key} raises the key")
            heap.decrease_key(handle, op.new_key)
        elif isinstance(op, Delete):
            handle = level.lookup(op.ordinal)
            heap.delete(handle)
            level.release(handle)
        elif isinstance(op, UnionBlock):
            nested = _Level(self.factory())
            self._run(op.trace, nested)
            mapping = heap.union(nested.heap)
            for ordinal, handle in nested.by_ordinal.items():
                level.bind(ordinal, mapping[handle])
        else:
            raise TraceError(f"Unknown trace operation {op!r}")

        step = self.step
        self.step += 1
        if isinstance(op, (ExtractMin, FindMin)):
            self.outputs.append((step, result))
        if self.after_op is not None:
            self.after_op(step, op, heap)
        return result


def oracle_apply(oracle: PriorityQueue, op: Op, replayer: Optional[TraceReplayer] = None) -> Optional[Key]:
    """Apply op with ideal priority-queue semantics.

    Ordinals are resolved through `replayer`, which must wrap `oracle`. Without
    one, the replayer attached to `oracle` by an earlier call is reused, so
    ordinals keep counting across calls.
    """
    if replayer is None:
        replayer = getattr(oracle, "_replayer", None)
        if replayer is None:
            replayer = TraceReplayer(type(oracle), heap=oracle)  # type: ignore[arg-type]
            setattr(oracle, "_replayer", replayer)
    elif replayer.heap is not oracle:
        raise ValueError("replayer does not wrap this oracle")
    return replayer.apply(op)


# ----------------------------------------------------------------------
# Trace generation


def enumerate_traces(max_len: int, keys: Sequence[Key]) -> Iterator[OpTrace]:
    """Every Insert/ExtractMin trace of length 1..max_len over `keys`"""
    alphabet: List[Op] = [Insert(k) for k in keys] + [ExtractMin()]
    for length in range(1, max_len + 1):
        for ops in itertools.product(alphabet, repeat=length):
            yield OpTrace(ops)


DEFAULT_WEIGHTS: Dict[OpKind, float] = {
    OpKind.INSERT: 0.40,
    OpKind.EXTRACT_MIN: 0.22,
    OpKind.FIND_MIN: 0.05,
    OpKind.DECREASE_KEY: 0.18,
    OpKind.DELETE: 0.08,
    OpKind.UNION: 0.07,
}


def _random_block(
    rng: random.Random,
    length: int,
    counter: List[int],
    key_range: Tuple[int, int],
    weights: Dict[OpKind, float],
    union_depth: int,
    max_union_len: int,
) -> Tuple[List[Op], Dict[int, Key]]:
    """Ops for one heap plus the ordinal -> key map of its survivors"""
    lo, hi = key_range
    kinds = list(weights)
    cum = list(itertools.accumulate(weights[k] for k in kinds))
    live: Dict[int, Key] = {}
    ops: List[Op] = []
    while len(ops) < length:
        kind = rng.choices(kinds, cum_weights=cum)[0]
        if kind in (OpKind.DECREASE_KEY, OpKind.DELETE) and not live:
            kind = OpKind.INSERT
        if kind is OpKind.UNION and union_depth <= 0:
            kind = OpKind.INSERT

        if kind is OpKind.INSERT:
            key = rng.randint(lo, hi)
            live[counter[0]] = key
            counter[0] += 1
            ops.append(Insert(key))
        elif kind is OpKind.EXTRACT_MIN:
            if live:
                # Ordinals grow with insertion order, so they break ties like seq
                del live[min(live, key=lambda o: (live[o], o))]
            ops.append(ExtractMin())
        elif kind is OpKind.FIND_MIN:
            ops.append(FindMin())
        elif kind is OpKind.DECREASE_KEY:
            ordinal = rng.choice(list(live))
            new_key = max(KEY_MIN, live[ordinal] - rng.randint(0, max(1, (hi - lo) // 4)))
            live[ordinal] = new_key
            ops.append(DecreaseKey(ordinal, new_key))
        elif kind is OpKind.DELETE:
            ordinal = rng.choice(list(live))
            del live[ordinal]
            ops.append(Delete(ordinal))
        else:
            nested_len = rng.randint(0, max_union_len)
            nested_ops, nested_live = _random_block(
                rng, nested_len, counter, key_range, weights, union_depth - 1, max_union_len
            )
            live.update(nested_live)
            ops.append(UnionBlock(OpTrace(tuple(nested_ops))))
    return ops, live


def random_trace(
    rng: random.Random,
    length: int,
    key_range: Tuple[int, int] = (0, 1000),
    weights: Optional[Dict[OpKind, float]] = None,
    union_depth: int = 1,
    max_union_len: int = 16,
) -> OpTrace:
    """Seeded random trace of `length` top-level ops; always valid to replay"""
    if length < 0:
        raise ValueError("length must be non-negative")
    ops, _ = _random_block(
        rng, length, [0], key_range, weights or DEFAULT_WEIGHTS, union_depth, max_union_len
    )
    return OpTrace(tuple(ops))
