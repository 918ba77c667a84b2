"""
Adaptive Fibonacci heap.

Everything except CONSOLIDATE is the CLRS Fibonacci heap. CONSOLIDATE walks
the old root list oldest to newest and files each root into a slot table
indexed by degree with APPEND, which links a node under an existing entry only
when the entry is smaller and still has exactly the slot's degree. A root that
beats the entry of its slot adopts it instead and sits in that slot with one
extra child ("darkened"); the degree check keeps a darkened node from being
given another child at that slot. Ascending runs of the input therefore chain
up instead of being forced into binomial shapes.
"""
import logging
from typing import Iterator, List, NamedTuple, Optional, Tuple

from adaptive_heaps.core.arena import list_drain
from adaptive_heaps.core.base_heap import BaseFibonacciLikeHeap
from adaptive_heaps.core.config import settings
from adaptive_heaps.core.errors import SlotBoundError, StructuralError
from adaptive_heaps.core.schemas import ValidationReport
from adaptive_heaps.core.types import HeapKind, Key, NodeHandle
from adaptive_heaps.core.utils import ceil_log_phi

logger = logging.getLogger(__name__)


class SlotEvent(NamedTuple):
    """One assignment A[slot] = node made by APPEND"""
    slot: int
    key: Key
    degree: int
    is_root: bool

    @property
    def darkened(self) -> bool:
        return self.degree == self.slot + 1


def slot_bound(n: int, slack: Optional[int] = None) -> int:
    """Largest slot index CONSOLIDATE may touch for a heap of n nodes"""
    if slack is None:
        slack = settings.SLOT_BOUND_SLACK
    return ceil_log_phi(max(n, 1)) + slack


class SlotTable:
    """The consolidation array A, indexed by degree"""

    def __init__(self, n: int, initial_size: Optional[int] = None, slack: Optional[int] = None):
        self.n = n
        self.bound = slot_bound(n, slack)
        size = initial_size if initial_size is not None else settings.SLOT_TABLE_INITIAL_SIZE
        self.slots: List[Optional[int]] = [None] * size

    def _check(self, d: int) -> None:
        if d > self.bound:
            raise SlotBoundError(d, self.bound, self.n)
        if d >= len(self.slots):
            self.slots.extend([None] * (d + 1 - len(self.slots)))

    def __getitem__(self, d: int) -> Optional[int]:
        self._check(d)
        return self.slots[d]

    def __setitem__(self, d: int, x: Optional[int]) -> None:
        self._check(d)
        self.slots[d] = x

    def occupied(self) -> Iterator[Tuple[int, int]]:
        """(slot, node) pairs in ascending slot order"""
        for d, x in enumerate(self.slots):
            if x is not None:
                yield d, x


class AdaptiveFibonacciHeap(BaseFibonacciLikeHeap):
    """Fibonacci heap with the adaptive APPEND-based consolidation"""

    kind = HeapKind.FIB

    def __init__(
        self,
        seq_source: Optional[Iterator[int]] = None,
        trace: bool = False,
        slot_slack: Optional[int] = None,
        degree_slack: Optional[int] = None,
    ):
        super().__init__(seq_source)
        self.trace = trace
        self.slot_slack = slot_slack if slot_slack is not None else settings.SLOT_BOUND_SLACK
        self.degree_slack = degree_slack if degree_slack is not None else settings.DEGREE_BOUND_SLACK
        # Events of the most recent CONSOLIDATE, when tracing
        self.slot_events: List[SlotEvent] = []
        self.last_slots: List[Tuple[int, Key, int]] = []

    def _consolidate(self) -> None:
        arena = self.arena
        self.metrics.consolidate_calls += 1
        if self.trace:
            self.slot_events = []
        roots = list_drain(arena, self._root)
        self._root = None
        table = SlotTable(self.n, slack=self.slot_slack)
        for x in roots:
            self._append_slot(x, arena[x].degree, table)

        # New root list: parentless entries in ascending slot order
        self._min = None
        for _, x in table.occupied():
            if arena[x].parent is None:
                self._add_root(x)
                if self._min is None or self._less(x, self._min):
                    self._min = x
        if self.trace:
            self.last_slots = [(d, arena[x].key, arena[x].degree) for d, x in table.occupied()]
        logger.debug(f"consolidate: {len(roots)} roots, slot bound {table.bound}")

    def _append_slot(self, x: int, d: int, table: SlotTable) -> None:
        """APPEND(x, d, A); the final A[d] = x runs on every branch"""
        arena = self.arena
        y = table[d]
        if y is not None:
            ry = arena[y]
            if self._less(y, x):
                if ry.degree == d:
                    self._link(x, y)
                if ry.parent is None:
                    # Recursion only ever moves up the table
                    if ry.degree <= d:
                        raise StructuralError(f"APPEND would recurse from slot {d} to slot {ry.degree} (key {ry.key})")
                    self._append_slot(y, ry.degree, table)
            elif ry.parent is None:
                self._link(y, x)
        if arena[x].degree not in (d, d + 1):
            raise StructuralError(f"Node {arena[x].key} of degree {arena[x].degree} cannot sit in slot {d}")
        table[d] = x
        if self.trace:
            rx = arena[x]
            self.slot_events.append(SlotEvent(d, rx.key, rx.degree, rx.parent is None))

    def append_slot(self, x: NodeHandle, d: int, table: SlotTable) -> None:
        """APPEND on a caller-owned table; a root x is taken off the root list first"""
        index = self.arena.resolve(x)
        record = self.arena[index]
        if record.linked and record.parent is None:
            self._remove_root(index)
        self._append_slot(index, d, table)

    def consolidate(self) -> None:
        """Run CONSOLIDATE on the current root list (no-op on an empty heap)"""
        if self._root is not None:
            self._consolidate()

    def darkened(self) -> List[Tuple[Key, int]]:
        """(key, slot) of every darkened placement in the last traced CONSOLIDATE"""
        return [(e.key, e.slot) for e in self.slot_events if e.darkened]

    def validate(self) -> ValidationReport:
        from adaptive_heaps.validation.structure import validate_fib

        return validate_fib(self)
