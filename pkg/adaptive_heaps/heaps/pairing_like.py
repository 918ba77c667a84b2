"""
Pairing-like heap.

Same operations as the Fibonacci heap except CONSOLIDATE, which walks the
circular root list with a previous pointer p and a current pointer c, going
round in cycles until one root is left:

    p = root; c = p.right
    while c != p:
        n = c.right
        if p < c:               link c under p
        elif p has no parent:   link p under c
        p = c; c = n
    min = root = c

p may be a node that was just linked away; linking c under such a p is what
grows ascending chains. Degree is maintained for the validators only.
"""
import logging
from dataclasses import dataclass, field
from typing import Dict, Iterator, List, Optional, Tuple

from adaptive_heaps.core.arena import iter_list
from adaptive_heaps.core.base_heap import BaseFibonacciLikeHeap
from adaptive_heaps.core.config import settings
from adaptive_heaps.core.errors import NonTerminationError
from adaptive_heaps.core.schemas import ValidationReport
from adaptive_heaps.core.types import HeapKind, Key
from adaptive_heaps.core.utils import ceil_lg

logger = logging.getLogger(__name__)

# (key, seq) of one root; seq identifies the node across snapshots
RootEntry = Tuple[Key, int]
RootSnapshot = Tuple[RootEntry, ...]


@dataclass
class ConsolidateRecord:
    """Instrumentation of one CONSOLIDATE call"""
    k: int
    # l_0 (the list before the walk), then the root list after each cycle
    cycles: List[RootSnapshot] = field(default_factory=list)
    # Degree gained by each initial root, keyed by seq
    degree_deltas: Dict[int, int] = field(default_factory=dict)
    iterations: int = 0


def walk_budget(k: int, factor: Optional[int] = None) -> int:
    if factor is None:
        factor = settings.PAIRING_BUDGET_FACTOR
    return factor * k * ceil_lg(k) + 4


class PairingLikeHeap(BaseFibonacciLikeHeap):
    """Fibonacci-heap operations with the cyclic local-minimum consolidation"""

    kind = HeapKind.PAIRING

    def __init__(
        self,
        seq_source: Optional[Iterator[int]] = None,
        cycle_log: Optional[bool] = None,
        budget_factor: Optional[int] = None,
    ):
        super().__init__(seq_source)
        self.cycle_log_enabled = settings.CYCLE_LOG_ENABLED if cycle_log is None else cycle_log
        self.budget_factor = budget_factor if budget_factor is not None else settings.PAIRING_BUDGET_FACTOR
        self.cycle_log: List[ConsolidateRecord] = []

    def _snapshot_from(self, start: int, rank: Dict[int, int]) -> RootSnapshot:
        arena = self.arena
        members = sorted(iter_list(arena, start), key=rank.__getitem__)
        return tuple((arena[x].key, arena[x].seq) for x in members)

    def _consolidate(self) -> None:
        arena = self.arena
        metrics = self.metrics
        metrics.consolidate_calls += 1

        roots = list(iter_list(arena, self._root))
        k = len(roots)
        # Position in the original root list; removals never reorder survivors
        rank = {x: i for i, x in enumerate(roots)}
        budget = walk_budget(k, self.budget_factor)

        record: Optional[ConsolidateRecord] = None
        degrees_before: Dict[int, int] = {}
        if self.cycle_log_enabled:
            record = ConsolidateRecord(k=k)
            record.cycles.append(tuple((arena[x].key, arena[x].seq) for x in roots))
            degrees_before = {x: arena[x].degree for x in roots}

        p = self._root
        assert p is not None
        c = arena[p].right
        iterations = 0
        while c != p:
            iterations += 1
            if iterations > budget:
                raise NonTerminationError(iterations, budget, k)
            rc = arena[c]
            nxt = rc.right
            if self._less(p, c):
                self._remove_root(c)
                self._link(c, p)
            elif arena[p].parent is None:
                self._remove_root(p)
                self._link(p, c)
                if nxt == p:
                    # p was c's successor; the next root is now c's new right
                    nxt = rc.right
            if rank[nxt] <= rank[c]:
                # Wrapped around the root list, including the final confirming pass
                metrics.consolidate_cycles += 1
                if record is not None:
                    record.cycles.append(self._snapshot_from(nxt, rank))
            p, c = c, nxt

        self._root = self._min = c
        if record is not None:
            record.iterations = iterations
            record.degree_deltas = {
                arena[x].seq: arena[x].degree - before for x, before in degrees_before.items()
            }
            self.cycle_log.append(record)
        logger.debug(f"consolidate: k={k} iterations={iterations} budget={budget}")

    def consolidate(self) -> None:
        """Run CONSOLIDATE on the current root list (no-op on an empty heap)"""
        if self._root is not None:
            self._consolidate()

    def validate(self) -> ValidationReport:
        from adaptive_heaps.validation.structure import validate_structure

        report = validate_structure(self, check="validate_pairing")
        if not report.passed:
            logger.error(report.summary())
        return report
