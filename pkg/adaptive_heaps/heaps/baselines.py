"""
Non-adaptive baselines sharing the same node arena and CLRS operations.

ClassicFibonacciHeap uses the textbook CONSOLIDATE (link equal-degree roots
until every degree is unique). TwoPassPairingHeap collapses the root list with
the classic pairing-heap two-pass scheme: pair neighbours left to right, then
fold the winners right to left.
"""
import logging
from typing import Iterator, Optional

from adaptive_heaps.core.arena import list_drain
from adaptive_heaps.core.base_heap import BaseFibonacciLikeHeap
from adaptive_heaps.core.schemas import ValidationReport
from adaptive_heaps.core.types import HeapKind
from adaptive_heaps.heaps.adaptive_fib import SlotTable

logger = logging.getLogger(__name__)


class ClassicFibonacciHeap(BaseFibonacciLikeHeap):
    kind = HeapKind.CLRS_FIB

    def __init__(self, seq_source: Optional[Iterator[int]] = None, degree_slack: int = 0):
        super().__init__(seq_source)
        self.degree_slack = degree_slack

    def _consolidate(self) -> None:
        arena = self.arena
        self.metrics.consolidate_calls += 1
        roots = list_drain(arena, self._root)
        self._root = None
        table = SlotTable(self.n)
        for w in roots:
            x = w
            d = arena[x].degree
            while table[d] is not None:
                y = table[d]
                assert y is not None
                if self._less(y, x):
                    x, y = y, x
                self._link(y, x)
                table[d] = None
                d += 1
            table[d] = x
        self._min = None
        for _, x in table.occupied():
            self._add_root(x)
            if self._min is None or self._less(x, self._min):
                self._min = x

    def validate(self) -> ValidationReport:
        from adaptive_heaps.validation.structure import validate_fib

        return validate_fib(self, degree_slack=self.degree_slack)


class TwoPassPairingHeap(BaseFibonacciLikeHeap):
    kind = HeapKind.TWO_PASS

    def _meld(self, a: int, b: int) -> int:
        if self._less(b, a):
            a, b = b, a
        self._link(b, a)
        return a

    def _consolidate(self) -> None:
        arena = self.arena
        self.metrics.consolidate_calls += 1
        roots = list_drain(arena, self._root)
        self._root = None
        winners = [
            self._meld(roots[i], roots[i + 1]) if i + 1 < len(roots) else roots[i]
            for i in range(0, len(roots), 2)
        ]
        acc = winners[-1]
        for w in reversed(winners[:-1]):
            acc = self._meld(w, acc)
        self.metrics.consolidate_cycles += 2
        self._add_root(acc)
        self._min = acc

    def validate(self) -> ValidationReport:
        from adaptive_heaps.validation.structure import validate_structure

        return validate_structure(self, check="validate_two_pass")
