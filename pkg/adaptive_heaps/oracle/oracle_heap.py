"""
Reference priority queue: a sorted list of (key, seq) pairs.

Trivially correct and slow on purpose. Handles are NodeHandle(seq, 0); seq is
never reused, so a handle to an extracted entry stays invalid forever.
"""
import bisect
import logging
from typing import Dict, Iterator, List, Optional, Tuple

from adaptive_heaps.core.base_heap import SHARED_SEQ, check_key
from adaptive_heaps.core.errors import InvalidHandleError, KeyIncreaseError
from adaptive_heaps.core.schemas import MetricsRecord, ValidationReport
from adaptive_heaps.core.types import HeapKind, Key, MinEntry, NodeHandle

logger = logging.getLogger(__name__)


class OracleHeap:
    kind = HeapKind.ORACLE

    def __init__(self, seq_source: Optional[Iterator[int]] = None):
        self._entries: List[Tuple[Key, int]] = []
        self._keys: Dict[int, Key] = {}
        self._seq = seq_source if seq_source is not None else SHARED_SEQ
        # Present for interface parity; the oracle counts nothing
        self.metrics = MetricsRecord()

    @property
    def n(self) -> int:
        return len(self._entries)

    def _resolve(self, x: NodeHandle) -> int:
        if not self.is_valid(x):
            raise InvalidHandleError(f"Handle {tuple(x)} does not reference a live entry")
        return x.index

    def _remove_entry(self, seq: int) -> None:
        entry = (self._keys[seq], seq)
        pos = bisect.bisect_left(self._entries, entry)
        del self._entries[pos]

    def insert(self, key: Key) -> NodeHandle:
        check_key(key)
        seq = next(self._seq)
        bisect.insort(self._entries, (key, seq))
        self._keys[seq] = key
        return NodeHandle(seq, 0)

    def find_min(self) -> Optional[MinEntry]:
        if not self._entries:
            return None
        key, seq = self._entries[0]
        return NodeHandle(seq, 0), key

    def extract_min(self) -> Optional[Key]:
        if not self._entries:
            return None
        key, seq = self._entries.pop(0)
        del self._keys[seq]
        return key

    def decrease_key(self, x: NodeHandle, new_key: Key) -> None:
        seq = self._resolve(x)
        check_key(new_key)
        current = self._keys[seq]
        if new_key > current:
            raise KeyIncreaseError(f"New key {new_key} is greater than current key {current}")
        self._remove_entry(seq)
        self._keys[seq] = new_key
        bisect.insort(self._entries, (new_key, seq))

    def delete(self, x: NodeHandle) -> None:
        seq = self._resolve(x)
        self._remove_entry(seq)
        del self._keys[seq]

    def union(self, other: "OracleHeap") -> Dict[NodeHandle, NodeHandle]:
        if other is self:
            raise ValueError("Cannot union a heap with itself")
        if not isinstance(other, OracleHeap):
            raise TypeError(f"Cannot union with {type(other).__name__}")
        handles = {NodeHandle(seq, 0): NodeHandle(seq, 0) for seq in other._keys}
        for entry in other._entries:
            bisect.insort(self._entries, entry)
        self._keys.update(other._keys)
        other._entries = []
        other._keys = {}
        return handles

    def key_of(self, x: NodeHandle) -> Key:
        return self._keys[self._resolve(x)]

    def is_valid(self, x: NodeHandle) -> bool:
        try:
            seq, generation = x
        except (TypeError, ValueError):
            return False
        return generation == 0 and seq in self._keys

    def sorted_keys(self) -> List[Key]:
        return [key for key, _ in self._entries]

    def validate(self) -> ValidationReport:
        report = ValidationReport(check="validate_oracle")
        if len(self._entries) != len(self._keys):
            report.fail("node-count", f"{len(self._entries)} entries but {len(self._keys)} handles")
        elif any(self._entries[i] > self._entries[i + 1] for i in range(len(self._entries) - 1)):
            report.fail("order", "Entries are not sorted")
        return report

    def __len__(self) -> int:
        return len(self._entries)

    def __bool__(self) -> bool:
        return bool(self._entries)

    def __repr__(self) -> str:
        return f"OracleHeap(n={self.n})"
