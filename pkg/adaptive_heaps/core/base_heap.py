"""
Shared CLRS machinery for the Fibonacci-like heaps.

INSERT, FIND-MIN, UNION, DECREASE-KEY (with CUT and CASCADING-CUT) and DELETE
are identical across the variants; only CONSOLIDATE differs. Subclasses
implement _consolidate().
"""
import itertools
import logging
from abc import ABC, abstractmethod
from typing import Any, ClassVar, Dict, Iterator, List, Optional, Tuple

from adaptive_heaps.core.arena import (
    NodeArena,
    iter_children,
    iter_list,
    list_append_tail,
    list_concat,
    list_remove,
)
from adaptive_heaps.core.errors import KeyIncreaseError
from adaptive_heaps.core.schemas import MetricsRecord, ValidationReport
from adaptive_heaps.core.types import KEY_MAX, KEY_MIN, HeapKind, Key, MinEntry, NodeHandle, TreeShape

logger = logging.getLogger(__name__)

# Process-wide insertion ordinals; heaps share it so union never merges equal seqs
SHARED_SEQ = itertools.count()


def check_key(key: Key) -> Key:
    if isinstance(key, bool) or not isinstance(key, int):
        raise TypeError(f"Keys must be integers, got {type(key).__name__}")
    if not KEY_MIN <= key <= KEY_MAX:
        raise ValueError(f"Key {key} is outside the signed 64-bit range")
    return key


class BaseFibonacciLikeHeap(ABC):
    """Root list + CLRS operations over a NodeArena"""

    kind: ClassVar[HeapKind]

    def __init__(self, seq_source: Optional[Iterator[int]] = None):
        self.arena = NodeArena()
        self._min: Optional[int] = None
        # Oldest element of the root list
        self._root: Optional[int] = None
        self.n = 0
        self.metrics = MetricsRecord()
        self._seq = seq_source if seq_source is not None else SHARED_SEQ

    # ------------------------------------------------------------------
    # Comparisons

    def _less(self, a: int, b: int) -> bool:
        """TotalKey(a) < TotalKey(b); counts one comparison for two real keys"""
        ra = self.arena[a]
        rb = self.arena[b]
        if ra.minus_infinity or rb.minus_infinity:
            if ra.minus_infinity and rb.minus_infinity:
                return ra.seq < rb.seq
            return ra.minus_infinity
        self.metrics.comparisons += 1
        if ra.key != rb.key:
            return ra.key < rb.key
        return ra.seq < rb.seq

    def compare_less(self, a: NodeHandle, b: NodeHandle) -> bool:
        return self._less(self.arena.resolve(a), self.arena.resolve(b))

    # ------------------------------------------------------------------
    # Structure helpers

    def _link(self, y: int, x: int) -> None:
        """Make detached y a child of x (appended after x's latest child)"""
        arena = self.arena
        ry = arena[y]
        rx = arena[x]
        rx.child = list_append_tail(arena, rx.child, y)
        ry.parent = x
        ry.mark = False
        rx.degree += 1
        self.metrics.links += 1
        self.metrics.observe_degree(rx.degree)

    def _add_root(self, x: int) -> None:
        self._root = list_append_tail(self.arena, self._root, x)

    def _remove_root(self, x: int) -> None:
        """Remove x from the root list, keeping the anchor on the oldest root"""
        rx = self.arena[x]
        if self._root == x:
            self._root = None if rx.right == x else rx.right
        list_remove(self.arena, x)

    def _cut(self, x: int, y: int, cascading: bool = False) -> None:
        """CUT(H, x, y): move child x of y to the root-list tail"""
        arena = self.arena
        rx = arena[x]
        ry = arena[y]
        if ry.child == x:
            ry.child = None if rx.right == x else rx.right
        list_remove(arena, x)
        ry.degree -= 1
        rx.parent = None
        rx.mark = False
        self._add_root(x)
        if cascading:
            self.metrics.cascading_cuts += 1
        else:
            self.metrics.cuts += 1

    def _cascading_cut(self, y: int) -> None:
        arena = self.arena
        z = arena[y].parent
        while z is not None:
            ry = arena[y]
            if not ry.mark:
                ry.mark = True
                return
            self._cut(y, z, cascading=True)
            y = z
            z = arena[y].parent

    @abstractmethod
    def _consolidate(self) -> None:
        """Rebuild the root list after the minimum has been removed"""

    # ------------------------------------------------------------------
    # Public operations

    def insert(self, key: Key) -> NodeHandle:
        check_key(key)
        x = self.arena.allocate(key, next(self._seq))
        self._add_root(x)
        if self._min is None or self._less(x, self._min):
            self._min = x
        self.n += 1
        logger.debug(f"insert key={key} n={self.n}")
        return self.arena.handle(x)

    def find_min(self) -> Optional[MinEntry]:
        if self._min is None:
            return None
        return self.arena.handle(self._min), self.arena[self._min].key

    def extract_min(self) -> Optional[Key]:
        z = self._min
        if z is None:
            return None
        arena = self.arena
        rz = arena[z]
        for x in list(iter_children(arena, z)):
            list_remove(arena, x)
            rx = arena[x]
            rx.parent = None
            rx.mark = False
            self._add_root(x)
        rz.child = None
        rz.degree = 0
        self.n -= 1
        if rz.right == z:
            self._remove_root(z)
            self._min = None
        else:
            successor = rz.right
            self._remove_root(z)
            self._min = successor
            self._consolidate()
        key = rz.key
        arena.free(z)
        return key

    def decrease_key(self, x: NodeHandle, new_key: Key) -> None:
        index = self.arena.resolve(x)
        check_key(new_key)
        record = self.arena[index]
        if new_key > record.key:
            raise KeyIncreaseError(f"New key {new_key} is greater than current key {record.key}")
        record.key = new_key
        self._restore_after_decrease(index)

    def _restore_after_decrease(self, x: int) -> None:
        y = self.arena[x].parent
        if y is not None and self._less(x, y):
            self._cut(x, y)
            self._cascading_cut(y)
        if x != self._min and self._less(x, self._min):  # type: ignore[arg-type]
            self._min = x

    def delete(self, x: NodeHandle) -> None:
        """Decrease x to minus infinity, then extract it"""
        index = self.arena.resolve(x)
        self.arena[index].minus_infinity = True
        self._restore_after_decrease(index)
        self.extract_min()

    def union(self, other: "BaseFibonacciLikeHeap") -> Dict[NodeHandle, NodeHandle]:
        """Move every node of other into this heap.

        other's root list is appended after this heap's tail. Returns the
        translation from other's handles to handles in this heap; other is
        left empty and its old handles are invalid.
        """
        if other is self:
            raise ValueError("Cannot union a heap with itself")
        if not isinstance(other, BaseFibonacciLikeHeap):
            raise TypeError(f"Cannot union with {type(other).__name__}")
        if other.n == 0:
            return {}

        src = other.arena
        dst = self.arena
        remap: Dict[int, int] = {}
        for index in src.indices():
            record = src[index]
            remap[index] = dst.allocate(record.key, record.seq)
        for old, new in remap.items():
            record = src[old]
            target = dst[new]
            target.left = remap[record.left]
            target.right = remap[record.right]
            target.parent = None if record.parent is None else remap[record.parent]
            target.child = None if record.child is None else remap[record.child]
            target.degree = record.degree
            target.mark = record.mark
            target.linked = record.linked
            target.minus_infinity = record.minus_infinity

        handles = {src.handle(old): dst.handle(new) for old, new in remap.items()}
        other_min = remap[other._min]  # type: ignore[index]
        self._root = list_concat(dst, self._root, remap[other._root])  # type: ignore[index]
        if self._min is None or self._less(other_min, self._min):
            self._min = other_min
        self.n += other.n
        self.metrics.absorb(other.metrics)

        for index in list(src.indices()):
            src.free(index)
        other._min = other._root = None
        other.n = 0
        other.metrics.snapshot_and_reset()
        logger.debug(f"union moved {len(remap)} nodes, n={self.n}")
        return handles

    @abstractmethod
    def validate(self) -> ValidationReport:
        """Full structural validation"""

    # ------------------------------------------------------------------
    # Introspection

    @property
    def min(self) -> Optional[NodeHandle]:
        return None if self._min is None else self.arena.handle(self._min)

    @property
    def root(self) -> Optional[NodeHandle]:
        return None if self._root is None else self.arena.handle(self._root)

    def key_of(self, x: NodeHandle) -> Key:
        return self.arena[self.arena.resolve(x)].key

    def is_valid(self, x: NodeHandle) -> bool:
        return self.arena.is_valid(x)

    def iter_roots(self) -> Iterator[NodeHandle]:
        for x in list(iter_list(self.arena, self._root)):
            yield self.arena.handle(x)

    def root_keys(self) -> List[Key]:
        return [self.arena[x].key for x in iter_list(self.arena, self._root)]

    def children_keys(self, x: NodeHandle) -> List[Key]:
        index = self.arena.resolve(x)
        return [self.arena[c].key for c in iter_children(self.arena, index)]

    def degree_of(self, x: NodeHandle) -> int:
        return self.arena[self.arena.resolve(x)].degree

    def is_marked(self, x: NodeHandle) -> bool:
        return self.arena[self.arena.resolve(x)].mark

    def parent_of(self, x: NodeHandle) -> Optional[NodeHandle]:
        parent = self.arena[self.arena.resolve(x)].parent
        return None if parent is None else self.arena.handle(parent)

    def tree_shape(self, x: int) -> TreeShape:
        """(key, (child shapes...)) for the subtree at index x; small heaps only"""
        record = self.arena[x]
        return (record.key, tuple(self.tree_shape(c) for c in iter_children(self.arena, x)))

    def snapshot(self) -> Tuple[TreeShape, ...]:
        """Every tree in root-list order"""
        return tuple(self.tree_shape(x) for x in iter_list(self.arena, self._root))

    def describe(self) -> Dict[str, Any]:
        return {
            "kind": self.kind.value,
            "n": self.n,
            "roots": len(self.root_keys()),
            "min": None if self._min is None else self.arena[self._min].key,
            "metrics": self.metrics.model_dump(),
        }

    def __len__(self) -> int:
        return self.n

    def __bool__(self) -> bool:
        return self.n > 0

    def __repr__(self) -> str:
        return f"{type(self).__name__}(n={self.n})"
