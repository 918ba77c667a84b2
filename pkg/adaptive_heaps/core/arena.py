"""
Node arena and circular doubly-linked list primitives.

Nodes live in a flat list of records addressed by integer index. Links between
nodes (parent/child/left/right) are plain indices; the public API hands out
NodeHandle(index, generation) so that a handle to a freed and recycled slot is
detected instead of silently aliasing a new node.
"""
import logging
from dataclasses import dataclass
from typing import Iterator, List, Optional

from adaptive_heaps.core.errors import InvalidHandleError, StructuralError
from adaptive_heaps.core.types import Key, NodeHandle, Seq

logger = logging.getLogger(__name__)


@dataclass(slots=True)
class NodeRecord:
    """One heap node"""
    key: Key
    seq: Seq
    left: int
    right: int
    degree: int = 0
    mark: bool = False
    parent: Optional[int] = None
    # Earliest-linked child; its siblings follow in link order
    child: Optional[int] = None
    linked: bool = False
    # Set by delete; orders the node below every real key
    minus_infinity: bool = False

    def sort_key(self) -> tuple:
        """Uncounted total-order key, for validators and snapshots"""
        if self.minus_infinity:
            return (0, 0, self.seq)
        return (1, self.key, self.seq)


class NodeArena:
    """Arena of NodeRecords with free-list recycling"""

    def __init__(self) -> None:
        self._records: List[Optional[NodeRecord]] = []
        self._generations: List[int] = []
        self._free: List[int] = []
        self.live = 0

    def allocate(self, key: Key, seq: Seq) -> int:
        if self._free:
            index = self._free.pop()
        else:
            index = len(self._records)
            self._records.append(None)
            self._generations.append(0)
        self._records[index] = NodeRecord(key=key, seq=seq, left=index, right=index)
        self.live += 1
        return index

    def free(self, index: int) -> None:
        if self._records[index] is None:
            raise InvalidHandleError(f"Slot {index} is already free")
        self._records[index] = None
        self._generations[index] += 1
        self._free.append(index)
        self.live -= 1

    def handle(self, index: int) -> NodeHandle:
        return NodeHandle(index, self._generations[index])

    def resolve(self, handle: NodeHandle) -> int:
        """Map a handle to its index, raising InvalidHandleError if stale"""
        if not self.is_valid(handle):
            raise InvalidHandleError(f"Handle {tuple(handle)} does not reference a live node")
        return handle.index

    def is_valid(self, handle: NodeHandle) -> bool:
        try:
            index, generation = handle
        except (TypeError, ValueError):
            return False
        return (
            isinstance(index, int)
            and 0 <= index < len(self._records)
            and self._records[index] is not None
            and self._generations[index] == generation
        )

    def __getitem__(self, index: int) -> NodeRecord:
        record = self._records[index]
        if record is None:
            raise InvalidHandleError(f"Slot {index} is free")
        return record

    def __len__(self) -> int:
        return self.live

    def capacity(self) -> int:
        return len(self._records)

    def indices(self) -> Iterator[int]:
        """Indices of all live records, in slot order"""
        for index, record in enumerate(self._records):
            if record is not None:
                yield index


def list_append_tail(arena: NodeArena, anchor: Optional[int], x: int) -> int:
    """Link detached x at the tail of the circular list anchored at anchor.

    The anchor is the oldest element and anchor.left the newest, so walking
    rightwards from the anchor visits elements in arrival order. Returns the
    (possibly new) anchor.
    """
    rx = arena[x]
    if rx.linked:
        raise StructuralError(f"Node {x} (key {rx.key}) is already linked into a list")
    rx.linked = True
    if anchor is None:
        rx.left = rx.right = x
        return x
    ra = arena[anchor]
    tail = ra.left
    rx.left = tail
    rx.right = anchor
    arena[tail].right = x
    ra.left = x
    return anchor


def list_remove(arena: NodeArena, x: int) -> None:
    """Splice x out of its list and leave it detached.

    Callers holding x as an anchor must re-anchor (at x's former right
    neighbour, or to empty when x was alone).
    """
    rx = arena[x]
    if not rx.linked:
        raise StructuralError(f"Node {x} (key {rx.key}) is not in a list")
    left, right = rx.left, rx.right
    arena[left].right = right
    arena[right].left = left
    rx.left = rx.right = x
    rx.linked = False


def list_concat(arena: NodeArena, a: Optional[int], b: Optional[int]) -> Optional[int]:
    """Append the whole list anchored at b after the tail of list a"""
    if a is None:
        return b
    if b is None:
        return a
    ra, rb = arena[a], arena[b]
    a_tail, b_tail = ra.left, rb.left
    arena[a_tail].right = b
    rb.left = a_tail
    arena[b_tail].right = a
    ra.left = b_tail
    return a


def list_drain(arena: NodeArena, anchor: Optional[int]) -> List[int]:
    """Detach every element of a list, returning them oldest to newest"""
    members = list(iter_list(arena, anchor))
    for x in members:
        rx = arena[x]
        rx.left = rx.right = x
        rx.linked = False
    return members


def iter_list(arena: NodeArena, anchor: Optional[int]) -> Iterator[int]:
    """Walk a circular list rightwards from its anchor.

    Consumers that mutate the list must materialize the walk first.
    """
    if anchor is None:
        return
    x = anchor
    while True:
        nxt = arena[x].right
        yield x
        if nxt == anchor:
            return
        x = nxt


def iter_children(arena: NodeArena, x: int) -> Iterator[int]:
    """Children of x, earliest linked first"""
    return iter_list(arena, arena[x].child)
