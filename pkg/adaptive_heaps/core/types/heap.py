"""Type definitions shared by the heap implementations"""
from enum import Enum
from typing import Any, Dict, NamedTuple, Optional, Protocol, Tuple, runtime_checkable

# Keys are 64-bit signed integers
Key = int
KEY_MIN = -(2**63)
KEY_MAX = 2**63 - 1

# Insertion ordinal used to break ties between equal keys
Seq = int


class NodeHandle(NamedTuple):
    """Opaque reference to a node in a heap's arena.

    The generation distinguishes a live node from a recycled slot.
    """
    index: int
    generation: int


# (handle, key) pair returned by find_min
MinEntry = Tuple[NodeHandle, Key]

# Nested (key, children) tuples describing a tree, earliest-linked child first
TreeShape = Tuple[Key, Tuple[Any, ...]]


class HeapKind(str, Enum):
    """Heap implementations selectable from the CLI"""
    FIB = "fib"
    PAIRING = "pairing"
    ORACLE = "oracle"
    CLRS_FIB = "clrs-fib"
    TWO_PASS = "two-pass"


@runtime_checkable
class PriorityQueue(Protocol):
    """Interface shared by the heaps and the reference oracle"""

    n: int

    def insert(self, key: Key) -> NodeHandle: ...
    def find_min(self) -> Optional[MinEntry]: ...
    def extract_min(self) -> Optional[Key]: ...
    def decrease_key(self, x: NodeHandle, new_key: Key) -> None: ...
    def delete(self, x: NodeHandle) -> None: ...
    def union(self, other: Any) -> Dict[NodeHandle, NodeHandle]: ...
    def validate(self) -> Any: ...
    def __len__(self) -> int: ...
