"""Shared type definitions"""
from adaptive_heaps.core.types.heap import (
    KEY_MAX,
    KEY_MIN,
    HeapKind,
    Key,
    MinEntry,
    NodeHandle,
    PriorityQueue,
    Seq,
    TreeShape,
)

__all__ = [
    "KEY_MAX",
    "KEY_MIN",
    "HeapKind",
    "Key",
    "MinEntry",
    "NodeHandle",
    "PriorityQueue",
    "Seq",
    "TreeShape",
]
