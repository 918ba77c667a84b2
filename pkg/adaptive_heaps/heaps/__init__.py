"""Heap implementations and the id -> class registry used by the CLI"""
import logging
from typing import Any, Dict, Type, Union

from adaptive_heaps.core.errors import WorkloadError
from adaptive_heaps.core.types import HeapKind, PriorityQueue
from adaptive_heaps.heaps.adaptive_fib import AdaptiveFibonacciHeap, SlotTable
from adaptive_heaps.heaps.baselines import ClassicFibonacciHeap, TwoPassPairingHeap
from adaptive_heaps.heaps.pairing_like import ConsolidateRecord, PairingLikeHeap
from adaptive_heaps.oracle.oracle_heap import OracleHeap

logger = logging.getLogger(__name__)

HEAP_CLASSES: Dict[HeapKind, Type[Any]] = {
    HeapKind.FIB: AdaptiveFibonacciHeap,
    HeapKind.PAIRING: PairingLikeHeap,
    HeapKind.ORACLE: OracleHeap,
    HeapKind.CLRS_FIB: ClassicFibonacciHeap,
    HeapKind.TWO_PASS: TwoPassPairingHeap,
}


def heap_kind(value: Union[str, HeapKind]) -> HeapKind:
    try:
        return HeapKind(value)
    except ValueError:
        known = ", ".join(k.value for k in HeapKind)
        raise WorkloadError(f"Unknown heap {value!r}; expected one of {known}")


def make_heap(kind: Union[str, HeapKind], **kwargs: Any) -> PriorityQueue:
    """Instantiate a heap by id; kwargs go to the implementation's constructor"""
    cls = HEAP_CLASSES[heap_kind(kind)]
    return cls(**kwargs)


__all__ = [
    "AdaptiveFibonacciHeap",
    "ClassicFibonacciHeap",
    "ConsolidateRecord",
    "HEAP_CLASSES",
    "OracleHeap",
    "PairingLikeHeap",
    "SlotTable",
    "TwoPassPairingHeap",
    "heap_kind",
    "make_heap",
]
