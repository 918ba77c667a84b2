"""Test configuration and fixtures for pytest"""
import itertools
import sys
from pathlib import Path
from typing import Callable, Iterator, List

import pytest

# Make the package importable without installing it
sys.path.insert(0, str(Path(__file__).parent.parent))

from adaptive_heaps.heaps import AdaptiveFibonacciHeap, PairingLikeHeap
from adaptive_heaps.oracle.trace import ExtractMin, Insert, OpTrace

# Key sequence of the worked example used throughout the structure tests
WORKED_SEQUENCE: List[int] = [11, 13, 6, 10, 1, 8, 14, 12, 9, 5, 4, 3, 7, 2]


@pytest.fixture
def worked_sequence() -> List[int]:
    return list(WORKED_SEQUENCE)


@pytest.fixture
def worked_trace() -> OpTrace:
    """Insert the example sequence, then one extract-min"""
    return OpTrace(tuple(Insert(k) for k in WORKED_SEQUENCE) + (ExtractMin(),))


@pytest.fixture
def seq_source() -> Iterator[int]:
    """Private insertion-ordinal counter so seq values are reproducible"""
    return itertools.count()


@pytest.fixture
def fib_heap(seq_source: Iterator[int]) -> AdaptiveFibonacciHeap:
    return AdaptiveFibonacciHeap(seq_source=seq_source, trace=True)


@pytest.fixture
def pairing_heap(seq_source: Iterator[int]) -> PairingLikeHeap:
    return PairingLikeHeap(seq_source=seq_source, cycle_log=True)


@pytest.fixture
def fill() -> Callable:
    """Insert keys in order and return their handles"""
    def _fill(heap, keys):
        return [heap.insert(k) for k in keys]

    return _fill
