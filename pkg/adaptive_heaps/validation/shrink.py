"""
Delta-debugging trace shrinker.

Removes chunks of ops, halving the chunk size down to single ops, and keeps
any candidate on which the predicate still fails. Removing ops renumbers the
ordinals of later inserts, so many candidates stop being valid traces; a
candidate that raises TraceError simply counts as passing. Union blocks are
shrunk from the inside once the top level is minimal.
"""
import logging
from typing import Callable, List

from adaptive_heaps.core.errors import ShrinkError, TraceError
from adaptive_heaps.oracle.trace import OpTrace, UnionBlock

logger = logging.getLogger(__name__)

Predicate = Callable[[OpTrace], bool]


def _fails(predicate: Predicate, candidate: OpTrace) -> bool:
    try:
        return bool(predicate(candidate))
    except TraceError:
        return False


def _remove_chunks(trace: OpTrace, fails: Predicate) -> OpTrace:
    """One full descent of chunk sizes, restarting a size after each success"""
    chunk = max(1, len(trace) // 2)
    while chunk >= 1:
        start = 0
        while start < len(trace):
            candidate = trace.without(start, start + chunk)
            if fails(candidate):
                trace = candidate
            else:
                start += chunk
        if chunk == 1:
            break
        chunk //= 2
    return trace


def _shrink_nested(trace: OpTrace, fails: Predicate) -> OpTrace:
    ops: List = list(trace.ops)
    for i, op in enumerate(ops):
        if not isinstance(op, UnionBlock) or not op.trace.ops:
            continue

        def inner_fails(inner: OpTrace, i: int = i) -> bool:
            return fails(OpTrace(tuple(ops[:i]) + (UnionBlock(inner),) + tuple(ops[i + 1:])))

        inner = _remove_chunks(op.trace, inner_fails)
        inner = _shrink_nested(inner, inner_fails)
        ops[i] = UnionBlock(inner)
    return OpTrace(tuple(ops))


def shrink_trace(trace: OpTrace, predicate: Predicate) -> OpTrace:
    """Locally minimal sub-trace on which predicate(trace) is still True.

    predicate returns True when the trace fails. Raises ShrinkError when it
    does not fail on the input.
    """
    def fails(candidate: OpTrace) -> bool:
        return _fails(predicate, candidate)

    if not fails(trace):
        raise ShrinkError("predicate does not fail")

    original = trace.total_ops()
    while True:
        before = trace.total_ops()
        trace = _remove_chunks(trace, fails)
        trace = _shrink_nested(trace, fails)
        if trace.total_ops() == before:
            break
    logger.info(f"Shrunk failing trace from {original} to {trace.total_ops()} ops")
    return trace
