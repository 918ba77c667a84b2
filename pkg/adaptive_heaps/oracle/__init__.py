from adaptive_heaps.oracle.oracle_heap import OracleHeap
from adaptive_heaps.oracle.trace import (
    DecreaseKey,
    Delete,
    ExtractMin,
    FindMin,
    Insert,
    Op,
    OpKind,
    OpTrace,
    TraceReplayer,
    UnionBlock,
    dump_trace,
    enumerate_traces,
    format_trace,
    load_trace,
    oracle_apply,
    parse_trace,
    random_trace,
)

__all__ = [
    "DecreaseKey",
    "Delete",
    "ExtractMin",
    "FindMin",
    "Insert",
    "Op",
    "OpKind",
    "OpTrace",
    "OracleHeap",
    "TraceReplayer",
    "UnionBlock",
    "dump_trace",
    "enumerate_traces",
    "format_trace",
    "load_trace",
    "oracle_apply",
    "parse_trace",
    "random_trace",
]
