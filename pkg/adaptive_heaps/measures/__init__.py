from adaptive_heaps.measures.presortedness import (
    LocalMinDepth,
    inversions,
    inversions_bruteforce,
    local_min_depth,
    local_minima,
    measure_all,
    runs,
)

__all__ = [
    "LocalMinDepth",
    "inversions",
    "inversions_bruteforce",
    "local_min_depth",
    "local_minima",
    "measure_all",
    "runs",
]
