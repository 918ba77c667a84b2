"""
Presortedness measures used by the adaptivity experiments.

runs        maximal non-decreasing contiguous segments
inversions  pairs i < j with X[i] > X[j], by merge counting
local_min_depth
            how many times "keep only the local minima" must be applied
            before a single element is left. m_0 = X and m_i holds the local
            minima of m_{i-1} in their original order. Linear convention: the
            first element counts iff it is smaller than its successor, the
            last iff smaller than its predecessor. Equal values are ordered by
            position.
"""
from typing import Any, Dict, List, NamedTuple, Sequence, Tuple, TypeVar

T = TypeVar("T")


class LocalMinDepth(NamedTuple):
    k: int
    chain: List[List[Any]]


def _require_items(X: Sequence[Any]) -> None:
    if len(X) == 0:
        raise ValueError("Presortedness measures need a non-empty sequence")


def runs(X: Sequence[int]) -> int:
    _require_items(X)
    count = 1
    for i in range(1, len(X)):
        if X[i] < X[i - 1]:
            count += 1
    return count


def inversions_bruteforce(X: Sequence[int]) -> int:
    _require_items(X)
    n = len(X)
    return sum(1 for i in range(n) for j in range(i + 1, n) if X[i] > X[j])


def inversions(X: Sequence[int]) -> int:
    """O(n log n) bottom-up merge sort that counts crossing pairs"""
    _require_items(X)
    values = list(X)
    n = len(values)
    buffer = [0] * n
    total = 0
    width = 1
    while width < n:
        for lo in range(0, n, 2 * width):
            mid = min(lo + width, n)
            hi = min(lo + 2 * width, n)
            i, j, k = lo, mid, lo
            while i < mid and j < hi:
                if values[j] < values[i]:
                    buffer[k] = values[j]
                    total += mid - i
                    j += 1
                else:
                    buffer[k] = values[i]
                    i += 1
                k += 1
            while i < mid:
                buffer[k] = values[i]
                i += 1
                k += 1
            while j < hi:
                buffer[k] = values[j]
                j += 1
                k += 1
        values, buffer = buffer, values
        width *= 2
    return total


def local_minima(X: Sequence[T], circular: bool = False) -> List[T]:
    """Local minima of X in order of appearance; ties broken by position.

    A single element is its own local minimum under both conventions.
    """
    n = len(X)
    if n <= 1:
        return list(X)
    keyed: List[Tuple[T, int]] = [(x, i) for i, x in enumerate(X)]

    def smaller(a: int, b: int) -> bool:
        return keyed[a] < keyed[b]  # type: ignore[operator]

    result: List[T] = []
    for i in range(n):
        if circular:
            left, right = (i - 1) % n, (i + 1) % n
            if smaller(i, left) and smaller(i, right):
                result.append(X[i])
        elif i == 0:
            if smaller(0, 1):
                result.append(X[0])
        elif i == n - 1:
            if smaller(i, i - 1):
                result.append(X[i])
        elif smaller(i, i - 1) and smaller(i, i + 1):
            result.append(X[i])
    return result


def local_min_depth(X: Sequence[int]) -> LocalMinDepth:
    """Smallest k with |m_k| = 1, and the chain m_0 .. m_k"""
    _require_items(X)
    # Position tags keep equal values distinct at every level
    level: List[Tuple[int, int]] = [(x, i) for i, x in enumerate(X)]
    chain: List[List[Tuple[int, int]]] = [level]
    while len(level) > 1:
        level = local_minima(level)
        chain.append(level)
    return LocalMinDepth(k=len(chain) - 1, chain=[[x for x, _ in m] for m in chain])


def measure_all(X: Sequence[int]) -> Dict[str, int]:
    return {
        "runs": runs(X),
        "inversions": inversions(X),
        "local_min_depth": local_min_depth(X).k,
    }
