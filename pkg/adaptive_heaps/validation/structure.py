"""
Full-traversal structure validators.

validate_structure checks what every Fibonacci-like heap must satisfy
(circular list consistency, degree bookkeeping, heap order, unmarked roots,
node count, min pointer). validate_fib adds the child-degree bound
(y_i.degree >= i - 2 over children in link order) and the max-degree bound
floor(log_phi(n)) + slack.
"""
import logging
from typing import List, Optional, Tuple

from adaptive_heaps.core.arena import NodeArena
from adaptive_heaps.core.base_heap import BaseFibonacciLikeHeap
from adaptive_heaps.core.schemas import ValidationReport
from adaptive_heaps.core.utils import floor_log_phi

logger = logging.getLogger(__name__)


def _walk_list(
    arena: NodeArena, anchor: int, report: ValidationReport, path: List[int], what: str
) -> Optional[List[int]]:
    """Members of the circular list at anchor, or None if its links are broken"""
    members: List[int] = []
    limit = arena.capacity() + 1
    x = anchor
    while True:
        record = arena[x]
        if arena[record.right].left != x or arena[record.left].right != x:
            report.fail("list-links", f"{what} links are inconsistent at key {record.key}", path + [record.key])
            return None
        if not record.linked:
            report.fail("list-links", f"{what} member with key {record.key} is flagged detached", path + [record.key])
            return None
        members.append(x)
        if len(members) > limit:
            report.fail("list-links", f"{what} does not close into a cycle", path)
            return None
        x = record.right
        if x == anchor:
            return members


def validate_structure(
    heap: BaseFibonacciLikeHeap,
    *,
    check: str = "structure",
    child_degree: bool = False,
    degree_slack: Optional[int] = None,
) -> ValidationReport:
    """Traverse the whole heap, stopping at the first violation"""
    report = ValidationReport(check=check)
    arena = heap.arena

    if heap.n != len(arena):
        report.fail("node-count", f"n={heap.n} but the arena holds {len(arena)} live nodes")
        return report
    if heap.n == 0:
        if heap._root is not None:
            report.fail("empty-heap", "Empty heap still has a root list")
        elif heap._min is not None:
            report.fail("empty-heap", "Empty heap still has a min pointer")
        report.observations["max_degree"] = 0
        return report
    if heap._root is None or heap._min is None:
        report.fail("root-pointer", f"Heap with n={heap.n} has no root or min")
        return report

    roots = _walk_list(arena, heap._root, report, [], "root list")
    if roots is None:
        return report

    root_set = set(roots)
    if heap._min not in root_set:
        report.fail("min-pointer", f"min (key {arena[heap._min].key}) is not a root")
        return report
    min_key = arena[heap._min].sort_key()

    reachable = 0
    max_degree = 0
    stack: List[Tuple[int, List[int]]] = []
    for r in roots:
        record = arena[r]
        if record.parent is not None:
            report.fail("root-parent", f"Root {record.key} has a parent", [record.key])
            return report
        if record.mark:
            report.fail("marked-root", f"Root {record.key} is marked", [record.key])
            return report
        if record.sort_key() < min_key:
            report.fail("min-pointer", f"Root {record.key} is smaller than min {arena[heap._min].key}", [record.key])
            return report
        stack.append((r, [record.key]))

    while stack:
        x, path = stack.pop()
        reachable += 1
        record = arena[x]
        max_degree = max(max_degree, record.degree)
        if record.child is None:
            if record.degree != 0:
                report.fail("degree", f"Node {record.key} has degree {record.degree} but no children", path)
                return report
            continue
        children = _walk_list(arena, record.child, report, path, f"child list of {record.key}")
        if children is None:
            return report
        if len(children) != record.degree:
            report.fail("degree", f"Node {record.key} has degree {record.degree} but {len(children)} children", path)
            return report
        parent_key = record.sort_key()
        for i, c in enumerate(children, start=1):
            child = arena[c]
            child_path = path + [child.key]
            if child.parent != x:
                report.fail("parent-link", f"Child {child.key} does not point back to {record.key}", child_path)
                return report
            if not parent_key < child.sort_key():
                report.fail("heap-order", f"Child {child.key} is not larger than parent {record.key}", child_path)
                return report
            if child_degree and i >= 2 and child.degree < i - 2:
                report.fail(
                    "child-degree",
                    f"Child #{i} of {record.key} has degree {child.degree} < {i - 2}",
                    child_path,
                )
                return report
            stack.append((c, child_path))

    if reachable != heap.n:
        report.fail("node-count", f"{reachable} nodes reachable but n={heap.n}")
        return report

    report.observations["max_degree"] = max_degree
    report.observations["roots"] = len(roots)
    if degree_slack is not None:
        bound = floor_log_phi(heap.n) + degree_slack
        report.observations["degree_bound"] = bound
        if max_degree > bound:
            report.fail("max-degree", f"Max degree {max_degree} exceeds floor(log_phi({heap.n})) + {degree_slack} = {bound}")
    return report


def validate_fib(heap: BaseFibonacciLikeHeap, degree_slack: Optional[int] = None) -> ValidationReport:
    """Structure + child-degree bound + max-degree bound"""
    if degree_slack is None:
        degree_slack = getattr(heap, "degree_slack", 1)
    report = validate_structure(heap, check="validate_fib", child_degree=True, degree_slack=degree_slack)
    if report.passed:
        logger.debug(f"validate_fib: pass, n={heap.n}, max degree {report.observations.get('max_degree')}")
    else:
        logger.error(report.summary())
    return report


def validate_single_root(heap: BaseFibonacciLikeHeap) -> ValidationReport:
    """After a pairing-like CONSOLIDATE: one root and min == root"""
    report = ValidationReport(check="single_root")
    if heap.n == 0:
        return report
    roots = heap.root_keys()
    if len(roots) != 1:
        report.fail("single-root", f"Expected one root after consolidate, found {len(roots)}: {roots[:8]}")
    elif heap._min != heap._root:
        report.fail("single-root", "min and root differ after consolidate")
    return report
