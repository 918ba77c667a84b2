"""Tests for the adaptive Fibonacci heap"""
import random

import pytest

from adaptive_heaps.core.arena import list_drain
from adaptive_heaps.core.errors import InvalidHandleError, KeyIncreaseError, SlotBoundError, StructuralError
from adaptive_heaps.heaps import AdaptiveFibonacciHeap, PairingLikeHeap, SlotTable
from adaptive_heaps.heaps.adaptive_fib import SlotEvent, slot_bound
from adaptive_heaps.validation.structure import validate_fib, validate_structure

EXAMPLE_SNAPSHOT = (
    (2, ((7, ()),)),
    (3, ((4, ((5, ((9, ((12, ()),)),)),)), (8, ((14, ()),)))),
    (6, ((10, ()), (11, ((13, ()),)))),
)


class TestExampleConsolidate:
    """Test CONSOLIDATE on the worked example sequence"""

    @pytest.fixture(autouse=True)
    def built(self, fib_heap, fill, worked_sequence):
        self.heap = fib_heap
        self.handles = dict(zip(worked_sequence, fill(fib_heap, worked_sequence)))
        self.extracted = fib_heap.extract_min()

    def test_extracts_minimum(self):
        """Test extract-min returns 1 and leaves 2 as the minimum"""
        assert self.extracted == 1
        assert len(self.heap) == 13
        assert self.heap.find_min() == (self.handles[2], 2)

    def test_tree_shapes(self):
        """Test the trees left by the first consolidate"""
        assert self.heap.root_keys() == [2, 3, 6]
        assert self.heap.snapshot() == EXAMPLE_SNAPSHOT

    def test_final_slot_table(self):
        """Test the slot table at the end of the consolidate"""
        assert self.heap.last_slots == [(0, 2, 1), (1, 3, 2), (2, 6, 2)]

    def test_darkened_placements(self):
        """Test which placements were darkened"""
        assert set(self.heap.darkened()) == {(6, 1), (9, 0), (5, 0), (4, 0), (3, 0), (3, 1), (2, 0)}

    def test_counters(self):
        """Test comparison, link and degree counters"""
        metrics = self.heap.metrics
        assert metrics.comparisons == 30
        assert metrics.links == 10
        assert metrics.consolidate_calls == 1
        assert metrics.max_degree_seen == 2

    def test_validators_pass(self):
        """Test the structure validators accept the result"""
        report = self.heap.validate()
        assert report.passed, report.summary()
        assert report.observations["max_degree"] == 2

    def test_second_extract(self):
        """Test a second extract-min"""
        assert self.heap.extract_min() == 2
        assert self.heap.root_keys() == [7, 3]
        assert self.heap.find_min()[1] == 3
        assert self.heap.children_keys(self.handles[3]) == [4, 8, 6]
        assert self.heap.children_keys(self.handles[6]) == [10, 11]
        assert self.heap.validate().passed

    def test_decrease_key_cascading_cut(self):
        """Test two decrease-keys under one parent trigger a cascading cut"""
        self.heap.extract_min()
        six = self.handles[6]
        self.heap.decrease_key(self.handles[10], 1)
        assert self.heap.is_marked(six)
        assert self.heap.metrics.cuts == 1
        self.heap.decrease_key(self.handles[11], 2)
        assert self.heap.metrics.cuts == 2
        assert self.heap.metrics.cascading_cuts == 1
        assert self.heap.root_keys() == [7, 3, 1, 2, 6]
        assert self.heap.find_min()[1] == 1
        assert self.heap.parent_of(six) is None
        assert not self.heap.is_marked(six)
        assert self.heap.validate().passed

    def test_delete_leaf_marks_parent(self):
        """Test deleting a leaf cuts it and marks its parent"""
        eight = self.handles[8]
        self.heap.delete(self.handles[14])
        assert len(self.heap) == 12
        assert not self.heap.is_valid(self.handles[14])
        assert self.heap.metrics.cuts == 1
        assert self.heap.degree_of(eight) == 0
        assert self.heap.is_marked(eight)
        assert self.heap.root_keys() == [2, 3]
        assert self.heap.children_keys(self.handles[3]) == [4, 8, 6]
        assert self.heap.validate().passed

    def test_decrease_key_errors(self):
        """Test decrease-key rejects a larger key and a dead handle"""
        with pytest.raises(KeyIncreaseError):
            self.heap.decrease_key(self.handles[9], 20)
        with pytest.raises(InvalidHandleError):
            self.heap.decrease_key(self.handles[1], 0)

    def test_drains_in_sorted_order(self, worked_sequence):
        """Test the remaining keys come out sorted"""
        out = [self.heap.extract_min() for _ in range(len(self.heap))]
        assert out == sorted(worked_sequence)[1:]
        assert self.heap.extract_min() is None


class TestAppendSlot:
    """Test APPEND on a caller-owned slot table"""

    def setup_method(self):
        self.heap = AdaptiveFibonacciHeap(trace=True)
        self.table = SlotTable(n=16)

    def key_at(self, slot):
        return self.heap.arena[self.table[slot]].key

    def test_into_empty_slot(self):
        """Test a node fills an empty slot"""
        h = self.heap.insert(11)
        self.heap.append_slot(h, 0, self.table)
        assert self.key_at(0) == 11
        assert self.table[1] is None

    def test_larger_node_links_under_entry(self):
        """Test a larger node links under the slot entry, which moves up a slot"""
        h11 = self.heap.insert(11)
        h13 = self.heap.insert(13)
        self.heap.append_slot(h11, 0, self.table)
        self.heap.append_slot(h13, 0, self.table)
        assert self.key_at(1) == 11
        assert self.key_at(0) == 13
        assert self.heap.parent_of(h13) == h11
        assert self.heap.degree_of(h11) == 1

    def test_smaller_node_is_darkened(self):
        """Test a smaller node adopts the slot entry and is darkened"""
        h12 = self.heap.insert(12)
        h9 = self.heap.insert(9)
        self.heap.append_slot(h12, 0, self.table)
        self.heap.append_slot(h9, 0, self.table)
        assert self.key_at(0) == 9
        assert self.heap.degree_of(h9) == 1
        assert self.heap.parent_of(h12) == h9
        assert self.heap.slot_events[-1] == SlotEvent(0, 9, 1, True)
        assert self.heap.darkened() == [(9, 0)]

    def test_rejects_degree_outside_slot(self):
        """Test a node two degrees below its slot is refused"""
        h = self.heap.insert(4)
        with pytest.raises(StructuralError):
            self.heap.append_slot(h, 2, self.table)
        assert self.table[2] is None

    def test_rejects_recursion_down_the_table(self):
        """Test a stale smaller entry may not be re-filed into a lower slot"""
        h1 = self.heap.insert(1)
        h3 = self.heap.insert(3)
        self.table[1] = self.heap.arena.resolve(h1)
        with pytest.raises(StructuralError):
            self.heap.append_slot(h3, 1, self.table)


class TestSlotTable:
    """Test class for SlotTable"""

    def test_bound_enforced(self):
        """Test slots past the bound raise SlotBoundError"""
        table = SlotTable(n=1, slack=0)
        assert table[0] is None
        with pytest.raises(SlotBoundError) as exc_info:
            table[1]
        assert exc_info.value.slot == 1
        assert exc_info.value.bound == 0

    def test_grows_past_initial_size(self):
        """Test the table grows beyond its initial size"""
        table = SlotTable(n=2**20, initial_size=2)
        table[10] = 5
        assert table[10] == 5
        assert list(table.occupied()) == [(10, 5)]

    @pytest.mark.parametrize("n,expected", [(1, 0), (2, 2), (3, 3), (1000, 15)])
    def test_slot_bound(self, n, expected):
        """Test slot_bound without slack"""
        assert slot_bound(n, slack=0) == expected


class TestAdaptiveFibonacciHeap:
    """Test class for AdaptiveFibonacciHeap behaviour outside the worked example"""

    def test_consolidate_on_empty_heap(self):
        """Test consolidate on an empty heap does nothing"""
        heap = AdaptiveFibonacciHeap()
        heap.consolidate()
        assert heap.metrics.consolidate_calls == 0

    def test_sorted_input_builds_a_chain(self, fib_heap):
        """Test sorted input links into one tree"""
        for k in range(10):
            fib_heap.insert(k)
        assert fib_heap.extract_min() == 0
        # Ascending runs link up into a single path
        assert fib_heap.root_keys() == [1]
        assert fib_heap.snapshot()[0][0] == 1
        assert fib_heap.validate().passed

    def test_darkened_empty_without_trace(self):
        """Test darkened() is empty when tracing is off"""
        heap = AdaptiveFibonacciHeap()
        for k in (3, 1, 2):
            heap.insert(k)
        heap.extract_min()
        assert heap.darkened() == []

    def test_union_then_extract(self, seq_source):
        """Test union followed by decrease-key through the handle map"""
        a = AdaptiveFibonacciHeap(seq_source=seq_source)
        b = AdaptiveFibonacciHeap(seq_source=seq_source)
        for k in (5, 9, 1):
            a.insert(k)
        hb = {k: b.insert(k) for k in (7, 3, 8)}
        mapping = a.union(b)
        a.decrease_key(mapping[hb[8]], 0)
        assert [a.extract_min() for _ in range(6)] == [0, 1, 3, 5, 7, 9]


def depth_of(heap, handle):
    depth = 0
    parent = heap.parent_of(handle)
    while parent is not None:
        depth += 1
        parent = heap.parent_of(parent)
    return depth


class TestConsolidateInvariants:
    """Test the slot-table invariants over whole workloads"""

    @pytest.mark.parametrize("order", ["random", "sorted", "reverse", "runs"])
    def test_slot_degrees(self, order):
        """Test every slot d holds a node of degree d or d + 1"""
        rng = random.Random(7)
        keys = list(range(300))
        if order == "random":
            rng.shuffle(keys)
        elif order == "reverse":
            keys.reverse()
        elif order == "runs":
            keys = [k for r in range(6) for k in range(r, 300, 6)]
        heap = AdaptiveFibonacciHeap(trace=True)
        handles = [heap.insert(k) for k in keys]
        live = set(range(len(keys)))
        while len(heap):
            heap.extract_min()
            assert all(e.degree in (e.slot, e.slot + 1) for e in heap.slot_events)
            live = {i for i in live if heap.is_valid(handles[i])}
            for i in rng.sample(sorted(live), min(3, len(live))):
                heap.decrease_key(handles[i], heap.key_of(handles[i]) - rng.randint(0, 50))
        assert heap.metrics.consolidate_calls > 0


class TestCascadingCuts:
    """Test cascading cuts stay within the depth of the cut path"""

    @pytest.mark.parametrize("heap_class", [AdaptiveFibonacciHeap, PairingLikeHeap])
    def test_cascade_bounded_by_depth(self, heap_class):
        """Test each decrease-key cascades at most once per non-root ancestor"""
        rng = random.Random(11)
        heap = heap_class()
        handles = [heap.insert(rng.randint(0, 10**6)) for _ in range(2000)]
        for _ in range(20):
            heap.extract_min()
        live = [h for h in handles if heap.is_valid(h)]
        for h in rng.sample(live, 800):
            depth = depth_of(heap, h)
            before = heap.metrics.cascading_cuts
            heap.decrease_key(h, heap.key_of(h) - rng.randint(1, 10**6))
            assert heap.metrics.cascading_cuts - before <= max(depth - 1, 0)
        assert heap.metrics.cascading_cuts > 0
        assert heap.validate().passed

    def test_path_cuts_only_mark_parents(self):
        """Test cuts down a path mark each parent without cascading"""
        heap = AdaptiveFibonacciHeap()
        handles = {k: heap.insert(k) for k in range(1, 10)}
        heap.insert(0)
        heap.extract_min()
        # Sorted input chains into the path 1-2-...-9
        assert depth_of(heap, handles[9]) == 8
        heap.delete(handles[9])
        assert heap.is_marked(handles[8])
        heap.decrease_key(handles[8], -1)
        assert heap.metrics.cascading_cuts == 0
        heap.decrease_key(handles[7], -2)
        assert heap.is_marked(handles[6])
        heap.decrease_key(handles[5], -3)
        # Each parent was unmarked when it lost its child
        assert heap.is_marked(handles[4])
        assert heap.metrics.cuts == 4
        assert heap.metrics.cascading_cuts == 0
        assert heap.validate().passed


class TestFibValidators:
    """Test validate_fib on hand-broken heaps"""

    def setup_method(self):
        self.heap = AdaptiveFibonacciHeap()
        self.handles = [self.heap.insert(k) for k in (1, 2, 3, 4)]

    def make_star(self):
        heap = self.heap
        i1, i2, i3, i4 = (h.index for h in self.handles)
        list_drain(heap.arena, heap._root)
        heap._root = None
        heap._add_root(i1)
        for child in (i2, i3, i4):
            heap._link(child, i1)
        heap._min = i1

    def test_child_degree_violation(self):
        """Test a child with too small a degree is reported"""
        self.make_star()
        report = validate_fib(self.heap)
        assert not report.passed
        violation = report.first_violation
        assert violation.rule == "child-degree"
        assert violation.path == [1, 4]

    def test_max_degree_violation(self):
        """Test a degree above the bound is reported"""
        self.make_star()
        report = validate_structure(self.heap, degree_slack=0)
        assert not report.passed
        assert report.first_violation.rule == "max-degree"
        assert report.observations["degree_bound"] == 2

    def test_marked_root(self):
        """Test a marked root is reported"""
        self.heap.arena[self.handles[2].index].mark = True
        report = self.heap.validate()
        assert report.first_violation.rule == "marked-root"
        assert report.first_violation.path == [3]

    def test_wrong_min_pointer(self):
        """Test a min pointer off the smallest root is reported"""
        self.heap._min = self.handles[3].index
        report = self.heap.validate()
        assert report.first_violation.rule == "min-pointer"

    def test_node_count(self):
        """Test a wrong node count is reported"""
        self.heap.n = 5
        assert self.heap.validate().first_violation.rule == "node-count"
