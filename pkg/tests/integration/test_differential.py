"""Differential tests: both heaps against the sorted-list oracle"""
import random

import pytest
from hypothesis import given, settings, strategies as st

from adaptive_heaps.core.errors import TraceError
from adaptive_heaps.core.types import HeapKind
from adaptive_heaps.heaps import HEAP_CLASSES, AdaptiveFibonacciHeap, ClassicFibonacciHeap
from adaptive_heaps.oracle import ExtractMin, Insert, OpTrace, enumerate_traces, parse_trace, random_trace
from adaptive_heaps.validation import differential_run

SUBJECTS = [("fib", {}), ("pairing", {"cycle_log": True})]


class OffByOneHeap(ClassicFibonacciHeap):
    """Reports key 3 as 4 when extracting it"""

    def extract_min(self):
        key = super().extract_min()
        return key + 1 if key == 3 else key


class ExplodingHeap(AdaptiveFibonacciHeap):
    def insert(self, key):
        if key == 13:
            raise RuntimeError("boom")
        return super().insert(key)


class LeakyDeleteHeap(ClassicFibonacciHeap):
    def delete(self, x):
        pass


def divergences(traces, subject, options, validate=True):
    failed = []
    for trace in traces:
        report = differential_run(trace, subject, validate=validate, shrink=False, **options)
        if not report.passed:
            failed.append((str(trace), report.summary()))
    return failed


class TestDifferentialRun:
    """Test class for differential_run"""

    def test_oracle_subject_passes(self):
        """Test the oracle agrees with itself"""
        for seed in range(10):
            trace = random_trace(random.Random(seed), 100)
            assert differential_run(trace, HeapKind.ORACLE).passed

    @pytest.mark.parametrize("subject,options", SUBJECTS)
    def test_example_trace(self, worked_trace, subject, options):
        """Test the worked example agrees with the oracle"""
        report = differential_run(worked_trace, subject, **options)
        assert report.passed, report.summary()
        assert report.steps == 15
        assert report.outputs_compared == 1

    @pytest.mark.parametrize("subject", ["clrs-fib", "two-pass"])
    def test_baselines_pass(self, subject):
        """Test the baseline heaps agree with the oracle"""
        for seed in range(10):
            trace = random_trace(random.Random(seed), 150, key_range=(0, 30))
            report = differential_run(trace, subject)
            assert report.passed, report.summary()

    def test_invalid_trace_is_not_a_divergence(self):
        """Test an invalid trace raises instead of diverging"""
        with pytest.raises(TraceError):
            differential_run(parse_trace("i 4\nd 0 9\n"), "fib")

    def test_output_divergence_is_shrunk(self, monkeypatch):
        """Test an output divergence is shrunk"""
        monkeypatch.setitem(HEAP_CLASSES, HeapKind.CLRS_FIB, OffByOneHeap)
        report = differential_run(parse_trace("i 5\ni 3\ni 8\nx\nx\nx\n"), "clrs-fib")
        assert not report.passed
        assert report.divergence_step == 3
        assert (report.expected, report.actual) == (3, 4)
        assert report.shrunk_trace == "i 3\nx\n"
        assert "DIVERGED at step 3" in report.summary()

    def test_validator_failure(self):
        """Test a validator failure is reported as a divergence"""
        report = differential_run(parse_trace("i 5\ni 3\nx\n"), "clrs-fib", degree_slack=-5)
        assert not report.passed
        assert report.divergence_step == 0
        assert report.validation.first_violation.rule == "max-degree"
        assert report.shrunk_trace == "i 3\n"

    def test_subject_exception(self, monkeypatch):
        """Test an exception in the subject is a divergence"""
        monkeypatch.setitem(HEAP_CLASSES, HeapKind.CLRS_FIB, ExplodingHeap)
        report = differential_run(parse_trace("i 1\ni 13\nx\n"), "clrs-fib", shrink=False)
        assert report.divergence_step == 1
        assert "RuntimeError" in report.message
        assert report.shrunk_trace is None

    def test_final_size_mismatch(self, monkeypatch):
        """Test a final size mismatch is a divergence"""
        monkeypatch.setitem(HEAP_CLASSES, HeapKind.CLRS_FIB, LeakyDeleteHeap)
        report = differential_run(parse_trace("i 1\ni 2\ndel 1\n"), "clrs-fib", shrink=False)
        assert not report.passed
        assert report.divergence_step == 3
        assert "final size" in report.message


class TestDifferentialSweeps:
    """Exhaustive and seeded sweeps over both heaps"""

    @pytest.mark.parametrize("subject,options", SUBJECTS)
    def test_exhaustive_short_traces(self, subject, options):
        """Test every short insert/extract trace"""
        assert divergences(enumerate_traces(5, [1, 2, 3, 4]), subject, options) == []

    @pytest.mark.parametrize("subject,options", SUBJECTS)
    def test_seeded_random_traces(self, subject, options):
        """Test seeded random traces"""
        traces = [
            random_trace(random.Random(seed), 300, key_range=(-50, 50), union_depth=2)
            for seed in range(30)
        ]
        assert divergences(traces, subject, options) == []

    @pytest.mark.parametrize("subject,options", SUBJECTS)
    def test_union_of_random_heaps(self, subject, options):
        """Test union of two large random heaps"""
        rng = random.Random(100)
        first = [Insert(rng.randint(0, 10_000)) for _ in range(100)]
        second = OpTrace.of([Insert(rng.randint(0, 10_000)) for _ in range(100)])
        trace = parse_trace(
            str(OpTrace.of(first)) + "u {\n" + str(second) + "}\n" + "x\n" * 200
        )
        report = differential_run(trace, subject, **options)
        assert report.passed, report.summary()
        assert report.outputs_compared == 200

    @pytest.mark.slow
    @pytest.mark.parametrize("subject,options", SUBJECTS)
    def test_exhaustive_long_traces(self, subject, options):
        """Test every insert/extract trace up to length eight"""
        assert divergences(enumerate_traces(8, [1, 2, 3, 4]), subject, options) == []

    @pytest.mark.slow
    @pytest.mark.parametrize("subject,options", SUBJECTS)
    def test_thousand_random_traces(self, subject, options):
        """Test a thousand random traces"""
        rng = random.Random(2024)
        traces = (
            random_trace(random.Random(seed), rng.randint(1, 4096), key_range=(0, 5000), union_depth=2)
            for seed in range(1000)
        )
        assert divergences(traces, subject, options) == []


@settings(max_examples=60, deadline=None)
@given(seed=st.integers(min_value=0, max_value=2**32 - 1), length=st.integers(min_value=0, max_value=120))
def test_random_traces_match_oracle(seed, length):
    """Test generated random traces against the oracle"""
    trace = random_trace(random.Random(seed), length, key_range=(-10, 10))
    for subject, options in SUBJECTS:
        report = differential_run(trace, subject, shrink=False, **options)
        assert report.passed, report.summary()


@settings(max_examples=60, deadline=None)
@given(
    ops=st.lists(
        st.one_of(st.builds(Insert, st.integers(min_value=-5, max_value=5)), st.just(ExtractMin())),
        max_size=60,
    )
)
def test_insert_extract_sequences_match_oracle(ops):
    """Test generated insert/extract sequences against the oracle"""
    trace = OpTrace.of(ops)
    for subject, options in SUBJECTS:
        report = differential_run(trace, subject, shrink=False, **options)
        assert report.passed, report.summary()
