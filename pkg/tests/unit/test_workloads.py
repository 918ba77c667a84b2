"""Tests for workload specs and generators"""
import pytest

from adaptive_heaps.core.errors import WorkloadError
from adaptive_heaps.core.types import HeapKind
from adaptive_heaps.experiments import GeneratorKind, WorkloadMode, WorkloadSpec, generate, generate_keys
from adaptive_heaps.oracle import DecreaseKey, ExtractMin, Insert, OracleHeap, TraceReplayer, dump_trace, parse_trace


class TestWorkloadSpec:
    """Test class for WorkloadSpec"""

    def test_from_gen(self):
        """Test parsing generator strings"""
        spec = WorkloadSpec.from_gen("runs:4", n=100, seed=3, heap="pairing")
        assert spec.generator is GeneratorKind.RUNS
        assert spec.gen_arg == "4"
        assert spec.heap is HeapKind.PAIRING
        assert spec.mode is WorkloadMode.SORT
        assert spec.gen_label == "runs:4"

    def test_trace_defaults_to_replay(self):
        """Test a trace generator defaults to replay mode"""
        spec = WorkloadSpec.from_gen("trace:some.txt")
        assert spec.mode is WorkloadMode.REPLAY

    @pytest.mark.parametrize(
        "gen,options",
        [
            ("bogus", {}),
            ("runs", {}),
            ("runs:0", {}),
            ("swaps:x", {}),
            ("sorted:3", {}),
            ("trace:", {}),
            ("random", {"mode": "replay"}),
            ("random", {"n": -1}),
            ("random", {"heap": "nope"}),
        ],
    )
    def test_rejects_bad_specs(self, gen, options):
        """Test malformed generator strings and options are rejected"""
        with pytest.raises(WorkloadError):
            WorkloadSpec.from_gen(gen, **options)

    def test_with_seed(self):
        """Test with_seed returns a copy carrying the new seed"""
        spec = WorkloadSpec.from_gen("random", n=5, seed=1)
        assert spec.with_seed(9).seed == 9
        assert spec.seed == 1


class TestGenerateKeys:
    """Test the input key generators"""

    def keys(self, gen, n, seed=0):
        return generate_keys(WorkloadSpec.from_gen(gen, n=n, seed=seed))

    def test_sorted_and_reverse(self):
        """Test the sorted and reverse generators"""
        assert self.keys("sorted", 5) == [1, 2, 3, 4, 5]
        assert self.keys("reverse", 5) == [5, 4, 3, 2, 1]

    def test_random_is_a_seeded_permutation(self):
        """Test random keys are a seeded permutation"""
        keys = self.keys("random", 50, seed=4)
        assert sorted(keys) == list(range(1, 51))
        assert keys == self.keys("random", 50, seed=4)
        assert keys != self.keys("random", 50, seed=5)

    def test_runs(self):
        """Test the runs generator"""
        keys = self.keys("runs:4", 40, seed=2)
        assert sorted(keys) == list(range(1, 41))
        for block in range(4):
            chunk = keys[block * 10:(block + 1) * 10]
            assert chunk == sorted(chunk)

    def test_swaps(self):
        """Test the swaps generator"""
        keys = self.keys("swaps:3", 30, seed=1)
        assert sorted(keys) == list(range(1, 31))
        assert sum(1 for i, k in enumerate(keys, start=1) if i != k) <= 6

    def test_sawtooth(self):
        """Test the sawtooth generator"""
        assert self.keys("sawtooth:4", 8) == [0, 3, 6, 9, 1, 4, 7, 10]

    def test_trace_keys(self, tmp_path):
        """Test keys taken from a trace file"""
        path = tmp_path / "w.txt"
        dump_trace(parse_trace("i 4\nu {\n  i 9\n}\nx\ni 1\n"), path)
        assert self.keys(f"trace:{path}", 0) == [4, 9, 1]

    def test_missing_trace_file(self, tmp_path):
        """Test a missing trace file raises WorkloadError"""
        with pytest.raises(WorkloadError):
            self.keys(f"trace:{tmp_path / 'absent.txt'}", 0)


class TestGenerate:
    """Test the operation patterns built from keys"""

    def test_sort_mode(self):
        """Test sort mode inserts then extracts every key"""
        trace = generate(WorkloadSpec.from_gen("reverse", n=3))
        assert trace.ops == (Insert(3), Insert(2), Insert(1), ExtractMin(), ExtractMin(), ExtractMin())

    def test_replay_mode(self, tmp_path):
        """Test replay mode loads the file verbatim"""
        path = tmp_path / "w.txt"
        text = "i 4\ni 2\nd 0 1\nx\n"
        path.write_text(text)
        assert generate(WorkloadSpec.from_gen(f"trace:{path}")) == parse_trace(text)

    @pytest.mark.parametrize("seed", range(5))
    def test_dijkstra_mode(self, seed):
        """Test dijkstra mode interleaves decrease-keys with extracts"""
        spec = WorkloadSpec.from_gen("random", n=200, seed=seed, mode="dijkstra")
        trace = generate(spec)
        assert trace == generate(spec)
        inserts = [op for op in trace if isinstance(op, Insert)]
        assert [op.key for op in inserts] == generate_keys(spec)
        assert sum(isinstance(op, ExtractMin) for op in trace) == 200
        assert any(isinstance(op, DecreaseKey) for op in trace)

        replayer = TraceReplayer(OracleHeap)
        outputs = [key for _, key in replayer.replay(trace)]
        # Decreased keys never undercut the last extraction, so outputs stay sorted
        assert outputs == sorted(outputs)
        assert len(replayer.heap) == 0
