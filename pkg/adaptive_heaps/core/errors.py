"""Exception hierarchy shared by the heaps, the oracle and the experiment harness."""
from typing import Any, Optional


class HeapError(Exception):
    """Base class for every error raised by adaptive_heaps"""


class InvalidHandleError(HeapError, KeyError):
    """A handle does not reference a live node of this heap"""

    def __str__(self) -> str:
        # KeyError quotes its argument; keep the plain message
        return str(self.args[0]) if self.args else "invalid handle"


class StructuralError(HeapError, RuntimeError):
    """Misuse of the circular list primitives or a broken heap shape"""


class SlotBoundError(StructuralError):
    """CONSOLIDATE tried to use a slot beyond the max-degree bound"""

    def __init__(self, slot: int, bound: int, n: int):
        self.slot = slot
        self.bound = bound
        self.n = n
        super().__init__(f"Slot {slot} exceeds bound {bound} for n={n}")

    def __reduce__(self):
        return type(self), (self.slot, self.bound, self.n)


class NonTerminationError(StructuralError):
    """The pairing-like consolidate walk exhausted its iteration budget"""

    def __init__(self, iterations: int, budget: int, roots: int):
        self.iterations = iterations
        self.budget = budget
        self.roots = roots
        super().__init__(
            f"Consolidate walk ran {iterations} iterations (budget {budget}, k={roots})"
        )

    def __reduce__(self):
        return type(self), (self.iterations, self.budget, self.roots)


class KeyIncreaseError(HeapError, ValueError):
    """decrease_key was asked to raise a key"""


class TraceError(HeapError, ValueError):
    """A trace operation violates the replay contract"""


class TraceFormatError(TraceError):
    """A trace file line could not be parsed"""

    def __init__(self, message: str, line_no: Optional[int] = None):
        self.message = message
        self.line_no = line_no
        if line_no is not None:
            message = f"line {line_no}: {message}"
        super().__init__(message)

    def __reduce__(self):
        return type(self), (self.message, self.line_no)


class ShrinkError(HeapError, ValueError):
    """shrink_trace was called with a predicate that does not fail"""


class WorkloadError(HeapError, ValueError):
    """Unknown generator, heap id or otherwise invalid workload spec"""


class ValidationFailure(HeapError):
    """A validator reported a violation during a replay"""

    def __init__(self, report: Any, step: Optional[int] = None):
        self.report = report
        self.step = step
        where = f" at step {step}" if step is not None else ""
        super().__init__(f"{report.summary()}{where}")

    # Workers in a process pool send failures back pickled
    def __reduce__(self):
        return type(self), (self.report, self.step)
