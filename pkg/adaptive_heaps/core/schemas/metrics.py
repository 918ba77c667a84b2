from pydantic import BaseModel, Field


class MetricsRecord(BaseModel):
    """Operation counters kept by every heap instance.

    Counters only grow; use snapshot_and_reset() to start a new measurement
    window.
    """
    comparisons: int = Field(0, ge=0, description="Key comparisons (two real keys)")
    links: int = Field(0, ge=0, description="Nodes made a child of another node")
    cuts: int = Field(0, ge=0, description="Nodes cut from their parent by decrease-key")
    cascading_cuts: int = Field(0, ge=0, description="Cuts performed by CASCADING-CUT")
    consolidate_calls: int = Field(0, ge=0, description="CONSOLIDATE invocations")
    consolidate_cycles: int = Field(0, ge=0, description="Pairing-like walk cycles")
    max_degree_seen: int = Field(0, ge=0, description="Largest degree ever observed")

    def observe_degree(self, degree: int) -> None:
        if degree > self.max_degree_seen:
            self.max_degree_seen = degree

    def snapshot(self) -> "MetricsRecord":
        return self.model_copy()

    def snapshot_and_reset(self) -> "MetricsRecord":
        """Return the current counters and zero them"""
        snap = self.model_copy()
        for name in type(self).model_fields:
            setattr(self, name, 0)
        return snap

    def absorb(self, other: "MetricsRecord") -> None:
        """Fold another heap's counters into this one (used by union)"""
        self.comparisons += other.comparisons
        self.links += other.links
        self.cuts += other.cuts
        self.cascading_cuts += other.cascading_cuts
        self.consolidate_calls += other.consolidate_calls
        self.consolidate_cycles += other.consolidate_cycles
        self.observe_degree(other.max_degree_seen)
