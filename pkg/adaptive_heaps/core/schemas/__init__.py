from adaptive_heaps.core.schemas.metrics import MetricsRecord
from adaptive_heaps.core.schemas.validation import ValidationReport, Violation

__all__ = ["MetricsRecord", "ValidationReport", "Violation"]
