from adaptive_heaps.core.utils.math_helpers import (
    PHI,
    ceil_lg,
    ceil_log_phi,
    floor_log_phi,
    lg,
    log_phi,
)

__all__ = ["PHI", "ceil_lg", "ceil_log_phi", "floor_log_phi", "lg", "log_phi"]
