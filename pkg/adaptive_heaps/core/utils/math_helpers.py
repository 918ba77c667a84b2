"""
Small numeric helpers for the degree and slot bounds.
"""
import math

PHI = (1 + math.sqrt(5)) / 2
_LOG_PHI = math.log(PHI)
# Absorbs float noise when n is an exact power of phi's convergents
_EPS = 1e-9


def log_phi(n: int) -> float:
    """Logarithm base phi, defined as 0 for n <= 1"""
    if n <= 1:
        return 0.0
    return math.log(n) / _LOG_PHI


def floor_log_phi(n: int) -> int:
    return int(math.floor(log_phi(n) + _EPS))


def ceil_log_phi(n: int) -> int:
    return int(math.ceil(log_phi(n) - _EPS))


def ceil_lg(n: int) -> int:
    """ceil(log2(n)), 0 for n <= 1"""
    if n <= 1:
        return 0
    return (n - 1).bit_length()


def lg(n: float) -> float:
    if n <= 1:
        return 0.0
    return math.log2(n)
