"""Adaptive Fibonacci and pairing-like heaps with validators and experiment tooling"""

__version__ = "0.1.0"
