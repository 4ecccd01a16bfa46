"""Shared helpers for the test suite."""

from omegacalc.engine import compute_omega
from omegacalc.matroid import Matroid


def omega_of(matroid: Matroid, method: str = "final-flats") -> int:
    """Invariant via the dispatcher, which handles loops uniformly."""
    return compute_omega(matroid, [method]).results[0].omega
