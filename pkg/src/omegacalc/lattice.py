"""Lattice of flats of a matroid, with interval Mobius values.

Mobius values are computed by the direct recursion mu(F, F) = 1,
mu(F, G) = -sum of mu(F, H) over flats F <= H < G.  For a fixed F the
whole column mu(F, -) is filled in one ascending pass and memoized, since
chain enumeration tends to ask for many intervals above the same flat.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .bitops import bits, popcount
from .matroid import Matroid


@dataclass
class FlatLattice:
    """All flats of a matroid, graded by rank."""

    matroid: Matroid
    flats_by_rank: tuple[tuple[int, ...], ...]
    bottom: int
    top: int
    _flat_set: frozenset[int] = field(repr=False)
    _above: dict[int, tuple[int, ...]] = field(default_factory=dict, repr=False)
    _mu: dict[tuple[int, int], int] = field(default_factory=dict, repr=False)

    @property
    def flats(self) -> list[int]:
        return [f for level in self.flats_by_rank for f in level]

    def __len__(self) -> int:
        return sum(len(level) for level in self.flats_by_rank)

    def is_flat(self, mask: int) -> bool:
        return mask in self._flat_set

    def flats_above(self, flat: int) -> tuple[int, ...]:
        """Flats strictly containing `flat`, ordered by rank then mask."""
        cached = self._above.get(flat)
        if cached is None:
            cached = tuple(
                g
                for level in self.flats_by_rank
                for g in level
                if g != flat and (flat & ~g) == 0
            )
            self._above[flat] = cached
        return cached

    def mobius(self, lower: int, upper: int) -> int:
        """Mobius value of the interval [lower, upper] in the lattice of flats."""
        if lower == upper:
            return 1
        if (lower & ~upper) != 0:
            raise ValueError("mobius requires comparable flats")
        key = (lower, upper)
        cached = self._mu.get(key)
        if cached is None:
            self._fill_column(lower)
            cached = self._mu[key]
        return cached

    def _fill_column(self, lower: int) -> None:
        above = self.flats_above(lower)
        mu = self._mu
        known: list[tuple[int, int]] = []
        for g in above:
            total = 1  # mu(lower, lower)
            for h, value in known:
                if (h & ~g) == 0:
                    total += value
            value = -total
            mu[(lower, g)] = value
            known.append((g, value))


def flat_lattice(matroid: Matroid) -> FlatLattice:
    """Compute all flats, graded by rank, plus the Mobius machinery."""
    if matroid._flat_lattice is not None:
        return matroid._flat_lattice
    n = matroid.n
    full = matroid.full_mask
    bottom = matroid.closure(0)
    levels: list[tuple[int, ...]] = [(bottom,)]
    current = {bottom}
    seen = {bottom}
    while current:
        nxt = set()
        for f in current:
            rest = full & ~f
            for e in bits(rest):
                g = matroid.closure(f | (1 << e))
                if g not in seen:
                    seen.add(g)
                    nxt.add(g)
        if not nxt:
            break
        levels.append(tuple(sorted(nxt)))
        current = nxt
    lattice = FlatLattice(
        matroid=matroid,
        flats_by_rank=tuple(levels),
        bottom=bottom,
        top=full,
        _flat_set=frozenset(seen),
    )
    matroid._flat_lattice = lattice
    return lattice
