"""Closed forms for the invariant in the regimes where one is known.

The dispatcher tries, in order: the trivial vanishing rules (too large a
rank, loops), multiplicativity over connected components, the
no-crowded-flats binomial, vanishing on an overcrowded set, the explicit
rank <= 4 formulas on the simplification, and the two near-middle-size
criteria (n = 2r and n = 2r + 1).  Returns None when nothing applies.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb

from .bitops import popcount
from .crowding import crowding, has_overcrowded_set, minimal_crowded_sets
from .errors import NonIntegralRank4
from .lattice import flat_lattice
from .matroid import Matroid


def omega_closed_form(matroid: Matroid) -> int | None:
    n, r = matroid.n, matroid.r
    if n < 2 * r:
        return 0
    if matroid.has_loops():
        return 0
    components = matroid.connected_components()
    if len(components) > 1:
        product = 1
        unknown = False
        for comp in components:
            value = omega_closed_form(matroid.restrict(comp))
            if value == 0:
                return 0
            if value is None:
                unknown = True
            else:
                product *= value
        return None if unknown else product
    if matroid.n <= 14:
        matroid.ensure_rank_table()
    if not _has_proper_crowded_flat(matroid):
        return comb(n - r - 1, r - 1)
    if has_overcrowded_set(matroid):
        return 0
    if r == 1:
        return 1 if n >= 2 else 0
    if 2 <= r <= 4:
        return _low_rank(matroid)
    if n == 2 * r:
        return 0 if _has_proper_crowded_subset(matroid) else 1
    if n == 2 * r + 1:
        return _near_middle(matroid)
    return None


def _has_proper_crowded_flat(matroid: Matroid) -> bool:
    full = matroid.full_mask
    for flat in flat_lattice(matroid).flats:
        if flat not in (0, full) and crowding(matroid, flat) >= 0:
            return True
    return False


def _has_proper_crowded_subset(matroid: Matroid) -> bool:
    full = matroid.full_mask
    rank = matroid.rank
    for mask in range(1, full):
        if popcount(mask) - 2 * rank(mask) >= 0:
            return True
    return False


def _low_rank(matroid: Matroid) -> int:
    """Rank 2 to 4 formulas, evaluated on the simplification.

    The invariant is unchanged by adding parallel copies of non-loop
    elements, so parallel classes are collapsed first.
    """
    simple = matroid.simplify().matroid
    n = simple.n
    r = simple.r
    if r == 2:
        return n - 3
    lattice = flat_lattice(simple)
    lines = [popcount(f) for f in lattice.flats_by_rank[2]]
    if r == 3:
        return comb(n - 4, 2) - sum(comb(l - 2, 2) for l in lines)
    line_masks = lattice.flats_by_rank[2]
    plane_masks = lattice.flats_by_rank[3]
    total = Fraction(comb(n - 5, 3))
    for p in plane_masks:
        total -= comb(popcount(p) - 3, 3)
    for lm in line_masks:
        l = popcount(lm)
        total -= comb(l - 2, 2) * (n - Fraction(2, 3) * l - Fraction(13, 3))
        for pm in plane_masks:
            if (lm & ~pm) == 0:
                total += comb(l - 2, 2) * (
                    popcount(pm) - Fraction(2, 3) * l - Fraction(7, 3)
                )
    if total.denominator != 1:
        raise NonIntegralRank4(f"rank-4 formula evaluated to {total}")
    return int(total)


def _near_middle(matroid: Matroid) -> int:
    """Connected, loop-free, n = 2r + 1, rank >= 5 here.

    Vanishes if any proper subset has positive crowding.  Otherwise the
    minimal nonempty crowded sets are either pairwise disjoint (value 0)
    or pairwise cover the ground set (value (p - 1) / 2, p odd).
    """
    full = matroid.full_mask
    rank = matroid.rank
    for mask in range(1, full):
        if popcount(mask) - 2 * rank(mask) > 0:
            return 0
    minimal = minimal_crowded_sets(matroid)
    p = len(minimal)
    assert p >= 2, "a connected near-middle matroid has at least two minimal crowded sets"
    disjoint = all(
        not (minimal[i] & minimal[j])
        for i in range(p)
        for j in range(i + 1, p)
    )
    if disjoint:
        return 0
    covering = all(
        (minimal[i] | minimal[j]) == full
        for i in range(p)
        for j in range(i + 1, p)
    )
    assert covering, "minimal crowded sets must be pairwise disjoint or pairwise covering"
    assert p % 2 == 1
    return (p - 1) // 2
