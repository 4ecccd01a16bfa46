"""Exact matroids on small ground sets, represented by explicit basis lists.

Ground sets are {0, ..., n-1} with n <= 16; subsets are integer bitmasks
(see bitops).  A Matroid is immutable after construction; rank queries go
through a lazily filled memo table, with a full-table precompute used by
the summation engines for n <= 14.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

from .bitops import bits, elements_of, mask_of, popcount
from .errors import (
    EmptyGroundSet,
    InvalidProfile,
    InvalidRank,
    LoopsPresent,
    NotAMatroid,
    OmegacalcError,
)

GROUND_SET_CAP = 16
FULL_TABLE_LIMIT = 14


class Matroid:
    """A matroid given by its ground-set size, rank and list of bases."""

    __slots__ = (
        "n",
        "r",
        "bases",
        "_bases_set",
        "_rank_table",
        "_rank_memo",
        "_flat_lattice",
        "_components",
        "_restriction_components",
        "_records",
    )

    def __init__(self, n: int, bases: Iterable[int], *, _validated: bool = False):
        if n < 1:
            raise EmptyGroundSet("ground set must be nonempty")
        if n > GROUND_SET_CAP:
            raise OmegacalcError(f"ground sets larger than {GROUND_SET_CAP} are not supported")
        basis_list = sorted(set(bases))
        if not basis_list:
            raise NotAMatroid("a matroid must have at least one basis")
        full = (1 << n) - 1
        if any(b & ~full for b in basis_list):
            raise NotAMatroid("basis mask uses elements outside the ground set")
        r = popcount(basis_list[0])
        if any(popcount(b) != r for b in basis_list):
            raise NotAMatroid("bases must all have the same cardinality")
        self.n = n
        self.r = r
        self.bases: tuple[int, ...] = tuple(basis_list)
        self._bases_set = frozenset(basis_list)
        self._rank_table: list[int] | None = None
        self._rank_memo: dict[int, int] = {}
        self._flat_lattice = None
        self._components: tuple[int, ...] | None = None
        self._restriction_components: dict[int, tuple[int, ...]] = {}
        self._records: dict[int, bool] = {}
        if not _validated:
            self._check_exchange()

    # -- construction ------------------------------------------------------

    def _check_exchange(self) -> None:
        """Exhaustive basis-exchange check over all ordered basis pairs."""
        bases = self.bases
        in_bases = self._bases_set
        for b1 in bases:
            for b2 in bases:
                if b1 == b2:
                    continue
                out = b1 & ~b2
                inc = b2 & ~b1
                for e in bits(out):
                    removed = b1 ^ (1 << e)
                    for f in bits(inc):
                        if removed | (1 << f) in in_bases:
                            break
                    else:
                        raise NotAMatroid(
                            f"exchange fails for bases {b1:#b}, {b2:#b} at element {e}"
                        )

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Matroid) and self.n == other.n and self.bases == other.bases
        )

    def __hash__(self) -> int:
        return hash((self.n, self.bases))

    def __repr__(self) -> str:
        return f"Matroid(n={self.n}, r={self.r}, bases={len(self.bases)})"

    # -- rank and closure ---------------------------------------------------

    def ensure_rank_table(self) -> Sequence[int]:
        """Fill the full 2^n rank table (used by the summation engines)."""
        if self._rank_table is None:
            n = self.n
            size = 1 << n
            indep = bytearray(size)
            for b in self.bases:
                indep[b] = 1
            for s in range(size - 1, 0, -1):
                if indep[s]:
                    m = s
                    while m:
                        low = m & -m
                        indep[s ^ low] = 1
                        m ^= low
            table = [0] * size
            for s in range(1, size):
                if indep[s]:
                    table[s] = s.bit_count()
                else:
                    best = 0
                    m = s
                    while m:
                        low = m & -m
                        v = table[s ^ low]
                        if v > best:
                            best = v
                        m ^= low
                    table[s] = best
            self._rank_table = table
        return self._rank_table

    def rank(self, mask: int) -> int:
        """Rank of a subset: the largest intersection with a basis."""
        if mask & ~self.full_mask:
            raise OmegacalcError("subset outside the ground set")
        if self._rank_table is not None:
            return self._rank_table[mask]
        if self.n <= FULL_TABLE_LIMIT:
            return self.ensure_rank_table()[mask]
        cached = self._rank_memo.get(mask)
        if cached is None:
            cached = max(popcount(b & mask) for b in self.bases)
            self._rank_memo[mask] = cached
        return cached

    def corank(self, mask: int) -> int:
        return popcount(mask) - self.rank(mask)

    def is_independent(self, mask: int) -> bool:
        return self.rank(mask) == popcount(mask)

    def closure(self, mask: int) -> int:
        """Largest superset with the same rank."""
        rk = self.rank(mask)
        out = mask
        rest = self.full_mask & ~mask
        for e in bits(rest):
            if self.rank(mask | (1 << e)) == rk:
                out |= 1 << e
        return out

    # -- loops, coloops, connectivity ----------------------------------------

    def loops(self) -> int:
        out = 0
        for b in self.bases:
            out |= b
        return self.full_mask & ~out

    def coloops(self) -> int:
        out = self.full_mask
        for b in self.bases:
            out &= b
        return out

    def has_loops(self) -> bool:
        return self.loops() != 0

    def connected_components(self) -> tuple[int, ...]:
        """Partition of the ground set into connected components.

        Union-find over exchange pairs: e and f are merged whenever some
        basis B has e in B, f outside B and B - e + f again a basis.  Loops
        and coloops end up as singleton components.
        """
        if self._components is None:
            self._components = _exchange_components(
                self.n, self.bases, self._bases_set.__contains__
            )
        return self._components

    def component_count(self, mask: int | None = None) -> int:
        if mask is None:
            mask = self.full_mask
        if mask == 0:
            return 0
        if mask == self.full_mask:
            return len(self.connected_components())
        return len(self.restriction_components(mask))

    def restriction_components(self, mask: int) -> tuple[int, ...]:
        """Connected components of the restriction to mask, in original labels."""
        cached = self._restriction_components.get(mask)
        if cached is None:
            rk = self.rank(mask)
            rbases = self._minor_bases(mask, 0, rk)
            rset = set(rbases)

            def is_rbasis(m: int) -> bool:
                return m in rset

            cached = _exchange_components(self.n, rbases, is_rbasis, ground=mask)
            self._restriction_components[mask] = cached
        return cached

    # -- minors, dual, sums ---------------------------------------------------

    def _minor_bases(self, keep: int, contracted: int, size: int) -> list[int]:
        """Bases of (M | (keep|contracted)) / contracted as masks inside keep."""
        base_rank = self.rank(contracted)
        elems = elements_of(keep)
        out: list[int] = []

        def extend(idx: int, cur: int, cur_size: int) -> None:
            if cur_size == size:
                out.append(cur)
                return
            remaining = len(elems) - idx
            if remaining < size - cur_size:
                return
            for j in range(idx, len(elems)):
                bit = 1 << elems[j]
                if self.rank(contracted | cur | bit) == base_rank + cur_size + 1:
                    extend(j + 1, cur | bit, cur_size + 1)

        extend(0, 0, 0)
        return out

    def dual(self) -> "Matroid":
        full = self.full_mask
        return Matroid(self.n, (full ^ b for b in self.bases), _validated=True)

    def delete(self, mask: int) -> "Matroid":
        """Delete the elements of mask, relabelling the rest in order."""
        keep = self.full_mask & ~mask
        if keep == 0:
            raise EmptyGroundSet("deleting every element")
        rk = self.rank(keep)
        bases = self._minor_bases(keep, 0, rk)
        return _relabel(self.n, bases, keep)

    def contract(self, mask: int) -> "Matroid":
        """Contract the elements of mask, relabelling the rest in order."""
        keep = self.full_mask & ~mask
        if keep == 0:
            raise EmptyGroundSet("contracting every element")
        size = self.r - self.rank(mask)
        bases = self._minor_bases(keep, mask, size)
        return _relabel(self.n, bases, keep)

    def restrict(self, mask: int) -> "Matroid":
        """Restriction to mask = deletion of the complement."""
        return self.delete(self.full_mask & ~mask)

    def direct_sum(self, other: "Matroid") -> "Matroid":
        n = self.n + other.n
        if n > GROUND_SET_CAP:
            raise OmegacalcError("direct sum exceeds the ground-set cap")
        bases = [
            b1 | (b2 << self.n) for b1 in self.bases for b2 in other.bases
        ]
        return Matroid(n, bases, _validated=True)

    def parallel_extend(self, element: int) -> "Matroid":
        """Add one new element (labelled n) parallel to a non-loop element."""
        bit = 1 << element
        if not self.rank(bit):
            raise OmegacalcError("cannot add a parallel copy of a loop")
        if self.n + 1 > GROUND_SET_CAP:
            raise OmegacalcError("parallel extension exceeds the ground-set cap")
        new_bit = 1 << self.n
        bases = list(self.bases)
        bases.extend((b ^ bit) | new_bit for b in self.bases if b & bit)
        return Matroid(self.n + 1, bases, _validated=True)

    def simplify(self) -> "Simplification":
        """Collapse parallel classes, keeping the smallest element of each.

        Errors on loops; callers are expected to dispose of loops first.
        """
        if self.has_loops():
            raise LoopsPresent("simplify requires a loop-free matroid")
        seen: list[int] = []
        mult: list[int] = []
        drop = 0
        for e in range(self.n):
            bit = 1 << e
            for i, rep in enumerate(seen):
                if self.rank((1 << rep) | bit) == 1:
                    mult[i] += 1
                    drop |= bit
                    break
            else:
                seen.append(e)
                mult.append(1)
        matroid = self.delete(drop) if drop else self
        return Simplification(matroid, tuple(seen), tuple(mult))


@dataclass(frozen=True)
class Simplification:
    """Result of simplify(): the collapsed matroid plus bookkeeping.

    kept[i] is the original label of element i of the simplification and
    multiplicity[i] the size of its parallel class.
    """

    matroid: Matroid
    kept: tuple[int, ...]
    multiplicity: tuple[int, ...]


def _relabel(n: int, bases: Iterable[int], keep: int) -> Matroid:
    positions = {e: i for i, e in enumerate(elements_of(keep))}
    out = []
    for b in bases:
        out.append(mask_of(positions[e] for e in bits(b)))
    return Matroid(len(positions), out, _validated=True)


def _exchange_components(
    n: int, bases: Sequence[int], is_basis, ground: int | None = None
) -> tuple[int, ...]:
    if ground is None:
        ground = (1 << n) - 1
    parent = list(range(n))

    def find(a: int) -> int:
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    def union(a: int, b: int) -> None:
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb

    for b in bases:
        outside = ground & ~b
        for e in bits(b):
            removed = b ^ (1 << e)
            for f in bits(outside):
                if is_basis(removed | (1 << f)):
                    union(e, f)
    comps: dict[int, int] = {}
    for e in bits(ground):
        root = find(e)
        comps[root] = comps.get(root, 0) | (1 << e)
    return tuple(sorted(comps.values()))


# -- constructors ------------------------------------------------------------


def from_bases(n: int, bases: Iterable[int]) -> Matroid:
    """Build a matroid from an explicit basis list, validating the exchange axiom."""
    return Matroid(n, bases)


def uniform(r: int, n: int) -> Matroid:
    if n < 1:
        raise EmptyGroundSet("ground set must be nonempty")
    if r < 0 or r > n:
        raise InvalidRank(f"rank {r} out of range for n={n}")
    bases = [mask_of(c) for c in combinations(range(n), r)]
    return Matroid(n, bases, _validated=True)


def _check_chain(n: int, chain: Sequence[int]) -> None:
    full = (1 << n) - 1
    if not chain or chain[-1] != full:
        raise InvalidProfile("chain must end with the full ground set")
    prev = 0
    for s in chain:
        if s & ~full:
            raise InvalidProfile("chain member outside the ground set")
        if (prev & ~s) != 0 or s == prev:
            raise InvalidProfile("chain must be strictly increasing")
        prev = s


def schubert_lower(n: int, chain: Sequence[int], profile: Sequence[int]) -> Matroid:
    """Matroid whose bases B satisfy |B & S_i| <= a_i along the chain.

    chain lists S_1 < S_2 < ... < S_k = E (the empty set is implicit);
    profile is (a_0, ..., a_k) with a_0 = 0 and a_k = r.
    """
    _check_chain(n, chain)
    k = len(chain)
    if len(profile) != k + 1:
        raise InvalidProfile("profile must have one more entry than the chain")
    if profile[0] != 0:
        raise InvalidProfile("profile must start at 0")
    r = profile[-1]
    prev_set, prev_a = 0, 0
    for s, a in zip(chain, profile[1:]):
        step = popcount(s) - popcount(prev_set)
        if not (prev_a <= a <= prev_a + step):
            raise InvalidProfile(f"profile entry {a} violates the chain inequalities")
        prev_set, prev_a = s, a
    interior = list(zip(chain[:-1], profile[1:-1]))
    bases = []
    for combo in combinations(range(n), r):
        b = mask_of(combo)
        if all(popcount(b & s) <= a for s, a in interior):
            bases.append(b)
    if not bases:
        raise InvalidProfile("profile admits no basis")
    return Matroid(n, bases, _validated=True)


def schubert_upper(n: int, chain: Sequence[int], profile: Sequence[int]) -> Matroid:
    """Matroid whose bases B satisfy |B & S_i| >= a_i along the chain.

    Delegates to schubert_lower on the reversed-complemented data.
    """
    _check_chain(n, chain)
    if len(profile) != len(chain) + 1:
        raise InvalidProfile("profile must have one more entry than the chain")
    full = (1 << n) - 1
    r = profile[-1]
    rev_chain = [full & ~s for s in reversed([0, *chain[:-1]])]
    rev_profile = [r - a for a in reversed(profile)]
    return schubert_lower(n, rev_chain, rev_profile)


def schubert_from_order(order: Sequence[int], subset: int) -> Matroid:
    """Matroid whose bases dominate `subset` in the Gale order of `order`.

    order lists the ground set from smallest to largest; a set B is a basis
    iff, after sorting both by the order, b_i >= a_i elementwise.
    """
    n = len(order)
    if sorted(order) != list(range(n)):
        raise OmegacalcError("order must be a permutation of the ground set")
    position = {e: i for i, e in enumerate(order)}
    a_pos = sorted(position[e] for e in bits(subset))
    r = len(a_pos)
    bases = []
    for combo in combinations(range(n), r):
        b_pos = sorted(position[e] for e in combo)
        if all(bp >= ap for bp, ap in zip(b_pos, a_pos)):
            bases.append(mask_of(combo))
    return Matroid(n, bases, _validated=True)
