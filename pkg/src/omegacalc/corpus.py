"""Seeded random matroid corpora.

Schubert matroids built from a random chain and profile are the backbone:
their invariant has a direct path-count formula, so corpus members are
self-certifying.  The closure family layers duals, minors, direct sums
and parallel extensions on top.  All generation is driven by an explicit
random.Random so a seed pins the corpus byte for byte.
"""

from __future__ import annotations

import random
from fractions import Fraction
from itertools import combinations
from typing import Sequence

from .bitops import elements_of, mask_of, popcount
from .matroid import GROUND_SET_CAP, Matroid, schubert_lower

Rng = random.Random


def random_schubert_data(
    rng: Rng,
    n: int,
    r: int | None = None,
    loop_free: bool = False,
) -> tuple[int, tuple[int, ...], tuple[int, ...]]:
    """A random (n, chain, profile) triple with a valid profile."""
    if r is None:
        r = rng.randint(1, max(1, n - 1))
    k = rng.randint(1, max(1, min(r, n - r) + 1))
    k = max(1, min(k, n))
    sizes = sorted(rng.sample(range(1, n), k - 1)) + [n]
    perm = list(range(n))
    rng.shuffle(perm)
    chain = tuple(mask_of(perm[:s]) for s in sizes)
    profile = [0]
    prev = 0
    for i, s in enumerate(sizes):
        if i == len(sizes) - 1:
            profile.append(r)
            break
        lo = max(profile[-1], r - (n - s))
        hi = min(r, profile[-1] + (s - prev))
        if i == 0 and loop_free:
            lo = max(lo, 1)
        a = rng.randint(lo, hi) if lo <= hi else lo
        profile.append(a)
        prev = s
    return n, chain, tuple(profile)


def random_schubert(rng: Rng, n: int, r: int | None = None, loop_free: bool = False) -> Matroid:
    n, chain, profile = random_schubert_data(rng, n, r, loop_free=loop_free)
    return schubert_lower(n, chain, profile)


def schubert_spec(rng: Rng, n: int, r: int | None = None, ident: str = "") -> dict:
    n, chain, profile = random_schubert_data(rng, n, r)
    spec = {
        "kind": "schubert_lower",
        "n": n,
        "chain": [elements_of(s) for s in chain],
        "profile": list(profile),
    }
    if ident:
        spec["id"] = ident
    return spec


def closure_spec(rng: Rng, n: int, ident: str = "") -> dict:
    """A spec derived from Schubert cores by duals, minors, sums or a
    parallel extension (the last emitted as an explicit basis list)."""
    op = rng.choice(["dual", "delete", "contract", "direct_sum", "parallel", "plain"])
    if op == "plain":
        spec = schubert_spec(rng, n)
    elif op == "dual":
        spec = {"kind": "dual", "of": schubert_spec(rng, n)}
    elif op in ("delete", "contract"):
        inner_n = min(n + rng.randint(1, 2), GROUND_SET_CAP)
        inner = schubert_spec(rng, inner_n)
        drop = sorted(rng.sample(range(inner_n), inner_n - n))
        spec = {"kind": op, "set": drop, "of": inner}
    elif op == "direct_sum":
        n1 = rng.randint(1, n - 1) if n > 1 else 1
        n2 = n - n1
        if n2 < 1:
            return schubert_spec(rng, n, ident=ident)
        spec = {
            "kind": "direct_sum",
            "parts": [schubert_spec(rng, n1), schubert_spec(rng, max(1, n2))],
        }
    else:
        core = random_schubert(rng, max(2, n - 1))
        non_loops = [e for e in range(core.n) if core.rank(1 << e) == 1]
        if not non_loops or core.n + 1 > GROUND_SET_CAP:
            return schubert_spec(rng, n, ident=ident)
        extended = core.parallel_extend(rng.choice(non_loops))
        spec = {
            "kind": "bases",
            "n": extended.n,
            "bases": [elements_of(b) for b in extended.bases],
        }
    if ident:
        spec["id"] = ident
    return spec


def generate_corpus(
    family: str, count: int, seed: int, n: int, r: int | None = None
) -> list[dict]:
    rng = random.Random(seed)
    out = []
    for i in range(count):
        ident = f"{family}-{seed}-{i:04d}"
        if family == "schubert":
            out.append(schubert_spec(rng, n, r, ident=ident))
        elif family == "closure":
            out.append(closure_spec(rng, n, ident=ident))
        else:
            raise ValueError(f"unknown corpus family {family!r}")
    return out


def random_derived_matroid(rng: Rng, n_max: int) -> Matroid:
    """A matroid from the mixed family, as an object (for tests)."""
    n = rng.randint(2, n_max)
    m = random_schubert(rng, n)
    op = rng.choice(["none", "dual", "delete", "contract", "sum", "parallel"])
    if op == "dual":
        m = m.dual()
    elif op == "delete" and m.n > 1:
        m = m.delete(1 << rng.randrange(m.n))
    elif op == "contract" and m.n > 1:
        m = m.contract(1 << rng.randrange(m.n))
    elif op == "sum" and m.n + 2 <= n_max:
        m = m.direct_sum(random_schubert(rng, rng.randint(2, n_max - m.n)))
    elif op == "parallel" and m.n < n_max:
        non_loops = [e for e in range(m.n) if m.rank(1 << e) == 1]
        if non_loops:
            m = m.parallel_extend(rng.choice(non_loops))
    return m


def random_simple_matroid(rng: Rng, n: int, r: int, tries: int = 200) -> Matroid | None:
    """A loop-free simple connected matroid of the requested rank and size."""
    for _ in range(tries):
        m = random_schubert(rng, n, r, loop_free=True)
        if m.r != r or m.has_loops():
            continue
        if m.coloops():
            continue
        simple = m.simplify().matroid
        if simple.n != m.n:
            continue
        if len(m.connected_components()) != 1:
            continue
        return m
    return None


def sample_points(
    rng: Rng,
    n: int,
    r: int,
    count: int,
    max_denominator: int = 64,
    bases: Sequence[int] = (),
) -> list[tuple[Fraction, ...]]:
    """Exact rational test points on the rank hyperplane.

    Includes every 0/1 vertex of the hypersimplex, then midpoints of
    vertex pairs, vertices nudged by tiny rational offsets (both
    preserving the coordinate sum), and normalized random positive
    rationals with bounded denominators.  When basis masks are supplied,
    midpoints of basis-vertex pairs are mixed in as well; those land on
    faces of the base polytope itself, probing its closed facets.
    """
    vertices = [
        tuple(Fraction(1 if e in c else 0) for e in range(n))
        for c in combinations(range(n), r)
    ]
    basis_vertices = [
        tuple(Fraction(1 if b >> e & 1 else 0) for e in range(n)) for b in bases
    ]
    points = list(vertices)
    while len(points) < len(vertices) + count:
        style = rng.random()
        if style < 0.3:
            a, b = rng.randrange(len(vertices)), rng.randrange(len(vertices))
            points.append(
                tuple((x + y) / 2 for x, y in zip(vertices[a], vertices[b]))
            )
        elif style < 0.45 and len(basis_vertices) >= 2:
            a, b = rng.randrange(len(basis_vertices)), rng.randrange(len(basis_vertices))
            points.append(
                tuple((x + y) / 2 for x, y in zip(basis_vertices[a], basis_vertices[b]))
            )
        elif style < 0.65:
            base = list(rng.choice(vertices))
            i, j = rng.sample(range(n), 2)
            eps = Fraction(1, rng.choice([31, 61, 97, max_denominator]))
            base[i] += eps
            base[j] -= eps
            points.append(tuple(base))
        else:
            w = [
                Fraction(rng.randint(1, max_denominator), rng.randint(1, max_denominator))
                for _ in range(n)
            ]
            s = sum(w)
            points.append(tuple(c * r / s for c in w))
    return points
