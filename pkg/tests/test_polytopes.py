import random
from fractions import Fraction
from itertools import combinations

import pytest

from omegacalc.bitops import bits, mask_of
from omegacalc.corpus import random_schubert, sample_points
from omegacalc.errors import VariantInapplicable
from omegacalc.matroid import from_bases, schubert_lower, uniform
from omegacalc.polytopes import (
    IdentityKind,
    as_point,
    check_identity,
    in_base_polytope,
    in_halfopen,
    in_hypersimplex,
    in_schubert_lower,
    in_schubert_upper,
)

HALF = Fraction(1, 2)


def test_base_polytope_membership():
    m = uniform(1, 2)
    assert in_base_polytope(m, as_point([HALF, HALF]))
    assert not in_base_polytope(m, as_point([2, -1]))


def test_vertices_belong():
    rng = random.Random(6)
    for _ in range(10):
        m = random_schubert(rng, rng.randint(2, 6))
        for b in m.bases:
            point = as_point([1 if b >> e & 1 else 0 for e in range(m.n)])
            assert in_base_polytope(m, point)


def test_schubert_polytopes_and_halfopen():
    n = 2
    chain = (0b01, 0b11)
    profile = (0, 0, 1)
    z = as_point([HALF, HALF])
    assert in_halfopen(n, chain, profile, z)  # 1/2 > 0 strictly
    assert not in_halfopen(n, chain, profile, as_point([0, 1]))
    assert in_schubert_lower(n, chain, profile, as_point([0, 1]))
    # trivial chain: all three coincide with the hypersimplex
    triv = (0b11,)
    for z in (as_point([0, 1]), as_point([HALF, HALF])):
        assert in_schubert_lower(n, triv, (0, 1), z)
        assert in_schubert_upper(n, triv, (0, 1), z)
        assert in_halfopen(n, triv, (0, 1), z)
    assert not in_hypersimplex(2, 1, as_point([2, -1]))


def test_dominating_vertex_in_lower_polytope():
    rng = random.Random(8)
    for _ in range(10):
        n = rng.randint(2, 7)
        m = random_schubert(rng, n)
        # the minimal basis built by the chain recipe is a vertex
        from omegacalc.corpus import random_schubert_data

        n, chain, profile = random_schubert_data(rng, n)
        m = schubert_lower(n, chain, profile)
        subset = 0
        prev_mask, prev_a = 0, 0
        for s, a in zip(chain, profile[1:]):
            block = [e for e in bits(s & ~prev_mask)]
            for e in block[: a - prev_a]:
                subset |= 1 << e
            prev_mask, prev_a = s, a
        assert subset in m.bases
        point = as_point([1 if subset >> e & 1 else 0 for e in range(n)])
        assert in_schubert_lower(n, chain, profile, point)


def test_identity_hand_example():
    m = uniform(1, 2)
    z = as_point([HALF, HALF])
    for kind in IdentityKind:
        assert check_identity(m, kind, z) == (1, 1)


def test_identity_off_hyperplane_and_box():
    m = uniform(2, 4)
    z = as_point([1, 1, 1, 1])  # sum != r
    for kind in IdentityKind:
        assert check_identity(m, kind, z) == (0, 0)
    z = as_point([2, -1, HALF, HALF])  # on the hyperplane, outside the box
    for kind in IdentityKind:
        assert check_identity(m, kind, z) == (0, 0)


def test_identity_requires_loop_free_for_flats():
    m = from_bases(2, [0b10])
    with pytest.raises(VariantInapplicable):
        check_identity(m, IdentityKind.INNER_FLATS, as_point([0, 1]))
    lhs, rhs = check_identity(m, IdentityKind.INWARD_SETS, as_point([0, 1]))
    assert lhs == rhs


def test_identities_on_sampled_points():
    rng = random.Random(123)
    matroids = []
    while len(matroids) < 6:
        m = random_schubert(rng, rng.randint(2, 6), loop_free=True)
        if not m.has_loops():
            matroids.append(m)
    matroids.append(uniform(2, 5))
    matroids.append(uniform(1, 2).direct_sum(uniform(2, 3)))
    for m in matroids:
        points = sample_points(rng, m.n, m.r, 60)
        for z in points:
            for kind in IdentityKind:
                lhs, rhs = check_identity(m, kind, z)
                assert lhs == rhs, (m, kind, z)


def test_identity_exhaustive_tiny_denominators():
    # n = 2: every rational point with denominator up to 8 on the line x+y=1
    m = uniform(1, 2)
    for den in range(1, 9):
        for num in range(-den, 2 * den + 1):
            x = Fraction(num, den)
            z = (x, 1 - x)
            for kind in IdentityKind:
                lhs, rhs = check_identity(m, kind, z)
                assert lhs == rhs, (z, kind)


def test_sampler_includes_all_vertices():
    rng = random.Random(1)
    pts = sample_points(rng, 5, 2, 10)
    vertices = {
        tuple(Fraction(1 if e in c else 0) for e in range(5))
        for c in combinations(range(5), 2)
    }
    assert vertices.issubset(set(pts))
    for z in pts:
        assert sum(z) == 2
