import random
from itertools import combinations

from omegacalc.bitops import mask_of, popcount, submasks
from omegacalc.crowding import (
    crowd_hull,
    crowd_hull_minimal,
    crowding,
    crowding_profile,
    crowding_split,
    has_overcrowded_set,
    is_crowding_record,
    is_overcrowded_in,
    is_summand,
    minimal_crowded_sets,
)
from omegacalc.matroid import from_bases, uniform


def test_crowding_values():
    m = uniform(2, 5)
    assert crowding(m, 0) == 0
    for c in combinations(range(5), 4):
        assert crowding(m, mask_of(c)) == 0
    assert crowding(m, m.full_mask) == 1


def test_overcrowded_basics():
    m = uniform(2, 5)
    assert not is_overcrowded_in(m, 0, m.full_mask)
    assert not is_overcrowded_in(m, m.full_mask, m.full_mask)
    m24 = uniform(2, 4)
    full = m24.full_mask
    for c in combinations(range(4), 3):
        assert not is_overcrowded_in(m24, mask_of(c), full)


def test_overcrowded_against_definition_scan():
    rng = random.Random(12)
    for _ in range(12):
        n = rng.randint(2, 8)
        m = uniform(rng.randint(1, n), n)
        if rng.random() < 0.5:
            m = from_bases(n, m.bases)  # exercise the validated path too
        full = m.full_mask
        for whole in (full, rng.randint(1, full)):
            sw = popcount(whole) - 2 * m.rank(whole)
            for part in submasks(whole):
                sp = popcount(part) - 2 * m.rank(part)
                expect = sp > sw or (
                    sp == sw
                    and m.rank(part) + m.rank(whole & ~part) != m.rank(whole)
                )
                assert is_overcrowded_in(m, part, whole) == expect


def test_crowding_records():
    m = uniform(2, 5)
    assert is_crowding_record(m, 0)
    for c in combinations(range(5), 4):
        assert is_crowding_record(m, mask_of(c))
    assert is_crowding_record(m, m.full_mask)


def test_crowd_hull():
    # strictly increasing crowding: unchanged
    chain = [0b000, 0b001, 0b011, 0b111]
    crowd = [0, 1, 2, 3]
    assert crowd_hull(chain, crowd) == chain
    # equal crowding drops the earlier member; empty set kept only when
    # every later crowding is positive
    chain = [0b000, 0b011, 0b111]
    assert crowd_hull(chain, [0, 1, 1]) == [0b000, 0b111]
    assert crowd_hull(chain, [0, 0, 0]) == [0b111]
    assert crowd_hull([0b111], [2]) == [0b111]


def test_crowd_hull_minimal_drops_same_rank():
    chain = [0b0000, 0b0111, 0b1111, 0b111111]
    crowd = [0, 1, 2, 3]
    ranks = [0, 1, 1, 2]
    # two members share a rank: the later one imposes a weaker bound and goes
    assert crowd_hull_minimal(chain, crowd, ranks) == [0b0000, 0b0111, 0b111111]


def test_minimal_crowded_sets():
    m = uniform(2, 5)
    minimal = minimal_crowded_sets(m)
    assert sorted(minimal) == sorted(mask_of(c) for c in combinations(range(5), 4))
    assert minimal_crowded_sets(uniform(1, 2)) == [0b11]


def test_crowding_split():
    m = uniform(2, 5)
    zero, positive = crowding_split(m, m.full_mask)
    assert zero == 0 and positive == m.full_mask
    q = mask_of([0, 1, 2, 3])
    zero, positive = crowding_split(m, q)
    assert zero == q and positive == 0
    two_blocks = uniform(1, 2).direct_sum(uniform(1, 2))
    zero, positive = crowding_split(two_blocks, two_blocks.full_mask)
    assert zero == two_blocks.full_mask and positive == 0


def test_summand_detection():
    s = uniform(1, 2).direct_sum(uniform(2, 3))
    assert is_summand(s, 0b00011, s.full_mask)
    assert is_summand(s, 0b11100, s.full_mask)
    assert not is_summand(s, 0b00111, s.full_mask)


def test_overcrowded_set_detector():
    assert not has_overcrowded_set(uniform(2, 5))
    # a coloop forces one: the complement of the coloop is overcrowded
    assert has_overcrowded_set(uniform(2, 3))
    assert has_overcrowded_set(from_bases(2, [0b01]))


def test_profile_bundle():
    m = uniform(2, 5)
    prof = crowding_profile(m)
    assert prof.crowding[m.full_mask] == 1
    assert len(prof.minimal_crowded) == 5
    assert 0 in prof.record_sets and m.full_mask in prof.record_sets
    assert set(prof.crowded_flats) == {0, m.full_mask}
