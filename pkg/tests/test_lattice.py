from itertools import combinations

from omegacalc.bitops import mask_of
from omegacalc.lattice import flat_lattice
from omegacalc.matroid import from_bases, uniform


def test_two_element_chain():
    lat = flat_lattice(uniform(1, 2))
    assert lat.flats == [0, 0b11]
    assert lat.mobius(0, 0b11) == -1


def test_u23_lattice():
    lat = flat_lattice(uniform(2, 3))
    assert len(lat) == 5  # bottom, three points, top
    assert lat.mobius(0, 0b111) == 2
    assert [len(level) for level in lat.flats_by_rank] == [1, 3, 1]


def _k4_graphic_matroid():
    # edges of the complete graph on 4 vertices, bases = spanning trees
    edges = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]
    bases = []
    for combo in combinations(range(6), 3):
        parent = list(range(4))

        def find(a):
            while parent[a] != a:
                a = parent[a]
            return a

        acyclic = True
        for i in combo:
            u, v = edges[i]
            ru, rv = find(u), find(v)
            if ru == rv:
                acyclic = False
                break
            parent[ru] = rv
        if acyclic:
            bases.append(mask_of(combo))
    return from_bases(6, bases)


def test_k4_rank_two_flats():
    lat = flat_lattice(_k4_graphic_matroid())
    level2 = lat.flats_by_rank[2]
    assert len(level2) == 7
    sizes = sorted(bin(f).count("1") for f in level2)
    assert sizes == [2, 2, 2, 3, 3, 3, 3]


def test_mobius_alternating_sum_vanishes():
    # for every flat pair F < G the interval sums of mu are zero
    for m in (uniform(2, 4), uniform(3, 5), _k4_graphic_matroid()):
        lat = flat_lattice(m)
        flats = lat.flats
        for f in flats:
            for g in flats:
                if f == g or (f & ~g) != 0:
                    continue
                total = sum(
                    lat.mobius(f, h)
                    for h in flats
                    if (f & ~h) == 0 and (h & ~g) == 0
                )
                assert total == 0, (m, f, g)


def test_bottom_is_closure_of_empty():
    m = from_bases(2, [0b10])  # element 0 is a loop
    lat = flat_lattice(m)
    assert lat.bottom == 0b01
