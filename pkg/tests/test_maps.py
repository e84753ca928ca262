"""Core map representation: the permutation triple, trial, stats."""

import pytest
from hypothesis import given, strategies as st

from altdimaps import (AltDimap, EMPTY_MAP, Perm, build_map, classify_edge,
                       map_from_rotations, map_stats, reflect,
                       rotation_system, trial, trial_power)
from altdimaps.catalog import (loop_star_1, loop_star_omega,
                               loop_star_omega2, posy, ultraloop)

from conftest import maps_up_to


def random_maps(max_n=5):
    """Strategy: any pair of permutations of {0..n-1} is a valid map."""
    def build(n, rng1, rng2):
        sw = Perm(dict(zip(range(n), rng1)))
        sw2 = Perm(dict(zip(range(n), rng2)))
        return AltDimap(sw, sw2)
    return st.integers(1, max_n).flatmap(
        lambda n: st.tuples(st.permutations(range(n)),
                            st.permutations(range(n))).map(
            lambda p: build(n, *p)))


# -- the defining identity ---------------------------------------------------

@given(random_maps())
def test_alternation_identity(g):
    # s1(sw(sw2(e))) = e defines the derived permutation
    for e in g.edges:
        assert g.s1(g.sw(g.sw2(e))) == e


def test_empty_map():
    st_ = map_stats(EMPTY_MAP)
    assert st_.n_edges == st_.n_vertices == st_.n_components == 0


def test_build_map_from_cycles():
    g = build_map("abc", [("a", "c", "b")], [("a", "c", "b")])
    assert g.sw("a") == "c" and g.sw2("b") == "a"
    assert map_stats(g).genus == 1  # the 1-posy


# -- trial -------------------------------------------------------------------

@given(random_maps())
def test_trial_has_order_three(g):
    assert trial(trial(trial(g))) == g
    assert trial_power(g, 3) == g and trial_power(g, 1) == trial(g)


@given(random_maps())
def test_trial_cycles_the_counts(g):
    # vertices -> a-faces -> c-faces -> vertices
    a, b = map_stats(g), map_stats(trial(g))
    assert (b.n_vertices, b.n_a_faces, b.n_c_faces) == \
        (a.n_c_faces, a.n_vertices, a.n_a_faces)
    assert b.genus == a.genus and b.n_components == a.n_components


def test_reflect_is_involution():
    g = posy(1)
    assert reflect(reflect(g)) == g


# -- stats and genus ---------------------------------------------------------

@given(random_maps())
def test_euler_formula(g):
    st_ = map_stats(g)
    assert st_.euler == 2 * (st_.n_components - st_.genus)
    assert st_.genus >= 0


@given(random_maps())
def test_traced_genus_equals_euler_genus(g):
    assert rotation_system(g).genus() == map_stats(g).genus


def test_known_stats():
    assert map_stats(ultraloop()).genus == 0
    assert map_stats(posy(1)).genus == 1
    assert map_stats(posy(2)).genus == 2
    st_ = map_stats(loop_star_1(3))
    assert (st_.n_vertices, st_.n_a_faces, st_.n_c_faces) == (3, 1, 1)


# -- rotation systems --------------------------------------------------------

def test_map_from_rotations_roundtrip():
    for g in maps_up_to(3, n_min=1):
        eg = rotation_system(g)
        # rebuild from the embedded rotations: vertex -> [(edge, dir)]
        rots = {v: [( e, "in" if end == 0 else "out") for (e, end) in rot]
                for v, rot in eg.rotations.items()}
        assert map_from_rotations(rots) == g


# -- classification ----------------------------------------------------------

def test_classify_ultraloop():
    g = ultraloop()
    c = classify_edge(g, next(iter(g.edges)))
    assert c.is_ultraloop and c.is_1_loop and c.is_omega_loop \
        and c.is_omega2_loop


def test_classify_loop_stars():
    for mu, ctor in ((0, loop_star_1), (1, loop_star_omega),
                     (2, loop_star_omega2)):
        g = ctor(3)
        for e in g.edges:
            c = classify_edge(g, e)
            assert c.is_loop(mu) and not c.is_ultraloop


def test_classify_posy_all_semiloops_no_loops():
    g = posy(1)
    for e in g.edges:
        c = classify_edge(g, e)
        assert not c.is_triloop
        assert c.is_1_semiloop and c.is_omega_semiloop and c.is_omega2_semiloop


def test_mismatched_domains_rejected():
    with pytest.raises(ValueError):
        AltDimap(Perm({0: 0}), Perm({1: 1}))
