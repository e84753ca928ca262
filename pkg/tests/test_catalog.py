"""Enumeration, canonical codes and the named small-map families."""

import pytest
from hypothesis import given, strategies as st

from altdimaps import (AltDimap, Perm, canonical_code, enumerate_maps,
                       isomorphic, map_stats, trial)
from altdimaps.catalog import (digon_with_omega2_loop, free_loops,
                               loop_star_1, loop_star_omega,
                               loop_star_omega2, posies, posy, tricircuit,
                               ultraloop, witness_a)
from altdimaps.minors import is_posy, is_tricircuit


# -- enumeration --------------------------------------------------------------

def test_census_counts():
    assert len(enumerate_maps(1)) == 1
    assert len(enumerate_maps(2)) == 4
    assert len(enumerate_maps(3)) == 11


def test_two_edge_self_trial_count():
    sts = [g for g in enumerate_maps(2) if isomorphic(g, trial(g))]
    assert len(sts) == 1
    assert isomorphic(sts[0], free_loops(2))


def test_enumeration_is_isomorph_free():
    ms = enumerate_maps(3)
    codes = {canonical_code(g) for g in ms}
    assert len(codes) == len(ms)


# -- canonical codes ----------------------------------------------------------

@given(st.permutations(range(4)), st.permutations(range(4)),
       st.permutations(range(4)))
def test_canonical_code_relabel_invariant(p1, p2, relab):
    g = AltDimap(Perm(dict(enumerate(p1))), Perm(dict(enumerate(p2))))
    r = dict(enumerate(relab))
    h = AltDimap(Perm({r[i]: r[p1[i]] for i in range(4)}),
                 Perm({r[i]: r[p2[i]] for i in range(4)}))
    assert canonical_code(g) == canonical_code(h)
    assert isomorphic(g, h)


def test_canonical_code_separates():
    assert canonical_code(loop_star_1(2)) != canonical_code(loop_star_omega(2))


# -- named families -----------------------------------------------------------

def test_posy_counts_by_genus():
    assert len(posies(0)) == 1
    assert len(posies(1)) == 1
    assert len(posies(2)) == 3


def test_posy_shape():
    for k in (1, 2):
        st_ = map_stats(posy(k))
        assert (st_.n_vertices, st_.n_edges, st_.n_a_faces, st_.n_c_faces,
                st_.genus) == (1, 2 * k + 1, 1, 1, k)


def test_loop_stars():
    for k in (2, 3, 4):
        assert map_stats(loop_star_1(k)).n_vertices == k
        assert map_stats(loop_star_omega(k)).n_a_faces == k
        assert map_stats(loop_star_omega2(k)).n_c_faces == k


def test_ultraloop_self_trial():
    assert trial(ultraloop()) == ultraloop()


def test_tricircuit_grid_recognized():
    for p in range(4):
        for q in range(3):
            for r in range(3):
                if p == 0 and q and r:
                    continue
                g = tricircuit(p, q, r)
                if g.edges:
                    assert is_tricircuit(g), (p, q, r)


def test_tricircuit_rejects_negative():
    with pytest.raises(ValueError):
        tricircuit(-1, 0, 0)


def test_witness_a_has_both_loop_types():
    g = witness_a()
    assert any(g.sw(e) == e and g.s1(e) != e for e in g.edges)
    assert any(g.sw2(e) == e and g.s1(e) != e for e in g.edges)


def test_digon_with_omega2_loop_is_tricircuit_2_0_1():
    assert isomorphic(digon_with_omega2_loop(), tricircuit(2, 0, 1))
