"""Shared fixtures: the catalog of small maps and a suite of plane graphs."""

import pytest

from altdimaps import PlaneGraph, enumerate_maps


def maps_up_to(n_max, n_min=0):
    """All maps with n_min..n_max edges, up to isomorphism."""
    out = []
    for n in range(n_min, n_max + 1):
        out += enumerate_maps(n, max_edges=max(n, 1))
    return out


def plane_suite():
    """Named plane graphs (rotations are clockwise dart lists)."""
    return {
        "single_edge": PlaneGraph.from_rotations({
            "u": [("a", 0)], "v": [("a", 1)]}),
        "loop": PlaneGraph.from_rotations({
            "v": [("a", 0), ("a", 1)]}),
        "path2": PlaneGraph.from_rotations({
            "u": [("a", 0)], "m": [("a", 1), ("b", 0)], "v": [("b", 1)]}),
        "triangle": PlaneGraph.from_rotations({
            "u": [("a", 0), ("c", 1)],
            "v": [("b", 0), ("a", 1)],
            "w": [("c", 0), ("b", 1)]}),
        "theta": PlaneGraph.from_rotations({
            "u": [("a", 0), ("b", 0), ("c", 0)],
            "v": [("c", 1), ("b", 1), ("a", 1)]}),
        "bridge_loop": PlaneGraph.from_rotations({
            "u": [("a", 0)],
            "v": [("a", 1), ("b", 0), ("b", 1)]}),
        "square": PlaneGraph.from_rotations({
            "p": [("a", 0), ("d", 1)],
            "q": [("b", 0), ("a", 1)],
            "r": [("c", 0), ("b", 1)],
            "s": [("d", 0), ("c", 1)]}),
    }


@pytest.fixture(scope="session")
def suite():
    return plane_suite()
