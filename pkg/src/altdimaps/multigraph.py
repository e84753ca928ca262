"""Plain undirected multigraphs (no embedding) and their Tutte polynomial."""

from __future__ import annotations

from typing import Dict, Hashable, Iterable, List, Tuple

from .poly import Poly2


class Multigraph:
    """Undirected multigraph: explicit vertices, edges as (id, u, v)."""

    def __init__(self, vertices: Iterable[Hashable],
                 edges: Iterable[Tuple[Hashable, Hashable, Hashable]]):
        self.vertices = frozenset(vertices)
        self.edges = tuple(edges)
        ids = [eid for eid, _, _ in self.edges]
        if len(set(ids)) != len(ids):
            raise ValueError("duplicate edge ids")
        for _, u, v in self.edges:
            if u not in self.vertices or v not in self.vertices:
                raise ValueError("edge endpoint not a vertex")

    def degree(self, v: Hashable) -> int:
        return sum((u == v) + (w == v) for _, u, w in self.edges)

    def n_components(self) -> int:
        parent = {v: v for v in self.vertices}

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for _, u, v in self.edges:
            parent[find(u)] = find(v)
        return len({find(v) for v in self.vertices})

    def rank(self) -> int:
        return len(self.vertices) - self.n_components()

    def delete(self, eid: Hashable) -> "Multigraph":
        return Multigraph(self.vertices,
                          [e for e in self.edges if e[0] != eid])

    def contract(self, eid: Hashable) -> "Multigraph":
        (u, v), = [(a, b) for i, a, b in self.edges if i == eid]
        if u == v:
            return self.delete(eid)
        merged = min(u, v, key=repr)

        def m(x):
            return merged if x in (u, v) else x

        return Multigraph(
            (self.vertices - {u, v}) | {merged},
            [(i, m(a), m(b)) for i, a, b in self.edges if i != eid])


def tutte_poly(g: Multigraph, max_edges: int = 12) -> Poly2:
    """Tutte polynomial by deletion/contraction (loops -> y, bridges -> x)."""
    if len(g.edges) > max_edges:
        raise ValueError(f"Tutte recursion capped at {max_edges} edges")

    def rec(m: Multigraph) -> Poly2:
        if not m.edges:
            return Poly2.one()
        eid, u, v = m.edges[0]
        if u == v:
            return rec(m.delete(eid)) * Poly2.var(1)
        if m.delete(eid).n_components() > m.n_components():  # bridge
            return rec(m.contract(eid)) * Poly2.var(0)
        return rec(m.delete(eid)) + rec(m.contract(eid))

    return rec(g)
