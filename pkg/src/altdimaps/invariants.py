"""Tutte-style invariants of alternating dimaps.

Exact arithmetic throughout: parameters are rationals (Fraction), the
polynomial recursions work over sparse integer polynomials.  Recursions on
a map are evaluated with respect to an explicit edge order — the least
surviving edge is always the one reduced — because general maps are
order-sensitive.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Hashable, List, Mapping, Optional, Sequence, Tuple

from .core import AltDimap, classify_edge, map_from_rotations, map_stats, rotation_system
from .embedded import EmbeddedGraph
from .minors import reduce_map
from .multigraph import Multigraph, tutte_poly
from .poly import Poly1, Poly2

Q = Fraction


def _coerce(value):
    """Coerce exact numeric inputs to Fraction; leave symbolic values alone."""
    if isinstance(value, (int, str, Fraction)):
        return Fraction(value)
    return value

__all__ = [
    "SimpleParams", "ExtendedParams", "PlaneGraph",
    "simple_tutte_eval", "SIMPLE_FAMILIES", "simple_family_value",
    "extended_eval", "basic_extended_params",
    "T_c", "T_a", "T_i",
    "alt_c", "alt_a", "alt_i", "medial",
    "tutte_poly", "plane_multigraph",
]


# -- parameters -----------------------------------------------------------------

@dataclass(frozen=True)
class SimpleParams:
    """Coefficients of the four-parameter invariant recursion: w for
    ultraloops, x/y/z for proper 1-/ω-/ω²-loops; non-triloop edges always
    contribute the unweighted three-term sum."""

    w: Fraction
    x: Fraction
    y: Fraction
    z: Fraction

    def __post_init__(self):
        for name in ("w", "x", "y", "z"):
            object.__setattr__(self, name, _coerce(getattr(self, name)))


@dataclass(frozen=True)
class ExtendedParams:
    """Coefficients of the sixteen-parameter recursion: w/x/y/z as in
    SimpleParams, then one coefficient triple per proper-semiloop kind
    ((a,b,c) for 1-, (d,e,f) for ω-, (g,h,i) for ω²-semiloops) and (j,k,l)
    for edges in none of those classes."""

    w: Fraction
    x: Fraction
    y: Fraction
    z: Fraction
    a: Fraction
    b: Fraction
    c: Fraction
    d: Fraction
    e: Fraction
    f: Fraction
    g: Fraction
    h: Fraction
    i: Fraction
    j: Fraction
    k: Fraction
    l: Fraction

    def __post_init__(self):
        for name in "wxyzabcdefghijkl":
            object.__setattr__(self, name, _coerce(getattr(self, name)))


def basic_extended_params(alpha, beta, gamma, delta) -> ExtendedParams:
    """Parameters under which extended_eval returns
    α^|E| · β^|V| · γ^af · δ^cf exactly."""
    alpha, beta, gamma, delta = Q(alpha), Q(beta), Q(gamma), Q(delta)
    if 0 in (alpha, beta, gamma, delta):
        raise ValueError("basic invariant needs nonzero parameters")
    return ExtendedParams(
        w=alpha * beta * gamma * delta,
        x=alpha * beta, y=alpha * gamma, z=alpha * delta,
        a=alpha / beta, b=Q(0), c=Q(0),
        d=Q(0), e=Q(0), f=alpha / gamma,
        g=Q(0), h=alpha / delta, i=Q(0),
        j=alpha * beta / 3, k=alpha * delta / 3, l=alpha * gamma / 3,
    )


# -- edge orders ----------------------------------------------------------------

def _resolve_order(g: AltDimap, order: Optional[Sequence[Hashable]]) -> List[Hashable]:
    if order is None:
        return sorted(g.edges, key=repr)
    order = list(order)
    if len(order) != g.n_edges or set(order) != set(g.edges):
        raise ValueError("order must be a permutation of the edge set")
    return order


# -- simple and extended invariants ----------------------------------------------

def simple_tutte_eval(g: AltDimap, p: SimpleParams,
                      order: Optional[Sequence[Hashable]] = None) -> Fraction:
    """Evaluate the four-parameter recursion, always reducing the first
    surviving edge of `order` (default: edges sorted by repr)."""
    rem = _resolve_order(g, order)

    def rec(m: AltDimap, todo: Sequence[Hashable]) -> Fraction:
        if not todo:
            return Q(1)
        e, rest = todo[0], todo[1:]
        c = classify_edge(m, e)
        if c.is_ultraloop:
            return p.w * rec(reduce_map(m, e, 0), rest)
        if c.is_1_loop:
            return p.x * rec(reduce_map(m, e, 0), rest)
        if c.is_omega_loop:
            return p.y * rec(reduce_map(m, e, 1), rest)
        if c.is_omega2_loop:
            return p.z * rec(reduce_map(m, e, 2), rest)
        return sum(rec(reduce_map(m, e, mu), rest) for mu in (0, 1, 2))

    return rec(g, rem)


SIMPLE_FAMILIES: Dict[str, SimpleParams] = {
    "zero": SimpleParams(0, 0, 0, 0),
    "three_E": SimpleParams(3, 3, 3, 3),
    "sign_V": SimpleParams(-1, -1, 1, 1),
    "sign_af": SimpleParams(-1, 1, -1, 1),
    "sign_cf": SimpleParams(-1, 1, 1, -1),
}


def simple_family_value(g: AltDimap, family: str) -> Fraction:
    """Closed form of one of the five order-independent families."""
    st = map_stats(g)
    if family == "zero":
        return Q(0) if st.n_edges else Q(1)
    if family == "three_E":
        return Q(3) ** st.n_edges
    if family == "sign_V":
        return Q(-1) ** st.n_vertices
    if family == "sign_cf":
        return Q(-1) ** st.n_c_faces
    if family == "sign_af":
        return Q(-1) ** st.n_a_faces
    raise ValueError(f"unknown family {family!r}")


def extended_eval(g: AltDimap, p: ExtendedParams,
                  order: Optional[Sequence[Hashable]] = None) -> Fraction:
    """Evaluate the sixteen-parameter recursion on the first surviving
    edge of `order`.  Cases are tested in priority order: ultraloop,
    proper 1-/ω-/ω²-loop, proper 1-/ω-/ω²-semiloop, then the generic
    three-term case."""
    rem = _resolve_order(g, order)

    def branch(m, e, rest, coeffs) -> Fraction:
        total = Q(0)
        for mu, coeff in enumerate(coeffs):
            if coeff:
                total += coeff * rec(reduce_map(m, e, mu), rest)
        return total

    def rec(m: AltDimap, todo: Sequence[Hashable]) -> Fraction:
        if not todo:
            return Q(1)
        e, rest = todo[0], todo[1:]
        c = classify_edge(m, e)
        if c.is_ultraloop:
            return p.w * rec(reduce_map(m, e, 0), rest)
        if c.is_1_loop:
            return p.x * rec(reduce_map(m, e, 0), rest)
        if c.is_omega_loop:
            return p.y * rec(reduce_map(m, e, 1), rest)
        if c.is_omega2_loop:
            return p.z * rec(reduce_map(m, e, 2), rest)
        if c.is_proper_semiloop(0):
            return branch(m, e, rest, (p.a, p.b, p.c))
        if c.is_proper_semiloop(1):
            return branch(m, e, rest, (p.d, p.e, p.f))
        if c.is_proper_semiloop(2):
            return branch(m, e, rest, (p.g, p.h, p.i))
        return branch(m, e, rest, (p.j, p.k, p.l))

    return rec(g, rem)


# -- the polynomial recursions T_c, T_a, T_i --------------------------------------

def T_c(g: AltDimap, order: Optional[Sequence[Hashable]] = None) -> Poly2:
    """Clockwise Tutte recursion.  Case priority: ω²-loop (including
    ultraloop) — recurse with factor 1; ω-semiloop — x times the
    ω²-reduction; proper 1-semiloop or ω-loop — y times the 1-reduction;
    non-semiloop — sum of the 1- and ω²-reductions.  Edges fitting no
    case are rejected (the recursion is defined only piecewise)."""
    rem = _resolve_order(g, order)
    x, y = Poly2.var(0), Poly2.var(1)

    def rec(m: AltDimap, todo: Sequence[Hashable]) -> Poly2:
        if not todo:
            return Poly2.one()
        e, rest = todo[0], todo[1:]
        c = classify_edge(m, e)
        if c.is_omega2_loop:
            return rec(reduce_map(m, e, 2), rest)
        if c.is_omega_semiloop:
            return x * rec(reduce_map(m, e, 2), rest)
        if c.is_proper_semiloop(0) or c.is_omega_loop:
            return y * rec(reduce_map(m, e, 0), rest)
        if not (c.is_1_semiloop or c.is_omega_semiloop or c.is_omega2_semiloop):
            return rec(reduce_map(m, e, 0), rest) + rec(reduce_map(m, e, 2), rest)
        raise ValueError(f"unclassified edge {e!r} for the clockwise recursion")

    return rec(g, rem)


def T_a(g: AltDimap, order: Optional[Sequence[Hashable]] = None) -> Poly2:
    """Anticlockwise Tutte recursion: T_c with ω and ω² exchanged."""
    rem = _resolve_order(g, order)
    x, y = Poly2.var(0), Poly2.var(1)

    def rec(m: AltDimap, todo: Sequence[Hashable]) -> Poly2:
        if not todo:
            return Poly2.one()
        e, rest = todo[0], todo[1:]
        c = classify_edge(m, e)
        if c.is_omega_loop:
            return rec(reduce_map(m, e, 1), rest)
        if c.is_omega2_semiloop:
            return x * rec(reduce_map(m, e, 1), rest)
        if c.is_proper_semiloop(0) or c.is_omega2_loop:
            return y * rec(reduce_map(m, e, 0), rest)
        if not (c.is_1_semiloop or c.is_omega_semiloop or c.is_omega2_semiloop):
            return rec(reduce_map(m, e, 0), rest) + rec(reduce_map(m, e, 1), rest)
        raise ValueError(f"unclassified edge {e!r} for the anticlockwise recursion")

    return rec(g, rem)


def T_i(g: AltDimap, order: Optional[Sequence[Hashable]] = None) -> Poly1:
    """In-star Tutte recursion (univariate).  Case priority: 1-loop
    (including ultraloop) — factor 1; proper ω-semiloop or ω²-loop — x
    times the ω²-reduction; proper ω²-semiloop or ω-loop — x times the
    ω-reduction; non-semiloop — sum of the ω- and ω²-reductions.  A
    proper 1-semiloop is rejected: the recursion is undefined there."""
    rem = _resolve_order(g, order)
    x = Poly1.var()

    def rec(m: AltDimap, todo: Sequence[Hashable]) -> Poly1:
        if not todo:
            return Poly1.one()
        e, rest = todo[0], todo[1:]
        c = classify_edge(m, e)
        if c.is_1_loop:
            return rec(reduce_map(m, e, 0), rest)
        if c.is_proper_semiloop(1) or c.is_omega2_loop:
            return x * rec(reduce_map(m, e, 2), rest)
        if c.is_proper_semiloop(2) or c.is_omega_loop:
            return x * rec(reduce_map(m, e, 1), rest)
        if not (c.is_1_semiloop or c.is_omega_semiloop or c.is_omega2_semiloop):
            return rec(reduce_map(m, e, 1), rest) + rec(reduce_map(m, e, 2), rest)
        raise ValueError(f"proper 1-semiloop {e!r}: the in-star recursion "
                         "is undefined on it")

    return rec(g, rem)


# -- plane graphs and the alt constructions ---------------------------------------

class PlaneGraph:
    """An embedded undirected graph whose every component has genus 0."""

    def __init__(self, graph: EmbeddedGraph):
        for comp, gam in graph.component_genus().items():
            if gam != 0:
                raise ValueError(f"component {sorted(comp, key=repr)} has "
                                 f"genus {gam}; not plane")
        self.graph = graph

    @classmethod
    def from_rotations(cls, rotations: Mapping[Hashable, Sequence[Tuple[Hashable, int]]]) -> "PlaneGraph":
        return cls(EmbeddedGraph(rotations.keys(), rotations))


def plane_multigraph(p: PlaneGraph) -> Multigraph:
    """Forget the embedding: the underlying multigraph (Tutte oracle input)."""
    eg = p.graph
    return Multigraph(eg.vertices,
                      [(e,) + eg.endpoints(e) for e in sorted(eg.edges, key=repr)])


def _alt_doubled(p: PlaneGraph, clockwise: bool) -> AltDimap:
    """Replace every undirected edge by an antiparallel directed pair.

    Edge e gains directed edges (e, '+') (away from dart (e, 0)) and
    (e, '-') (the reverse).  At a vertex, each dart expands clockwise to
    [outgoing, incoming] for the clockwise construction and [incoming,
    outgoing] for the anticlockwise one."""
    eg = p.graph
    rotations: Dict[Hashable, List[Tuple[Hashable, str]]] = {}
    for v, rot in eg.rotations.items():
        out: List[Tuple[Hashable, str]] = []
        for (e, end) in rot:
            leave = (e, "+") if end == 0 else (e, "-")
            enter = (e, "-") if end == 0 else (e, "+")
            if clockwise:
                out += [(leave, "out"), (enter, "in")]
            else:
                out += [(enter, "in"), (leave, "out")]
        rotations[v] = out
    g = map_from_rotations(rotations)
    st = map_stats(g)
    n_e, n_f = len(eg.edges), eg.face_count()
    two_faces = st.n_c_faces if clockwise else st.n_a_faces
    old_faces = st.n_a_faces if clockwise else st.n_c_faces
    if two_faces != n_e or old_faces != n_f:
        raise AssertionError("doubled map fails the face-count identities")
    if st.genus != eg.genus():
        raise AssertionError("doubled map changed the genus")
    return g


def alt_c(p: PlaneGraph) -> AltDimap:
    """Each edge becomes a clockwise directed 2-face; the original faces
    become the anticlockwise faces (cf = |E|, af = |F|)."""
    return _alt_doubled(p, clockwise=True)


def alt_a(p: PlaneGraph) -> AltDimap:
    """Mirror of alt_c: anticlockwise 2-faces (af = |E|, cf = |F|)."""
    return _alt_doubled(p, clockwise=False)


def medial(p: PlaneGraph) -> EmbeddedGraph:
    """The medial embedded graph: one vertex per edge, one edge per face
    corner (a dart together with its rotation successor).  Around the
    medial vertex of edge e with darts d1, d2 the four corners appear
    clockwise as [corner entering d1, corner leaving d1, corner entering
    d2, corner leaving d2]."""
    eg = p.graph
    succ_inv: Dict[Tuple[Hashable, int], Tuple[Hashable, int]] = {}
    for rot in eg.rotations.values():
        n = len(rot)
        for i, d in enumerate(rot):
            succ_inv[rot[(i + 1) % n]] = d
    # corner id = its first dart; the corner (d, succ(d)) joins the medial
    # vertices of edge(d) and edge(succ(d)).
    rotations: Dict[Hashable, List[Tuple[Hashable, int]]] = {}
    side: Dict[Hashable, int] = {}

    def dart_of(corner: Tuple[Hashable, int]) -> Tuple[Hashable, int]:
        k = side.get(corner, 0)
        side[corner] = k + 1
        if k > 1:
            raise AssertionError(f"corner {corner!r} used more than twice")
        return (corner, k)

    for e in sorted(eg.edges, key=repr):
        rot: List[Tuple[Hashable, int]] = []
        for d in ((e, 0), (e, 1)):
            rot.append(dart_of(succ_inv[d]))  # corner entering d
            rot.append(dart_of(d))            # corner leaving d
        rotations[("m", e)] = rot
    med = EmbeddedGraph(rotations.keys(), rotations)
    if any(len(r) != 4 for r in med.rotations.values()):
        raise AssertionError("medial graph is not 4-regular")
    if med.genus() != eg.genus():
        raise AssertionError("medial construction changed the genus")
    return med


def alt_i(p: PlaneGraph, orientation_choice: int = 0) -> AltDimap:
    """Orient the medial graph so in- and out-darts alternate around every
    vertex.  Each component admits exactly two such orientations; the bit
    selects which one (applied to every component)."""
    if orientation_choice not in (0, 1):
        raise ValueError("orientation_choice must be 0 or 1")
    med = medial(p)
    # Choose a parity bit per medial vertex: the dart at position i of the
    # rotation is incoming iff (i + parity) is even.  The two darts of a
    # medial edge must get opposite kinds, which ties the parities of its
    # endpoints together; propagate by depth-first search.
    pos: Dict[Tuple[Hashable, int], Tuple[Hashable, int]] = {}
    for v, rot in med.rotations.items():
        for i, d in enumerate(rot):
            pos[d] = (v, i)
    parity: Dict[Hashable, int] = {}
    for root in sorted(med.vertices, key=repr):
        if root in parity:
            continue
        parity[root] = orientation_choice
        stack = [root]
        while stack:
            v = stack.pop()
            for d in med.rotations[v]:
                w, j = pos[med.mate(d)]
                i = pos[d][1]
                need = (i + j + 1) % 2  # parity[v] + parity[w] must equal this
                want = (need - parity[v]) % 2
                if w in parity:
                    if parity[w] != want:
                        raise AssertionError("medial graph is not "
                                             "alternately orientable")
                else:
                    parity[w] = want
                    stack.append(w)
    rotations: Dict[Hashable, List[Tuple[Hashable, str]]] = {}
    for v, rot in med.rotations.items():
        rotations[v] = [
            (d[0], "in" if (i + parity[v]) % 2 == 0 else "out")
            for i, d in enumerate(rot)
        ]
    g = map_from_rotations(rotations)
    if map_stats(g).genus != med.genus():
        raise AssertionError("orientation changed the genus")
    return g
