"""Alternating dimaps as permutation triples.

An alternating dimap on an edge set E is a triple of permutations
(s1, sw, sw2) of E satisfying s1(sw(sw2(e))) = e for every edge e.
Cycles of s1 are in-stars (vertices), cycles of sw are anticlockwise
faces (a-faces) and cycles of sw2 are clockwise faces (c-faces).
Only (sw, sw2) is stored; s1 is derived from the triple identity.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Hashable, Iterable, List, Mapping, Optional, Sequence, Tuple

from .embedded import EmbeddedGraph
from .perm import Perm

# The three reduction/loop types, as exponents of the rotation ω:
# 0 ↔ 1, 1 ↔ ω, 2 ↔ ω².
MU1, MUW, MUW2 = 0, 1, 2
ALL_MU = (MU1, MUW, MUW2)
MU_NAMES = {MU1: "1", MUW: "omega", MUW2: "omega2"}
MU_BY_NAME = {"1": MU1, "omega": MUW, "omega2": MUW2, "w": MUW, "w2": MUW2}


def mu_mul(a: int, b: int) -> int:
    return (a + b) % 3


def mu_inv(a: int) -> int:
    return (-a) % 3


class AltDimap:
    """An alternating dimap, stored as the pair (sigma_omega, sigma_omega2)."""

    __slots__ = ("edges", "sw", "sw2", "s1")

    def __init__(self, sigma_omega: Perm, sigma_omega2: Perm):
        if sigma_omega.domain != sigma_omega2.domain:
            raise ValueError("sigma_omega and sigma_omega2 act on different edge sets")
        self.edges = sigma_omega.domain
        self.sw = sigma_omega
        self.sw2 = sigma_omega2
        # s1 = (sw ∘ sw2)⁻¹, so that s1(sw(sw2(e))) = e.
        self.s1 = Perm({e: self.sw2.inv(self.sw.inv(e)) for e in self.edges})

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, AltDimap):
            return NotImplemented
        return self.sw == other.sw and self.sw2 == other.sw2

    def __hash__(self) -> int:
        return hash((self.sw, self.sw2))

    def __repr__(self) -> str:
        return f"AltDimap(sw={self.sw!r}, sw2={self.sw2!r})"

    @property
    def n_edges(self) -> int:
        return len(self.edges)

    # -- incidence --------------------------------------------------------

    def vertex_of(self, e: Hashable) -> frozenset:
        """The in-star (s1-cycle) containing e, as a frozenset of edges."""
        return frozenset(self.s1.cycle_of(e))

    def head(self, e: Hashable) -> frozenset:
        return self.vertex_of(e)

    def tail(self, e: Hashable) -> frozenset:
        return self.vertex_of(self.sw(e))

    def vertices(self) -> List[Tuple[Hashable, ...]]:
        return self.s1.cycles()

    def components(self) -> List[frozenset]:
        """Edge sets of connected components (orbits of <sw, sw2>)."""
        seen = set()
        comps = []
        for e0 in self.edges:
            if e0 in seen:
                continue
            stack, comp = [e0], set()
            while stack:
                e = stack.pop()
                if e in comp:
                    continue
                comp.add(e)
                for x in (self.sw(e), self.sw.inv(e), self.sw2(e), self.sw2.inv(e)):
                    if x not in comp:
                        stack.append(x)
            seen |= comp
            comps.append(frozenset(comp))
        return comps

    def restricted(self, edges: Iterable[Hashable]) -> "AltDimap":
        """Sub-dimap induced by a union of components."""
        return AltDimap(self.sw.restricted(edges), self.sw2.restricted(edges))


EMPTY_MAP = AltDimap(Perm({}), Perm({}))


def build_map(edge_labels: Sequence[Hashable],
              sigma_omega_cycles: Iterable[Tuple[Hashable, ...]],
              sigma_omega2_cycles: Iterable[Tuple[Hashable, ...]]) -> AltDimap:
    """Build a map from labelled cycle notation; s1 is always derived."""
    sw = Perm.from_cycles(edge_labels, sigma_omega_cycles)
    sw2 = Perm.from_cycles(edge_labels, sigma_omega2_cycles)
    return AltDimap(sw, sw2)


@dataclass(frozen=True)
class MapStats:
    n_edges: int
    n_vertices: int
    n_a_faces: int
    n_c_faces: int
    n_faces: int
    n_components: int
    genus: int

    @property
    def euler(self) -> int:
        return self.n_vertices - self.n_edges + self.n_faces


def map_stats(g: AltDimap) -> MapStats:
    v = len(g.s1.cycles())
    af = len(g.sw.cycles())
    cf = len(g.sw2.cycles())
    e = g.n_edges
    k = len(g.components())
    # V - E + F = 2(k - γ)
    chi = v - e + af + cf
    if chi % 2:
        raise ValueError("odd Euler characteristic; not an alternating dimap")
    genus = k - chi // 2
    if genus < 0:
        raise ValueError("negative genus; not an alternating dimap")
    return MapStats(e, v, af, cf, af + cf, k, genus)


def trial(g: AltDimap) -> AltDimap:
    """The trial correspondence G^ω: the roles cycle so that the vertices
    of G^ω are the c-faces of G, its a-faces are the in-stars and its
    c-faces are the a-faces — new triple (sw2, s1, sw).

    Edge ids are preserved; applying it three times is the identity.
    """
    return AltDimap(g.s1, g.sw)


def trial_power(g: AltDimap, j: int) -> AltDimap:
    for _ in range(j % 3):
        g = trial(g)
    return g


def reflect(g: AltDimap) -> AltDimap:
    """Mirror image: reversing the surface orientation swaps clockwise and
    anticlockwise faces, giving the triple (s1⁻¹, sw2⁻¹, sw⁻¹)."""
    return AltDimap(g.sw2.inverse(), g.sw.inverse())


def disjoint_union(a: AltDimap, b: AltDimap,
                   relabel: bool = False) -> AltDimap:
    """Disjoint union; edge sets must already be disjoint unless relabel is
    set, in which case edges are renumbered 0..n-1 (a's edges first)."""
    if relabel:
        lab = {}
        for i, e in enumerate(sorted(a.edges, key=repr)):
            lab[("a", e)] = i
        for i, e in enumerate(sorted(b.edges, key=repr)):
            lab[("b", e)] = len(a.edges) + i
        swm = {lab[("a", x)]: lab[("a", a.sw(x))] for x in a.edges}
        swm.update({lab[("b", x)]: lab[("b", b.sw(x))] for x in b.edges})
        sw2m = {lab[("a", x)]: lab[("a", a.sw2(x))] for x in a.edges}
        sw2m.update({lab[("b", x)]: lab[("b", b.sw2(x))] for x in b.edges})
        return AltDimap(Perm(swm), Perm(sw2m))
    if a.edges & b.edges:
        raise ValueError("edge sets overlap; pass relabel=True")
    swm = a.sw.mapping()
    swm.update(b.sw.mapping())
    sw2m = a.sw2.mapping()
    sw2m.update(b.sw2.mapping())
    return AltDimap(Perm(swm), Perm(sw2m))


# -- the underlying embedded graph -------------------------------------------


def rotation_system(g: AltDimap) -> EmbeddedGraph:
    """The underlying undirected embedded graph.

    Each edge e contributes a head dart (e, 0) at its head vertex and a
    tail dart (e, 1) at its tail.  At a vertex with in-star cycle
    (e0, e1, ...) the clockwise dart order alternates
    [in(e0), out(sw⁻¹(e0)), in(e1), out(sw⁻¹(e1)), ...]: the out dart
    between in(e) and in(s1(e)) carries the left successor sw⁻¹(e).
    With this pairing the traced faces of the undirected embedding are
    exactly the a-faces (all-out boundaries) and c-faces (all-in
    boundaries) of the dimap.
    """
    rotations: Dict[Hashable, List] = {}
    for cyc in g.s1.cycles():
        v = ("v", cyc[0])
        rot = []
        for e in cyc:
            rot.append((e, 0))
            rot.append((g.sw.inv(e), 1))
        rotations[v] = rot
    return EmbeddedGraph(rotations.keys(), rotations)


def map_from_rotations(rotations: Mapping[Hashable, Sequence[Tuple[Hashable, str]]]) -> AltDimap:
    """Inverse of rotation_system: build a map from per-vertex clockwise
    dart orders, where each dart is (edge, 'in') or (edge, 'out') and the
    two kinds alternate around every vertex."""
    s1m: Dict[Hashable, Hashable] = {}
    swm: Dict[Hashable, Hashable] = {}
    seen_in, seen_out = set(), set()
    for v, rot in rotations.items():
        if not rot:
            continue
        if len(rot) % 2:
            raise ValueError(f"odd dart count at vertex {v!r}")
        kinds = [k for _, k in rot]
        if len(set(kinds[0::2])) > 1 or len(set(kinds[1::2])) > 1 or kinds[0] == kinds[1]:
            raise ValueError(f"darts do not alternate in/out at vertex {v!r}")
        # rotate so the list starts with an incoming dart
        if kinds[0] == "out":
            rot = list(rot[1:]) + [rot[0]]
        ins = [e for e, k in rot[0::2]]
        outs = [e for e, k in rot[1::2]]
        for i, e in enumerate(ins):
            if e in seen_in:
                raise ValueError(f"edge {e!r} comes in twice")
            seen_in.add(e)
            s1m[e] = ins[(i + 1) % len(ins)]
            # out dart following in(e) clockwise carries the left
            # successor sw⁻¹(e)
            swm[outs[i]] = e
        for e in outs:
            if e in seen_out:
                raise ValueError(f"edge {e!r} goes out twice")
            seen_out.add(e)
    if seen_in != seen_out:
        raise ValueError("every edge needs one in dart and one out dart")
    s1 = Perm(s1m)
    sw = Perm(swm)
    # sw2 = sw⁻¹ ∘ s1⁻¹ from the triple identity
    sw2 = Perm({e: sw.inv(s1.inv(e)) for e in s1m})
    return AltDimap(sw, sw2)


# -- edge classification ------------------------------------------------------


@dataclass(frozen=True)
class EdgeClass:
    """Loop/semiloop classification of a single edge."""

    is_1_loop: bool
    is_omega_loop: bool
    is_omega2_loop: bool
    is_ultraloop: bool
    is_standard_loop: bool
    is_1_semiloop: bool
    is_omega_semiloop: bool
    is_omega2_semiloop: bool

    @property
    def is_triloop(self) -> bool:
        return self.is_1_loop or self.is_omega_loop or self.is_omega2_loop

    def is_loop(self, mu: int) -> bool:
        return (self.is_1_loop, self.is_omega_loop, self.is_omega2_loop)[mu]

    def is_semiloop(self, mu: int) -> bool:
        return (self.is_1_semiloop, self.is_omega_semiloop,
                self.is_omega2_semiloop)[mu]

    def is_proper_loop(self, mu: int) -> bool:
        return self.is_loop(mu) and not self.is_ultraloop

    def is_proper_semiloop(self, mu: int) -> bool:
        return self.is_semiloop(mu) and not self.is_triloop


def _pair_separates(g: AltDimap, e: Hashable, f: Hashable) -> bool:
    """Whether deleting {e, f} from the underlying embedded graph increases
    k - γ (isolated vertices are kept and counted)."""
    eg = rotation_system(g)
    return eg.delete_edges({e, f}).k_minus_gamma() > eg.k_minus_gamma()


def classify_edge(g: AltDimap, e: Hashable) -> EdgeClass:
    l1 = g.s1(e) == e
    lw = g.sw(e) == e
    lw2 = g.sw2(e) == e
    ultra = (l1 + lw + lw2) >= 2  # any two force the third
    if ultra and not (l1 and lw and lw2):
        raise AssertionError("triple identity violated")
    standard = g.head(e) == g.tail(e)
    # ω-semiloop: e with its right successor sw2(e); ω²-semiloop: e with
    # its left successor sw⁻¹(e).  Degenerate pairs count as semiloops.
    right = g.sw2(e)
    left = g.sw.inv(e)
    semi_w = (e == right) or _pair_separates(g, e, right)
    semi_w2 = (e == left) or _pair_separates(g, e, left)
    return EdgeClass(
        is_1_loop=l1,
        is_omega_loop=lw,
        is_omega2_loop=lw2,
        is_ultraloop=l1 and lw and lw2,
        is_standard_loop=standard,
        is_1_semiloop=standard,
        is_omega_semiloop=semi_w,
        is_omega2_semiloop=semi_w2,
    )
