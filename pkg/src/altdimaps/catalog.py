"""Canonical forms, exhaustive enumeration and a catalogue of named maps."""

from __future__ import annotations

from itertools import permutations
from typing import Dict, Hashable, Iterable, List, Optional, Sequence, Tuple

from .core import (AltDimap, EMPTY_MAP, build_map, disjoint_union,
                   map_from_rotations, reflect)
from .perm import Perm


# -- canonical codes -----------------------------------------------------------

def _dense(g: AltDimap) -> Tuple[List[int], List[int]]:
    """(sw, sw2) as index arrays over edges sorted by repr."""
    order = sorted(g.edges, key=repr)
    pos = {e: i for i, e in enumerate(order)}
    sw = [pos[g.sw(e)] for e in order]
    sw2 = [pos[g.sw2(e)] for e in order]
    return sw, sw2


def _component_code(sw: Sequence[int], sw2: Sequence[int],
                    swi: Sequence[int], sw2i: Sequence[int],
                    comp: Sequence[int]) -> bytes:
    best = None
    size = len(comp)
    for root in comp:
        order = [root]
        pos = {root: 0}
        qi = 0
        while qi < len(order):
            x = order[qi]
            qi += 1
            for gen in (sw, swi, sw2, sw2i):
                y = gen[x]
                if y not in pos:
                    pos[y] = len(order)
                    order.append(y)
        code = bytes([size]) + bytes(pos[sw[x]] for x in order) \
            + bytes(pos[sw2[x]] for x in order)
        if best is None or code < best:
            best = code
    return best


def _components_dense(sw: Sequence[int], sw2: Sequence[int]) -> List[List[int]]:
    n = len(sw)
    seen = [False] * n
    swi = [0] * n
    sw2i = [0] * n
    for i in range(n):
        swi[sw[i]] = i
        sw2i[sw2[i]] = i
    comps = []
    for s in range(n):
        if seen[s]:
            continue
        comp = [s]
        seen[s] = True
        qi = 0
        while qi < len(comp):
            x = comp[qi]
            qi += 1
            for gen in (sw, swi, sw2, sw2i):
                y = gen[x]
                if not seen[y]:
                    seen[y] = True
                    comp.append(y)
        comps.append(comp)
    return comps, swi, sw2i


def canonical_code(g: AltDimap) -> bytes:
    """Isomorphism-invariant byte code.

    Each component is relabelled by first-visit order of a breadth-first
    traversal applying the generators (sw, sw⁻¹, sw2, sw2⁻¹) in that fixed
    order; the lexicographically least code over all roots represents the
    component, and component codes are sorted and concatenated.  Maps with
    more than 255 edges in a component are not supported.
    """
    if any(len(c) > 255 for c in [g.edges]) and g.n_edges > 255:
        raise ValueError("canonical codes support at most 255 edges")
    sw, sw2 = _dense(g)
    comps, swi, sw2i = _components_dense(sw, sw2)
    codes = sorted(_component_code(sw, sw2, swi, sw2i, c) for c in comps)
    return b"".join(codes)


def isomorphic(a: AltDimap, b: AltDimap) -> bool:
    return canonical_code(a) == canonical_code(b)


# -- exhaustive enumeration ----------------------------------------------------

def _partitions(n: int):
    if n == 0:
        yield ()
        return
    def rec(remaining, largest):
        if remaining == 0:
            yield ()
            return
        for part in range(min(remaining, largest), 0, -1):
            for rest in rec(remaining - part, part):
                yield (part,) + rest
    yield from rec(n, n)


def _perm_of_cycle_type(parts: Sequence[int]) -> Tuple[int, ...]:
    out = []
    base = 0
    for p in parts:
        out.extend(list(range(base + 1, base + p)) + [base])
        base += p
    return tuple(out)


def enumerate_maps(n: int, connected_only: bool = False,
                   max_edges: int = 6) -> List[AltDimap]:
    """All alternating dimaps with exactly n edges, up to isomorphism.

    Every pair (sw, sw2) of permutations of n points is an alternating
    dimap; duplicates are removed by canonical code.  Since relabelling
    acts by simultaneous conjugation, sw may be fixed to one representative
    per cycle type.
    """
    if n > max_edges:
        raise ValueError(f"enumeration capped at {max_edges} edges")
    if n == 0:
        return [EMPTY_MAP]
    out: Dict[bytes, AltDimap] = {}
    pts = list(range(n))
    for parts in _partitions(n):
        sw = _perm_of_cycle_type(parts)
        swp = Perm(dict(enumerate(sw)))
        for sw2 in permutations(pts):
            g = AltDimap(swp, Perm(dict(enumerate(sw2))))
            if connected_only and len(g.components()) != 1:
                continue
            code = canonical_code(g)
            if code not in out:
                out[code] = g
    return [out[c] for c in sorted(out)]


# -- loop attachment and named maps --------------------------------------------

def _fresh(g: AltDimap, label: Hashable) -> Hashable:
    if label not in g.edges:
        return label
    i = 0
    while ("e", i) in g.edges:
        i += 1
    return ("e", i)


def add_omega_loop(g: AltDimap, anchor: Hashable, label: Hashable) -> AltDimap:
    """Attach a new ω-loop at the head of anchor, inserted into the in-star
    directly after anchor."""
    label = _fresh(g, label)
    s1m = g.s1.mapping()
    s1m[label] = s1m[anchor]
    s1m[anchor] = label
    s1 = Perm(s1m)
    swm = g.sw.mapping()
    swm[label] = label
    sw = Perm(swm)
    # sw2 = sw⁻¹ ∘ s1⁻¹ from the triple identity
    sw2 = Perm({e: sw.inv(s1.inv(e)) for e in s1m})
    return AltDimap(sw, sw2)


def add_omega2_loop(g: AltDimap, anchor: Hashable, label: Hashable) -> AltDimap:
    """Attach a new ω²-loop at the head of anchor, inserted into the
    in-star directly after anchor."""
    label = _fresh(g, label)
    s1m = g.s1.mapping()
    s1m[label] = s1m[anchor]
    s1m[anchor] = label
    s1 = Perm(s1m)
    sw2m = g.sw2.mapping()
    sw2m[label] = label
    sw2 = Perm(sw2m)
    # sw = s1⁻¹ ∘ sw2⁻¹
    sw = Perm({e: s1.inv(sw2.inv(e)) for e in s1m})
    return AltDimap(sw, sw2)


def ultraloop() -> AltDimap:
    return build_map([0], [], [])


def free_loops(k: int) -> AltDimap:
    """U_k: k disjoint ultraloops."""
    return build_map(range(k), [], [])


def loop_star_1(k: int) -> AltDimap:
    """L_{k,1}: a directed k-circuit of 1-loops (k >= 2): one a-face
    through all edges, with the c-face its reverse."""
    if k < 2:
        raise ValueError("L_{k,1} needs k >= 2")
    cyc = tuple(range(k))
    return build_map(range(k), [cyc], [cyc[::-1]])


def loop_star_omega(k: int) -> AltDimap:
    """L_{k,ω}: k ω-loops at one vertex (k >= 2)."""
    if k < 2:
        raise ValueError("L_{k,ω} needs k >= 2")
    return build_map(range(k), [], [tuple(range(k))])


def loop_star_omega2(k: int) -> AltDimap:
    """L_{k,ω²}: k ω²-loops at one vertex (k >= 2)."""
    if k < 2:
        raise ValueError("L_{k,ω²} needs k >= 2")
    return build_map(range(k), [tuple(range(k))], [])


def posies(k: int) -> List[AltDimap]:
    """The posies of genus k (one vertex, 2k+1 edges, one a-face, one
    c-face), up to isomorphism and mirror image.  Mirror pairs are
    represented by the member with the smaller canonical code."""
    if k == 0:
        return [ultraloop()]
    n = 2 * k + 1
    out: Dict[bytes, AltDimap] = {}
    pts = list(range(n))
    swp = Perm.from_cycles(pts, [tuple(pts)])
    for rest in permutations(pts[1:]):
        # sw2 ranges over all n-cycles (one a-face forces sw to one too)
        g = AltDimap(swp, Perm.from_cycles(pts, [(0,) + rest]))
        if len(g.s1.cycles()) == 1:
            code = canonical_code(g)
            mirror = canonical_code(reflect(g))
            if mirror < code:
                continue
            out.setdefault(code, g)
    return [out[c] for c in sorted(out)]


def posy(k: int, variant: int = 0) -> AltDimap:
    ps = posies(k)
    if not 0 <= variant < len(ps):
        raise ValueError(f"genus-{k} posies have variants 0..{len(ps) - 1}")
    return ps[variant]


def tricircuit(p: int, q: int, r: int) -> AltDimap:
    """A tricircuit: a directed circuit of p 1-loop edges with q ω-loops
    and r ω²-loops attached at one of its vertices, the two loop kinds on
    opposite sides of the circuit.  Degenerate cases: p = 0 gives a pure
    loop star (only one loop kind can share a vertex); a single edge of
    any kind is an ultraloop."""
    if p < 0 or q < 0 or r < 0:
        raise ValueError("tricircuit parameters must be nonnegative")
    if p == 0 and q == 0 and r == 0:
        return EMPTY_MAP
    if p == 0:
        if q > 0 and r > 0:
            raise ValueError("a vertex cannot carry both ω- and ω²-loops")
        if q + r == 1:
            return ultraloop()
        return loop_star_omega(q) if q else loop_star_omega2(r)
    # Build the rotation at the glue vertex x explicitly: reading
    # clockwise, the incoming circuit edge, then the ω²-loops (each out
    # dart immediately before its in dart), then the outgoing circuit
    # edge, then the ω-loops (each in dart immediately before its out
    # dart).  Darts alternate in/out throughout.
    x_rot: List[Tuple[Hashable, str]] = [(p - 1, "in")]
    for j in range(r):
        x_rot += [(("c", j), "out"), (("c", j), "in")]
    x_rot.append((0, "out"))
    for i in range(q):
        x_rot += [(("w", i), "in"), (("w", i), "out")]
    rotations: Dict[Hashable, List[Tuple[Hashable, str]]] = {"x": x_rot}
    for i in range(p - 1):
        rotations[("v", i)] = [(i, "in"), (i + 1, "out")]
    return map_from_rotations(rotations)


def digon_with_omega2_loop() -> AltDimap:
    """L_{2,1} with an ω²-loop added at the head of edge 1."""
    return add_omega2_loop(loop_star_1(2), 1, "e")


def witness_a() -> AltDimap:
    """L_{2,1} (edges 0, 1) with an ω²-loop 'e' and an ω-loop 'f' both at
    the head of edge 1; reducing its four edges in any order peels off one
    loop of each type."""
    g = add_omega2_loop(loop_star_1(2), 1, "e")
    return add_omega_loop(g, "e", "f")


NAMED = {
    "ultraloop": ultraloop,
    "U3": lambda: free_loops(3),
    "L21": lambda: loop_star_1(2),
    "L2w": lambda: loop_star_omega(2),
    "L2w2": lambda: loop_star_omega2(2),
    "L31": lambda: loop_star_1(3),
    "posy1": lambda: posy(1),
    "posy2a": lambda: posy(2, 0),
    "posy2b": lambda: posy(2, 1),
    "posy2c": lambda: posy(2, 2),
    "digon_loop": digon_with_omega2_loop,
    "witness_a": witness_a,
    "tricircuit231": lambda: tricircuit(2, 3, 1),
}


def make_named(name: str) -> AltDimap:
    try:
        return NAMED[name]()
    except KeyError:
        raise KeyError(f"unknown named map {name!r}; "
                       f"known: {', '.join(sorted(NAMED))}") from None
