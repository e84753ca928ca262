"""Finite permutations on arbitrary hashable points, stored as dicts."""

from __future__ import annotations

from typing import Dict, Hashable, Iterable, Iterator, List, Mapping, Tuple

Point = Hashable


class Perm:
    """A bijection on a finite set of points.

    The domain is explicit: every point the permutation acts on appears as a
    key, including fixed points.
    """

    __slots__ = ("_fwd", "_bwd")

    def __init__(self, mapping: Mapping[Point, Point]):
        fwd = dict(mapping)
        bwd: Dict[Point, Point] = {}
        for x, y in fwd.items():
            if y in bwd:
                raise ValueError(f"not injective: {y!r} hit twice")
            bwd[y] = x
        if set(bwd) != set(fwd):
            raise ValueError("image differs from domain; not a permutation")
        self._fwd = fwd
        self._bwd = bwd

    @classmethod
    def identity(cls, points: Iterable[Point]) -> "Perm":
        return cls({x: x for x in points})

    @classmethod
    def from_cycles(cls, points: Iterable[Point],
                    cycles: Iterable[Tuple[Point, ...]]) -> "Perm":
        """Build from disjoint cycles; points not mentioned are fixed."""
        fwd = {x: x for x in points}
        seen = set()
        for cyc in cycles:
            for x in cyc:
                if x not in fwd:
                    raise ValueError(f"cycle point {x!r} not in domain")
                if x in seen:
                    raise ValueError(f"point {x!r} in two cycles")
                seen.add(x)
            for i, x in enumerate(cyc):
                fwd[x] = cyc[(i + 1) % len(cyc)]
        return cls(fwd)

    def __call__(self, x: Point) -> Point:
        return self._fwd[x]

    def inv(self, x: Point) -> Point:
        """Preimage of x."""
        return self._bwd[x]

    def inverse(self) -> "Perm":
        return Perm(self._bwd)

    @property
    def domain(self) -> frozenset:
        return frozenset(self._fwd)

    def mapping(self) -> Dict[Point, Point]:
        return dict(self._fwd)

    def after(self, other: "Perm") -> "Perm":
        """Composite self∘other (apply other first)."""
        return Perm({x: self._fwd[y] for x, y in other._fwd.items()})

    def cycles(self) -> List[Tuple[Point, ...]]:
        """Disjoint cycles (including fixed points), each starting at its
        smallest point, listed in sorted order of those starting points."""
        try:
            start_points = sorted(self._fwd)
        except TypeError:
            start_points = sorted(self._fwd, key=repr)
        seen = set()
        out: List[Tuple[Point, ...]] = []
        for x0 in start_points:
            if x0 in seen:
                continue
            cyc = [x0]
            seen.add(x0)
            x = self._fwd[x0]
            while x != x0:
                cyc.append(x)
                seen.add(x)
                x = self._fwd[x]
            out.append(tuple(cyc))
        return out

    def cycle_of(self, x: Point) -> Tuple[Point, ...]:
        cyc = [x]
        y = self._fwd[x]
        while y != x:
            cyc.append(y)
            y = self._fwd[y]
        return tuple(cyc)

    def restricted(self, points: Iterable[Point]) -> "Perm":
        """Restriction to a union of whole cycles (raises otherwise)."""
        pts = set(points)
        sub = {}
        for x in pts:
            y = self._fwd[x]
            if y not in pts:
                raise ValueError("restriction does not respect cycles")
            sub[x] = y
        return Perm(sub)

    def spliced(self, x: Point) -> "Perm":
        """The permutation with x removed: predecessor of x maps to the
        image of x (a fixed point is simply dropped)."""
        fwd = dict(self._fwd)
        y = fwd.pop(x)
        if y != x:
            fwd[self._bwd[x]] = y
        return Perm(fwd)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Perm):
            return NotImplemented
        return self._fwd == other._fwd

    def __hash__(self) -> int:
        return hash(frozenset(self._fwd.items()))

    def __iter__(self) -> Iterator[Point]:
        return iter(self._fwd)

    def __len__(self) -> int:
        return len(self._fwd)

    def __repr__(self) -> str:
        cyc = "".join(
            "(" + " ".join(map(str, c)) + ")" for c in self.cycles() if len(c) > 1
        )
        return f"Perm[{cyc or 'id'}]"
