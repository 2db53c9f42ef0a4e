"""Two-string tangle diagrams with corners NW, NE, SW, SE.

The elementary tangle [1] is a single crossing whose over-strand runs from SW
to NE. [-1] is its mirror. [0] joins NW-NE and SW-SE, and [inf] joins NW-SW and
NE-SE. ``hsum`` places tangles side by side and ``vstack`` places them one
above the other. N joins NW-NE and SW-SE, and D joins NW-SW and NE-SE.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Tuple

from .core import Crossing, LinkDiagram

__all__ = ["Tangle", "CORNERS"]

CORNERS = ("NW", "NE", "SW", "SE")


def _crossing(sign: int, nw: int, ne: int, sw: int, se: int) -> Crossing:
    if sign > 0:
        return (nw, sw, se, ne)  # under NW-SE, over SW-NE
    return (sw, se, ne, nw)  # under SW-NE, over NW-SE


@dataclass
class Tangle:
    crossings: List[Crossing] = field(default_factory=list)
    ends: Dict[str, int] = field(default_factory=dict)
    free_circles: int = 0
    next_label: int = 1

    def _fresh(self) -> int:
        k = self.next_label
        self.next_label += 1
        return k

    @classmethod
    def zero(cls) -> "Tangle":
        return cls([], {"NW": 1, "NE": 1, "SW": 2, "SE": 2}, 0, 3)

    @classmethod
    def infinity(cls) -> "Tangle":
        return cls([], {"NW": 1, "SW": 1, "NE": 2, "SE": 2}, 0, 3)

    @classmethod
    def integer(cls, n: int) -> "Tangle":
        t = cls.zero()
        for _ in range(abs(n)):
            t = t.twist_h(1 if n > 0 else -1)
        return t

    @classmethod
    def vertical(cls, n: int) -> "Tangle":
        t = cls.infinity()
        for _ in range(abs(n)):
            t = t.twist_v(1 if n > 0 else -1)
        return t

    def copy(self) -> "Tangle":
        return Tangle(list(self.crossings), dict(self.ends), self.free_circles, self.next_label)

    @property
    def n(self) -> int:
        return len(self.crossings)

    def twist_h(self, sign: int) -> "Tangle":
        """Add one crossing on the east side."""
        t = self.copy()
        ne, se = t._fresh(), t._fresh()
        t.crossings.append(_crossing(sign, self.ends["NE"], ne, self.ends["SE"], se))
        t.ends["NE"], t.ends["SE"] = ne, se
        return t

    def twist_v(self, sign: int) -> "Tangle":
        """Add one crossing on the south side."""
        t = self.copy()
        sw, se = t._fresh(), t._fresh()
        t.crossings.append(_crossing(sign, self.ends["SW"], self.ends["SE"], sw, se))
        t.ends["SW"], t.ends["SE"] = sw, se
        return t

    def _shifted(self, off: int) -> "Tangle":
        return Tangle(
            [tuple(e + off for e in x) for x in self.crossings],
            {k: v + off for k, v in self.ends.items()},
            self.free_circles,
            self.next_label + off,
        )

    @staticmethod
    def _glue(crossings, ends, free, next_label, unions) -> "Tangle":
        parent: Dict[int, int] = {}

        def find(v):
            parent.setdefault(v, v)
            while parent[v] != v:
                parent[v] = parent[parent[v]]
                v = parent[v]
            return v

        labels = {e for x in crossings for e in x} | set(ends.values())
        for u, v in unions:
            labels |= {u, v}
            ru, rv = find(u), find(v)
            if ru != rv:
                parent[ru] = rv
        xs = [tuple(find(e) for e in x) for x in crossings]
        new_ends = {k: find(v) for k, v in ends.items()}
        used = {e for x in xs for e in x} | set(new_ends.values())
        loops = {find(v) for v in labels} - used
        return Tangle(xs, new_ends, free + len(loops), next_label)

    def hsum(self, other: "Tangle") -> "Tangle":
        o = other._shifted(self.next_label)
        ends = {"NW": self.ends["NW"], "SW": self.ends["SW"], "NE": o.ends["NE"], "SE": o.ends["SE"]}
        unions = [(self.ends["NE"], o.ends["NW"]), (self.ends["SE"], o.ends["SW"])]
        return Tangle._glue(self.crossings + o.crossings, ends, self.free_circles + o.free_circles, o.next_label, unions)

    def vstack(self, other: "Tangle") -> "Tangle":
        """``self`` above ``other``."""
        o = other._shifted(self.next_label)
        ends = {"NW": self.ends["NW"], "NE": self.ends["NE"], "SW": o.ends["SW"], "SE": o.ends["SE"]}
        unions = [(self.ends["SW"], o.ends["NW"]), (self.ends["SE"], o.ends["NE"])]
        return Tangle._glue(self.crossings + o.crossings, ends, self.free_circles + o.free_circles, o.next_label, unions)

    def mirror(self) -> "Tangle":
        return Tangle([(x[1], x[2], x[3], x[0]) for x in self.crossings], dict(self.ends), self.free_circles, self.next_label)

    def rotate(self) -> "Tangle":
        """Quarter turn counter-clockwise."""
        e = self.ends
        return Tangle(list(self.crossings), {"NW": e["NE"], "SW": e["NW"], "SE": e["SW"], "NE": e["SE"]}, self.free_circles, self.next_label)

    def reciprocal(self) -> "Tangle":
        return self.rotate().mirror()

    def _close(self, pairs) -> LinkDiagram:
        closed = Tangle._glue(self.crossings, {}, self.free_circles, self.next_label, [(self.ends[a], self.ends[b]) for a, b in pairs])
        return LinkDiagram(closed.crossings, closed.free_circles).normalized()

    def numerator(self) -> LinkDiagram:
        return self._close([("NW", "NE"), ("SW", "SE")])

    def denominator(self) -> LinkDiagram:
        return self._close([("NW", "SW"), ("NE", "SE")])
