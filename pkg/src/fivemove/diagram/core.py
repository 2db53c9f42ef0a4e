"""Oriented planar diagrams in PD form.

A crossing is a 4-tuple of edge labels listed counter-clockwise. Slots 0 and 2
carry the under-strand, which enters at slot 0, and slots 1 and 3 carry the
over-strand. A crossing is positive when the over-strand enters at slot 3.
Unknotted components with no crossings are counted in ``free_circles``.

Under-crossings fix the orientation of a component. A component that never
passes under is oriented along its lowest edge label, from the lower end
(crossing, slot) of that edge towards the other end.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from ..errors import InvalidDiagramError

__all__ = ["LinkDiagram", "DiagramStats", "Crossing", "occurrences", "trace_components", "rebuild"]

Crossing = Tuple[int, int, int, int]
Slot = Tuple[int, int]


def occurrences(xs: Sequence[Crossing]) -> Dict[int, List[Slot]]:
    occ: Dict[int, List[Slot]] = {}
    for ci, x in enumerate(xs):
        for s, e in enumerate(x):
            occ.setdefault(e, []).append((ci, s))
    return occ


def _other(occ: Dict[int, List[Slot]], e: int, here: Slot) -> Slot:
    a, b = occ[e]
    return b if a == here else a


def trace_from(xs: Sequence[Crossing], occ, entry: Slot) -> List[Slot]:
    """Entries (crossing, slot) met along one strand, starting at ``entry``."""
    out = []
    c, s = entry
    while True:
        out.append((c, s))
        ex = (s + 2) % 4
        c, s = _other(occ, xs[c][ex], (c, ex))
        if (c, s) == entry:
            return out


def _component_start(xs: Sequence[Crossing], occ, e: int) -> Tuple[Slot, List[Slot]]:
    """Trace the component through edge ``e`` once and pick its start: the
    slot-0 entry of its lowest-indexed under-crossing, or else the far end of
    ``e``."""
    probe = trace_from(xs, occ, occ[e][1])
    unders = [c for c, s in probe if s in (0, 2)]
    if unders:
        return (min(unders), 0), probe
    return occ[e][1], probe


def trace_components(xs: Sequence[Crossing], occ=None) -> List[List[Slot]]:
    """Trace every component of a consistently oriented PD, ordered by lowest
    edge label."""
    if occ is None:
        occ = occurrences(xs)
    seen = set()
    comps = []
    for e in sorted(occ):
        if e in seen:
            continue
        start, probe = _component_start(xs, occ, e)
        path = trace_from(xs, occ, start) if start != occ[e][1] else probe
        seen.update(xs[c][s] for c, s in path)
        comps.append(path)
    return comps


def rebuild(xs: Sequence[Crossing], unions: Iterable[Tuple[int, int]], labels: Iterable[int]) -> Tuple[List[Crossing], int]:
    """Identify labels pairwise and count the closed loops that no longer
    meet any crossing. ``labels`` must contain every label in play."""
    parent: Dict[int, int] = {}

    def find(v):
        parent.setdefault(v, v)
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for v in labels:
        find(v)
    for u, v in unions:
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[ru] = rv
    out = [tuple(find(e) for e in x) for x in xs]
    used = {e for x in out for e in x}
    loops = {find(v) for v in list(parent)} - used
    return out, len(loops)


@dataclass(frozen=True)
class DiagramStats:
    crossings: int
    components: int
    writhe: int
    self_writhe: int
    linking: int
    free_circles: int


class LinkDiagram:
    """Immutable oriented PD diagram."""

    __slots__ = ("crossings", "free_circles", "__dict__")

    def __init__(self, crossings: Iterable[Sequence[int]] = (), free_circles: int = 0, *, orient: bool = True, validate: bool = True):
        xs = [tuple(int(v) for v in x) for x in crossings]
        if validate:
            _validate(xs)
        if orient and xs:
            xs = _orient(xs)
        object.__setattr__(self, "crossings", tuple(xs))
        object.__setattr__(self, "free_circles", int(free_circles))
        if validate and xs and not self.is_planar():
            raise InvalidDiagramError("PD code is not planar")

    def __setattr__(self, key, value):
        if key in ("crossings", "free_circles"):
            raise AttributeError("LinkDiagram is immutable")
        object.__setattr__(self, key, value)

    # --- basic structure -------------------------------------------------
    def __len__(self):
        return len(self.crossings)

    @property
    def n(self) -> int:
        return len(self.crossings)

    @cached_property
    def occ(self) -> Dict[int, List[Slot]]:
        return occurrences(self.crossings)

    @cached_property
    def edges(self) -> List[int]:
        return sorted(self.occ)

    @cached_property
    def components(self) -> List[List[Slot]]:
        return trace_components(self.crossings, self.occ)

    @property
    def component_count(self) -> int:
        return len(self.components) + self.free_circles

    @cached_property
    def _entry_comp(self) -> Dict[Slot, int]:
        m = {}
        for k, comp in enumerate(self.components):
            for c, s in comp:
                m[(c, s)] = k
        return m

    @cached_property
    def edge_ends(self) -> Dict[int, Tuple[Slot, Slot]]:
        """edge -> (tail, head): the slot it leaves from and the slot it enters."""
        out = {}
        for comp in self.components:
            for c, s in comp:
                e = self.crossings[c][s]
                ends = self.occ[e]
                tail = ends[1] if ends[0] == (c, s) else ends[0]
                out[e] = (tail, (c, s))
        return out

    def strand_components(self, ci: int) -> Tuple[int, int]:
        """(component of under-strand, component of over-strand) at crossing ci."""
        m = self._entry_comp
        under = m[(ci, 0)]
        over = m[(ci, 1)] if (ci, 1) in m else m[(ci, 3)]
        return under, over

    @cached_property
    def signs(self) -> Tuple[int, ...]:
        m = self._entry_comp
        out = []
        for ci in range(self.n):
            out.append(1 if (ci, 3) in m else -1)
        return tuple(out)

    def stats(self) -> DiagramStats:
        w = sum(self.signs)
        sw = 0
        inter = 0
        for ci, sg in enumerate(self.signs):
            u, o = self.strand_components(ci)
            if u == o:
                sw += sg
            else:
                inter += sg
        return DiagramStats(self.n, self.component_count, w, sw, inter // 2, self.free_circles)

    @property
    def writhe(self) -> int:
        return sum(self.signs)

    @property
    def self_writhe(self) -> int:
        return self.stats().self_writhe

    # --- planar structure ------------------------------------------------
    @cached_property
    def faces(self) -> List[List[Slot]]:
        """Faces as cycles of darts (crossing, slot) leaving through that slot,
        with the face on the left. Sorted by smallest dart."""
        xs = self.crossings
        occ = self.occ
        seen = set()
        faces = []
        for c in range(self.n):
            for s in range(4):
                if (c, s) in seen:
                    continue
                cyc = []
                d = (c, s)
                while d not in seen:
                    seen.add(d)
                    cyc.append(d)
                    c2, s2 = _other(occ, xs[d[0]][d[1]], d)
                    d = (c2, (s2 + 3) % 4)
                faces.append(cyc)
        return faces

    def face_edges(self, f: int) -> List[int]:
        return [self.crossings[c][s] for c, s in self.faces[f]]

    def pieces(self) -> int:
        """Connected pieces of the crossing graph."""
        parent = list(range(self.n))

        def find(v):
            while parent[v] != v:
                parent[v] = parent[parent[v]]
                v = parent[v]
            return v

        for e, ends in self.occ.items():
            a, b = ends[0][0], ends[1][0]
            ra, rb = find(a), find(b)
            if ra != rb:
                parent[ra] = rb
        return len({find(v) for v in range(self.n)})

    def is_planar(self) -> bool:
        return len(self.faces) == self.n + 2 * self.pieces()

    # --- derived diagrams ------------------------------------------------
    def normalized(self) -> "LinkDiagram":
        """Relabel edges 1, 2, ... consecutively along each component."""
        if not self.crossings:
            return self
        mapping = {}
        k = 1
        for comp in self.components:
            for c, s in comp:
                e = self.crossings[c][s]
                if e not in mapping:
                    mapping[e] = k
                    k += 1
        xs = [tuple(mapping[e] for e in x) for x in self.crossings]
        return LinkDiagram(xs, self.free_circles, orient=False, validate=False)

    def with_free_circles(self, k: int) -> "LinkDiagram":
        return LinkDiagram(self.crossings, k, orient=False, validate=False)

    def reversed_component(self, k: int) -> "LinkDiagram":
        """Same diagram with component k traversed backwards."""
        comp = self.components[k]
        flip = {c for c, s in comp if s in (0, 2)}
        xs = []
        for ci, x in enumerate(self.crossings):
            xs.append((x[2], x[3], x[0], x[1]) if ci in flip else x)
        return LinkDiagram(xs, self.free_circles, orient=False, validate=False)

    def to_json(self) -> dict:
        return {"crossings": [list(x) for x in self.crossings], "free_circles": self.free_circles}

    @classmethod
    def from_json(cls, data: dict) -> "LinkDiagram":
        return cls(data.get("crossings", []), data.get("free_circles", 0))

    def __eq__(self, other):
        if not isinstance(other, LinkDiagram):
            return NotImplemented
        return self.crossings == other.crossings and self.free_circles == other.free_circles

    def __hash__(self):
        return hash((self.crossings, self.free_circles))

    def __repr__(self):
        return f"LinkDiagram({[list(x) for x in self.crossings]}, free_circles={self.free_circles})"


def _validate(xs: List[Crossing]) -> None:
    occ = occurrences(xs)
    for e, ends in occ.items():
        if len(ends) != 2:
            raise InvalidDiagramError(f"edge {e} occurs {len(ends)} times")
    for ci, x in enumerate(xs):
        if x[0] == x[2] or x[1] == x[3]:
            raise InvalidDiagramError(f"crossing {ci} joins opposite slots")


def _orient(xs: List[Crossing]) -> List[Crossing]:
    """Rotate crossings by two slots so that each component passes under from
    slot 0 to slot 2. A component keeps the direction given by slot 0 of its
    lowest-indexed under-crossing."""
    xs = list(xs)
    occ = occurrences(xs)
    seen = set()
    for e in sorted(occ):
        if e in seen:
            continue
        path = trace_from(xs, occ, occ[e][1])
        seen.update(xs[c][s] for c, s in path)
        unders = [(c, s) for c, s in path if s in (0, 2)]
        if not unders:
            continue
        cmin, smin = min(unders)
        want = 0 if smin == 0 else 2
        flip = [c for c, s in unders if s != want]
        if flip:
            for c in flip:
                x = xs[c]
                xs[c] = (x[2], x[3], x[0], x[1])
            occ = occurrences(xs)
    return xs
