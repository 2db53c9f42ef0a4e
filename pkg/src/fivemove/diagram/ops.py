"""Braid closures, mirror images, connected and disjoint sums."""

from __future__ import annotations

from typing import Optional, Sequence

from .core import LinkDiagram, rebuild

__all__ = ["braid_closure", "mirror", "connected_sum", "disjoint_union"]


def braid_closure(strands: int, word: Sequence[int]) -> LinkDiagram:
    """Closure of a braid read bottom to top; sigma_i (letter i > 0) is a
    positive crossing of strands i and i+1."""
    pos = list(range(1, strands + 1))  # current label on each strand position
    bottom = list(pos)
    nxt = strands + 1
    xs = []
    for g in word:
        i = abs(g) - 1
        if not 0 <= i < strands - 1:
            raise ValueError(f"generator {g} out of range for {strands} strands")
        xl, xr = pos[i], pos[i + 1]
        yl, yr = nxt, nxt + 1
        nxt += 2
        if g > 0:
            xs.append((xr, yr, yl, xl))
        else:
            xs.append((xl, xr, yr, yl))
        pos[i], pos[i + 1] = yl, yr
    labels = set(range(1, nxt))
    out, loops = rebuild(xs, zip(pos, bottom), labels)
    return LinkDiagram(out, loops).normalized()


def mirror(d: LinkDiagram) -> LinkDiagram:
    """Switch every crossing, keeping orientations."""
    xs = []
    for ci, x in enumerate(d.crossings):
        a, b, c, e = x
        if d.signs[ci] > 0:  # over-strand enters at slot 3
            xs.append((e, a, b, c))
        else:
            xs.append((b, c, e, a))
    return LinkDiagram(xs, d.free_circles, orient=False, validate=False)


def _shift(d: LinkDiagram, off: int):
    return [tuple(e + off for e in x) for x in d.crossings]


def disjoint_union(d1: LinkDiagram, d2: LinkDiagram) -> LinkDiagram:
    off = max(d1.edges, default=0)
    xs = list(d1.crossings) + _shift(d2, off)
    return LinkDiagram(xs, d1.free_circles + d2.free_circles, orient=False, validate=False).normalized()


def connected_sum(d1: LinkDiagram, d2: LinkDiagram, e1: Optional[int] = None, e2: Optional[int] = None) -> LinkDiagram:
    """Band the two diagrams together along edges e1 and e2 (default: lowest
    labels) so that orientations agree. A diagram without crossings acts on
    one of its free circles."""
    if d1.n == 0 or d2.n == 0:
        if d1.n == 0 and d2.n == 0:
            return LinkDiagram([], max(d1.free_circles + d2.free_circles - 1, 1))
        full, empty = (d2, d1) if d1.n == 0 else (d1, d2)
        if empty.free_circles == 0:
            return full
        return full.with_free_circles(full.free_circles + empty.free_circles - 1)
    e1 = d1.edges[0] if e1 is None else e1
    e2 = d2.edges[0] if e2 is None else e2
    if e1 not in d1.occ or e2 not in d2.occ:
        raise ValueError("marked edge not in diagram")
    off = max(d1.edges)
    e2s = e2 + off
    xs = [list(x) for x in d1.crossings] + [list(x) for x in _shift(d2, off)]
    n1 = d1.n
    (_, (h1c, h1s)) = d1.edge_ends[e1]
    (_, (h2c, h2s)) = d2.edge_ends[e2]
    # e1 now runs from its tail into the head of e2, and e2 the other way
    xs[n1 + h2c][h2s] = e1
    xs[h1c][h1s] = e2s
    return LinkDiagram(xs, d1.free_circles + d2.free_circles, orient=False, validate=False).normalized()
