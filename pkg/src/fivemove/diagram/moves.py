"""Rational moves: replace a trivial tangle [0] by a rational tangle.

A site is a pair of distinct edges on one face. Walk the face with the face on
the left. Edge a runs from P1 to P2 and edge b from P3 to P4. The small disk
that meets both edges sees a as the arc between NE (at P1) and NW (at P2), and
b as the arc between SW (at P3) and SE (at P4). In that frame the untouched
diagram is the [0] tangle. Rational tangles are symmetric under a half turn,
so the result does not depend on which of the two edges is called ``a``.

Negative edge ids -1, -2, ... refer to free circles. A free circle can be moved
into any face, so it can pair with any edge.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import List, Optional, Tuple

from ..errors import InvalidSiteError
from .core import LinkDiagram, rebuild
from .tangle import Tangle

__all__ = ["MoveSite", "enumerate_sites", "random_site", "insert_tangle", "check_site"]


@dataclass(frozen=True)
class MoveSite:
    edge_a: int
    edge_b: int
    face: int

    def to_json(self) -> dict:
        return {"edge_a": self.edge_a, "edge_b": self.edge_b, "face": self.face}


def _dart_on_face(d: LinkDiagram, face: int, e: int):
    for c, s in d.faces[face]:
        if d.crossings[c][s] == e:
            return c, s
    return None


def check_site(d: LinkDiagram, site: MoveSite) -> None:
    a, b = site.edge_a, site.edge_b
    if a == b:
        raise InvalidSiteError("site edges must differ")
    for e in (a, b):
        if e < 0:
            if -e > d.free_circles:
                raise InvalidSiteError(f"no free circle {e}")
        else:
            if not 0 <= site.face < len(d.faces):
                raise InvalidSiteError(f"no face {site.face}")
            if e not in d.occ:
                raise InvalidSiteError(f"no edge {e}")
            if _dart_on_face(d, site.face, e) is None:
                raise InvalidSiteError(f"edge {e} is not on face {site.face}")


def enumerate_sites(d: LinkDiagram) -> List[MoveSite]:
    out = []
    for f in range(len(d.faces)):
        es = sorted(set(d.face_edges(f)))
        for i, a in enumerate(es):
            for b in es[i + 1:]:
                out.append(MoveSite(a, b, f))
    circles = [-(k + 1) for k in range(d.free_circles)]
    if circles:
        if d.n:
            for e in d.edges:
                f = next(i for i in range(len(d.faces)) if e in d.face_edges(i))
                out.append(MoveSite(circles[0], e, f))
        for i, a in enumerate(circles):
            for b in circles[i + 1:]:
                out.append(MoveSite(a, b, -1))
    return out


def random_site(d: LinkDiagram, rng: random.Random) -> MoveSite:
    sites = enumerate_sites(d)
    if not sites:
        raise InvalidSiteError("diagram has no move sites")
    return rng.choice(sites)


def insert_tangle(d: LinkDiagram, site: MoveSite, t: Tangle) -> LinkDiagram:
    check_site(d, site)
    off = max(d.edges, default=0) + 1
    t = t._shifted(off)
    fresh = t.next_label + 1
    xs = [list(x) for x in d.crossings]
    unions: List[Tuple[int, int]] = []
    used_circles = 0
    for e, (start_corner, end_corner) in ((site.edge_a, ("NE", "NW")), (site.edge_b, ("SW", "SE"))):
        if e < 0:
            used_circles += 1
            unions.append((t.ends[start_corner], t.ends[end_corner]))
            continue
        c, s = _dart_on_face(d, site.face, e)
        ends = d.occ[e]
        c2, s2 = ends[1] if ends[0] == (c, s) else ends[0]
        f1, f2 = fresh, fresh + 1
        fresh += 2
        xs[c][s] = f1
        xs[c2][s2] = f2
        unions += [(f1, t.ends[start_corner]), (f2, t.ends[end_corner])]
    labels = {e for x in xs for e in x} | {e for x in t.crossings for e in x} | set(t.ends.values())
    out, loops = rebuild([tuple(x) for x in xs] + list(t.crossings), unions, labels)
    free = d.free_circles - used_circles + t.free_circles + loops
    return LinkDiagram(out, free).normalized()
