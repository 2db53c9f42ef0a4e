"""Turning link specifications into diagrams, and the move entry points."""

from __future__ import annotations

from functools import reduce

from ..notation import Braid, ConnSum, Disjoint, Frac, LinkSpec, Mirror, Montesinos, Named, PD, Pretzel, Rational
from .core import DiagramStats, LinkDiagram
from .moves import MoveSite, insert_tangle
from .ops import braid_closure, connected_sum, disjoint_union, mirror
from .tangle import Tangle

__all__ = ["build_diagram", "apply_twist_move", "apply_rational_move", "stats", "montesinos_tangle"]


def montesinos_tangle(columns) -> Tangle:
    from ..tangles import rational_tangle

    t = rational_tangle(columns[0])
    for f in columns[1:]:
        t = t.hsum(rational_tangle(f))
    return t


def build_diagram(spec: LinkSpec) -> LinkDiagram:
    if isinstance(spec, Braid):
        return braid_closure(spec.strands, spec.word)
    if isinstance(spec, PD):
        return LinkDiagram(spec.crossings).normalized()
    if isinstance(spec, Rational):
        from ..tangles import rational_link

        return rational_link(spec.frac)
    if isinstance(spec, Pretzel):
        return montesinos_tangle([Frac(1, n) for n in spec.twists]).numerator()
    if isinstance(spec, Montesinos):
        return montesinos_tangle(list(spec.columns)).numerator()
    if isinstance(spec, Named):
        from ..catalog import lookup

        return build_diagram(lookup(spec.key).spec)
    if isinstance(spec, Mirror):
        return mirror(build_diagram(spec.inner))
    if isinstance(spec, ConnSum):
        return reduce(connected_sum, [build_diagram(s) for s in spec.parts])
    if isinstance(spec, Disjoint):
        return reduce(disjoint_union, [build_diagram(s) for s in spec.parts])
    raise TypeError(f"not a link specification: {spec!r}")


def apply_rational_move(d: LinkDiagram, site: MoveSite, f: Frac) -> LinkDiagram:
    from ..tangles import rational_tangle

    return insert_tangle(d, site, rational_tangle(f))


def apply_twist_move(d: LinkDiagram, site: MoveSite, k: int) -> LinkDiagram:
    """k half twists: the rational move -k/1."""
    return apply_rational_move(d, site, Frac(-k, 1))


def stats(d: LinkDiagram) -> DiagramStats:
    return d.stats()
