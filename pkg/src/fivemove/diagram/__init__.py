from .core import LinkDiagram, DiagramStats, rebuild
from .tangle import Tangle
from .ops import braid_closure, mirror, connected_sum, disjoint_union
from .moves import MoveSite, enumerate_sites, random_site, insert_tangle, check_site
from .build import build_diagram, apply_twist_move, apply_rational_move, stats

__all__ = [
    "LinkDiagram",
    "DiagramStats",
    "Tangle",
    "rebuild",
    "braid_closure",
    "mirror",
    "connected_sum",
    "disjoint_union",
    "MoveSite",
    "enumerate_sites",
    "random_site",
    "insert_tangle",
    "check_site",
    "build_diagram",
    "apply_twist_move",
    "apply_rational_move",
    "stats",
]
