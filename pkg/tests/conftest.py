import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(__file__))

from fivemove import catalog  # noqa: E402
from fivemove.diagram import build_diagram, enumerate_sites  # noqa: E402


@pytest.fixture(scope="session")
def catalog_diagrams():
    """(key, diagram) for every buildable named link."""
    out = []
    for key in catalog.named_keys():
        link = catalog.named(key)
        if link.constructible:
            out.append((key, build_diagram(link.spec)))
    return out


@pytest.fixture(scope="session")
def small_diagrams(catalog_diagrams):
    """Catalog diagrams with at most 7 crossings and at least one move site."""
    return [(k, d) for k, d in catalog_diagrams if d.n <= 7 and enumerate_sites(d)]
