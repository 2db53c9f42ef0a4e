import random

import pytest

import oracles
from fivemove.algebra.laurent import LaurentPoly
from fivemove.bracket import LOOP, bracket, jones_class5
from fivemove.colorings import col_n
from fivemove.diagram import (
    LinkDiagram,
    apply_rational_move,
    apply_twist_move,
    braid_closure,
    build_diagram,
    check_site,
    connected_sum,
    disjoint_union,
    enumerate_sites,
    mirror,
    random_site,
    stats,
)
from fivemove.diagram.moves import MoveSite
from fivemove.errors import InvalidDiagramError, InvalidSiteError
from fivemove.kauffman import describe_special, f_at_special
from fivemove.notation import Braid, Frac, Pretzel, parse_spec


def A(c):
    return LaurentPoly(c, "A")


HOPF = A({4: -1, -4: -1})


def test_identity_braid_is_trivial_link():
    d = build_diagram(Braid(3, ()))
    assert d.n == 0 and d.free_circles == 3 and d.component_count == 3


def test_pretzel_222():
    d = build_diagram(Pretzel((2, 2, 2)))
    assert d.n == 6 and d.component_count == 3


def test_stats_examples():
    s = stats(LinkDiagram([], 1))
    assert (s.writhe, s.self_writhe, s.components) == (0, 0, 1)
    s = stats(braid_closure(3, [1, 2]))
    assert (s.components, s.writhe, s.self_writhe) == (1, 2, 2)
    assert stats(braid_closure(3, [1, -2, 1, -2])).writhe == 0


def test_self_writhe_relation(catalog_diagrams):
    for _, d in catalog_diagrams:
        s = d.stats()
        assert s.self_writhe == s.writhe - 2 * s.linking


def test_self_writhe_ignores_orientation(catalog_diagrams):
    for _, d in catalog_diagrams:
        for k in range(len(d.components)):
            assert d.reversed_component(k).stats().self_writhe == d.stats().self_writhe


def test_euler_characteristic(catalog_diagrams):
    for _, d in catalog_diagrams:
        if d.n:
            # V - E + F = 2 per piece, with E = 2V
            assert len(d.faces) - d.n == 2 * d.pieces()


def test_invalid_pd_rejected():
    with pytest.raises(InvalidDiagramError):
        LinkDiagram([(1, 2, 3, 4)])


def test_mirror():
    assert bracket(mirror(LinkDiagram([], 1))) == A({0: 1})
    d = build_diagram(Pretzel((2, 2, 2)))
    assert bracket(mirror(d)) == bracket(build_diagram(Pretzel((-2, -2, -2))))
    assert mirror(mirror(d)) == d


def test_connected_sum_with_unknot():
    d = build_diagram(parse_spec("named:4_1"))
    assert bracket(connected_sum(d, LinkDiagram([], 1))) == bracket(d)


def test_sums_of_figure_eight_at_special_point():
    f41 = build_diagram(parse_spec("named:4_1"))
    t2 = LinkDiagram([], 2)
    assert describe_special(f_at_special(connected_sum(f41, f41))) == "5"
    assert describe_special(f_at_special(connected_sum(f41, t2))) == "-5"


def test_bracket_multiplicative_under_sums(catalog_diagrams):
    small = [d for _, d in catalog_diagrams if 0 < d.n <= 5]
    for d1 in small:
        for d2 in small[:3]:
            assert bracket(connected_sum(d1, d2)) == bracket(d1) * bracket(d2)
            assert bracket(disjoint_union(d1, d2)) == bracket(d1) * bracket(d2) * LOOP


def test_zero_twists_is_identity_on_bracket(small_diagrams):
    rng = random.Random(1)
    for _, d in small_diagrams:
        s = random_site(d, rng)
        assert bracket(apply_twist_move(d, s, 0)) == bracket(d)


def test_two_twists_on_trivial_link_give_hopf():
    t2 = LinkDiagram([], 2)
    (site,) = enumerate_sites(t2)
    assert bracket(apply_twist_move(t2, site, 2)) == HOPF


def test_twist_move_is_negative_rational_move(small_diagrams):
    rng = random.Random(2)
    for _, d in small_diagrams[:6]:
        s = random_site(d, rng)
        assert apply_twist_move(d, s, 5) == apply_rational_move(d, s, Frac(-5, 1))


def test_sites_are_cofacial(catalog_diagrams):
    for _, d in catalog_diagrams:
        for s in enumerate_sites(d):
            check_site(d, s)


def test_bad_site_rejected():
    d = braid_closure(2, [1, 1, 1])
    with pytest.raises(InvalidSiteError):
        check_site(d, MoveSite(1, 1, 0))
    with pytest.raises(InvalidSiteError):
        check_site(d, MoveSite(1, 2, 99))


def test_move_engine(small_diagrams):
    rng = random.Random(3)
    for _ in range(100):
        _, d = rng.choice(small_diagrams)
        s = random_site(d, rng)
        e = apply_twist_move(d, s, rng.choice((5, -5)))
        assert jones_class5(e, None).members == jones_class5(d, None).members
        assert col_n(e, 5) == col_n(d, 5)
        g = apply_rational_move(d, s, Frac(5, 2))
        assert f_at_special(g, None) == -f_at_special(d, None)


def test_builder_against_state_sum_oracle(catalog_diagrams):
    for _, d in catalog_diagrams:
        if d.n <= 8:
            assert bracket(d).terms() == oracles.bracket_coeffs(d.crossings, d.free_circles)


def test_json_round_trip(catalog_diagrams):
    for _, d in catalog_diagrams:
        assert LinkDiagram.from_json(d.to_json()) == d
