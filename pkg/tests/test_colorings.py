import random

import pytest

import oracles
from fivemove.colorings import col_n, col_n_bruteforce, coloring_matrix, smith_diagonal
from fivemove.diagram import LinkDiagram, apply_rational_move, build_diagram, random_site
from fivemove.notation import Frac, Montesinos, parse_spec
from fivemove.tangles import coloring_pair_table, rational_tangle


def test_trivial_links():
    for k in (1, 2, 3):
        for n in (3, 5, 7):
            assert col_n(LinkDiagram([], k), n) == n ** k


def test_figure_eight():
    d = build_diagram(parse_spec("named:4_1"))
    assert col_n(d, 5) == 25
    assert col_n_bruteforce(d, 5) == 25
    assert oracles.colorings(d.crossings, 5) == 25


def test_row_sums_vanish(catalog_diagrams):
    for _, d in catalog_diagrams:
        rows, _ = coloring_matrix(d)
        assert all(sum(r) == 0 for r in rows)


def test_smith_diagonal_of_known_matrix():
    assert smith_diagonal([[2, 4, 4], [-6, 6, 12], [10, -4, -16]]) == [2, 6, 12]


@pytest.mark.parametrize("k", [1, 2, 3])
def test_two_five_chain(k):
    # N([1] * [2/5] * ... * [2/5]) has 5^(k-1) col_5([1]^D) colorings
    d = build_diagram(Montesinos((Frac(1, 1),) + (Frac(2, 5),) * k))
    base = col_n(rational_tangle(Frac(1, 1)).denominator(), 5)
    assert base == 5
    assert col_n(d, 5) == 5 ** (k - 1) * base


def test_coloring_pairs_n5():
    table = coloring_pair_table(5)
    assert [j for j in [None, 0, 1, 2, 3, 4] if table[(2, j)] == 25] == [3]
    assert [j for j in [None, 0, 1, 2, 3, 4] if table[(None, j)] == 25] == [None]


def test_coloring_pairs_n3_unique_partner():
    table = coloring_pair_table(3)
    keys = [None, 0, 1, 2]
    for i in keys:
        partners = [j for j in keys if table[(i, j)] == 9]
        assert len(partners) == 1
        assert partners[0] == (None if i is None else (3 - i) % 3)


def test_divisible_by_n(catalog_diagrams):
    for _, d in catalog_diagrams:
        for n in (3, 5, 7):
            assert col_n(d, n) % n == 0


def test_bruteforce_oracle(catalog_diagrams):
    for key, d in catalog_diagrams:
        if d.n <= 7:
            for n in (3, 5, 7):
                assert col_n(d, n) == oracles.colorings(d.crossings, n, d.free_circles), (key, n)


@pytest.mark.parametrize("n, m, s", [(5, 2, 1), (5, 2, -1), (5, 1, 1), (5, 3, 2)])
def test_rational_move_invariance(small_diagrams, n, m, s):
    rng = random.Random(n * 100 + m * 10 + s)
    for _ in range(20):
        _, d = rng.choice(small_diagrams)
        site = random_site(d, rng)
        assert col_n(apply_rational_move(d, site, Frac(n * s, m)), n) == col_n(d, n)
