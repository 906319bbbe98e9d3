from fractions import Fraction
from itertools import product

import networkx as nx
import pytest
from hypothesis import given, strategies as st

from twobridge.cfrac import (EvenCF, PositiveCF, even_cf, numerator_rec,
                             positive_cf)
from twobridge.errors import BudgetExceeded
from twobridge.laurent import YPoly, specialize_y
from twobridge.snake import (RIGHT, UP, SnakeGraph, count_matchings,
                             enumerate_matchings, f_polynomial, isomorphic,
                             render_ascii, snake_from_even,
                             snake_from_positive, tile_count_even)


def zigzag(g):
    return all(a != b for a, b in zip(g.steps, g.steps[1:]))


def straight(g):
    return all(a == b for a, b in zip(g.steps, g.steps[1:]))


class TestConstruction:
    def test_staircase(self):
        g = snake_from_positive(PositiveCF((2, 1, 2, 3)))
        assert g.d == 7
        assert g.step_word() == "RRRUUR"
        assert g.edge_signs == (1, -1, 1, 1, -1, -1)

    def test_degenerate(self):
        g = snake_from_positive(PositiveCF((1,)))
        assert g.d == 0 and g.steps == () and count_matchings(g) == 1

    def test_single_run_is_zigzag(self):
        for a in range(2, 8):
            g = snake_from_positive(PositiveCF((a,)))
            assert g.d == a - 1
            assert zigzag(g)

    def test_even_matches_positive_word(self):
        g = snake_from_even(EvenCF((2, 2, -2, 4)))
        assert g.d == 7
        assert g.edge_signs == (1, -1, 1, 1, -1, -1)
        assert g.step_word() == "RRRUUR"
        assert g.first_sign == 1

    def test_alternating_even_cf_is_zigzag(self):
        assert zigzag(snake_from_even(EvenCF((2, -2, 2, -2, 2))))

    def test_sign_pair_blocks_are_straight(self):
        assert straight(snake_from_even(EvenCF((2, 2, -2, -2))))
        assert straight(snake_from_even(EvenCF((2, 2, -2, -2, 2, 2))))

    def test_invariant_enforced(self):
        with pytest.raises(ValueError):
            SnakeGraph(3, (RIGHT, RIGHT), (1, 1))  # straight needs a sign change
        with pytest.raises(ValueError):
            SnakeGraph(3, (UP, RIGHT), (1, -1))  # must start RIGHT


class TestTileCount:
    def test_examples(self):
        assert tile_count_even(EvenCF((2, 2, -2, 4))) == 7
        assert tile_count_even(EvenCF((2,))) == 1
        assert tile_count_even(EvenCF((2, -2, 2, -2))) == 4

    def test_matches_construction(self):
        for entries in [(2, 4, 2), (-2, -4, 6), (4, 4, -2, 2), (6, -2)]:
            cf = EvenCF(entries)
            assert snake_from_even(cf).d == tile_count_even(cf)


class TestIsomorphism:
    def test_even_vs_positive(self):
        assert isomorphic(snake_from_positive(PositiveCF((2, 1, 2, 3))),
                          snake_from_even(EvenCF((2, 2, -2, 4))))

    def test_first_entry_split(self):
        for entries in [(2, 1, 2, 3), (3, 2), (4, 1, 2)]:
            a = snake_from_positive(PositiveCF(entries))
            b = snake_from_positive(PositiveCF((1, entries[0] - 1) + entries[1:]))
            assert isomorphic(a, b)

    def test_different_tile_counts(self):
        assert not isomorphic(snake_from_positive(PositiveCF((3,))),
                              snake_from_positive(PositiveCF((2, 2))))

    def test_mirror_invariance(self):
        for entries in [(2, 2, -2, 4), (4, -2), (2, -2, 2), (6, 4, 2)]:
            cf = EvenCF(entries)
            assert isomorphic(snake_from_even(cf), snake_from_even(cf.mirrored()))

    def test_two_entry_reduction(self):
        for b1, b2 in product((2, 4, 6), repeat=2):
            same = snake_from_even(EvenCF((b1, b2)))
            assert isomorphic(same, snake_from_positive(PositiveCF((b1, b2))))
            opposite = snake_from_even(EvenCF((b1, -b2)))
            reduced = snake_from_positive(PositiveCF((b1 - 1, 1, b2 - 1)))
            assert isomorphic(opposite, reduced)

    def test_symmetry_group_matches_graph_isomorphism(self):
        # step-word test vs abstract graph isomorphism, all graphs with d <= 6
        def explicit(g):
            G = nx.Graph()
            x = y = 0
            for i, (px, py) in enumerate(g.tile_positions()):
                corners = [(px, py), (px + 1, py), (px + 1, py + 1), (px, py + 1)]
                for a, b in zip(corners, corners[1:] + corners[:1]):
                    G.add_edge(a, b)
            return G

        graphs = [SnakeGraph(1, (), (), 1)]
        for d in range(2, 7):
            for word in product((RIGHT, UP), repeat=d - 2):
                steps = (RIGHT,) + word
                signs = [1]
                for a, b in zip(steps, steps[1:]):
                    signs.append(signs[-1] if a != b else -signs[-1])
                graphs.append(SnakeGraph(d, steps, tuple(signs), 1))
        for g in graphs:
            for h in graphs:
                assert isomorphic(g, h) == nx.is_isomorphic(explicit(g),
                                                            explicit(h))


class TestCounting:
    def test_examples(self):
        assert count_matchings(snake_from_positive(PositiveCF((2, 1, 2, 3)))) == 27
        assert count_matchings(SnakeGraph(1, (), (), 1)) == 2
        assert count_matchings(snake_from_positive(PositiveCF((2, 3, 4, 5, 6)))) == 972

    def test_counts_equal_numerators(self):
        for entries in [(2,), (3, 2), (1, 1, 1, 2), (5, 4), (2, 2, 2, 2),
                        (9, 1, 3), (1, 8)]:
            cf = PositiveCF(entries)
            assert count_matchings(snake_from_positive(cf)) == numerator_rec(entries)

    def test_quotient_gives_reduced_fraction(self):
        from math import gcd

        from twobridge.verify import positive_lists
        for entries in positive_lists(14):
            if len(entries) < 2:
                continue
            cf = PositiveCF(entries)
            top = count_matchings(snake_from_positive(cf))
            bottom = count_matchings(snake_from_positive(PositiveCF(entries[1:])))
            assert gcd(top, bottom) == 1
            assert Fraction(top, bottom) == cf.value()

    def test_even_graph_counts_numerator(self):
        for p, q in [(27, 10), (5, 4), (10, 7), (12, 5)]:
            cf = even_cf(Fraction(p, q))
            assert count_matchings(snake_from_even(cf)) == p


class TestEnumeration:
    def test_single_tile(self):
        ms = enumerate_matchings(SnakeGraph(1, (), (), 1))
        assert [m.height for m in ms] == [frozenset(), frozenset({1})]

    def test_staircase(self):
        ms = enumerate_matchings(snake_from_positive(PositiveCF((2, 1, 2, 3))))
        assert len(ms) == 27
        heights = {m.height for m in ms}
        assert len(heights) == 27
        assert sum(1 for m in ms if m.height == frozenset()) == 1
        assert sum(1 for m in ms if m.height == frozenset(range(1, 8))) == 1

    def test_every_matching_is_perfect(self):
        g = snake_from_positive(PositiveCF((3, 3)))
        vertices = set()
        for (x, y) in g.tile_positions():
            vertices.update([(x, y), (x + 1, y), (x, y + 1), (x + 1, y + 1)])
        for m in enumerate_matchings(g):
            covered = [v for e in m.edges for v in e]
            assert sorted(covered) == sorted(vertices)

    def test_budget(self):
        g = snake_from_positive(positive_cf(Fraction(27, 10)))
        with pytest.raises(BudgetExceeded):
            enumerate_matchings(g, budget=20)

    @given(st.lists(st.sampled_from([RIGHT, UP]), max_size=7))
    def test_flip_search_count_matches_transfer(self, word):
        steps = (RIGHT,) + tuple(word)
        signs = [1]
        for a, b in zip(steps, steps[1:]):
            signs.append(signs[-1] if a != b else -signs[-1])
        g = SnakeGraph(len(steps) + 1, steps, tuple(signs), 1)
        assert len(enumerate_matchings(g)) == count_matchings(g)


class TestFPolynomial:
    def test_two_tiles(self):
        F = f_polynomial(snake_from_positive(PositiveCF((3,))))
        assert F == YPoly.one() + YPoly.monomial((1,)) + YPoly.monomial((1, 2))

    def test_three_tiles(self):
        F = f_polynomial(snake_from_positive(PositiveCF((2, 2))))
        want = (YPoly.one() + YPoly.monomial((1,)) + YPoly.monomial((3,))
                + YPoly.monomial((1, 3)) + YPoly.monomial((1, 2, 3)))
        assert F == want

    def test_single_tile(self):
        assert f_polynomial(SnakeGraph(1, (), (), 1)) == (
            YPoly.one() + YPoly.monomial((1,)))

    def test_shape(self):
        for entries in [(2, 1, 2), (3, 3), (1, 2, 2), (4, 2)]:
            g = snake_from_positive(PositiveCF(entries))
            F = f_polynomial(g)
            assert F.coeff(()) == 1
            assert F.coeff(range(1, g.d + 1)) == 1
            assert all(c >= 1 for _, c in F.subsets())

    def test_reflection(self):
        # reflecting along the first tile's diagonal complements all heights
        from twobridge.verify import positive_lists
        for entries in positive_lists(10):
            if entries[0] < 2:
                continue
            cf = PositiveCF(entries)
            other = PositiveCF((1, entries[0] - 1) + entries[1:])
            F = f_polynomial(snake_from_positive(cf))
            G = f_polynomial(snake_from_positive(other))
            assert F == G.complement(cf.d), entries

    def test_specialization_route(self):
        g = snake_from_even(EvenCF((2, -2)))
        assert specialize_y(f_polynomial(g), g.d) == (
            1 + specialize_y(YPoly.monomial((2,)), 2)
            + specialize_y(YPoly.monomial((1, 2)), 2))


class TestRender:
    def test_single_tile(self):
        assert render_ascii(SnakeGraph(1, (), (), 1)) == "+--+\n|  |\n+--+"

    def test_single_edge(self):
        assert render_ascii(SnakeGraph(0, (), (), 1)) == "+\n|\n+"

    def test_straight_row(self):
        art = render_ascii(snake_from_positive(PositiveCF((2, 2))))
        assert art == "+--+--+--+\n|  |  |  |\n+--+--+--+"

    def test_staircase_dimensions(self):
        art = render_ascii(snake_from_positive(PositiveCF((2, 1, 2, 3))))
        lines = art.splitlines()
        assert len(lines) == 7          # three rows of tiles
        assert max(len(l) for l in lines) == 16  # five columns wide
