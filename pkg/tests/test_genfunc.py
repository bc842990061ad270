import pytest
from hypothesis import given

from conftest import W, ternary_patterns, trees
from treeavoid.errors import DivergenceError, UnsupportedPattern
from treeavoid.genfunc import (
    PatternSystem,
    Rule,
    avoidance_series,
    build_system,
    eliminate,
    fit_algebraic_equation,
    fit_minimal_equation,
    intersect,
    pseudo_remainder,
    reference_sequence,
    series_from_system,
    solve_series,
)
from treeavoid.polys import BivariatePoly, MultiPoly, PowerSeries
from treeavoid.trees import avoidance_counts, enumerate_trees
from treeavoid.words import WordSet, drop_prefixes, tree_to_wordset

CATALAN = [0, 1, 0, 1, 0, 2, 0, 5, 0, 14]
A006605 = [0, 1, 0, 1, 0, 3, 0, 11, 0, 46, 0, 207, 0, 979, 0, 4797, 0, 24138, 0, 123998, 0, 647615,
           0, 3428493, 0, 18356714]


def bi(text_terms):
    return BivariatePoly(text_terms)


# x a^2 - a + x etc. as {(x-degree, a-degree): coefficient}
CATALAN_EQ = bi({(1, 2): 1, (0, 1): -1, (1, 0): 1})
SCHROEDER_EQ = bi({(1, 2): 2, (2, 1): -1, (0, 1): -1, (1, 0): 1})
QUARTIC_EQ = bi({(1, 4): 1, (1, 2): 1, (0, 1): -1, (1, 0): 1})
SEXTIC_EQ = bi({(1, 6): 1, (1, 4): 1, (1, 2): 1, (0, 1): -1, (1, 0): 1})


class TestIntersect:
    def test_with_single_vertex(self):
        for t in ternary_patterns(3, 5, 7):
            assert intersect(t, W("{}")) == t
            assert intersect(W("{}"), t) == t

    def test_disjoint_branches(self):
        assert intersect(W("{1}"), W("{2}")) == W("{1,2}")

    def test_idempotent(self):
        assert intersect(W("{12}"), W("{12}")) == W("{12}")

    @given(trees(max_leaves=12), trees(max_leaves=12))
    def test_matches_word_union(self, s, t):
        # overlaying at the root unions the internal vertices: merge the words, drop prefixes
        ws, wt = tree_to_wordset(s), tree_to_wordset(t)
        expected = WordSet(3, tuple(drop_prefixes(ws.words + wt.words)))
        assert intersect(ws, wt) == expected
        assert intersect(wt, ws) == expected


class TestBuildSystem:
    def test_two_left_edges(self):
        sys = build_system(W("{11}"))
        assert sys.keys == ("{}", "{e}", "{1}")
        names = sys.variable_names()
        x, a, b, c = (MultiPoly.var(names, v) for v in names)
        expected = [a - (x + b), b - (a ** 3 - c * a ** 2), c - (b * a ** 2 - c * a ** 2)]
        assert [e.terms for e in sys.equations] == [e.terms for e in expected]

    def test_star_pattern(self):
        sys = build_system(W("{e}"))
        assert len(sys) == 2
        names = sys.variable_names()
        assert sys.equations[1].terms == MultiPoly.var(names, names[2]).terms

    def test_t51(self):
        assert list(series_from_system(build_system(W("{1}")), 9)) == CATALAN

    def test_single_vertex_rejected(self):
        with pytest.raises(UnsupportedPattern):
            build_system(W("{}"))

    def test_closed(self):
        for t in ternary_patterns(5, 7, 9):
            sys = build_system(t)
            assert sys.keys[0] == "{}"
            assert len(set(sys.keys)) == len(sys)
            for rule in sys.rules[1:]:
                assert len(rule.plus) == len(rule.minus) == 3
                assert all(0 <= j < len(sys) for j in rule.plus + rule.minus)

    def test_dump(self):
        assert build_system(W("{11}")).dump().splitlines() == [
            "g{} = x + g{e}",
            "g{e} = g{}^3 - g{1}*g{}^2",
            "g{1} = g{e}*g{}^2 - g{1}*g{}^2",
        ]


class TestSeries:
    def test_t73_to_25(self):
        assert list(series_from_system(build_system(W("{11}")), 25)) == A006605

    def test_t51(self):
        assert list(series_from_system(build_system(W("{1}")), 9)) == CATALAN

    def test_star(self):
        assert list(series_from_system(build_system(W("{e}")), 5)) == [0, 1, 0, 0, 0, 0]

    def test_divergence_guard(self):
        bad = PatternSystem(W("{e}"), ("{}", "?"), ((), ()), (Rule((1,)), Rule((0,), ())))
        with pytest.raises(DivergenceError):
            solve_series(bad, 5)

    @pytest.mark.parametrize("t", ternary_patterns(5, 7, 9), ids=str)
    def test_oracle_equivalence(self, t):
        assert list(series_from_system(build_system(t), 15)) == avoidance_counts(t.to_tree(), 15)

    @pytest.mark.parametrize("m,L", [(2, 2), (2, 3), (2, 4), (4, 4), (4, 7)])
    def test_other_arities(self, m, L):
        for T in enumerate_trees(m, L):
            t = tree_to_wordset(T)
            assert list(avoidance_series(t, 15)) == avoidance_counts(T, 15)

    def test_invariants_of_powerseries(self):
        s = series_from_system(build_system(W("{12}")), 21)
        assert s[0] == 0
        assert all(s[n] == 0 for n in range(0, 22, 2))


class TestReference:
    def test_catalan(self):
        assert list(reference_sequence("t51-catalan", 9)) == CATALAN

    def test_schroeder(self):
        assert list(reference_sequence("t71-schroeder", 11)) == [0, 1, 0, 1, 0, 3, 0, 11, 0, 45, 0, 197]

    def test_quadconv(self):
        assert list(reference_sequence("t73-quadconv", 11)) == A006605[:12]

    def test_unknown(self):
        with pytest.raises(ValueError):
            reference_sequence("t99", 5)

    @pytest.mark.parametrize("name,pattern", [("t51-catalan", "{1}"), ("t71-schroeder", "{1,2}"),
                                              ("t73-quadconv", "{11}")])
    def test_agrees_with_system(self, name, pattern):
        assert reference_sequence(name, 25) == series_from_system(build_system(W(pattern)), 25)


class TestEliminate:
    @pytest.mark.parametrize("pattern,minimal", [("{11}", QUARTIC_EQ), ("{1}", CATALAN_EQ), ("{1,2}", SCHROEDER_EQ)])
    def test_known_minimal_factors(self, pattern, minimal):
        P = eliminate(build_system(W(pattern)))
        assert pseudo_remainder(P, minimal) is None

    def test_t73_is_exactly_the_quartic(self):
        assert str(eliminate(build_system(W("{11}")))) == "x*a^4 + x*a^2 - a + x"

    @pytest.mark.parametrize("t", ternary_patterns(5, 7, 9), ids=str)
    def test_annihilates_and_contains_minimal(self, t):
        sys = build_system(t)
        P = eliminate(sys)
        S = solve_series(sys, 30)[0]
        assert P.involves_a()
        assert P.annihilates(S, 30)
        Q = fit_minimal_equation(series_from_system(sys, 59))
        assert Q is not None and Q.annihilates(S, 30)
        assert pseudo_remainder(P, Q) is None

    def test_binary(self):
        for T in enumerate_trees(2, 4):
            sys = build_system(tree_to_wordset(T))
            assert eliminate(sys).annihilates(solve_series(sys, 30)[0], 30)


class TestFit:
    def test_catalan(self):
        s = series_from_system(build_system(W("{1}")), 20)
        assert fit_algebraic_equation(s, 2, 1) == CATALAN_EQ
        assert str(CATALAN_EQ) == "x*a^2 - a + x"

    def test_sextic(self):
        s = series_from_system(build_system(W("{111}")), 30)
        P = fit_algebraic_equation(s, 6, 1)
        assert P == SEXTIC_EQ
        assert str(P) == "x*a^6 + x*a^4 + x*a^2 - a + x"

    def test_trivial(self):
        s = PowerSeries([0, 1] + [0] * 14)
        P = fit_algebraic_equation(s, 1, 1)
        # the normal form puts a negative sign on the bare a term
        assert str(P) == "-a + x"

    def test_too_generous_bounds_are_ambiguous(self):
        s = series_from_system(build_system(W("{1}")), 40)
        assert fit_algebraic_equation(s, 3, 2) is None

    def test_too_tight_bounds(self):
        s = series_from_system(build_system(W("{1}")), 40)
        assert fit_algebraic_equation(s, 1, 1) is None

    def test_precondition(self):
        with pytest.raises(ValueError):
            fit_algebraic_equation(PowerSeries([0, 1, 0, 1]), 2, 1)

    def test_minimal_scan_finds_schroeder(self):
        s = series_from_system(build_system(W("{12}")), 59)
        assert fit_minimal_equation(s) == SCHROEDER_EQ


class TestPolyText:
    def test_bivariate_order(self):
        P = BivariatePoly({(1, 2): 3, (2, 1): -3, (0, 1): -1, (3, 0): 1, (1, 0): 1})
        assert str(P) == "3*x*a^2 - 3*x^2*a - a + x^3 + x"

    def test_normalization(self):
        P = BivariatePoly({(1, 2): -4, (0, 1): 4, (1, 0): -4})
        assert P == CATALAN_EQ
        Q = BivariatePoly({(1, 2): -2, (2, 0): 6})
        assert str(Q) == "x*a^2 - 3*x^2"

    def test_zero_rejected(self):
        with pytest.raises(ValueError):
            BivariatePoly({(1, 1): 0})

    def test_multipoly(self):
        names = ("x", "a")
        x, a = (MultiPoly.var(names, v) for v in names)
        p = x * a ** 2 - a + x
        assert str(p) == "x*a^2 + x - a"
        assert p.degree("a") == 2
        assert (p - p).is_zero()
