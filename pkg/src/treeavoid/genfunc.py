"""Avoidance generating functions.

For a pattern ``t`` and a root pattern ``p`` let g[p] count t-avoiding trees
that have ``p`` at their root. Then

    g[v] = x + g[star]
    g[p] = prod_i g[p_i] - prod_i g[p_i & t_i]

where ``v`` is the single vertex and ``&`` overlays two patterns at a common
root. Closing this system over all root patterns that appear gives a
polynomial system whose solution g[v] is the avoidance generating function.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from math import lcm

from sympy.polys.domains import ZZ
from sympy.polys.rings import ring

from .errors import ArityMismatch, DegeneracyError, DivergenceError, InconsistencyError, UnsupportedPattern
from .polys import BivariatePoly, MultiPoly, PowerSeries, series_mul, series_prod
from .trees import LEAF, MAryTree, Node
from .words import WordSet, tree_to_wordset

log = logging.getLogger(__name__)

ANNIHILATION_ORDER = 30


def intersect_nodes(s: Node, t: Node) -> Node:
    if not s:
        return t
    if not t:
        return s
    return tuple(intersect_nodes(a, b) for a, b in zip(s, t))


def intersect(s: WordSet, t: WordSet) -> WordSet:
    """Overlay two patterns at a common root."""
    if s.arity != t.arity:
        raise ArityMismatch(f"cannot intersect arity {s.arity} with arity {t.arity}")
    node = intersect_nodes(s.to_tree().root, t.to_tree().root)
    return tree_to_wordset(MAryTree(s.arity, node))


def pattern_key(node: Node, m: int) -> str:
    return str(tree_to_wordset(MAryTree(m, node)))


@dataclass(frozen=True)
class Rule:
    """Right-hand side ``prod(g[plus]) - prod(g[minus])``; the base rule is ``x + g[plus[0]]``."""

    plus: tuple[int, ...]
    minus: tuple[int, ...] | None = None

    @property
    def is_base(self) -> bool:
        return self.minus is None


@dataclass(frozen=True)
class PatternSystem:
    target: WordSet
    keys: tuple[str, ...]
    patterns: tuple[Node, ...]
    rules: tuple[Rule, ...]

    @property
    def arity(self) -> int:
        return self.target.arity

    @property
    def index(self) -> dict[str, int]:
        return {k: i for i, k in enumerate(self.keys)}

    def __len__(self) -> int:
        return len(self.keys)

    def variable_names(self) -> tuple[str, ...]:
        return ("x",) + tuple(f"g{k}" for k in self.keys)

    @property
    def equations(self) -> list[MultiPoly]:
        """One polynomial ``g[p] - rhs`` per variable, in discovery order."""
        names = self.variable_names()
        gens = [MultiPoly.var(names, v) for v in names]
        x, g = gens[0], gens[1:]
        out = []
        for i, rule in enumerate(self.rules):
            if rule.is_base:
                rhs = x + g[rule.plus[0]]
            else:
                rhs = _product([g[j] for j in rule.plus], names) - _product([g[j] for j in rule.minus], names)
            out.append(g[i] - rhs)
        return out

    def dump(self) -> str:
        lines = []
        for key, rule in zip(self.keys, self.rules):
            if rule.is_base:
                rhs = f"x + g{self.keys[rule.plus[0]]}"
            else:
                rhs = f"{_monomial(self.keys, rule.plus)} - {_monomial(self.keys, rule.minus)}"
            lines.append(f"g{key} = {rhs}")
        return "\n".join(lines)


def _product(polys: list[MultiPoly], names: tuple[str, ...]) -> MultiPoly:
    return reduce(lambda a, b: a * b, polys, MultiPoly.const(names, 1))


def _monomial(keys: tuple[str, ...], idx: tuple[int, ...]) -> str:
    counts: dict[int, int] = {}
    for j in idx:
        counts[j] = counts.get(j, 0) + 1
    return "*".join(f"g{keys[j]}" + (f"^{k}" if k > 1 else "") for j, k in counts.items())


def build_system(t: WordSet) -> PatternSystem:
    """Close the root-pattern recursion for ``t`` by breadth-first discovery."""
    m = t.arity
    target = t.to_tree().root
    if not target:
        raise UnsupportedPattern("the single-vertex pattern is contained in every tree")
    star: Node = (LEAF,) * m

    patterns: list[Node] = [LEAF]
    index: dict[Node, int] = {LEAF: 0}
    rules: dict[int, Rule] = {}

    def idx(p: Node) -> int:
        if p not in index:
            index[p] = len(patterns)
            patterns.append(p)
        return index[p]

    rules[0] = Rule((idx(star),))
    done = {LEAF}
    batch = [star]
    while batch:
        pending: dict[Node, None] = {}
        for p in batch:
            kids = [c for c in p]
            meets = [intersect_nodes(c, tc) for c, tc in zip(p, target)]
            rules[idx(p)] = Rule(tuple(idx(c) for c in kids), tuple(idx(c) for c in meets))
            done.add(p)
            for q in kids + meets:
                pending.setdefault(q, None)
            for q in list(pending):
                if q in done:
                    del pending[q]
        batch = list(pending)

    keys = tuple(pattern_key(p, m) for p in patterns)
    return PatternSystem(t, keys, tuple(patterns), tuple(rules[i] for i in range(len(patterns))))


def solve_series(sys: PatternSystem, N: int) -> list[list[int]]:
    """Truncated fixed point of every variable modulo x^(N+1).

    Product rules are updated together, then the base variable is refreshed
    from the new star value. Each sweep fixes at least one more coefficient of
    every variable, so N + 2 sweeps always suffice for a well-formed system.
    """
    if N < 1:
        raise ValueError("need N >= 1")
    size = len(sys)
    values = [[0] * (N + 1) for _ in range(size)]
    x = [0] * (N + 1)
    x[1] = 1
    base = sys.rules[0]
    for _sweep in range(N + 2):
        new = [None] * size
        for i, rule in enumerate(sys.rules):
            if rule.is_base:
                continue
            plus = series_prod([values[j] for j in rule.plus], N)
            minus = series_prod([values[j] for j in rule.minus], N)
            new[i] = [a - b for a, b in zip(plus, minus)]
        new[0] = [a + b for a, b in zip(x, new[base.plus[0]])]
        if new == values:
            return values
        values = new
    raise DivergenceError(f"series for {sys.target} did not stabilise within {N + 2} sweeps")


def series_from_system(sys: PatternSystem, N: int) -> PowerSeries:
    return PowerSeries(solve_series(sys, N)[0])


def avoidance_series(t: WordSet, N: int) -> PowerSeries:
    if not t.words and t.to_tree().is_leaf():
        return PowerSeries([0] * (N + 1))
    return series_from_system(build_system(t), N)


# -- elimination --------------------------------------------------------------

def _reorder(f, R):
    """Move ``f`` into ring ``R`` (same generator names, any order)."""
    src = [str(g) for g in f.ring.gens]
    pos = [src.index(str(g)) for g in R.gens]
    return R.from_dict({tuple(e[p] for p in pos): c for e, c in f.items()})


def _clean(f):
    _, f = f.primitive()
    if f.LC < 0:
        f = -f
    if f.is_ground:
        return f
    return f.sqf_part()


def eliminate(sys: PatternSystem) -> BivariatePoly:
    """Eliminate every auxiliary variable by iterated resultants.

    Variables go in reverse discovery order. At each step the equation of
    lowest degree in the variable is the pivot and every other equation that
    mentions the variable is replaced by its resultant with the pivot. The
    result annihilates the avoidance series but need not be irreducible.
    """
    names = ("x",) + tuple(f"g{i}" for i in range(len(sys)))
    R, *_ = ring(",".join(names), ZZ)
    polys = [_clean(R.from_dict(dict(e.terms))) for e in sys.equations]
    current = list(names)

    for step, yi in enumerate(reversed(range(2, len(names)))):
        y = names[yi]
        rest = [v for v in current if v != y]
        Ry, *_ = ring(",".join([y] + rest), ZZ)
        moved = [_reorder(f, Ry) for f in polys]
        holding = [f for f in moved if f.degree(0) > 0]
        free = [f for f in moved if f.degree(0) <= 0]
        R_rest = Ry.drop(0)
        out = [R_rest.from_dict({e[1:]: c for e, c in f.items()}) for f in free]
        if holding:
            pivot = min(holding, key=lambda f: (f.degree(0), len(f)))
            for f in holding:
                if f is pivot:
                    continue
                r = pivot.resultant(f)
                if r == 0:
                    raise DegeneracyError(f"zero resultant eliminating {y} (step {step})")
                out.append(_clean(r))
        polys = [f for f in out if not f.is_ground]
        current = rest
        log.debug("eliminated %s: %d equations, max terms %d", y, len(polys),
                  max((len(f) for f in polys), default=0))

    Rxa, _, _ = ring("x,a", ZZ)
    final = [Rxa.from_dict(dict(f.items())) for f in polys]
    final = [f for f in final if f.degree(1) > 0]
    if not final:
        raise DegeneracyError(f"elimination for {sys.target} lost the generating-function variable")
    common = reduce(lambda f, g: f.gcd(g), final)
    P = common if common.degree(1) > 0 else min(final, key=lambda f: (f.degree(1), len(f)))
    P = _primitive_in_a(P)
    result = BivariatePoly({e: int(c) for e, c in P.items()})

    series = solve_series(sys, ANNIHILATION_ORDER)[0]
    if not result.annihilates(series, ANNIHILATION_ORDER):
        raise InconsistencyError(f"eliminant for {sys.target} fails to annihilate its series")
    return result


def _primitive_in_a(P):
    """Divide out the content of P viewed as a polynomial in a over Z[x], then square-free it."""
    R = P.ring
    coeffs: dict[int, dict] = {}
    for (i, j), c in P.items():
        coeffs.setdefault(j, {})[(i, 0)] = c
    content = reduce(lambda f, g: f.gcd(g), (R.from_dict(d) for d in coeffs.values()))
    if not content.is_ground:
        P = P.exquo(content)
    return _clean(P)


def pseudo_remainder(P: BivariatePoly, Q: BivariatePoly) -> BivariatePoly | None:
    """Pseudo-remainder of P by Q in the variable a over Z[x]; None when it vanishes."""
    R, _, _ = ring("a,x", ZZ)
    f = R.from_dict({(j, i): c for (i, j), c in P.terms.items()})
    g = R.from_dict({(j, i): c for (i, j), c in Q.terms.items()})
    r = f.prem(g)
    if r == 0:
        return None
    return BivariatePoly({(i, j): int(c) for (j, i), c in r.items()})


# -- guessing -----------------------------------------------------------------

def _nullspace(rows: list[list[int]], ncols: int) -> list[list[Fraction]]:
    """Basis of the rational nullspace, by reduced row echelon form."""
    M = [[Fraction(v) for v in row] for row in rows]
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pr = next((i for i in range(r, len(M)) if M[i][c] != 0), None)
        if pr is None:
            continue
        M[r], M[pr] = M[pr], M[r]
        inv = 1 / M[r][c]
        M[r] = [v * inv for v in M[r]]
        for i in range(len(M)):
            if i != r and M[i][c] != 0:
                f = M[i][c]
                M[i] = [a - f * b for a, b in zip(M[i], M[r])]
        pivots.append(c)
        r += 1
        if r == len(M):
            break
    basis = []
    for free in (c for c in range(ncols) if c not in pivots):
        v = [Fraction(0)] * ncols
        v[free] = Fraction(1)
        for i, pc in enumerate(pivots):
            v[pc] = -M[i][free]
        basis.append(v)
    return basis


def fit_algebraic_equation(series, deg_a: int, deg_x: int) -> BivariatePoly | None:
    """Integer relation sum c[i,j] x^i a^j = 0 satisfied by the truncated series.

    Returns None unless the relation space at these bounds is exactly
    one-dimensional and the relation involves ``a``.
    """
    a = list(series)
    N = len(a) - 1
    cols = [(i, j) for j in range(deg_a + 1) for i in range(deg_x + 1)]
    if len(a) < len(cols) + 10:
        raise ValueError(f"need at least {len(cols) + 10} coefficients, got {len(a)}")
    powers = [[1] + [0] * N]
    for _ in range(deg_a):
        powers.append(series_mul(powers[-1], a, N))
    rows = [[powers[j][n - i] if n >= i else 0 for i, j in cols] for n in range(N + 1)]
    basis = _nullspace(rows, len(cols))
    if len(basis) != 1:
        return None
    v = basis[0]
    scale = lcm(*(f.denominator for f in v))
    terms = {e: int(f * scale) for e, f in zip(cols, v) if f}
    if not any(j for _, j in terms):
        return None
    return BivariatePoly(terms)


def fit_minimal_equation(series, max_total: int = 12) -> BivariatePoly | None:
    """Scan bounds by increasing (deg_a + deg_x, deg_a) until a relation is found."""
    n = len(series)
    for total in range(1, max_total + 1):
        for deg_a in range(1, total + 1):
            deg_x = total - deg_a
            if (deg_a + 1) * (deg_x + 1) + 10 > n:
                continue
            P = fit_algebraic_equation(series, deg_a, deg_x)
            if P is not None:
                return P
    return None


def fit_terms_needed(max_total: int = 12) -> int:
    """Series length that lets :func:`fit_minimal_equation` try every bound up to ``max_total``."""
    return max((da + 1) * (max_total - da + 1) for da in range(1, max_total + 1)) + 10


# -- hand-derived recurrences -------------------------------------------------

REFERENCE_NAMES = ("t51-catalan", "t71-schroeder", "t73-quadconv")


def reference_sequence(name: str, N: int) -> PowerSeries:
    """Avoidance counts from the recurrences for t51, t71 and t73 (ternary)."""
    if name not in REFERENCE_NAMES:
        raise ValueError(f"unknown reference sequence {name!r}; choose from {', '.join(REFERENCE_NAMES)}")
    if N < 2:
        raise ValueError("need N >= 2")
    av = [0, 1, 0] + [0] * (N - 2)

    def conv2(n):
        return sum(av[k] * av[n - k - 1] for k in range(1, n - 1))

    for n in range(3, N + 1):
        if name == "t51-catalan":
            av[n] = conv2(n)
        elif name == "t71-schroeder":
            av[n] = 2 * conv2(n) - av[n - 2]
        else:
            quad = 0
            for l in range(1, n - 3):
                for mm in range(1, n - l - 2):
                    for k in range(1, n - l - mm - 1):
                        quad += av[l] * av[mm] * av[k] * av[n - l - mm - k - 1]
            av[n] = conv2(n) + quad
    return PowerSeries(av[: N + 1])
