"""Command-line front end.

Exit status: 0 on success, 1 when an input violates a precondition of the
requested operation, 2 on usage errors and unparseable literals.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import bijections as bj
from . import genfunc as gf
from .classify import METHODS, ClassifyOptions, avoidance_sequence, classify_patterns, write_report
from .errors import ParseError, TreeAvoidError
from .trees import contains, count_trees, enumerate_trees, parse_tree
from .words import WordSet, parse_wordset, tree_to_wordset

WORDSET_HINT = "word-set literal: {w1,w2,...} with words over digits 1..m, 'e' for the empty word, {} for a leaf"
TREE_HINT = "tree literal: '.' for a leaf or '(' followed by m subtrees and ')', e.g. (..(...))"
PERM_HINT = "permutation literal: comma-separated images b(1),...,b(m), e.g. 2,1,3"
COLORED_HINT = "coloured binary literal: '.' or '(' left right ')' with right one of '.', 's:'node, 'd:'node"


class UsageError(Exception):
    pass


def parse_literal(text: str, kind: str, arity: int = 3):
    """Parse a command-line literal of the given kind: wordset, tree, colored-binary or permutation."""
    if kind == "wordset":
        return parse_wordset(text, arity)
    if kind == "tree":
        if text.strip().startswith("{"):
            return parse_wordset(text, arity).to_tree()
        return parse_tree(text, arity)
    if kind == "colored-binary":
        return bj.parse_colored(text)
    if kind == "permutation":
        return bj.LetterPermutation.parse(text)
    raise ValueError(f"unknown literal kind {kind!r}")


def _pattern(args) -> WordSet:
    text = args.pattern
    if text.strip().startswith("{"):
        return parse_wordset(text, args.arity)
    return tree_to_wordset(parse_tree(text, args.arity))


def _wordset_arg(text: str, arity: int) -> WordSet:
    if text.strip().startswith("{"):
        return parse_wordset(text, arity)
    return tree_to_wordset(parse_tree(text, arity))


def _hint(text: str) -> str:
    s = text.strip()
    if s and all(ch.isdigit() or ch in ", " for ch in s):
        return PERM_HINT
    if s.startswith("{"):
        return WORDSET_HINT
    if s.startswith("(") or s == ".":
        return TREE_HINT + "; " + COLORED_HINT
    return WORDSET_HINT


# -- handlers: each returns (text, json-able payload) ----------------------------

def cmd_trees_count(args):
    k = args.internal if args.internal is not None else None
    if k is None:
        if args.leaves is None:
            raise UsageError("trees count needs --internal or --leaves")
        if args.leaves < 1 or (args.leaves - 1) % (args.arity - 1):
            n = 0
        else:
            n = count_trees(args.arity, (args.leaves - 1) // (args.arity - 1))
    else:
        n = count_trees(args.arity, k)
    return str(n), {"arity": args.arity, "count": n}


def cmd_trees_enumerate(args):
    trees = enumerate_trees(args.arity, args.leaves)
    if args.notation == "tree":
        items = [str(T) for T in trees]
    else:
        items = [str(tree_to_wordset(T)) for T in trees]
    return "\n".join(items), {"arity": args.arity, "leaves": args.leaves, "trees": items}


def cmd_pattern_contains(args):
    T = _wordset_arg(args.tree, args.arity).to_tree()
    t = _pattern(args).to_tree()
    occ = contains(T, t)
    path = None if occ is None else occ.path
    text = "avoids" if occ is None else f"contains at {occ}"
    return text, {"contains": occ is not None, "path": path}


def cmd_avoid_count(args):
    t = _pattern(args)
    method = args.method or "brute"
    seq = avoidance_sequence(t, max(args.leaves, 1), method)
    n = seq[args.leaves] if args.leaves >= 1 else 0
    return str(n), {"pattern": str(t), "leaves": args.leaves, "count": n}


def cmd_avoid_series(args):
    if args.terms < 2:
        raise UsageError("--terms must be at least 2")
    t = _pattern(args)
    N = args.terms - 1
    method = args.method or ("brute" if N <= 19 else "genfunc")
    seq = avoidance_sequence(t, N, method)
    return ", ".join(map(str, seq)), {"pattern": str(t), "method": method, "sequence": list(seq)}


def cmd_genfunc_system(args):
    sys_ = gf.build_system(_pattern(args))
    eqs = [{"variable": f"g{k}", "equation": line.split(" = ", 1)[1]}
           for k, line in zip(sys_.keys, sys_.dump().splitlines())]
    return sys_.dump(), {"pattern": str(sys_.target), "equations": eqs}


def cmd_genfunc_eliminate(args):
    t = _pattern(args)
    P = gf.eliminate(gf.build_system(t))
    return f"{P} = 0", {"pattern": str(t), "equation": str(P)}


def cmd_genfunc_fit(args):
    t = _pattern(args)
    if (args.deg_a is None) != (args.deg_x is None):
        raise UsageError("give both --deg-a and --deg-x, or neither")
    if args.deg_a is None:
        terms = args.terms or 60
        P = gf.fit_minimal_equation(gf.avoidance_series(t, terms - 1))
    else:
        terms = args.terms or (args.deg_a + 1) * (args.deg_x + 1) + 20
        P = gf.fit_algebraic_equation(gf.avoidance_series(t, terms - 1), args.deg_a, args.deg_x)
    if P is None:
        return "no relation found", {"pattern": str(t), "equation": None}
    return f"{P} = 0", {"pattern": str(t), "equation": str(P)}


def cmd_classify(args):
    opts = ClassifyOptions(method=args.method or "auto", reflection_reduced=args.reflection,
                           fit_equations=not args.no_fit, workers=args.workers)
    report = classify_patterns(args.arity, args.leaves, args.terms, opts)
    if args.out:
        write_report(report, args.out)
    return report.summary(), report.to_json()


def cmd_biject_relabel(args):
    b = bj.LetterPermutation.parse(args.perm)
    W = _wordset_arg(args.input, max(args.arity, b.size))
    out = bj.relabel(W, b)
    return str(out), {"input": str(W), "output": str(out)}


def cmd_biject_cut_forward(args):
    W = _wordset_arg(args.input, 3)
    out = bj.cut_forward(W)
    return str(out), {"input": str(W), "output": str(out)}


def cmd_biject_cut_inverse(args):
    W = _wordset_arg(args.input, 3)
    out = bj.cut_inverse(W)
    return str(out), {"input": str(W), "output": str(out)}


def cmd_biject_to_ternary(args):
    B = bj.parse_colored(args.input)
    T = bj.schroder_to_ternary(B)
    W = tree_to_wordset(T)
    return str(W), {"input": str(B), "output": str(W), "tree": str(T)}


def cmd_biject_from_ternary(args):
    T = _wordset_arg(args.input, 3).to_tree()
    B = bj.ternary_to_schroder(T)
    return str(B), {"input": str(tree_to_wordset(T)), "output": str(B)}


# -- parser -------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--arity", type=int, default=3, help="tree arity m (default 3)")
    common.add_argument("--format", choices=("text", "json"), default="text")

    parser = argparse.ArgumentParser(prog="treeavoid", description=__doc__.splitlines()[0])
    top = parser.add_subparsers(dest="command", required=True)

    def group(name, help_):
        p = top.add_parser(name, help=help_)
        return p.add_subparsers(dest="action", required=True)

    def leaf(sub, name, func, help_):
        p = sub.add_parser(name, parents=[common], help=help_)
        p.set_defaults(func=func)
        return p

    g = group("trees", "count or list strict m-ary trees")
    p = leaf(g, "count", cmd_trees_count, "number of trees")
    p.add_argument("--internal", type=int)
    p.add_argument("--leaves", type=int)
    p = leaf(g, "enumerate", cmd_trees_enumerate, "list all trees with the given number of leaves")
    p.add_argument("--leaves", type=int, required=True)
    p.add_argument("--notation", choices=("wordset", "tree"), default="wordset")

    g = group("pattern", "pattern containment")
    p = leaf(g, "contains", cmd_pattern_contains, "first occurrence of a pattern in a tree")
    p.add_argument("--tree", required=True, help="host tree (word-set or parenthesized literal)")
    p.add_argument("--pattern", required=True)

    g = group("avoid", "avoidance counts")
    p = leaf(g, "count", cmd_avoid_count, "number of n-leaf trees avoiding a pattern")
    p.add_argument("--pattern", required=True)
    p.add_argument("--leaves", type=int, required=True)
    p.add_argument("--method", choices=METHODS)
    p = leaf(g, "series", cmd_avoid_series, "first coefficients av(0), av(1), ...")
    p.add_argument("--pattern", required=True)
    p.add_argument("--terms", type=int, default=20, help="number of coefficients, starting at n = 0")
    p.add_argument("--method", choices=METHODS)

    g = group("genfunc", "generating-function system and functional equations")
    p = leaf(g, "system", cmd_genfunc_system, "print the polynomial system")
    p.add_argument("--pattern", required=True)
    p = leaf(g, "eliminate", cmd_genfunc_eliminate, "eliminate auxiliary variables")
    p.add_argument("--pattern", required=True)
    p = leaf(g, "fit", cmd_genfunc_fit, "guess the minimal algebraic equation from the series")
    p.add_argument("--pattern", required=True)
    p.add_argument("--deg-a", type=int)
    p.add_argument("--deg-x", type=int)
    p.add_argument("--terms", type=int, help="series coefficients to use")

    p = top.add_parser("classify", parents=[common], help="Wilf classes of all patterns of one size")
    p.set_defaults(func=cmd_classify)
    p.add_argument("--leaves", type=int, required=True, help="pattern leaf count L")
    p.add_argument("--terms", type=int, default=19, help="largest tree size n compared (default 19)")
    p.add_argument("--method", choices=METHODS)
    p.add_argument("--reflection", action="store_true", help="fold left-right reflections")
    p.add_argument("--no-fit", action="store_true", help="skip fitting functional equations")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--out", help="write the JSON report here")

    g = group("biject", "bijections between avoider sets")
    p = leaf(g, "relabel", cmd_biject_relabel, "apply a letter permutation to a word set")
    p.add_argument("--perm", required=True, help="images b(1),...,b(m), e.g. 2,1,3")
    p.add_argument("--input", required=True)
    for name, func in (("cut-forward", cmd_biject_cut_forward), ("cut-inverse", cmd_biject_cut_inverse)):
        p = leaf(g, name, func, f"{name.replace('-', ' ')} between {{1,2}}- and {{12}}-avoiders")
        p.add_argument("--input", required=True)
    p = leaf(g, "schroder-to-ternary", cmd_biject_to_ternary, "coloured binary tree to {1,3}-avoider")
    p.add_argument("--input", required=True)
    p = leaf(g, "schroder-from-ternary", cmd_biject_from_ternary, "{1,3}-avoider to coloured binary tree")
    p.add_argument("--input", required=True)
    return parser


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        text, payload = args.func(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=stderr)
        return 2
    except ParseError as exc:
        source = exc.text if exc.text is not None else ""
        print(f"error: {exc}", file=stderr)
        print(f"hint: {_hint(source)}", file=stderr)
        return 2
    except (TreeAvoidError, ValueError) as exc:
        print(f"error: {exc}", file=stderr)
        return 1
    if args.format == "json":
        print(json.dumps(payload, sort_keys=False), file=stdout)
    else:
        print(text, file=stdout)
    return 0


def main() -> None:
    sys.exit(run())
