"""Strict m-ary trees: construction, enumeration, reflection and containment.

A node is a plain tuple: a leaf is ``()`` and an internal node is the tuple of
its ``m`` children. Nested tuples hash and compare structurally, which keeps
exhaustive sweeps cheap. :class:`MAryTree` pairs a root node with its arity.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from math import comb
from typing import Iterator

from .errors import ArityMismatch, ParseError

Node = tuple
LEAF: Node = ()

MIN_ARITY = 2
MAX_ARITY = 9


def _check_arity(m: int) -> None:
    if not MIN_ARITY <= m <= MAX_ARITY:
        raise ValueError(f"arity must be in {MIN_ARITY}..{MAX_ARITY}, got {m}")


@dataclass(frozen=True)
class MAryTree:
    arity: int
    root: Node = LEAF

    def __post_init__(self):
        _check_arity(self.arity)
        _validate(self.root, self.arity)

    @classmethod
    def leaf(cls, m: int = 3) -> MAryTree:
        return cls(m, LEAF)

    @classmethod
    def star(cls, m: int = 3) -> MAryTree:
        return cls(m, (LEAF,) * m)

    @property
    def leaves(self) -> int:
        return leaf_count(self.root)

    @property
    def internal(self) -> int:
        return internal_count(self.root)

    @property
    def depth(self) -> int:
        return depth(self.root)

    def is_leaf(self) -> bool:
        return not self.root

    def children(self) -> list[MAryTree]:
        return [MAryTree(self.arity, c) for c in self.root]

    def subtree(self, path: str) -> MAryTree:
        return MAryTree(self.arity, node_at(self.root, path))

    def __str__(self) -> str:
        return format_node(self.root)


@dataclass(frozen=True)
class PatternOccurrence:
    """Vertex of the host tree (child-index path from the root) where a pattern is anchored."""

    path: str

    def __str__(self) -> str:
        return self.path or "e"


def _validate(node: Node, m: int) -> None:
    stack = [node]
    while stack:
        v = stack.pop()
        if not isinstance(v, tuple):
            raise TypeError(f"tree nodes must be tuples, got {type(v).__name__}")
        if v and len(v) != m:
            raise ValueError(f"internal node with {len(v)} children in a {m}-ary tree")
        stack.extend(v)


def leaf_count(node: Node) -> int:
    if not node:
        return 1
    return sum(leaf_count(c) for c in node)


def internal_count(node: Node) -> int:
    if not node:
        return 0
    return 1 + sum(internal_count(c) for c in node)


def depth(node: Node) -> int:
    if not node:
        return 0
    return 1 + max(depth(c) for c in node)


def node_at(node: Node, path: str) -> Node:
    for ch in path:
        node = node[int(ch) - 1]
    return node


def count_trees(m: int, k: int) -> int:
    """Number of strict m-ary trees with ``k`` internal vertices."""
    if m < 2 or k < 0:
        raise ValueError("need m >= 2 and k >= 0")
    return comb(m * k, k) // ((m - 1) * k + 1)


def internal_for_leaves(m: int, n: int) -> int | None:
    """Internal-vertex count of an n-leaf m-ary tree, or None if no such tree exists."""
    if n < 1 or (n - 1) % (m - 1):
        return None
    return (n - 1) // (m - 1)


def compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    """Weak compositions of ``total`` into ``parts`` parts, lexicographic order."""
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in compositions(total - first, parts - 1):
            yield (first,) + rest


@lru_cache(maxsize=None)
def _nodes(m: int, k: int) -> tuple[Node, ...]:
    if k == 0:
        return (LEAF,)
    out = []
    for comp in compositions(k - 1, m):
        out.extend(product(*(_nodes(m, c) for c in comp)))
    return tuple(out)


def enumerate_trees(m: int, n: int) -> list[MAryTree]:
    """All n-leaf strict m-ary trees in canonical order (empty if none exist)."""
    _check_arity(m)
    k = internal_for_leaves(m, n)
    if k is None:
        return []
    return [MAryTree(m, v) for v in _nodes(m, k)]


def occurs_at(node: Node, pattern: Node) -> bool:
    """True iff ``pattern`` occurs with its root anchored at ``node``."""
    if not pattern:
        return True
    if not node:
        return False
    for c, p in zip(node, pattern):
        if p and not occurs_at(c, p):
            return False
    return True


def find_occurrence(node: Node, pattern: Node, path: str = "") -> str | None:
    if occurs_at(node, pattern):
        return path
    for i, c in enumerate(node, 1):
        hit = find_occurrence(c, pattern, path + str(i))
        if hit is not None:
            return hit
    return None


def contains(T: MAryTree, t: MAryTree) -> PatternOccurrence | None:
    """First occurrence (depth-first preorder) of pattern ``t`` in ``T``."""
    if T.arity != t.arity:
        raise ArityMismatch(f"host arity {T.arity} != pattern arity {t.arity}")
    path = find_occurrence(T.root, t.root)
    return None if path is None else PatternOccurrence(path)


def reflect_node(node: Node) -> Node:
    return tuple(reflect_node(c) for c in reversed(node))


def reflect(T: MAryTree) -> MAryTree:
    return MAryTree(T.arity, reflect_node(T.root))


def avoider_table(t: MAryTree, N: int) -> list[list[Node]]:
    """Avoiders of ``t`` grouped by internal-vertex count, for all sizes up to N leaves.

    A tree avoids ``t`` iff each child subtree avoids it and ``t`` does not
    occur at the root, so avoiders are assembled from smaller avoiders.
    """
    m = t.arity
    kmax = (N - 1) // (m - 1) if N >= 1 else -1
    pat = t.root
    table: list[list[Node]] = []
    for k in range(kmax + 1):
        if k == 0:
            table.append([LEAF] if pat else [])
            continue
        level: list[Node] = []
        for comp in compositions(k - 1, m):
            pools = [table[c] for c in comp]
            if any(not p for p in pools):
                continue
            for kids in product(*pools):
                if not occurs_at(kids, pat):
                    level.append(kids)
        table.append(level)
    return table


def avoidance_counts(t: MAryTree, N: int) -> list[int]:
    """Exhaustive counts av_t(0..N)."""
    m = t.arity
    table = avoider_table(t, N)
    out = [0] * (N + 1)
    for k, level in enumerate(table):
        out[(m - 1) * k + 1] = len(level)
    return out


def avoiders(t: MAryTree, n: int) -> list[MAryTree]:
    k = internal_for_leaves(t.arity, n)
    if k is None:
        return []
    return [MAryTree(t.arity, v) for v in avoider_table(t, n)[k]]


def avoid_count(t: MAryTree, n: int) -> int:
    if n < 1:
        return 0
    return avoidance_counts(t, n)[n]


# -- parenthesized literal ---------------------------------------------------

def format_node(node: Node) -> str:
    if not node:
        return "."
    return "(" + "".join(format_node(c) for c in node) + ")"


def parse_tree(text: str, arity: int | None = None) -> MAryTree:
    """Parse ``tree := "." | "(" tree{m} ")"``; arity is inferred when not given."""
    pos = 0
    n = len(text)

    def skip():
        nonlocal pos
        while pos < n and text[pos].isspace():
            pos += 1

    def node() -> Node:
        nonlocal pos
        skip()
        if pos >= n:
            raise ParseError("unexpected end of tree literal", pos, text)
        ch = text[pos]
        if ch == ".":
            pos += 1
            return LEAF
        if ch != "(":
            raise ParseError(f"expected '.' or '(' but found {ch!r}", pos, text)
        start = pos
        pos += 1
        kids = []
        while True:
            skip()
            if pos < n and text[pos] == ")":
                pos += 1
                break
            kids.append(node())
        if len(kids) < 2:
            raise ParseError("internal node needs at least 2 children", start, text)
        return tuple(kids)

    root = node()
    skip()
    if pos != n:
        raise ParseError("trailing characters after tree literal", pos, text)
    widths = {len(v) for v in _internal_nodes(root)}
    m = arity if arity is not None else (min(widths) if widths else 3)
    if widths - {m}:
        raise ParseError(f"every internal node needs exactly {m} children", 0, text)
    return MAryTree(m, root)


def _internal_nodes(node: Node) -> Iterator[Node]:
    if node:
        yield node
        for c in node:
            yield from _internal_nodes(c)
