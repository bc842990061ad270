"""Leaf-preserving bijections between sets of pattern-avoiding trees.

* letter relabelling of word sets (any permutation of 1..m),
* the cut map between {1,2}-avoiders and {12}-avoiders, with its inverse,
* the map from right-edge-coloured binary trees onto {1,3}-avoiding ternary trees.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

from .errors import ArityMismatch, DomainError, ParseError
from .trees import LEAF, MAryTree, Node
from .words import WordSet, drop_prefixes, parse_wordset, word_occurrence


# -- relabelling ----------------------------------------------------------------

@dataclass(frozen=True)
class LetterPermutation:
    """A permutation b of 1..m stored as its image list b(1), ..., b(m)."""

    images: tuple[int, ...]

    def __post_init__(self):
        images = tuple(int(i) for i in self.images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ValueError(f"{images} is not a permutation of 1..{len(images)}")
        object.__setattr__(self, "images", images)

    @classmethod
    def parse(cls, text: str) -> LetterPermutation:
        try:
            return cls(tuple(int(p) for p in text.split(",")))
        except ValueError as exc:
            raise ParseError(f"bad permutation {text!r}: {exc}; expected e.g. 2,1,3", 0, text) from None

    @property
    def size(self) -> int:
        return len(self.images)

    def apply(self, word: str) -> str:
        return "".join(str(self.images[int(ch) - 1]) for ch in word)

    def inverse(self) -> LetterPermutation:
        inv = [0] * self.size
        for i, b in enumerate(self.images, 1):
            inv[b - 1] = i
        return LetterPermutation(tuple(inv))

    def __str__(self) -> str:
        return ",".join(map(str, self.images))


def relabel(W: WordSet, b: LetterPermutation) -> WordSet:
    """Replace every letter i by b(i) in every word."""
    if W.arity != b.size:
        raise ArityMismatch(f"word set of arity {W.arity} with a permutation of size {b.size}")
    return WordSet(W.arity, tuple(b.apply(w) for w in W.words))


@dataclass(frozen=True)
class NamedRelabel:
    name: str
    perm: LetterPermutation
    source: WordSet
    target: WordSet


def _named(name, images, src, dst):
    return NamedRelabel(name, LetterPermutation(images), parse_wordset(src), parse_wordset(dst))


NAMED_RELABELS = {
    r.name: r
    for r in (
        _named("t51-t52", (2, 1, 3), "{1}", "{2}"),
        _named("t73-t77", (2, 1, 3), "{11}", "{22}"),
        _named("t71-t72", (1, 3, 2), "{1,2}", "{1,3}"),
        _named("t74-t75", (1, 3, 2), "{12}", "{13}"),
        _named("t75-t76", (2, 3, 1), "{13}", "{21}"),
    )
}


# -- cut bijection ------------------------------------------------------------------

T71 = parse_wordset("{1,2}")
T74 = parse_wordset("{12}")


def _require_ternary(W: WordSet) -> None:
    if W.arity != 3:
        raise DomainError(f"the cut bijection is defined on ternary trees, got arity {W.arity}")


def _split(word: str) -> list[str]:
    out = []
    while True:
        j = word.find("12")
        if j < 0:
            out.append(word)
            return out
        i = j
        while i > 0 and word[i - 1] == "1":
            i -= 1
        # word[i..j] is the maximal run of 1s right before the first "12"
        out.append(word[: j + 1])
        word = word[:i] + word[j + 1:]


def cut_forward(W: WordSet) -> WordSet:
    """Map a {1,2}-avoider to a {12}-avoider with the same number of leaves."""
    _require_ternary(W)
    hit = word_occurrence(W, T71)
    if hit is not None:
        raise DomainError(f"input contains {{1,2}} at vertex {hit or 'e'}; cut_forward needs a {{1,2}}-avoider")
    pieces: list[str] = []
    for w in W.words:
        pieces.extend(_split(w))
    return WordSet(3, tuple(drop_prefixes(pieces)))


def cut_inverse(W: WordSet) -> WordSet:
    """Inverse of :func:`cut_forward`: re-insert a 1 before every 2 that forms a {1,2} with a sibling 1, root first."""
    _require_ternary(W)
    hit = word_occurrence(W, T74)
    if hit is not None:
        raise DomainError(f"input contains {{12}} at vertex {hit or 'e'}; cut_inverse needs a {{12}}-avoider")
    words = set(W.words)
    cap = sum(map(len, words)) + len(words) * max(map(len, words), default=0)
    inserted = 0
    d = 0
    while d < max(map(len, words), default=0):
        ones = {w[:d] for w in words if len(w) > d and w[d] == "1"}
        twos = {w[:d] for w in words if len(w) > d and w[d] == "2"}
        anchors = ones & twos
        if anchors:
            moved = set()
            for w in words:
                if len(w) > d and w[d] == "2" and w[:d] in anchors:
                    moved.add(w[:d] + "1" + w[d:])
                    inserted += 1
                else:
                    moved.add(w)
            words = moved
            if inserted > cap:
                raise RuntimeError(f"cut_inverse exceeded its insertion cap of {cap}")
        d += 1
    return WordSet(3, tuple(drop_prefixes(words)))


# -- coloured binary trees --------------------------------------------------------

SOLID, DASHED = "s", "d"


@dataclass(frozen=True)
class BinaryNode:
    left: Optional[BinaryNode] = None
    right: Optional[BinaryNode] = None
    color: Optional[str] = None

    def __post_init__(self):
        if (self.right is None) != (self.color is None):
            raise ValueError("a right child needs a colour and only a right child may have one")
        if self.color not in (None, SOLID, DASHED):
            raise ValueError(f"colour must be 's' or 'd', got {self.color!r}")

    def size(self) -> int:
        return 1 + sum(c.size() for c in (self.left, self.right) if c is not None)

    def __str__(self) -> str:
        left = "." if self.left is None else str(self.left)
        right = "." if self.right is None else f"{self.color}:{self.right}"
        return f"({left} {right})"


@dataclass(frozen=True)
class ColoredBinaryTree:
    """Binary tree (0, 1 or 2 children per vertex) whose right edges are solid or dashed."""

    root: Optional[BinaryNode] = None

    @property
    def size(self) -> int:
        return 0 if self.root is None else self.root.size()

    def __str__(self) -> str:
        return "." if self.root is None else str(self.root)


@lru_cache(maxsize=None)
def _colored_nodes(n: int) -> tuple[Optional[BinaryNode], ...]:
    if n == 0:
        return (None,)
    out = []
    for k in range(n):
        for left in _colored_nodes(k):
            for right in _colored_nodes(n - 1 - k):
                if right is None:
                    out.append(BinaryNode(left))
                else:
                    out.append(BinaryNode(left, right, SOLID))
                    out.append(BinaryNode(left, right, DASHED))
    return tuple(out)


def enumerate_colored(n: int) -> list[ColoredBinaryTree]:
    """All coloured binary trees with ``n`` vertices."""
    return [ColoredBinaryTree(r) for r in _colored_nodes(n)]


def _to_ternary(v: Optional[BinaryNode]) -> Node:
    if v is None:
        return LEAF
    kids = [LEAF, _to_ternary(v.left), LEAF]
    if v.right is not None:
        kids[0 if v.color == SOLID else 2] = _to_ternary(v.right)
    return tuple(kids)


def schroder_to_ternary(B: ColoredBinaryTree) -> MAryTree:
    """Left child -> centre, solid right -> left, dashed right -> right, then pad with leaves."""
    return MAryTree(3, _to_ternary(B.root))


def _from_ternary(node: Node, path: str) -> Optional[BinaryNode]:
    if not node:
        return None
    first, centre, last = node
    if first and last:
        raise DomainError(f"vertex {path or 'e'} has internal left and right children (contains {{1,3}})")
    left = _from_ternary(centre, path + "2")
    if first:
        return BinaryNode(left, _from_ternary(first, path + "1"), SOLID)
    if last:
        return BinaryNode(left, _from_ternary(last, path + "3"), DASHED)
    return BinaryNode(left)


def ternary_to_schroder(T: MAryTree) -> ColoredBinaryTree:
    if T.arity != 3:
        raise DomainError(f"expected a ternary tree, got arity {T.arity}")
    return ColoredBinaryTree(_from_ternary(T.root, ""))


def parse_colored(text: str) -> ColoredBinaryTree:
    """Parse ``node := "(" left right ")"`` with ``right := "." | "s:" node | "d:" node``; "." is the empty tree."""
    pos = 0
    n = len(text)

    def skip():
        nonlocal pos
        while pos < n and text[pos].isspace():
            pos += 1

    def expect(ch):
        nonlocal pos
        skip()
        if pos >= n or text[pos] != ch:
            found = "end of input" if pos >= n else repr(text[pos])
            raise ParseError(f"expected {ch!r} but found {found}", pos, text)
        pos += 1

    def node() -> BinaryNode:
        nonlocal pos
        expect("(")
        skip()
        if pos < n and text[pos] == ".":
            pos += 1
            left = None
        else:
            left = node()
        skip()
        if pos < n and text[pos] == ".":
            pos += 1
            right, color = None, None
        elif pos < n and text[pos] in (SOLID, DASHED):
            color = text[pos]
            pos += 1
            expect(":")
            right = node()
        else:
            raise ParseError("expected '.', 's:' or 'd:' for the right child", pos, text)
        expect(")")
        return BinaryNode(left, right, color)

    skip()
    if pos < n and text[pos] == ".":
        pos += 1
        root = None
    else:
        root = node()
    skip()
    if pos != n:
        raise ParseError("trailing characters after coloured binary tree", pos, text)
    return ColoredBinaryTree(root)
