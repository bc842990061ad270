"""Word notation: a tree as the set of child-index paths to its m-leaf parents.

Children are labelled 1..m left to right. The single leaf is ``{}`` and the
m-leaf star is ``{e}`` (the set holding only the empty word).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable

from .errors import ArityMismatch, MalformedWordSet, ParseError
from .trees import LEAF, MAryTree, Node, MAX_ARITY, MIN_ARITY


def is_prefix_free(words: Iterable[str]) -> bool:
    ws = sorted(set(words))
    # in sorted order a prefix sorts immediately before some extension of it
    return not any(b.startswith(a) for a, b in zip(ws, ws[1:]))


def drop_prefixes(words: Iterable[str]) -> set[str]:
    """Remove every word that is a proper prefix of another word."""
    ws = sorted(set(words))
    return {a for a, b in zip(ws, ws[1:] + [None]) if b is None or not b.startswith(a)}


@dataclass(frozen=True)
class WordSet:
    arity: int
    words: tuple[str, ...] = ()

    def __post_init__(self):
        if not MIN_ARITY <= self.arity <= MAX_ARITY:
            raise ValueError(f"arity must be in {MIN_ARITY}..{MAX_ARITY}, got {self.arity}")
        words = tuple(sorted(set(self.words)))
        letters = {str(i) for i in range(1, self.arity + 1)}
        for w in words:
            bad = set(w) - letters
            if bad:
                raise MalformedWordSet(
                    f"word {w!r} uses letter(s) {''.join(sorted(bad))} outside 1..{self.arity}")
        if not is_prefix_free(words):
            ws = list(words)
            a, b = next((a, b) for a, b in zip(ws, ws[1:]) if b.startswith(a))
            raise MalformedWordSet(f"word {a or 'e'!r} is a prefix of {b!r}")
        object.__setattr__(self, "words", words)

    @classmethod
    def from_tree(cls, T: MAryTree) -> WordSet:
        return tree_to_wordset(T)

    def to_tree(self) -> MAryTree:
        return wordset_to_tree(self)

    def internal_paths(self) -> set[str]:
        """Paths of all internal vertices: every prefix of every word."""
        return {w[:i] for w in self.words for i in range(len(w) + 1)}

    @property
    def leaves(self) -> int:
        return (self.arity - 1) * len(self.internal_paths()) + 1

    def __len__(self) -> int:
        return len(self.words)

    def __iter__(self):
        return iter(self.words)

    def __str__(self) -> str:
        return "{" + ",".join(w or "e" for w in self.words) + "}"


def tree_to_wordset(T: MAryTree) -> WordSet:
    m = T.arity
    words: list[str] = []

    def walk(node: Node, path: str) -> None:
        if not node:
            return
        if not any(node):
            words.append(path)
            return
        for i, c in enumerate(node, 1):
            walk(c, path + str(i))

    walk(T.root, "")
    return WordSet(m, tuple(words))


def _build(paths: set[str], m: int, path: str) -> Node:
    if path not in paths:
        return LEAF
    return tuple(_build(paths, m, path + str(i)) for i in range(1, m + 1))


def wordset_to_tree(W: WordSet) -> MAryTree:
    return MAryTree(W.arity, _build(W.internal_paths(), W.arity, ""))


def word_occurrence(T: WordSet, t: WordSet) -> str | None:
    """First anchor p (shortest, then lexicographic) where every pattern word L has a host word starting p+L."""
    if T.arity != t.arity:
        raise ArityMismatch(f"host arity {T.arity} != pattern arity {t.arity}")
    if not t.words:
        return ""
    for p in sorted(T.internal_paths(), key=lambda s: (len(s), s)):
        if all(any(w.startswith(p + L) for w in T.words) for L in t.words):
            return p
    return None


def word_contains(T: WordSet, t: WordSet) -> bool:
    return word_occurrence(T, t) is not None


def lift_arity(W: WordSet, M: int) -> WordSet:
    if M < W.arity:
        raise ValueError(f"cannot lift arity {W.arity} down to {M}")
    return WordSet(M, W.words)


_ITEM = re.compile(r"\s*(e|[0-9]+)\s*")


def parse_wordset(text: str, arity: int = 3) -> WordSet:
    """Parse ``{21,23,321}``, ``{e}`` or ``{}``."""
    s = text.strip()
    lead = len(text) - len(text.lstrip())
    if not s.startswith("{"):
        raise ParseError("word-set literal must start with '{'", lead, text)
    if not s.endswith("}"):
        raise ParseError("word-set literal must end with '}'", lead + len(s) - 1, text)
    body = s[1:-1]
    words: list[str] = []
    starts: list[int] = []
    if body.strip():
        offset = lead + 1
        for item in body.split(","):
            mt = _ITEM.fullmatch(item)
            if mt is None:
                raise ParseError(f"bad word {item.strip()!r}; expected 'e' or digits 1..{arity}",
                                 offset, text)
            w = mt.group(1)
            if w != "e":
                for j, ch in enumerate(w):
                    if not "1" <= ch <= str(arity):
                        raise MalformedWordSet(
                            f"letter {ch!r} outside 1..{arity}", offset + mt.start(1) + j, text)
            word = "" if w == "e" else w
            if word in words:
                raise MalformedWordSet(f"duplicate word {w!r}", offset + mt.start(1), text)
            words.append(word)
            starts.append(offset + mt.start(1))
            offset += len(item) + 1
    for a, b in ((a, b) for a in range(len(words)) for b in range(len(words)) if a != b):
        if words[b].startswith(words[a]):
            raise MalformedWordSet(f"word {words[a] or 'e'!r} is a prefix of {words[b]!r}", starts[b], text)
    return WordSet(arity, tuple(words))
