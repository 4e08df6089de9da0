"""Words over vertex alphabets and the graphs they represent."""

from __future__ import annotations

from itertools import combinations
from typing import Optional, Sequence

from .errors import DomainError
from .graphs import Graph

Word = tuple[int, ...]


def as_word(w, n: Optional[int] = None) -> Word:
    """Accept a sequence of ints, or a string of digits 1-9 or letters a-z
    (a = 1)."""
    if isinstance(w, str):
        w = w.replace(" ", "")
        letters = [ord(ch) - ord("a") + 1 if ch.isalpha() else int(ch) for ch in w.lower()]
    else:
        letters = [int(x) for x in w]
    if not letters:
        raise DomainError("word must be nonempty")
    for x in letters:
        if x < 1 or (n is not None and x > n):
            raise DomainError(f"letter {x} is outside the alphabet")
    return tuple(letters)


def alternates(w: Sequence[int], x: int, y: int) -> bool:
    if x == y:
        raise DomainError("alternation needs two distinct letters")
    restricted = [c for c in as_word(w) if c == x or c == y]
    if x not in restricted or y not in restricted:
        raise DomainError(f"letters {x} and {y} must both occur in the word")
    return all(restricted[i] != restricted[i + 1] for i in range(len(restricted) - 1))


def graph_from_word(w: Sequence[int], n: int) -> Graph:
    w = as_word(w, n)
    missing = set(range(1, n + 1)) - set(w)
    if missing:
        raise DomainError(f"vertices {sorted(missing)} do not occur in the word")
    return Graph.from_edges(n, [(x, y) for x, y in combinations(range(1, n + 1), 2) if alternates(w, x, y)])


def word_represents(w: Sequence[int], g: Graph) -> bool:
    return graph_from_word(w, g.n) == g


def find_representing_word(g: Graph, max_length: Optional[int] = None) -> Optional[Word]:
    """Bounded search for a word representing ``g``, by increasing length.

    Only uniform words (every letter k times) are tried; every
    word-representable graph has one.  Adjacent pairs must keep
    alternating and are checked on every prefix, which prunes most of
    the search.  Lengths stop at ``max_length`` (default 3n).
    """
    n = g.n
    cap = 3 * n if max_length is None else max_length
    adj = g.neighbors()
    for k in range(1, cap // max(n, 1) + 1):
        word: list[int] = []
        count = [0] * (n + 1)

        def extend() -> Optional[Word]:
            if len(word) == k * n:
                cand = tuple(word)
                return cand if word_represents(cand, g) else None
            for x in range(1, n + 1):
                if count[x] == k:
                    continue
                if not _can_append(x, count, word, adj):
                    continue
                word.append(x)
                count[x] += 1
                got = extend()
                word.pop()
                count[x] -= 1
                if got:
                    return got
            return None

        got = extend()
        if got:
            return got
    return None


def _can_append(x: int, count: list[int], word: list[int], adj) -> bool:
    """Appending x must not make x repeat before an adjacent letter that has
    already started appears between the two copies of x."""
    if count[x] == 0:
        return True
    for y in adj[x]:
        # Adjacent letters alternate, so after x's last copy y must appear
        # before x again, unless y has not started yet (it would then start
        # later than x and be out of step).
        if count[y] == 0:
            return False
        if _last_index(word, y) < _last_index(word, x):
            return False
    return True


def _last_index(word: list[int], x: int) -> int:
    for i in range(len(word) - 1, -1, -1):
        if word[i] == x:
            return i
    return -1
