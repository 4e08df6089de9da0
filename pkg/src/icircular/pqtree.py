"""PQ-trees for the consecutive-ones property.

A straightforward, not linear-time, take on Booth and Lueker's reduction:
each ``reduce`` call recounts pertinent leaves, locates the pertinent
root, and rebuilds the pertinent subtree bottom-up with the usual
templates (P2-P6, Q2-Q3).  Good enough for matrices with a few dozen
columns, which is all this package ever feeds it.
"""

from __future__ import annotations

from typing import Hashable, Iterable, Optional

_EMPTY, _FULL, _PARTIAL = 0, 1, 2


class _Node:
    __slots__ = ("kind", "children", "leaf")

    def __init__(self, kind: str, children: Optional[list] = None, leaf: Hashable = None):
        self.kind = kind  # "L", "P" or "Q"
        self.children = children or []
        self.leaf = leaf

    def __repr__(self):
        if self.kind == "L":
            return repr(self.leaf)
        inner = " ".join(map(repr, self.children))
        return f"({inner})" if self.kind == "P" else f"[{inner}]"


class _Fail(Exception):
    pass


def _wrap_p(nodes: list) -> _Node:
    return nodes[0] if len(nodes) == 1 else _Node("P", list(nodes))


def _make_q(seq: list) -> _Node:
    # A two-child Q-node carries no more constraint than a P-node.
    return _Node("P", seq) if len(seq) == 2 else _Node("Q", seq)


class PQTree:
    """Set of permutations of ``leaves`` consistent with all reduced sets."""

    def __init__(self, leaves: Iterable[Hashable]):
        self.leaves = list(leaves)
        if len(set(self.leaves)) != len(self.leaves):
            raise ValueError("duplicate leaves")
        nodes = [_Node("L", leaf=x) for x in self.leaves]
        self.root: Optional[_Node] = None
        if len(nodes) == 1:
            self.root = nodes[0]
        elif nodes:
            self.root = _Node("P", nodes)

    def __repr__(self):
        return f"PQTree({self.root!r})"

    def frontier(self) -> list:
        out = []

        def walk(node):
            if node.kind == "L":
                out.append(node.leaf)
            else:
                for c in node.children:
                    walk(c)

        if self.root is not None:
            walk(self.root)
        return out

    def reduce(self, subset: Iterable[Hashable]) -> bool:
        """Restrict to orders where ``subset`` is consecutive.

        Returns False (and leaves the tree unchanged) when impossible.
        """
        s = frozenset(subset)
        unknown = s - set(self.leaves)
        if unknown:
            raise ValueError(f"unknown leaves {sorted(map(repr, unknown))}")
        if len(s) <= 1 or len(s) == len(self.leaves):
            return True
        self._count: dict[int, tuple[int, int]] = {}
        self._tally(self.root, s)

        # Descend to the deepest node whose subtree holds all of s.
        parent, index, node = None, -1, self.root
        while True:
            nxt = None
            for i, c in enumerate(node.children):
                if self._count[id(c)][0] == len(s):
                    nxt = i
                    break
            if nxt is None:
                break
            parent, index, node = node, nxt, node.children[nxt]
        try:
            replacement = self._reduce_root(node)
        except _Fail:
            return False
        if parent is None:
            self.root = replacement
        else:
            parent.children[index] = replacement
        return True

    def _tally(self, node: _Node, s: frozenset) -> tuple[int, int]:
        if node.kind == "L":
            res = (1 if node.leaf in s else 0, 1)
        else:
            hit = size = 0
            for c in node.children:
                h, z = self._tally(c, s)
                hit += h
                size += z
            res = (hit, size)
        self._count[id(node)] = res
        return res

    def _label(self, node: _Node) -> int:
        hit, size = self._count[id(node)]
        if hit == 0:
            return _EMPTY
        return _FULL if hit == size else _PARTIAL

    def _split(self, node: _Node):
        groups = {_EMPTY: [], _FULL: [], _PARTIAL: []}
        for c in node.children:
            groups[self._label(c)].append(c)
        return groups[_EMPTY], groups[_FULL], groups[_PARTIAL]

    def _partial(self, node: _Node) -> list:
        """Arrange a partial non-root node as a sequence: empties, then fulls."""
        if node.kind == "P":
            empty, full, partial = self._split(node)
            if len(partial) > 1:
                raise _Fail
            seq = []
            if empty:
                seq.append(_wrap_p(empty))
            if partial:
                seq.extend(self._partial(partial[0]))
            if full:
                seq.append(_wrap_p(full))
            return seq
        labels = [self._label(c) for c in node.children]
        for kids, labs in ((node.children, labels), (node.children[::-1], labels[::-1])):
            if self._is_singly_partial(labs):
                seq = []
                for c, lab in zip(kids, labs):
                    if lab == _PARTIAL:
                        seq.extend(self._partial(c))
                    else:
                        seq.append(c)
                return seq
        raise _Fail

    @staticmethod
    def _is_singly_partial(labels: list) -> bool:
        # empties*, at most one partial, fulls*
        i, n = 0, len(labels)
        while i < n and labels[i] == _EMPTY:
            i += 1
        if i < n and labels[i] == _PARTIAL:
            i += 1
        while i < n and labels[i] == _FULL:
            i += 1
        return i == n

    def _reduce_root(self, node: _Node) -> _Node:
        if node.kind == "P":
            empty, full, partial = self._split(node)
            if len(partial) > 2:
                raise _Fail
            if not partial:
                return _Node("P", empty + [_wrap_p(full)]) if empty else node
            seq = list(self._partial(partial[0]))
            if full:
                seq.append(_wrap_p(full))
            if len(partial) == 2:
                seq.extend(reversed(self._partial(partial[1])))
            q = _make_q(seq)
            return _Node("P", empty + [q]) if empty else q

        labels = [self._label(c) for c in node.children]
        marked = [i for i, lab in enumerate(labels) if lab != _EMPTY]
        lo, hi = marked[0], marked[-1]
        if hi - lo + 1 != len(marked):
            raise _Fail
        for i in range(lo + 1, hi):
            if labels[i] != _FULL:
                raise _Fail
        seq = []
        for i, c in enumerate(node.children):
            if labels[i] != _PARTIAL:
                seq.append(c)
            elif i == lo:
                seq.extend(self._partial(c))
            else:
                seq.extend(reversed(self._partial(c)))
        return _make_q(seq)
