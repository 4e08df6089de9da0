"""Consecutive-ones and circular-ones recognition.

Orders are tuples of 1-based column indices.  A circular order is
reported in canonical form: rotated so column 1 comes first, and
reflected so that the second entry is the smaller neighbour of column 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from typing import Iterable, Optional, Sequence

from .binmat import BinaryMatrix, ConfigurationWitness, contains_configuration, delete_column, delete_row
from .errors import GuardError
from .families import FamilyId, forb_circular_members
from .pqtree import PQTree

BRUTE_FORCE_MAX_COLS = 9

LinearOrder = tuple[int, ...]
CircularOrder = tuple[int, ...]


@dataclass(frozen=True)
class Certificate:
    """A forbidden member found inside a matrix: ``submatrix(M, witness) == forbidden``."""

    family: FamilyId
    forbidden: BinaryMatrix
    witness: ConfigurationWitness

    def to_json(self) -> dict:
        out = self.family.to_json()
        out["rowMap"] = list(self.witness.row_map)
        out["colMap"] = list(self.witness.col_map)
        return out


def canonical_circular(order: Sequence[int]) -> CircularOrder:
    order = tuple(order)
    n = len(order)
    if n <= 2:
        return tuple(sorted(order))
    start = order.index(min(order))
    rot = order[start:] + order[:start]
    if rot[-1] < rot[1]:
        rot = rot[:1] + rot[1:][::-1]
    return rot


def is_circular_interval(cols: Iterable[int], order: Sequence[int]) -> bool:
    """True iff ``cols`` is empty or one contiguous arc of the cyclic ``order``."""
    s = set(cols)
    if not s:
        return True
    n = len(order)
    # An arc has exactly one place where membership switches on, unless it is everything.
    starts = sum(1 for i in range(n) if order[i] in s and order[i - 1] not in s)
    return starts <= 1


def is_consecutive(cols: Iterable[int], order: Sequence[int]) -> bool:
    s = set(cols)
    pos = [i for i, c in enumerate(order) if c in s]
    return not pos or pos[-1] - pos[0] + 1 == len(pos)


def permute_rows(m: BinaryMatrix, order: Sequence[int]) -> list[int]:
    """Rows re-encoded so bit ``p`` is the entry in column ``order[p]``."""
    out = []
    for r in m.rows:
        out.append(sum(1 << p for p, c in enumerate(order) if r >> (c - 1) & 1))
    return out


def is_run(x: int) -> bool:
    if x == 0:
        return True
    x >>= (x & -x).bit_length() - 1
    return x & (x + 1) == 0


def is_arc_mask(x: int, full: int) -> bool:
    return is_run(x) or is_run(full ^ x)


def is_circular_ones_order(m: BinaryMatrix, order: Sequence[int]) -> bool:
    full = m.full_mask
    return all(is_arc_mask(x, full) for x in permute_rows(m, order))


def is_consecutive_ones_order(m: BinaryMatrix, order: Sequence[int]) -> bool:
    return all(is_run(x) for x in permute_rows(m, order))


def has_consecutive_ones(m: BinaryMatrix) -> Optional[LinearOrder]:
    """A column order making every row's ones contiguous, via a PQ-tree."""
    tree = PQTree(range(1, m.ncols + 1))
    for i in range(1, m.nrows + 1):
        if not tree.reduce(m.row_set(i)):
            return None
    return tuple(tree.frontier())


def guard_columns(m: BinaryMatrix):
    if m.ncols > BRUTE_FORCE_MAX_COLS:
        raise GuardError(f"{m.ncols} columns exceeds the brute-force guard of {BRUTE_FORCE_MAX_COLS}")


def _order_search(m: BinaryMatrix, circular: bool) -> Optional[tuple[int, ...]]:
    """Exhaustive depth-first search over column orders, lexicographically.

    All rows are tracked at once as bitmasks over rows.  A row may switch
    on (0 then 1) at most once along the order, counted cyclically in the
    circular case; a prefix that already forces a second switch-on is
    abandoned.  Circular orders are enumerated in canonical form only.
    """
    guard_columns(m)
    n = m.ncols
    if n == 0:
        return ()
    cols = [m.column_mask(c) for c in range(1, n + 1)]
    order: list[int] = []
    used = [False] * n

    def extend(seen: int) -> Optional[tuple[int, ...]]:
        if len(order) == n:
            if circular:
                if n > 2 and order[1] > order[-1]:
                    return None
                if cols[order[0]] & ~cols[order[-1]] & seen:
                    return None
            return tuple(c + 1 for c in order)
        for c in range(n) if order or not circular else (0,):
            if used[c]:
                continue
            if order:
                st = cols[c] & ~cols[order[-1]]
            else:
                st = 0 if circular else cols[c]
            if st & seen:
                continue
            used[c] = True
            order.append(c)
            got = extend(seen | st)
            order.pop()
            used[c] = False
            if got is not None:
                return got
        return None

    return extend(0)


def brute_force_consecutive_ones(m: BinaryMatrix) -> Optional[LinearOrder]:
    return _order_search(m, circular=False)


def circular_orders(n: int) -> Iterable[CircularOrder]:
    """All canonical circular orders of ``1..n``, lexicographically."""
    if n <= 2:
        yield tuple(range(1, n + 1))
        return
    for rest in permutations(range(2, n + 1)):
        if rest[0] < rest[-1]:
            yield (1,) + rest


def brute_force_circular_ones(m: BinaryMatrix) -> Optional[CircularOrder]:
    """Exhaustive search over the (l-1)!/2 canonical circular orders."""
    return _order_search(m, circular=True)


def circular_ones_via_reduction(m: BinaryMatrix, column: int = 1) -> Optional[CircularOrder]:
    """Tucker's reduction: complement the rows with a 1 in ``column``, then test
    consecutive ones.  Any consecutive-ones order of the result, read
    cyclically, is a circular-ones order of ``m``."""
    if m.ncols == 0:
        return ()
    bit = 1 << (column - 1)
    full = m.full_mask
    flipped = BinaryMatrix(tuple(r ^ full if r & bit else r for r in m.rows), m.ncols)
    order = has_consecutive_ones(flipped)
    return None if order is None else canonical_circular(order)


def has_circular_ones(m: BinaryMatrix) -> Optional[CircularOrder]:
    order = circular_ones_via_reduction(m, 1)
    if order is not None and not is_circular_ones_order(m, order):
        raise AssertionError(f"reduction returned a non-circular order {order} for\n{m}")
    return order


def find_forb_certificate(m: BinaryMatrix) -> Optional[Certificate]:
    """Search the circular-ones forbidden set for a member contained in ``m``.

    Members are tried by ascending (columns, rows); the first hit wins.  The
    search is independent of :func:`has_circular_ones`, so agreement of the
    two is a genuine check rather than a tautology.
    """
    for member in forb_circular_members(m.nrows, m.ncols):
        w = contains_configuration(m, member.matrix)
        if w is not None:
            return Certificate(member.family, member.matrix, w)
    return None


def is_minimal_forbidden_circular(f: BinaryMatrix) -> bool:
    """``f`` lacks circular ones but every row or column deletion has it."""
    if has_circular_ones(f) is not None:
        return False
    if any(has_circular_ones(delete_row(f, i)) is None for i in range(1, f.nrows + 1)):
        return False
    return all(has_circular_ones(delete_column(f, j)) is not None for j in range(1, f.ncols + 1))
