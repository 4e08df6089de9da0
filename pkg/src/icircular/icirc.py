"""The I-circular property: every row and every pairwise row intersection
is a circular interval under one column order."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .binmat import BinaryMatrix, contains_configuration, delete_column, delete_row
from .c1p import (
    Certificate,
    CircularOrder,
    guard_columns,
    is_arc_mask,
    permute_rows,
    circular_orders,
    has_circular_ones,
)
from .families import forb_icircular_members

ICircCertificate = Certificate


@dataclass(frozen=True)
class LambdaResult:
    matrix: BinaryMatrix
    added: tuple[tuple[tuple[int, int], int], ...]  # ((r, s), intersection row mask)


def lambda_closure(m: BinaryMatrix) -> LambdaResult:
    """Append r ∩ s for every unordered pair of nontrivial rows whose union is
    every column and whose intersection is nonempty.

    That is exactly "the complement of r is properly contained in s", a
    condition symmetric in r and s, so each pair contributes one row.
    Pairs are visited in lexicographic order (r < s); duplicates are kept.
    """
    full = m.full_mask
    rows = m.rows
    added = []
    for r in range(len(rows)):
        a = rows[r]
        if a in (0, full):
            continue
        for s in range(r + 1, len(rows)):
            b = rows[s]
            if b in (0, full):
                continue
            if a | b == full and a & b:
                added.append(((r + 1, s + 1), a & b))
    extended = BinaryMatrix(rows + tuple(x for _, x in added), m.ncols)
    return LambdaResult(extended, tuple(added))


def is_i_circular_order(m: BinaryMatrix, order) -> bool:
    """Direct check of the definition: rows and all pairwise intersections."""
    full = (1 << len(order)) - 1
    rows = permute_rows(m, order)
    if not all(is_arc_mask(x, full) for x in rows):
        return False
    return all(is_arc_mask(rows[i] & rows[j], full) for i in range(len(rows)) for j in range(i + 1, len(rows)))


def has_i_circular(m: BinaryMatrix) -> Optional[CircularOrder]:
    """Decide via the closure: I-circular iff the closure has circular ones."""
    order = has_circular_ones(lambda_closure(m).matrix)
    if order is not None and not is_i_circular_order(m, order):
        raise AssertionError(f"closure order {order} is not I-circular for\n{m}")
    return order


def brute_force_i_circular(m: BinaryMatrix) -> Optional[CircularOrder]:
    """Exhaustive over canonical circular orders, checking the definition
    directly without the closure."""
    guard_columns(m)
    for order in circular_orders(m.ncols):
        if is_i_circular_order(m, order):
            return order
    return None


def find_iforb_certificate(m: BinaryMatrix) -> Optional[ICircCertificate]:
    """First member of the I-circular forbidden set contained in ``m``.

    Members are tried by (columns, rows, lexicographic rows).  Like
    :func:`find_forb_certificate`, this never consults the decision
    procedure.
    """
    for member in forb_icircular_members(m.nrows, m.ncols):
        w = contains_configuration(m, member.matrix)
        if w is not None:
            return Certificate(member.family, member.matrix, w)
    return None


def is_minimal_forbidden_icircular(f: BinaryMatrix) -> bool:
    if has_i_circular(f) is not None:
        return False
    if any(has_i_circular(delete_row(f, i)) is None for i in range(1, f.nrows + 1)):
        return False
    return all(has_i_circular(delete_column(f, j)) is not None for j in range(1, f.ncols + 1))
