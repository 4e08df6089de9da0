"""Binary matrices with rows stored as column bitmasks.

Row ``i`` (1-based) is an int whose bit ``j - 1`` is the entry in column
``j``; this makes "rows as sets of columns" the native representation.
Matrices are immutable.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .errors import DomainError
from .seqcore import SeqLike, as_binary, check_index_map


@dataclass(frozen=True)
class BinaryMatrix:
    rows: tuple[int, ...]
    ncols: int

    def __post_init__(self):
        if self.ncols < 0:
            raise DomainError("negative column count")
        full = (1 << self.ncols) - 1
        for r in self.rows:
            if r & ~full:
                raise DomainError(f"row {r:b} has bits beyond column {self.ncols}")

    @classmethod
    def from_strings(cls, lines: Sequence[str]) -> "BinaryMatrix":
        if not lines:
            raise DomainError("matrix needs at least one row")
        width = len(lines[0])
        rows = []
        for n, line in enumerate(lines, 1):
            if len(line) != width:
                raise DomainError(f"row {n} has length {len(line)}, expected {width}")
            if set(line) - {"0", "1"}:
                raise DomainError(f"row {n} contains characters other than 0/1: {line!r}")
            rows.append(sum(1 << j for j, ch in enumerate(line) if ch == "1"))
        return cls(tuple(rows), width)

    @classmethod
    def from_lists(cls, grid: Sequence[Sequence[int]]) -> "BinaryMatrix":
        return cls.from_strings(["".join(str(int(x)) for x in row) for row in grid])

    @classmethod
    def from_sets(cls, sets: Iterable[Iterable[int]], ncols: int) -> "BinaryMatrix":
        """Build from rows given as sets of 1-based columns."""
        return cls(tuple(sum(1 << (j - 1) for j in set(s)) for s in sets), ncols)

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def shape(self) -> tuple[int, int]:
        return (len(self.rows), self.ncols)

    @property
    def full_mask(self) -> int:
        return (1 << self.ncols) - 1

    def entry(self, i: int, j: int) -> int:
        return (self.rows[i - 1] >> (j - 1)) & 1

    def row_set(self, i: int) -> frozenset[int]:
        r = self.rows[i - 1]
        return frozenset(j + 1 for j in range(self.ncols) if r >> j & 1)

    def column_mask(self, j: int) -> int:
        """Bitmask over rows (bit ``i - 1`` for row ``i``) of the ones in column ``j``."""
        b = j - 1
        return sum(1 << i for i, r in enumerate(self.rows) if r >> b & 1)

    def row_string(self, i: int) -> str:
        r = self.rows[i - 1]
        return "".join("1" if r >> j & 1 else "0" for j in range(self.ncols))

    def to_strings(self) -> list[str]:
        return [self.row_string(i) for i in range(1, self.nrows + 1)]

    def to_lists(self) -> list[list[int]]:
        return [[int(ch) for ch in s] for s in self.to_strings()]

    def is_trivial_row(self, i: int) -> bool:
        return self.rows[i - 1] in (0, self.full_mask)

    def sort_key(self) -> tuple:
        """Key for the "lexicographically smallest matrix" tie-break."""
        return (self.ncols, self.nrows, tuple(self.to_strings()))

    def __str__(self) -> str:
        return "\n".join(self.to_strings())


def complement_matrix(m: BinaryMatrix) -> BinaryMatrix:
    full = m.full_mask
    return BinaryMatrix(tuple(r ^ full for r in m.rows), m.ncols)


def mask_complement(a: SeqLike, m: BinaryMatrix) -> BinaryMatrix:
    """Complement the rows ``i`` with ``a_i = 1`` (the masked product a ⊙ M)."""
    bits = as_binary(a)
    if len(bits) != m.nrows:
        raise DomainError(f"mask of length {len(bits)} for a matrix with {m.nrows} rows")
    full = m.full_mask
    return BinaryMatrix(tuple(r ^ full if b else r for r, b in zip(m.rows, bits)), m.ncols)


def submatrix(m: BinaryMatrix, rho: Sequence[int], sigma: Sequence[int]) -> BinaryMatrix:
    """M_{rho, sigma}: entry (i, j) is entry (rho(i), sigma(j)) of ``m``."""
    rho = check_index_map(rho, m.nrows)
    sigma = check_index_map(sigma, m.ncols)
    rows = []
    for r in rho:
        src = m.rows[r - 1]
        rows.append(sum(1 << j for j, c in enumerate(sigma) if src >> (c - 1) & 1))
    return BinaryMatrix(tuple(rows), len(sigma))


def star(m: BinaryMatrix) -> BinaryMatrix:
    """Append one all-zero column."""
    return BinaryMatrix(m.rows, m.ncols + 1)


def delete_row(m: BinaryMatrix, i: int) -> BinaryMatrix:
    return BinaryMatrix(m.rows[: i - 1] + m.rows[i:], m.ncols)


def delete_column(m: BinaryMatrix, j: int) -> BinaryMatrix:
    keep = [c for c in range(1, m.ncols + 1) if c != j]
    return submatrix(m, range(1, m.nrows + 1), keep)


def stack(*blocks: BinaryMatrix) -> BinaryMatrix:
    """Concatenate row blocks sharing a column count."""
    widths = {b.ncols for b in blocks}
    if len(widths) != 1:
        raise DomainError(f"cannot stack blocks of widths {sorted(widths)}")
    return BinaryMatrix(tuple(r for b in blocks for r in b.rows), widths.pop())


@dataclass(frozen=True)
class ConfigurationWitness:
    row_map: tuple[int, ...]
    col_map: tuple[int, ...]


def _match_rows(cands: list[int], nrows: int) -> Optional[list[int]]:
    """Assign each pattern row a distinct host row from its candidate mask.

    Kuhn's augmenting paths; candidates are tried in ascending order so
    the result is deterministic.
    """
    owner = [-1] * nrows
    choice = [-1] * len(cands)

    def augment(i: int, seen: list[bool]) -> bool:
        c = cands[i]
        while c:
            low = c & -c
            r = low.bit_length() - 1
            c ^= low
            if seen[r]:
                continue
            seen[r] = True
            if owner[r] < 0 or augment(owner[r], seen):
                owner[r] = i
                choice[i] = r
                return True
        return False

    for i in range(len(cands)):
        if not augment(i, [False] * nrows):
            return None
    return choice


def contains_configuration(m: BinaryMatrix, f: BinaryMatrix) -> Optional[ConfigurationWitness]:
    """Find row/column maps with ``submatrix(m, rho, sigma) == f``.

    Complete backtracking over column assignments; for each pattern row a
    bitmask of still-compatible host rows is narrowed as columns are fixed,
    and a bipartite matching closes the search once all columns are placed.
    Returns ``None`` when ``m`` does not contain ``f`` as a configuration.
    """
    k, l = m.shape
    kf, lf = f.shape
    if kf > k or lf > l:
        return None
    if lf == 0:
        # Only rows matter; any kf distinct rows work.
        return ConfigurationWitness(tuple(range(1, kf + 1)), ())

    all_rows = (1 << k) - 1
    host_cols = [m.column_mask(c) for c in range(1, l + 1)]
    host_sums = [bin(x).count("1") for x in host_cols]
    pat_bits = [[(r >> j) & 1 for r in f.rows] for j in range(lf)]
    pat_sums = [sum(col) for col in pat_bits]

    # Row-sum filter: a host row needs at least as many ones and zeros.
    cands0 = []
    for r in f.rows:
        ones = bin(r).count("1")
        zeros = lf - ones
        mask = 0
        for i, h in enumerate(m.rows):
            hones = bin(h).count("1")
            if hones >= ones and l - hones >= zeros:
                mask |= 1 << i
        if not mask:
            return None
        cands0.append(mask)

    # Column-sum filter per pattern column.
    col_ok = [
        [c for c in range(l) if host_sums[c] >= pat_sums[j] and (k - host_sums[c]) >= (kf - pat_sums[j])]
        for j in range(lf)
    ]
    if any(not opts for opts in col_ok):
        return None

    sigma: list[int] = []
    used = [False] * l

    def search(j: int, cands: list[int]) -> Optional[list[int]]:
        if j == lf:
            return _match_rows(cands, k)
        bits = pat_bits[j]
        for c in col_ok[j]:
            if used[c]:
                continue
            hc = host_cols[c]
            new = []
            for cand, b in zip(cands, bits):
                nc = cand & (hc if b else all_rows & ~hc)
                if not nc:
                    break
                new.append(nc)
            else:
                used[c] = True
                sigma.append(c)
                got = search(j + 1, new)
                if got is not None:
                    return got
                sigma.pop()
                used[c] = False
        return None

    rows = search(0, cands0)
    if rows is None:
        return None
    return ConfigurationWitness(tuple(r + 1 for r in rows), tuple(c + 1 for c in sigma))


def same_configuration(m: BinaryMatrix, n: BinaryMatrix) -> bool:
    """Equal up to independent row and column permutations."""
    if m.shape != n.shape:
        return False
    if sorted(bin(r).count("1") for r in m.rows) != sorted(bin(r).count("1") for r in n.rows):
        return False
    return contains_configuration(m, n) is not None
