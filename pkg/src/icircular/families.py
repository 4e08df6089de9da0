"""Generators for the named matrix families.

Tucker-type matrices, the forbidden sets for the circular-ones and
I-circular properties, and the auxiliary block matrices Q/R, U/W, H, G
used by the case analysis of the characterization.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal, Optional

from .binmat import BinaryMatrix, mask_complement, star, stack
from .errors import DomainError
from .seqcore import SeqLike, as_binary, as_seq, enumerate_bracelets, mod_index, seq_str

Variant = Literal["literal", "figure"]


def _row(ones, ncols: int) -> int:
    return sum(1 << (j - 1) for j in ones)


def gen_MI(k: int) -> BinaryMatrix:
    if k < 3:
        raise DomainError(f"M_I(k) needs k >= 3, got {k}")
    rows = [_row((i, i + 1), k) for i in range(1, k)] + [_row((1, k), k)]
    return BinaryMatrix(tuple(rows), k)


def gen_MIstar(k: int) -> BinaryMatrix:
    return star(gen_MI(k))


def gen_MII(k: int) -> BinaryMatrix:
    if k < 4:
        raise DomainError(f"M_II(k) needs k >= 4, got {k}")
    rows = [_row((i, i + 1), k) for i in range(1, k - 1)]
    rows.append(_row(list(range(1, k - 1)) + [k], k))
    rows.append(_row(range(2, k + 1), k))
    return BinaryMatrix(tuple(rows), k)


def gen_MIII(k: int) -> BinaryMatrix:
    if k < 3:
        raise DomainError(f"M_III(k) needs k >= 3, got {k}")
    rows = [_row((i, i + 1), k + 1) for i in range(1, k)]
    rows.append(_row(list(range(2, k)) + [k + 1], k + 1))
    return BinaryMatrix(tuple(rows), k + 1)


def gen_MIV() -> BinaryMatrix:
    return BinaryMatrix.from_strings(["110000", "001100", "000011", "010101"])


def gen_MV() -> BinaryMatrix:
    return BinaryMatrix.from_strings(["11000", "11110", "00110", "10011"])


def gen_MVstar() -> BinaryMatrix:
    return star(gen_MV())


def gen_MVI() -> BinaryMatrix:
    return BinaryMatrix.from_strings(["1101", "0111", "1011"])


@dataclass(frozen=True)
class FamilyId:
    """Names one member of a family; ``mask`` is the row mask a in a ⊙ M."""

    tag: str
    k: Optional[int] = None
    mask: Optional[str] = None

    def label(self) -> str:
        tag = self.tag.removeprefix("Masked")
        base = tag if self.k is None else f"{tag}({self.k})"
        return base if self.mask is None else f"{self.mask}*{base}"

    def to_json(self) -> dict:
        out: dict = {"family": self.tag}
        if self.k is not None:
            out["k"] = self.k
        if self.mask is not None:
            out["mask"] = self.mask
        return out


@dataclass(frozen=True)
class Member:
    family: FamilyId
    matrix: BinaryMatrix


_BASES = {
    "MI": gen_MI,
    "MIstar": gen_MIstar,
    "MII": gen_MII,
    "MIII": gen_MIII,
}
_FIXED = {"MIV": gen_MIV, "MV": gen_MV, "MVstar": gen_MVstar, "MVI": gen_MVI}


def build(fid: FamilyId) -> BinaryMatrix:
    """Materialize the matrix a family identifier names."""
    tag = fid.tag
    if tag in ("MaskedMIstar", "MaskedMII"):
        base = _BASES[tag[len("Masked"):]](fid.k)
    elif tag in _BASES:
        base = _BASES[tag](fid.k)
    elif tag in _FIXED:
        base = _FIXED[tag]()
    else:
        raise DomainError(f"unknown family tag {tag!r}")
    return base if fid.mask is None else mask_complement(fid.mask, base)


def _member(tag: str, k: Optional[int] = None, mask: Optional[str] = None) -> Member:
    fid = FamilyId(tag, k, mask)
    return Member(fid, build(fid))


def _fits(m: Member, max_rows: int, max_cols: int) -> bool:
    return m.matrix.nrows <= max_rows and m.matrix.ncols <= max_cols


def _ordered(members: list[Member]) -> list[Member]:
    return sorted(members, key=lambda m: m.matrix.sort_key())


def forb_circular_members(max_rows: int, max_cols: int) -> list[Member]:
    """Members of the circular-ones forbidden set within the bounds.

    Ordered by (columns, rows, rows as strings) ascending.
    """
    out = []
    k = 3
    while k <= max_rows and k + 1 <= max_cols:
        for a in enumerate_bracelets(k):
            if any(a):
                out.append(_member("MaskedMIstar", k, seq_str(a)))
            else:
                out.append(_member("MIstar", k))
        k += 1
    out += [
        _member("MIV"),
        _member("MIV", mask="1111"),
        _member("MVstar"),
        _member("MVstar", mask="1111"),
    ]
    return _ordered([m for m in out if _fits(m, max_rows, max_cols)])


def gen_forb_circular(max_rows: int, max_cols: int) -> list[BinaryMatrix]:
    return [m.matrix for m in forb_circular_members(max_rows, max_cols)]


def forb_icircular_members(max_rows: int, max_cols: int) -> list[Member]:
    """Members of the I-circular forbidden set within the bounds, ordered
    by (columns, rows, rows as strings)."""
    out = []
    k = 3
    while k <= max_rows:
        out += [_member("MIstar", k), _member("MIII", k), _member("MII", k + 1)]
        k += 1
    out += [
        _member("MaskedMIstar", 4, "0101"),
        _member("MaskedMII", 4, "0100"),
        _member("MIV"),
        _member("MV"),
        _member("MVI"),
    ]
    return _ordered([m for m in out if _fits(m, max_rows, max_cols)])


def gen_forb_icircular(max_rows: int, max_cols: int) -> list[BinaryMatrix]:
    return [m.matrix for m in forb_icircular_members(max_rows, max_cols)]


# -- Q and R ---------------------------------------------------------------

def gen_Q(j: int, i: int, k: int) -> BinaryMatrix:
    if k < 3 or not 1 <= i <= k or j not in (0, 1, 2, 3):
        raise DomainError(f"Q_{j}({i},{k}) is undefined")
    i1 = mod_index(i + 1, k)
    n = k + 1
    full = (1 << n) - 1
    pair = _row((i, i1), n)
    if j == 0:
        rows = [pair]
    elif j == 1:
        rows = [full ^ pair]
    elif j == 2:
        rows = [full ^ _row((n,), n), pair | _row((n,), n)]
    else:
        rows = [full ^ _row((i,), n), full ^ _row((i1,), n)]
    return BinaryMatrix(tuple(rows), n)


def gen_R(b: SeqLike) -> BinaryMatrix:
    digits = as_seq(b)
    k = len(digits)
    if k < 3:
        raise DomainError(f"R(b) needs |b| >= 3, got {k}")
    return stack(*(gen_Q(d, i, k) for i, d in enumerate(digits, 1)))


def block_rows(b: SeqLike) -> list[tuple[int, Optional[int]]]:
    """Per position i, the 1-based rows (first, second) of block i in R(b) or W(b)."""
    out = []
    row = 1
    for d in as_seq(b):
        if d in (0, 1):
            out.append((row, None))
            row += 1
        else:
            out.append((row, row + 1))
            row += 2
    return out


# -- U and W ---------------------------------------------------------------

def _zeros_row(cols, n: int = 6) -> int:
    return ((1 << n) - 1) ^ _row((mod_index(c, n) for c in cols), n)


def gen_U(j: int, i: int, variant: Variant = "literal") -> BinaryMatrix:
    """Blocks of W(b); ``variant`` selects the U_2 column offsets.

    ``literal`` zeroes columns (5-2i, 6-2i) and (7-2i, 8-2i); ``figure``
    zeroes (3-2i, 4-2i) and (5-2i, 6-2i), all mod 6.
    """
    if variant not in ("literal", "figure"):
        raise DomainError(f"unknown U variant {variant!r}")
    mv = gen_MVstar()
    if j in (0, 1):
        if not 1 <= i <= 4:
            raise DomainError(f"U_{j}({i}) needs i in [4]")
        row = mv.rows[i - 1]
        return BinaryMatrix((row if j == 0 else row ^ mv.full_mask,), 6)
    if j == 2:
        if not 1 <= i <= 3:
            raise DomainError(f"U_2({i}) needs i in [3]")
        off = 0 if variant == "literal" else -2
        first = _zeros_row((5 - 2 * i + off, 6 - 2 * i + off))
        second = _zeros_row((7 - 2 * i + off, 8 - 2 * i + off))
        return BinaryMatrix((first, second), 6)
    if j == 3:
        if i != 2:
            raise DomainError("U_3(i) is defined only for i = 2")
        return BinaryMatrix((_zeros_row((5,)), _zeros_row((6,))), 6)
    raise DomainError(f"U_{j} is undefined")


def gen_W(b: SeqLike, variant: Variant = "literal") -> BinaryMatrix:
    d = as_seq(b)
    if len(d) != 4 or d[3] != 0 or d[0] == 3 or d[2] == 3:
        raise DomainError(f"W(b) needs b = b1 b2 b3 0 with b1, b3 != 3; got {seq_str(d)}")
    return stack(*(gen_U(x, i, variant) for i, x in enumerate(d, 1)))


# -- H and G ---------------------------------------------------------------

def gen_H(i: int, alpha: SeqLike) -> BinaryMatrix:
    a = as_binary(alpha)
    if not 1 <= i <= 3 or len(a) != 4:
        raise DomainError(f"H_i(alpha) needs i in [3] and |alpha| = 4")
    cols = [mod_index(c - 2 * i, 6) for c in (5, 6, 1, 2)]
    fixed = _row((mod_index(3 - 2 * i, 6), mod_index(4 - 2 * i, 6)), 6)
    r5 = fixed | _row((c for c, x in zip(cols, a) if x), 6)
    r6 = fixed | _row((c for c, x in zip(cols, a) if not x), 6)
    return BinaryMatrix(gen_MVstar().rows + (r5, r6), 6)


def gen_G(gamma: SeqLike) -> BinaryMatrix:
    g = as_binary(gamma)
    if len(g) != 3:
        raise DomainError("G(gamma) needs |gamma| = 3")
    fixed = _row((1, 4, 5), 6)
    cols = (2, 3, 6)
    r5 = fixed | _row((c for c, x in zip(cols, g) if x), 6)
    r6 = fixed | _row((c for c, x in zip(cols, g) if not x), 6)
    return BinaryMatrix(gen_MVstar().rows + (r5, r6), 6)
