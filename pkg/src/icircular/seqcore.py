"""Binary and quaternary sequences.

Sequences are plain tuples of small ints.  Every public function also
accepts a digit string such as ``"013102"``, which is how sequences are
written on the command line and in files.  Positions are 1-based.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import product
from typing import Sequence, Union

from .errors import DomainError

Seq = tuple[int, ...]
SeqLike = Union[str, Sequence[int]]


def as_seq(a: SeqLike, alphabet: int = 4) -> Seq:
    """Coerce ``a`` to a tuple of digits, each below ``alphabet``."""
    if isinstance(a, str):
        try:
            out = tuple(int(ch) for ch in a)
        except ValueError:
            raise DomainError(f"not a digit string: {a!r}") from None
    else:
        out = tuple(int(x) for x in a)
    for x in out:
        if not 0 <= x < alphabet:
            raise DomainError(f"digit {x} outside 0..{alphabet - 1} in {a!r}")
    return out


def as_binary(a: SeqLike) -> Seq:
    return as_seq(a, alphabet=2)


def seq_str(a: Sequence[int]) -> str:
    return "".join(str(x) for x in a)


def shift(a: SeqLike) -> Seq:
    """Rotate left by one: a2 a3 ... ak a1."""
    s = as_seq(a)
    if not s:
        raise DomainError("cannot shift an empty sequence")
    return s[1:] + s[:1]


def reverse(a: SeqLike) -> Seq:
    return as_seq(a)[::-1]


def complement(a: SeqLike) -> Seq:
    return tuple(1 - x for x in as_binary(a))


def mod_index(i: int, k: int) -> int:
    """Reduce ``i`` modulo ``k`` into ``[k] = {1, ..., k}``."""
    if k <= 0:
        raise DomainError("modulus must be positive")
    return (i - 1) % k + 1


def canonical_bracelet(a: SeqLike) -> Seq:
    """Lexicographically least member of the orbit under shifts and reversal."""
    s = as_seq(a)
    if not s:
        raise DomainError("bracelet of an empty sequence")
    r = s[::-1]
    k = len(s)
    return min(min(s[i:] + s[:i], r[i:] + r[:i]) for i in range(k))


@lru_cache(maxsize=None)
def _bracelets(k: int) -> tuple[Seq, ...]:
    if k == 3:
        return ((0, 0, 0), (1, 1, 1))
    found = {canonical_bracelet(a) for a in product((0, 1), repeat=k)}
    return tuple(sorted(found))


def enumerate_bracelets(k: int) -> list[Seq]:
    """The set A_k of binary bracelets of length ``k``, sorted.

    For ``k == 3`` only the constant sequences 000 and 111 are returned.
    """
    if k < 3:
        raise DomainError(f"bracelet sets are defined for k >= 3, got {k}")
    return list(_bracelets(k))


def occurs_circularly(a: SeqLike, pattern: SeqLike, i: int) -> bool:
    """True iff ``pattern`` reads off ``a`` starting at position ``i``, wrapping."""
    s, p = as_seq(a), as_seq(pattern)
    k = len(s)
    if len(p) > k:
        return False
    if not 1 <= i <= k:
        raise DomainError(f"position {i} outside [1, {k}]")
    return all(s[mod_index(i + t, k) - 1] == p[t] for t in range(len(p)))


def check_index_map(rho: Sequence[int], k: int) -> tuple[int, ...]:
    """Validate an injective map [k'] -> [k] given as its image list."""
    out = tuple(int(x) for x in rho)
    if len(set(out)) != len(out):
        raise DomainError(f"index map {out} is not injective")
    for x in out:
        if not 1 <= x <= k:
            raise DomainError(f"index map value {x} outside [1, {k}]")
    return out


def apply_index_map(a: SeqLike, rho: Sequence[int]) -> Seq:
    s = as_seq(a)
    rho = check_index_map(rho, len(s))
    return tuple(s[r - 1] for r in rho)
