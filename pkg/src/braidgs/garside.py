"""Garside normal forms Delta^k u in the braid group B_{n+1}.

Delta = Lambda_1 Lambda_2 ... Lambda_n with Lambda_i = a_i ... a_1. Conjugation
by Delta reverses generator indices (a_i Delta = Delta a_{n+1-i}), which lets
every Delta^{-1} in a group word be pushed to the far left.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from typing import Sequence

from .braid import artin_presentation, gs_normalize
from .completion import DEFAULT_ORACLE_CAP, bfs_class
from .core import SignedWord, Word, check_signed_word, check_word, delta_word, format_word, lambda_word, shift_letters


class NoRepresentative(RuntimeError):
    """Delta has no representative starting with the requested generator."""


def tau(w: Sequence[int], n: int) -> Word:
    """The index reversal a_i -> a_{n+1-i}; Delta w = tau(w) Delta."""
    return tuple(n + 1 - x for x in w)


def _parse_delta_pattern(v: Word, n: int, require_a1: bool = True):
    """Split reduced ``v`` as Lambda_1 V_1 Lambda_2 V_2 ... Lambda_n u.

    Each V_k is the maximal run of letters in a_1..a_k after Lambda_k, and must
    be empty or start with a_1. Returns ([V_1, ..., V_{n-1}], u) or None.
    """
    if not v or v[0] != 1:
        return None
    pos = 1
    segments = []
    for k in range(2, n + 1):
        start = pos
        while pos < len(v) and v[pos] < k:
            pos += 1
        seg = v[start:pos]
        if require_a1 and seg and seg[0] != 1:
            return None
        lam = lambda_word(k)
        if v[pos:pos + k] != lam:
            return None
        segments.append(seg)
        pos += k
    return segments, v[pos:]


def delta_prefix(v: Sequence[int], n: int) -> Word | None:
    """If ``v`` equals Delta r in B+_{n+1}, return the reduced r; else None.

    Each V_k moves right across Lambda_{k+1} ... Lambda_n and is raised by one
    index per crossing (a_s Lambda_{i+1} = Lambda_{i+1} a_{s+1} for s <= i), so
    r = V_1^{+(n-1)} V_2^{+(n-2)} ... V_{n-1}^{+1} u.
    """
    v = gs_normalize(check_word(v, n))
    parsed = _parse_delta_pattern(v, n)
    if parsed is None:
        return None
    segments, u = parsed
    r: list[int] = []
    for k, seg in enumerate(segments, 1):
        r.extend(shift_letters(seg, n - k))
    r.extend(u)
    return gs_normalize(tuple(r))


def positive_garside_form(v: Sequence[int], n: int) -> tuple[int, Word]:
    """(s, u) with v = Delta^s u, s maximal, u reduced and free of a Delta prefix."""
    u = gs_normalize(check_word(v, n))
    s = 0
    while True:
        r = delta_prefix(u, n)
        if r is None:
            return s, u
        s += 1
        u = r


@dataclass(frozen=True)
class InverseTable:
    """entries[i - 1] is the reduced X_i with a_i X_i = Delta."""

    n: int
    entries: tuple[Word, ...]

    def __getitem__(self, i: int) -> Word:
        return self.entries[i - 1]


def _constructed_cofactor(i: int, n: int) -> Word:
    # Delta_i = Lambda_i shift(Delta_{i-1}, 1) and Delta_n = Delta_i Lambda_{i+1} ... Lambda_n
    x = list(lambda_word(i)[1:])
    if i > 1:
        x.extend(shift_letters(delta_word(i - 1), 1))
    for k in range(i + 1, n + 1):
        x.extend(lambda_word(k))
    return tuple(x)


def build_inverse_table(n: int, method: str = "construct", cap: int = DEFAULT_ORACLE_CAP) -> InverseTable:
    """Cofactors X_i of every generator in Delta.

    ``method="search"`` reads X_i off a member of Delta's BFS class starting with
    a_i (practical up to n = 5); ``"construct"`` uses the recursive
    factorisation of Delta and works for any n. Both results are checked.
    """
    if n < 1:
        raise ValueError("build_inverse_table needs n >= 1")
    delta_nf = gs_normalize(delta_word(n))
    entries = []
    if method == "search":
        cls = sorted(bfs_class(delta_word(n), artin_presentation(n), cap))
        for i in range(1, n + 1):
            rep = next((w for w in cls if w[0] == i), None)
            if rep is None:
                raise NoRepresentative(f"no word equal to Delta starts with a_{i}")
            entries.append(gs_normalize(rep[1:]))
    elif method == "construct":
        entries = [gs_normalize(_constructed_cofactor(i, n)) for i in range(1, n + 1)]
    else:
        raise ValueError(f"unknown method {method!r}")
    for i, x in enumerate(entries, 1):
        if gs_normalize((i,) + x) != delta_nf:
            raise NoRepresentative(f"a_{i} X_{i} != Delta for X_{i} = {format_word(x)}")
    return InverseTable(n, tuple(entries))


@functools.lru_cache(maxsize=None)
def inverse_table(n: int) -> InverseTable:
    return build_inverse_table(n)


@dataclass(frozen=True)
class GarsideForm:
    n: int
    delta_power: int
    tail: Word

    def format(self) -> str:
        head = f"D^{self.delta_power} |"
        return f"{head} {format_word(self.tail)}" if self.tail else head

    def __str__(self):
        return self.format()


def inverse_word(w: Sequence[int]) -> SignedWord:
    """Formal inverse of a signed word: reverse and flip signs."""
    return tuple(-x for x in reversed(w))


def group_normal_form(w: Sequence[int], n: int) -> GarsideForm:
    """Garside form of a signed word.

    Each a_i^{-1} becomes X_i Delta^{-1}; every Delta^{-1} then moves to the far
    left using g Delta^{-1} = Delta^{-1} tau(g), so a positive letter is reversed
    once per Delta^{-1} standing to its right.
    """
    w = check_signed_word(w, n)
    table = inverse_table(n)
    neg = 0
    rev: list[int] = []
    for x in reversed(w):
        if x < 0:
            neg += 1
            letters = table[-x]
            # X_i sits left of its own Delta^{-1}
        else:
            letters = (x,)
        for y in reversed(letters):
            rev.append(n + 1 - y if neg % 2 else y)
    rev.reverse()
    s, u = positive_garside_form(tuple(rev), n)
    return GarsideForm(n, s - neg, u)


def group_equal(w1: Sequence[int], w2: Sequence[int], n: int) -> bool:
    return group_normal_form(w1, n) == group_normal_form(w2, n)


def group_is_identity(w: Sequence[int], n: int) -> bool:
    f = group_normal_form(w, n)
    return f.delta_power == 0 and not f.tail
