"""Words over the Artin generators a_1 ... a_n, the deg-lex order, and presentations.

A word is a plain tuple of 1-based generator indices; ``(2, 1, 2)`` is a_2 a_1 a_2
and ``()`` is the empty word. Signed words (braid group words) are tuples of
nonzero ints, where ``-i`` stands for a_i^{-1}.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Iterable, Sequence

Word = tuple[int, ...]
SignedWord = tuple[int, ...]

EMPTY: Word = ()


class ParseError(ValueError):
    """Raised on malformed word or presentation text."""


class Ordering(enum.Enum):
    LESS = -1
    EQUAL = 0
    GREATER = 1


def deglex_key(w: Sequence[int]) -> tuple[int, tuple[int, ...]]:
    """Sort key realising the deg-lex order: length first, then letterwise."""
    return len(w), tuple(w)


def deglex_compare(u: Sequence[int], v: Sequence[int]) -> Ordering:
    ku, kv = deglex_key(u), deglex_key(v)
    if ku < kv:
        return Ordering.LESS
    if ku > kv:
        return Ordering.GREATER
    return Ordering.EQUAL


def check_word(w: Iterable[int], n: int) -> Word:
    w = tuple(w)
    for x in w:
        if not isinstance(x, int) or not 1 <= x <= n:
            raise ValueError(f"letter {x!r} out of range [1, {n}]")
    return w


def check_signed_word(w: Iterable[int], n: int) -> SignedWord:
    w = tuple(w)
    for x in w:
        if not isinstance(x, int) or not 1 <= abs(x) <= n:
            raise ValueError(f"signed letter {x!r} out of range [1, {n}]")
    return w


# -- builders for the special words -------------------------------------------

def descending_run(i: int, j: int) -> Word:
    """a_i a_{i-1} ... a_j; empty when j == i + 1."""
    if j > i + 1:
        raise ValueError(f"descending_run needs j <= i + 1, got i={i}, j={j}")
    if j == i + 1:
        return EMPTY
    if j < 1:
        raise ValueError(f"descending_run needs j >= 1, got {j}")
    return tuple(range(i, j - 1, -1))


def powered_run(i: int, j: int, p: Sequence[int]) -> Word:
    """a_i^{p_0} a_{i-1}^{p_1} ... a_j^{p_{i-j}}; empty when j == i + 1."""
    if j > i + 1:
        raise ValueError(f"powered_run needs j <= i + 1, got i={i}, j={j}")
    if j == i + 1:
        if len(p):
            raise ValueError("powered_run(i, i + 1) takes an empty exponent vector")
        return EMPTY
    if j < 1:
        raise ValueError(f"powered_run needs j >= 1, got {j}")
    if len(p) != i - j + 1:
        raise ValueError(f"exponent vector needs {i - j + 1} entries, got {len(p)}")
    out: list[int] = []
    for letter, e in zip(range(i, j - 1, -1), p):
        if e < 1:
            raise ValueError(f"exponents must be positive, got {e}")
        out.extend([letter] * e)
    return tuple(out)


def lambda_word(i: int) -> Word:
    """Lambda_i = a_i a_{i-1} ... a_1."""
    if i < 1:
        raise ValueError(f"lambda_word needs i >= 1, got {i}")
    return descending_run(i, 1)


def delta_word(n: int) -> Word:
    """The fundamental word Lambda_1 Lambda_2 ... Lambda_n, of length n(n+1)/2."""
    if n < 1:
        raise ValueError(f"delta_word needs n >= 1, got {n}")
    out: list[int] = []
    for i in range(1, n + 1):
        out.extend(lambda_word(i))
    return tuple(out)


def shift_letters(w: Sequence[int], d: int, n: int | None = None) -> Word:
    """Substitute a_k -> a_{k+d}. With ``n`` given, results must stay in [1, n]."""
    out = tuple(x + d for x in w)
    hi = n if n is not None else float("inf")
    for x in out:
        if not 1 <= x <= hi:
            raise ValueError(f"shifted letter a_{x} out of range")
    return out


# -- text formats ------------------------------------------------------------

def format_word(w: Sequence[int]) -> str:
    return " ".join(str(x) for x in w)


def _parse_tokens(text: str, signed: bool, n: int | None) -> tuple[int, ...]:
    out = []
    for tok in text.split():
        try:
            x = int(tok)
        except ValueError:
            raise ParseError(f"malformed token {tok!r}") from None
        if x == 0 or (x < 0 and not signed) or tok.startswith("+"):
            raise ParseError(f"malformed token {tok!r}")
        if n is not None and abs(x) > n:
            raise ParseError(f"generator {abs(x)} out of range [1, {n}]")
        out.append(x)
    return tuple(out)


def parse_word(text: str, n: int | None = None) -> Word:
    """Parse "2 1 1 2 1"; the empty string is the empty word."""
    return _parse_tokens(text, signed=False, n=n)


def parse_signed_word(text: str, n: int | None = None) -> SignedWord:
    """Parse "2 -1 3", where a leading '-' marks an inverse generator."""
    return _parse_tokens(text, signed=True, n=n)


@dataclass(frozen=True)
class Presentation:
    """smg<a_1..a_n | relations>. ``degree_preserving`` is derived, never passed."""

    n_generators: int
    relations: tuple[tuple[Word, Word], ...]
    degree_preserving: bool = field(init=False)

    def __post_init__(self):
        if self.n_generators < 1:
            raise ValueError("a presentation needs at least one generator")
        rels = tuple(
            (check_word(l, self.n_generators), check_word(r, self.n_generators))
            for l, r in self.relations
        )
        object.__setattr__(self, "relations", rels)
        object.__setattr__(
            self, "degree_preserving", all(len(l) == len(r) for l, r in rels)
        )


def parse_presentation(text: str) -> Presentation:
    """Read the line format::

        gens: 2
        # comment
        rel: 2 1 2 = 1 2 1
    """
    n = None
    rels = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        key, sep, rest = line.partition(":")
        key = key.strip()
        if not sep:
            raise ParseError(f"line {lineno}: expected 'gens:' or 'rel:', got {raw!r}")
        if key == "gens":
            if n is not None:
                raise ParseError(f"line {lineno}: duplicate 'gens:' line")
            if rels:
                raise ParseError(f"line {lineno}: 'gens:' must precede relations")
            try:
                n = int(rest.strip())
            except ValueError:
                raise ParseError(f"line {lineno}: bad generator count {rest.strip()!r}") from None
            if n < 1:
                raise ParseError(f"line {lineno}: generator count must be positive")
        elif key == "rel":
            if n is None:
                raise ParseError(f"line {lineno}: 'rel:' before 'gens:'")
            lhs, eq, rhs = rest.partition("=")
            if not eq or "=" in rhs:
                raise ParseError(f"line {lineno}: relation needs exactly one '='")
            rels.append((parse_word(lhs, n), parse_word(rhs, n)))
        else:
            raise ParseError(f"line {lineno}: unknown directive {key!r}")
    if n is None:
        raise ParseError("missing 'gens:' line")
    return Presentation(n, tuple(rels))


def format_presentation(p: Presentation) -> str:
    lines = [f"gens: {p.n_generators}"]
    lines += [f"rel: {format_word(l)} = {format_word(r)}" for l, r in p.relations]
    return "\n".join(lines) + "\n"
