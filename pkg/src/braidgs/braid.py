"""Braid presentations and the infinite rule family for the positive braid monoid.

Over a_1..a_n (the monoid B+_{n+1}) the reduced words are exactly the words
containing no factor of either shape

    a_{i+1} a_i V W a_{i+1} a_i ... a_j  ->  a_i a_{i+1} a_i V a_i ... a_j W'      (run rule)
    a_s a_k                              ->  a_k a_s,  s - k >= 2                  (far commutation)

where 1 <= i <= n-1, 1 <= j <= i+1, V is any word in a_1..a_{i-1}, W is a word in
a_j..a_i that is empty or starts with a_i, and W' is W with every index raised
by one. The family is infinite, so it lives here as a matcher rather than as a
list of rules; :func:`theorem_rules` materializes it up to a length bound for
cross-checking against completion.
"""

from __future__ import annotations

import enum
import itertools
import math
import random
from dataclasses import dataclass, field
from typing import Iterator, Sequence

from .core import (
    Presentation,
    Word,
    check_word,
    descending_run,
    powered_run,
    shift_letters,
)
from .rewrite import DEFAULT_STEP_BUDGET, STRATEGIES, RuleSystem, StepBudgetExceeded

INF = math.inf


# -- presentations -----------------------------------------------------------

def artin_presentation(n: int) -> Presentation:
    """B+_{n+1} on a_1..a_n: braid relations, then far commutations."""
    if n < 1:
        raise ValueError("artin_presentation needs n >= 1")
    rels = [((i + 1, i, i + 1), (i, i + 1, i)) for i in range(1, n)]
    rels += [((s, k), (k, s)) for s in range(1, n + 1) for k in range(1, s - 1)]
    return Presentation(n, tuple(rels))


def bkl_generators(n_strands: int) -> list[tuple[int, int]]:
    """Band generators as (s, t) with t < s, in the index order used by
    :func:`bkl_presentation`: lexicographic by (s, t), so index 1 is a_{21}."""
    return [(s, t) for s in range(2, n_strands + 1) for t in range(1, s)]


def bkl_presentation(n_strands: int) -> Presentation:
    """Birman-Ko-Lee positive monoid on the band generators a_{ts}.

    Generator a_{ts} = a_{st} (1 <= t < s <= n_strands) gets the 1-based index of
    (s, t) in :func:`bkl_generators`. For each chain t > s > r the three-way
    relation a_{ts}a_{sr} = a_{tr}a_{ts} = a_{sr}a_{tr} is emitted as two
    pairwise relations; then every commuting pair (disjoint or nested strands).
    """
    if n_strands < 2:
        raise ValueError("bkl_presentation needs at least 2 strands")
    gens = bkl_generators(n_strands)
    index = {g: k + 1 for k, g in enumerate(gens)}

    def a(x, y):
        return index[(max(x, y), min(x, y))]

    rels = []
    for t in range(3, n_strands + 1):
        for s in range(2, t):
            for r in range(1, s):
                rels.append(((a(t, s), a(s, r)), (a(t, r), a(t, s))))
                rels.append(((a(t, r), a(t, s)), (a(s, r), a(t, r))))
    for (s1, t1), (s2, t2) in itertools.combinations(gens, 2):
        if (s1 - s2) * (s1 - t2) * (t1 - s2) * (t1 - t2) > 0:
            rels.append(((a(s1, t1), a(s2, t2)), (a(s2, t2), a(s1, t1))))
    return Presentation(len(gens), tuple(rels))


@dataclass(frozen=True)
class CoxeterMatrix:
    """Off-diagonal entries m_{ss'} (>= 2, or ``math.inf``); pairs not listed are 2."""

    size: int
    entries: dict = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for (s, t), m in self.entries.items():
            if s == t or not (1 <= s <= self.size and 1 <= t <= self.size):
                raise ValueError(f"bad Coxeter index pair ({s}, {t})")
            if m != INF and (int(m) != m or m < 2):
                raise ValueError(f"Coxeter entry m_{s}{t} must be >= 2 or inf, got {m}")
            key = (max(s, t), min(s, t))
            if key in clean and clean[key] != m:
                raise ValueError(f"Coxeter matrix not symmetric at ({s}, {t})")
            clean[key] = m
        object.__setattr__(self, "entries", clean)

    def m(self, s: int, t: int):
        return self.entries.get((max(s, t), min(s, t)), 2)


def parse_coxeter(text: str) -> CoxeterMatrix:
    """Lines ``m <s> <s'> <value|inf>``, optional ``size <l>``, ``#`` comments."""
    from .core import ParseError

    entries = {}
    size = 0
    for lineno, raw in enumerate(text.splitlines(), 1):
        parts = raw.split()
        if not parts or parts[0].startswith("#"):
            continue
        try:
            if parts[0] == "size" and len(parts) == 2:
                size = max(size, int(parts[1]))
            elif parts[0] == "m" and len(parts) == 4:
                s, t = int(parts[1]), int(parts[2])
                m = INF if parts[3] in ("inf", "oo", "∞") else int(parts[3])
                entries[(s, t)] = m
                size = max(size, s, t)
            else:
                raise ParseError(f"line {lineno}: cannot parse {raw!r}")
        except ValueError as e:
            raise ParseError(f"line {lineno}: {e}") from None
    if size < 1:
        raise ParseError("empty Coxeter matrix")
    try:
        return CoxeterMatrix(size, entries)
    except ValueError as e:
        raise ParseError(str(e)) from None


def alternating(s: int, t: int, length: int) -> Word:
    """s t s t ... with ``length`` letters."""
    return tuple(s if k % 2 == 0 else t for k in range(length))


def coxeter_braid_presentation(M: CoxeterMatrix) -> Presentation:
    rels = []
    for s in range(2, M.size + 1):
        for t in range(1, s):
            m = M.m(s, t)
            if m != INF:
                rels.append((alternating(s, t, int(m)), alternating(t, s, int(m))))
    return Presentation(M.size, tuple(rels))


# -- the rule family as a matcher ----------------------------------------------

class Family(enum.Enum):
    RUN = "run"
    FAR_COMMUTE = "far-commute"


@dataclass(frozen=True)
class TheoremMatch:
    """A leading-word occurrence. For far commutations, ``i`` holds s and ``j`` holds k."""

    position: int
    i: int
    j: int
    v_len: int
    w_len: int
    kind: Family

    @property
    def length(self) -> int:
        if self.kind is Family.FAR_COMMUTE:
            return 2
        return 2 + self.v_len + self.w_len + (self.i + 2 - self.j)


def _run_span(w: Word, p: int):
    """Parse a run-rule leading word starting at ``p``.

    V and W are forced (V is the maximal run of letters below a_i, W runs up to
    the next a_{i+1}), so the only freedom is j. Returns (i, v_len, w_len,
    j_min, j_max) or None.
    """
    L = len(w)
    i = w[p + 1]
    if w[p] != i + 1:
        return None
    q = p + 2
    while q < L and w[q] < i:
        q += 1
    r = q
    wmin = i + 1
    while r < L and w[r] <= i:
        if w[r] < wmin:
            wmin = w[r]
        r += 1
    if r == L or w[r] != i + 1:
        return None
    k = r
    expect = i + 1
    while k < L and expect >= 1 and w[k] == expect:
        k += 1
        expect -= 1
    j_min = expect + 1
    j_max = min(wmin, i + 1)
    if j_min > j_max:
        return None
    return i, q - p - 2, r - q, j_min, j_max


def match_at(w: Word, p: int) -> TheoremMatch | None:
    """The preferred match starting at ``p``: far commutation first, else the longest run-rule factor."""
    if p + 1 >= len(w):
        return None
    a, b = w[p], w[p + 1]
    if a - b >= 2:
        return TheoremMatch(p, a, b, 0, 0, Family.FAR_COMMUTE)
    if a - b != 1:
        return None
    span = _run_span(w, p)
    if span is None:
        return None
    i, v_len, w_len, j_min, _ = span
    return TheoremMatch(p, i, j_min, v_len, w_len, Family.RUN)


def match_theorem_rule(w: Sequence[int], n: int | None = None) -> TheoremMatch | None:
    """Leftmost leading-word occurrence; None iff ``w`` is reduced."""
    w = tuple(w)
    for p in range(len(w) - 1):
        m = match_at(w, p)
        if m is not None:
            return m
    return None


def iter_theorem_matches(w: Sequence[int]) -> Iterator[TheoremMatch]:
    """Every occurrence of every leading word, including each admissible j."""
    w = tuple(w)
    for p in range(len(w) - 1):
        a, b = w[p], w[p + 1]
        if a - b >= 2:
            yield TheoremMatch(p, a, b, 0, 0, Family.FAR_COMMUTE)
        elif a - b == 1:
            span = _run_span(w, p)
            if span is not None:
                i, v_len, w_len, j_min, j_max = span
                for j in range(j_max, j_min - 1, -1):
                    yield TheoremMatch(p, i, j, v_len, w_len, Family.RUN)


def theorem_rhs(factor: Word, m: TheoremMatch) -> Word:
    """Right side for the leading word ``factor`` parsed as ``m`` (position ignored)."""
    if m.kind is Family.FAR_COMMUTE:
        return (m.j, m.i)
    i = m.i
    V = factor[2:2 + m.v_len]
    W = factor[2 + m.v_len:2 + m.v_len + m.w_len]
    return (i, i + 1, i) + V + descending_run(i, m.j) + shift_letters(W, 1)


def apply_theorem_rule(w: Sequence[int], m: TheoremMatch) -> Word:
    w = tuple(w)
    p, end = m.position, m.position + m.length
    return w[:p] + theorem_rhs(w[p:end], m) + w[end:]


def _affected_before(w, p: int, n: int) -> list[int]:
    """Positions q < p whose match test can read index >= p, ascending.

    A run-rule scan from q reads letters <= w[q+1] and then a descending tail
    of at most n + 1 letters, so it only reaches p if every letter in
    w[q+2 .. p-n-2] is at most w[q+1]. Everything else left of p is untouched
    by a rewrite at p.
    """
    out = []
    if p >= 1:
        out.append(p - 1)
    hi = p - n - 2
    top = 0
    for q in range(p - 2, -1, -1):
        k = q + 2
        if k <= hi and w[k] > top:
            top = w[k]
            if top >= n:
                break
        if w[q] - w[q + 1] == 1 and w[q + 1] >= top:
            out.append(q)
    out.reverse()
    return out


def _leftmost_normalize(w: Word, max_steps: int) -> Word:
    # same result and step sequence as repeated match_theorem_rule, without rescanning from 0
    if len(w) < 2:
        return w
    n = max(w)
    buf = list(w)
    L = len(buf)
    candidates: list[int] = []
    start = 0
    steps = 0
    while True:
        m = None
        for q in candidates:
            m = match_at(buf, q)
            if m is not None:
                break
        if m is None:
            for q in range(start, L - 1):
                m = match_at(buf, q)
                if m is not None:
                    break
        if m is None:
            return tuple(buf)
        steps += 1
        if steps > max_steps:
            raise StepBudgetExceeded(f"no normal form within {max_steps} steps")
        p, end = m.position, m.position + m.length
        buf[p:end] = theorem_rhs(tuple(buf[p:end]), m)
        candidates = _affected_before(buf, p, n)
        start = p


def _rightmost(w: Word) -> TheoremMatch | None:
    for p in range(len(w) - 2, -1, -1):
        m = match_at(w, p)
        if m is not None:
            return m
    return None


def gs_normalize(
    w: Sequence[int],
    n: int | None = None,
    *,
    strategy: str = "leftmost",
    rng: random.Random | None = None,
    max_steps: int = DEFAULT_STEP_BUDGET,
) -> Word:
    """Normal form in B+_{n+1}: the unique word with no leading-word factor."""
    w = tuple(w) if n is None else check_word(w, n)
    if strategy == "leftmost":
        return _leftmost_normalize(w, max_steps)
    if strategy == "random" and rng is None:
        rng = random.Random(0)
    steps = 0
    while True:
        if strategy == "naive-leftmost":
            m = match_theorem_rule(w)
        elif strategy == "rightmost":
            m = _rightmost(w)
        elif strategy == "random":
            found = list(iter_theorem_matches(w))
            m = rng.choice(found) if found else None
        else:
            raise ValueError(f"unknown strategy {strategy!r}; expected one of {STRATEGIES}")
        if m is None:
            return w
        steps += 1
        if steps > max_steps:
            raise StepBudgetExceeded(f"no normal form within {max_steps} steps")
        w = apply_theorem_rule(w, m)


def is_gs_reduced(w: Sequence[int]) -> bool:
    return match_theorem_rule(w) is None


# -- materialized rules ---------------------------------------------------------

def _words(alphabet: Sequence[int], length: int) -> Iterator[Word]:
    return itertools.product(alphabet, repeat=length)


def theorem_rules(n: int, max_len: int) -> RuleSystem:
    """Every run rule and far commutation whose leading word has length <= ``max_len``.

    Far commutations come first, then run rules by (i, j descending, |V|, |W|, V, W).
    """
    pairs = []
    for s in range(3, n + 1):
        for k in range(1, s - 1):
            if max_len >= 2:
                pairs.append(((s, k), (k, s)))
    for i in range(1, n):
        for j in range(i + 1, 0, -1):
            tail = descending_run(i + 1, j)
            budget = max_len - 2 - len(tail)
            if budget < 0:
                continue
            for v_len in range(budget + 1):
                for w_len in range(budget - v_len + 1):
                    if w_len and j == i + 1:
                        break
                    for V in _words(range(1, i), v_len):
                        if w_len == 0:
                            Ws = [()]
                        else:
                            Ws = ((i,) + rest for rest in _words(range(j, i + 1), w_len - 1))
                        for W in Ws:
                            lhs = (i + 1, i) + V + W + tail
                            rhs = (i, i + 1, i) + V + descending_run(i, j) + shift_letters(W, 1)
                            pairs.append((lhs, rhs))
    return RuleSystem(n, pairs)


# -- identities --------------------------------------------------------------

@dataclass
class IdentityReport:
    checked: int = 0
    failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def format(self) -> str:
        lines = [f"checked {self.checked} failures {len(self.failures)}"]
        for name, params, lhs, rhs in self.failures:
            lines.append(f"FAIL {name} {params}: {' '.join(map(str, lhs))} != {' '.join(map(str, rhs))}")
        return "\n".join(lines) + "\n"


def identity_instances(n: int, bound: int) -> Iterator[tuple[str, tuple, Word, Word]]:
    """All admissible instances of the run identities over a_1..a_n.

    run-swap:          a_{i,j-1} a_{i+1,j-1} = a_{i+1,j-1} a_{i+1,j}
    powered-run-swap:  a_{i,j-1}(p) a_{i+1,j-1} = a_{i+1,j-1} a_{i+1,j}(p), exponents in [1, bound]
    letter-through-run: a_s a_{i+1,j} = a_{i+1,j} a_{s+1},  j <= s <= i
    """
    for i in range(1, n):
        for j in range(2, i + 2):
            head = descending_run(i + 1, j - 1)
            yield "run-swap", (i, j), descending_run(i, j - 1) + head, head + descending_run(i + 1, j)
            for p in itertools.product(range(1, bound + 1), repeat=i - j + 2):
                yield "powered-run-swap", (i, j, p), powered_run(i, j - 1, p) + head, head + powered_run(i + 1, j, p)
    for i in range(1, n):
        for j in range(1, i + 1):
            for s in range(j, i + 1):
                yield "letter-through-run", (i, j, s), (s,) + descending_run(i + 1, j), descending_run(i + 1, j) + (s + 1,)


def identity_suite(n: int, bound: int) -> IdentityReport:
    if n < 2:
        raise ValueError("identity_suite needs n >= 2")
    report = IdentityReport()
    for name, params, lhs, rhs in identity_instances(n, bound):
        report.checked += 1
        if gs_normalize(lhs) != gs_normalize(rhs):
            report.failures.append((name, params, lhs, rhs))
    return report
