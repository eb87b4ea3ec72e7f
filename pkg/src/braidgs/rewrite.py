"""Oriented string rewriting: rules lhs -> rhs with lhs deg-lex greater than rhs.

Reduction eliminates leading words one at a time. The default strategy takes the
leftmost match and, among rules matching there, the lowest rule id.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

from .core import Ordering, Presentation, Word, check_word, deglex_compare, deglex_key, format_word

INDEX_THRESHOLD = 64
DEFAULT_STEP_BUDGET = 10**6
STRATEGIES = ("leftmost", "rightmost", "random")


class StepBudgetExceeded(RuntimeError):
    """Normalization ran past its step budget; the rules are probably misoriented."""


@dataclass(frozen=True)
class Rule:
    id: int
    lhs: Word
    rhs: Word

    def __post_init__(self):
        if not self.lhs:
            raise ValueError("rule lhs must be nonempty")
        if deglex_compare(self.lhs, self.rhs) is not Ordering.GREATER:
            raise ValueError(
                f"rule {format_word(self.lhs)} -> {format_word(self.rhs)} is not deg-lex decreasing"
            )


def orient(u: Sequence[int], v: Sequence[int]) -> tuple[Word, Word]:
    """Return (greater, smaller) under deg-lex."""
    u, v = tuple(u), tuple(v)
    return (u, v) if deglex_key(u) > deglex_key(v) else (v, u)


@dataclass(frozen=True)
class RewriteStep:
    rule_id: int
    position: int
    before: Word
    after: Word

    def format(self) -> str:
        return f"{self.rule_id} @ {self.position}: {format_word(self.before)} -> {format_word(self.after)}"


@dataclass
class Trace:
    steps: list[RewriteStep] = field(default_factory=list)

    def format(self) -> str:
        return "".join(s.format() + "\n" for s in self.steps)


class RuleSystem:
    """An immutable, id-ordered list of rules over a_1..a_n.

    Above ``INDEX_THRESHOLD`` rules, factor search goes through a hash index
    keyed by lhs; below it, rules are scanned directly.
    """

    def __init__(
        self,
        n_generators: int,
        rules: Iterable[Rule | tuple[Sequence[int], Sequence[int]]],
        use_index: bool | None = None,
    ):
        self.n_generators = n_generators
        built = []
        for k, r in enumerate(rules):
            if isinstance(r, Rule):
                if r.id != k:
                    raise ValueError(f"rule ids must be dense from 0; got {r.id} at slot {k}")
            else:
                r = Rule(k, tuple(r[0]), tuple(r[1]))
            check_word(r.lhs, n_generators)
            check_word(r.rhs, n_generators)
            built.append(r)
        self.rules: tuple[Rule, ...] = tuple(built)
        self.use_index = len(self.rules) > INDEX_THRESHOLD if use_index is None else use_index
        self._by_lhs: dict[Word, list[int]] = {}
        for r in self.rules:
            self._by_lhs.setdefault(r.lhs, []).append(r.id)
        self._lengths = sorted({len(r.lhs) for r in self.rules})

    @classmethod
    def from_pairs(cls, n_generators: int, pairs: Iterable[tuple[Sequence[int], Sequence[int]]]) -> "RuleSystem":
        """Orient each pair by deg-lex, dropping pairs with identical sides."""
        rules = []
        for u, v in pairs:
            if tuple(u) != tuple(v):
                rules.append(orient(u, v))
        return cls(n_generators, rules)

    @classmethod
    def from_presentation(cls, p: Presentation) -> "RuleSystem":
        return cls.from_pairs(p.n_generators, p.relations)

    def __len__(self):
        return len(self.rules)

    def __getitem__(self, rule_id: int) -> Rule:
        return self.rules[rule_id]

    def __iter__(self):
        return iter(self.rules)

    def __repr__(self):
        return f"RuleSystem(n={self.n_generators}, {len(self.rules)} rules)"

    def lhs_ids(self, factor: Word) -> list[int]:
        return self._by_lhs.get(factor, [])

    def matches_at(self, w: Word, p: int) -> list[int]:
        """Ids of all rules whose lhs occurs in ``w`` at offset ``p``, ascending."""
        if self.use_index:
            ids: list[int] = []
            rest = len(w) - p
            for L in self._lengths:
                if L > rest:
                    break
                hit = self._by_lhs.get(w[p:p + L])
                if hit:
                    ids.extend(hit)
            return sorted(ids)
        return [r.id for r in self.rules if w[p:p + len(r.lhs)] == r.lhs]

    def iter_matches(self, w: Word) -> Iterator[tuple[int, int]]:
        """All (rule_id, position) pairs, by position then rule id."""
        for p in range(len(w)):
            for rid in self.matches_at(w, p):
                yield rid, p


def find_match(w: Sequence[int], rules: RuleSystem) -> tuple[int, int] | None:
    """Leftmost match, lowest rule id among ties; None iff ``w`` is reduced."""
    w = tuple(w)
    for p in range(len(w)):
        ids = rules.matches_at(w, p)
        if ids:
            return ids[0], p
    return None


def is_reduced(w: Sequence[int], rules: RuleSystem) -> bool:
    return find_match(w, rules) is None


def _apply(w: Word, rule: Rule, p: int) -> Word:
    return w[:p] + rule.rhs + w[p + len(rule.lhs):]


def _choose(w: Word, rules: RuleSystem, strategy: str, rng: random.Random | None):
    if strategy == "leftmost":
        return find_match(w, rules)
    if strategy == "rightmost":
        for p in range(len(w) - 1, -1, -1):
            ids = rules.matches_at(w, p)
            if ids:
                return ids[0], p
        return None
    if strategy == "random":
        found = list(rules.iter_matches(w))
        return rng.choice(found) if found else None
    raise ValueError(f"unknown strategy {strategy!r}; expected one of {STRATEGIES}")


def reduce_once(w: Sequence[int], rules: RuleSystem) -> RewriteStep | None:
    w = tuple(w)
    m = find_match(w, rules)
    if m is None:
        return None
    rid, p = m
    return RewriteStep(rid, p, w, _apply(w, rules[rid], p))


def normalize(
    w: Sequence[int],
    rules: RuleSystem,
    want_trace: bool = False,
    *,
    strategy: str = "leftmost",
    rng: random.Random | None = None,
    max_steps: int = DEFAULT_STEP_BUDGET,
) -> tuple[Word, Trace | None]:
    """Rewrite ``w`` to a fixed point. Returns (normal form, trace or None)."""
    w = tuple(w)
    if strategy == "random" and rng is None:
        rng = random.Random(0)
    trace = Trace() if want_trace else None
    steps = 0
    while True:
        m = _choose(w, rules, strategy, rng)
        if m is None:
            return w, trace
        steps += 1
        if steps > max_steps:
            raise StepBudgetExceeded(f"no normal form within {max_steps} steps")
        rid, p = m
        nxt = _apply(w, rules[rid], p)
        if trace is not None:
            trace.steps.append(RewriteStep(rid, p, w, nxt))
        w = nxt


def normal_form(w: Sequence[int], rules: RuleSystem, **kw) -> Word:
    return normalize(w, rules, **kw)[0]
