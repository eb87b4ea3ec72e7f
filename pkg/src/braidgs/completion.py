"""Bounded Buchberger-Shirshov completion for semigroup relations, and a BFS oracle.

Compositions are the usual critical pairs of string rewriting: an intersection
ambiguity w = lhs(f) b = a lhs(g) with a proper overlap, and an inclusion
ambiguity w = lhs(f) = a lhs(g) b. A composition is trivial when both of its
sides rewrite to the same word.
"""

from __future__ import annotations

import enum
import heapq
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .core import Presentation, Word, deglex_key, format_word, parse_word
from .rewrite import Rule, RuleSystem, normal_form, orient

DEFAULT_ORACLE_CAP = 5 * 10**6


class AmbiguityKind(enum.Enum):
    INTERSECTION = "intersection"
    INCLUSION = "inclusion"


@dataclass(frozen=True)
class Ambiguity:
    kind: AmbiguityKind
    f_id: int
    g_id: int
    w: Word
    a: Word
    b: Word


def _prefix_index(rules: RuleSystem) -> dict[Word, list[int]]:
    idx: dict[Word, list[int]] = {}
    for r in rules:
        for k in range(1, len(r.lhs)):
            idx.setdefault(r.lhs[:k], []).append(r.id)
    return idx


def find_ambiguities(rules: RuleSystem, max_len: int | None = None) -> list[Ambiguity]:
    """All intersection and inclusion ambiguities, optionally only those with |w| <= max_len.

    Ordered by f_id, then kind (intersections first), then g_id and overlap offset.
    """
    prefixes = _prefix_index(rules)
    out = []
    for f in rules:
        lf = f.lhs
        found = []
        for k in range(len(lf) - 1, 0, -1):
            a_len = len(lf) - k
            for gid in prefixes.get(lf[a_len:], ()):
                g = rules[gid].lhs
                if max_len is not None and len(lf) + len(g) - k > max_len:
                    continue
                w = lf + g[k:]
                found.append(Ambiguity(AmbiguityKind.INTERSECTION, f.id, gid, w, lf[:a_len], g[k:]))
        found.sort(key=lambda x: (x.g_id, len(x.a)))
        out.extend(found)
        found = []
        if max_len is None or len(lf) <= max_len:
            for start in range(len(lf)):
                for end in range(start + 1, len(lf) + 1):
                    for gid in rules.lhs_ids(lf[start:end]):
                        if gid == f.id and start == 0 and end == len(lf):
                            continue
                        found.append(Ambiguity(AmbiguityKind.INCLUSION, f.id, gid, lf, lf[:start], lf[end:]))
        found.sort(key=lambda x: (x.g_id, len(x.a)))
        out.extend(found)
    return out


def composition(f: Rule, g: Rule, amb: Ambiguity) -> tuple[Word, Word]:
    """The two one-step reducts of the ambiguity word."""
    if amb.kind is AmbiguityKind.INTERSECTION:
        return f.rhs + amb.b, amb.a + g.rhs
    return f.rhs, amb.a + g.rhs + amb.b


def process_composition(p: Sequence[int], q: Sequence[int], rules: RuleSystem) -> Rule | None:
    """Reduce both sides; None if they meet, else the new oriented rule."""
    p, q = normal_form(p, rules), normal_form(q, rules)
    if p == q:
        return None
    lhs, rhs = orient(p, q)
    return Rule(len(rules), lhs, rhs)


# -- verification --------------------------------------------------------------

@dataclass
class VerifyReport:
    max_w: int
    checked: int = 0
    violations: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def format(self) -> str:
        lines = [f"checked {self.checked} violations {len(self.violations)} max_w {self.max_w}"]
        for amb, p, q in self.violations:
            lines.append(
                f"violation {amb.kind.value} f={amb.f_id} g={amb.g_id} w={format_word(amb.w)}: "
                f"{format_word(p)} != {format_word(q)}"
            )
        return "\n".join(lines) + "\n"


def verify_gs_up_to(rules: RuleSystem, max_w: int) -> VerifyReport:
    """Check every composition with |w| <= max_w reduces to zero under ``rules``."""
    report = VerifyReport(max_w)
    cache: dict[Word, Word] = {}

    def nf(x):
        y = cache.get(x)
        if y is None:
            y = cache[x] = normal_form(x, rules)
        return y

    for amb in find_ambiguities(rules, max_w):
        report.checked += 1
        p, q = composition(rules[amb.f_id], rules[amb.g_id], amb)
        p, q = nf(p), nf(q)
        if p != q:
            report.violations.append((amb, p, q))
    return report


# -- completion ----------------------------------------------------------------

class CompletionStatus(enum.Enum):
    SATURATED = "SaturatedUpToBound"
    RULE_BUDGET = "RuleBudgetExhausted"
    AMBIGUITY_BUDGET = "AmbiguityBudgetExhausted"


@dataclass(frozen=True)
class CompletionConfig:
    max_word_length: int = 10
    max_rules: int = 100_000
    max_ambiguities: int = 10**7

    def __post_init__(self):
        if min(self.max_word_length, self.max_rules, self.max_ambiguities) < 1:
            raise ValueError("completion bounds must be positive")


@dataclass
class CompletionReport:
    status: CompletionStatus
    rules: RuleSystem
    discarded_over_length: int = 0
    degree_preserving: bool = True
    processed: int = 0
    max_word_length: int = 0

    def format(self) -> str:
        head = f"status {self.status.value} rules {len(self.rules)} discarded {self.discarded_over_length}"
        lines = [head]
        if not self.degree_preserving:
            lines.append("# input presentation is not degree-preserving")
        lines += [f"rule: {format_word(r.lhs)} -> {format_word(r.rhs)}" for r in sorted_rules(self.rules)]
        return "\n".join(lines) + "\n"


def sorted_rules(rules: RuleSystem | Iterable[Rule]) -> RuleSystem:
    """Renumber rules in (|lhs|, deg-lex lhs) order."""
    rs = list(rules)
    n = rules.n_generators if isinstance(rules, RuleSystem) else None
    rs.sort(key=lambda r: (deglex_key(r.lhs), deglex_key(r.rhs)))
    if n is None:
        n = max((max(r.lhs + r.rhs) for r in rs), default=1)
    return RuleSystem(n, [(r.lhs, r.rhs) for r in rs])


def parse_rules(text: str, n: int | None = None) -> RuleSystem:
    """Read ``rule: <lhs> -> <rhs>`` lines (as written by CompletionReport.format)."""
    from .core import ParseError

    pairs = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line.startswith("rule:"):
            continue
        lhs, arrow, rhs = line[5:].partition("->")
        if not arrow:
            raise ParseError(f"line {lineno}: rule needs '->'")
        pairs.append((parse_word(lhs, n), parse_word(rhs, n)))
    if n is None:
        n = max((max(l + r) for l, r in pairs), default=1)
    try:
        return RuleSystem(n, pairs)
    except ValueError as e:
        raise ParseError(str(e)) from None


class _Engine:
    """Mutable rule store for one completion run: active rules plus lhs/factor indexes."""

    def __init__(self, n: int):
        self.n = n
        self.lhs: list[Word] = []
        self.rhs: list[Word] = []
        self.active: list[bool] = []
        self.by_lhs: dict[Word, int] = {}
        self.by_prefix: dict[Word, set[int]] = {}
        self.by_factor: dict[Word, set[int]] = {}
        self.lengths: dict[int, int] = {}
        self.n_active = 0

    def normal_form(self, w: Word) -> Word:
        by_lhs = self.by_lhs
        while True:
            lengths = sorted(self.lengths)
            for p in range(len(w)):
                best = None
                for L in lengths:
                    if p + L > len(w):
                        break
                    rid = by_lhs.get(w[p:p + L])
                    if rid is not None and (best is None or rid < best):
                        best = rid
                if best is not None:
                    w = w[:p] + self.rhs[best] + w[p + len(self.lhs[best]):]
                    break
            else:
                return w

    def add(self, lhs: Word, rhs: Word) -> int:
        rid = len(self.lhs)
        self.lhs.append(lhs)
        self.rhs.append(rhs)
        self.active.append(True)
        self.by_lhs[lhs] = rid
        for k in range(1, len(lhs)):
            self.by_prefix.setdefault(lhs[:k], set()).add(rid)
        for s in range(len(lhs)):
            for e in range(s + 1, len(lhs) + 1):
                self.by_factor.setdefault(lhs[s:e], set()).add(rid)
        self.lengths[len(lhs)] = self.lengths.get(len(lhs), 0) + 1
        self.n_active += 1
        return rid

    def retire(self, rid: int):
        lhs = self.lhs[rid]
        self.active[rid] = False
        del self.by_lhs[lhs]
        for k in range(1, len(lhs)):
            self.by_prefix[lhs[:k]].discard(rid)
        for s in range(len(lhs)):
            for e in range(s + 1, len(lhs) + 1):
                self.by_factor[lhs[s:e]].discard(rid)
        self.lengths[len(lhs)] -= 1
        if not self.lengths[len(lhs)]:
            del self.lengths[len(lhs)]
        self.n_active -= 1

    def overlaps(self, g: int, max_len: int):
        """Intersection ambiguities between rule g and every active rule, both orders."""
        lg = self.lhs[g]
        for k in range(len(lg) - 1, 0, -1):
            # g on the left: suffix of lhs(g) is a proper prefix of lhs(h)
            for h in sorted(self.by_prefix.get(lg[len(lg) - k:], ())):
                size = len(lg) + len(self.lhs[h]) - k
                if size <= max_len:
                    yield size, g, h, len(lg) - k
            # g on the right: suffix of lhs(h) is a proper prefix of lhs(g)
            for h in sorted(self.by_suffix_candidates(lg[:k])):
                if h == g:
                    continue
                lh = self.lhs[h]
                if len(lh) > k and lh[len(lh) - k:] == lg[:k]:
                    size = len(lh) + len(lg) - k
                    if size <= max_len:
                        yield size, h, g, len(lh) - k

    def by_suffix_candidates(self, factor: Word):
        return self.by_factor.get(factor, ())


def complete(p: Presentation, cfg: CompletionConfig = CompletionConfig()) -> CompletionReport:
    """Saturate compositions of the oriented relations of ``p`` up to the length bound.

    Work items (input relations, ambiguities, and equations left behind by
    retired rules) are processed by ascending word length, FIFO within a length.
    A rule is retired as soon as a newer rule's lhs occurs inside its lhs.
    """
    bound = cfg.max_word_length
    eng = _Engine(p.n_generators)
    heap: list = []
    seq = 0

    def push(size, item):
        nonlocal seq
        heapq.heappush(heap, (size, seq, item))
        seq += 1

    for u, v in p.relations:
        if u != v:
            push(max(len(u), len(v)), ("eq", u, v))

    discarded = 0
    processed = 0
    status = CompletionStatus.SATURATED
    while heap:
        size, _, item = heapq.heappop(heap)
        if item[0] == "amb":
            _, f, g, a_len = item
            if not (eng.active[f] and eng.active[g]):
                continue
            lf, lg = eng.lhs[f], eng.lhs[g]
            k = len(lf) - a_len
            u = eng.rhs[f] + lg[k:]
            v = lf[:a_len] + eng.rhs[g]
        else:
            _, u, v = item
        processed += 1
        if processed > cfg.max_ambiguities:
            status = CompletionStatus.AMBIGUITY_BUDGET
            break
        u, v = eng.normal_form(u), eng.normal_form(v)
        if u == v:
            continue
        lhs, rhs = orient(u, v)
        if len(lhs) > bound:
            discarded += 1
            continue
        for old in sorted(eng.by_factor.get(lhs, ())):
            eng.retire(old)
            push(len(eng.lhs[old]), ("eq", eng.lhs[old], eng.rhs[old]))
        g = eng.add(lhs, rhs)
        if eng.n_active > cfg.max_rules:
            status = CompletionStatus.RULE_BUDGET
            break
        for size2, f, h, a_len in sorted(set(eng.overlaps(g, bound))):
            push(size2, ("amb", f, h, a_len))

    active = [Rule(0, eng.lhs[r], eng.rhs[r]) for r in range(len(eng.lhs)) if eng.active[r]]
    active.sort(key=lambda r: (deglex_key(r.lhs), deglex_key(r.rhs)))
    rules = RuleSystem(p.n_generators, [(r.lhs, r.rhs) for r in active])
    return CompletionReport(status, rules, discarded, p.degree_preserving, processed, bound)


def completed_system(p: Presentation, max_word_length: int) -> RuleSystem:
    """Interreduced rules from a saturated completion run (raises if a budget tripped)."""
    rep = complete(p, CompletionConfig(max_word_length=max_word_length))
    if rep.status is not CompletionStatus.SATURATED:
        raise RuntimeError(f"completion stopped early: {rep.status.value}")
    return interreduce(rep.rules)


def interreduce(rules: RuleSystem) -> RuleSystem:
    """Drop rules whose lhs is reducible by another rule, then normalize every rhs."""
    lhs_ids: dict[Word, int] = {}
    for r in rules:
        lhs_ids.setdefault(r.lhs, r.id)
    keep = []
    for r in rules:
        if lhs_ids[r.lhs] != r.id:
            continue
        L = len(r.lhs)
        redundant = any(
            r.lhs[s:e] in lhs_ids
            for s in range(L)
            for e in range(s + 1, L + 1)
            if (s, e) != (0, L)
        )
        if not redundant:
            keep.append(r)
    kept = RuleSystem(rules.n_generators, [(r.lhs, r.rhs) for r in keep])
    return sorted_rules(
        RuleSystem(rules.n_generators, [(r.lhs, normal_form(r.rhs, kept)) for r in kept])
    )


# -- BFS oracle ----------------------------------------------------------------

class NonDegreePreserving(ValueError):
    pass


class CapExceeded(RuntimeError):
    pass


def _moves(p: Presentation) -> tuple[dict[Word, list[Word]], list[int]]:
    moves: dict[Word, list[Word]] = {}
    for u, v in p.relations:
        if u == v:
            continue
        moves.setdefault(u, []).append(v)
        moves.setdefault(v, []).append(u)
    return moves, sorted({len(k) for k in moves})


def bfs_class(w: Sequence[int], p: Presentation, cap: int = DEFAULT_ORACLE_CAP, target: Word | None = None) -> set[Word]:
    """Every word reachable from ``w`` by applying relations in either direction.

    With ``target`` given, stops early once it is reached (the set is then partial).
    """
    if not p.degree_preserving:
        raise NonDegreePreserving("BFS oracle needs a degree-preserving presentation")
    w = tuple(w)
    moves, lengths = _moves(p)
    seen = {w}
    queue = deque([w])
    while queue:
        x = queue.popleft()
        if x == target:
            break
        for i in range(len(x)):
            for L in lengths:
                if i + L > len(x):
                    break
                outs = moves.get(x[i:i + L])
                if outs:
                    for y in outs:
                        z = x[:i] + y + x[i + L:]
                        if z not in seen:
                            seen.add(z)
                            if len(seen) > cap:
                                raise CapExceeded(f"equivalence class exceeds {cap} words")
                            queue.append(z)
    return seen


def oracle_equal(u: Sequence[int], v: Sequence[int], p: Presentation, cap: int = DEFAULT_ORACLE_CAP) -> bool:
    u, v = tuple(u), tuple(v)
    if len(u) != len(v):
        return False
    return v in bfs_class(u, p, cap, target=v)
