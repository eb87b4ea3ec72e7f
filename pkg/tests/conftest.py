"""Shared oracles for the test suite.

The helpers here deliberately avoid the package's own matching code: classes
are found by naive substring replacement and the deg-lex order is spelled out
letter by letter.
"""

import itertools
import random

import pytest

ACCEPTANCE_LINES = []


def brute_class(w, relations):
    """Equivalence class of ``w`` under relations applied both ways (DFS, no caps)."""
    w = tuple(w)
    pairs = [(tuple(l), tuple(r)) for l, r in relations]
    pairs += [(r, l) for l, r in pairs]
    seen = {w}
    stack = [w]
    while stack:
        x = stack.pop()
        for a, b in pairs:
            k = len(a)
            for p in range(len(x) - k + 1):
                if x[p:p + k] == a:
                    y = x[:p] + b + x[p + k:]
                    if y not in seen:
                        seen.add(y)
                        stack.append(y)
    return seen


def brute_less(u, v):
    """Deg-lex u < v, written out without tuple comparison."""
    if len(u) != len(v):
        return len(u) < len(v)
    for a, b in zip(u, v):
        if a != b:
            return a < b
    return False


def brute_min(words):
    best = None
    for w in words:
        if best is None or brute_less(w, best):
            best = w
    return best


def all_words(n, max_len, min_len=0):
    for L in range(min_len, max_len + 1):
        yield from itertools.product(range(1, n + 1), repeat=L)


def random_word(rng, n, max_len, min_len=0):
    return tuple(rng.randint(1, n) for _ in range(rng.randint(min_len, max_len)))


def random_walk(w, relations, rng, steps):
    """Apply ``steps`` random relation moves (either direction) to ``w``."""
    pairs = [(tuple(l), tuple(r)) for l, r in relations]
    pairs += [(r, l) for l, r in pairs]
    w = tuple(w)
    for _ in range(steps):
        moves = [
            (p, a, b)
            for a, b in pairs
            for p in range(len(w) - len(a) + 1)
            if w[p:p + len(a)] == a
        ]
        if not moves:
            break
        p, a, b = rng.choice(moves)
        w = w[:p] + b + w[p + len(a):]
    return w


@pytest.fixture
def rng():
    return random.Random(20240611)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
