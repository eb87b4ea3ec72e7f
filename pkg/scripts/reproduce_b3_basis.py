"""Run bounded completion on B+_3 and compare with the closed-form rule family.

    python scripts/reproduce_b3_basis.py --bounds 6 8 10 12 14
"""

import argparse
import time
from dataclasses import dataclass, field

from braidgs.braid import artin_presentation
from braidgs.completion import CompletionConfig, complete, interreduce
from braidgs.core import format_word


@dataclass
class Config:
    bounds: list[int] = field(default_factory=lambda: [6, 8, 10, 12])
    show_rules: bool = False


def closed_form(bound):
    rules = {((2, 1, 2), (1, 2, 1))}
    for l in range(2, bound - 2):
        rules.add(((2,) + (1,) * l + (2, 1), (1, 2, 1, 1) + (2,) * (l - 1)))
    return rules


def run(cfg: Config):
    print(f"{'bound':>5} {'rules':>5} {'closed form':>11} {'match':>5} {'seconds':>8}")
    for bound in cfg.bounds:
        t0 = time.perf_counter()
        rep = complete(artin_presentation(2), CompletionConfig(max_word_length=bound))
        rules = interreduce(rep.rules)
        dt = time.perf_counter() - t0
        got = {(r.lhs, r.rhs) for r in rules}
        want = closed_form(bound)
        print(f"{bound:>5} {len(got):>5} {len(want):>11} {str(got == want):>5} {dt:>8.3f}")
        if cfg.show_rules:
            for r in rules:
                print(f"        {format_word(r.lhs)} -> {format_word(r.rhs)}")


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--bounds", type=int, nargs="+", default=Config().bounds)
    ap.add_argument("--show-rules", action="store_true")
    a = ap.parse_args()
    run(Config(a.bounds, a.show_rules))
