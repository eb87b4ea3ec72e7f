"""Bounded completion on presentations with no known closed-form basis.

Runs Artin, band-generator and Coxeter-matrix presentations at increasing
bounds and reports how the interreduced system grows. Also checks which
members of the materialized run family survive interreduction.

    python scripts/completion_survey.py --bounds 6 8 10
"""

import argparse
import time
from dataclasses import dataclass, field

from braidgs.braid import (
    CoxeterMatrix,
    Family,
    artin_presentation,
    bkl_presentation,
    coxeter_braid_presentation,
    match_theorem_rule,
    theorem_rules,
)
from braidgs.completion import CompletionConfig, complete, interreduce


@dataclass
class Config:
    bounds: list[int] = field(default_factory=lambda: [6, 8, 10])
    max_rules: int = 20_000


PRESETS = {
    "artin:3": lambda: artin_presentation(3),
    "artin:4": lambda: artin_presentation(4),
    "bkl:3": lambda: bkl_presentation(3),
    "bkl:4": lambda: bkl_presentation(4),
    "coxeter B2 (m=4)": lambda: coxeter_braid_presentation(CoxeterMatrix(2, {(1, 2): 4})),
    "coxeter G2 (m=6)": lambda: coxeter_braid_presentation(CoxeterMatrix(2, {(1, 2): 6})),
    "coxeter B3": lambda: coxeter_braid_presentation(CoxeterMatrix(3, {(1, 2): 4, (2, 3): 3})),
    "coxeter affine A2": lambda: coxeter_braid_presentation(CoxeterMatrix(3, {(1, 2): 3, (2, 3): 3, (1, 3): 3})),
}


def survey(cfg: Config):
    print(f"{'presentation':<20} {'bound':>5} {'status':<26} {'rules':>6} {'discarded':>9} {'seconds':>8}")
    for name, build in PRESETS.items():
        for bound in cfg.bounds:
            t0 = time.perf_counter()
            rep = complete(build(), CompletionConfig(max_word_length=bound, max_rules=cfg.max_rules))
            rules = interreduce(rep.rules)
            dt = time.perf_counter() - t0
            print(f"{name:<20} {bound:>5} {rep.status.value:<26} {len(rules):>6} {rep.discarded_over_length:>9} {dt:>8.2f}")


def redundancy(n=4, max_len=10):
    """Run rules with empty W and j <= i always contain a shorter leading word."""
    rules = theorem_rules(n, max_len)
    kept = {r.lhs for r in interreduce(rules)}
    tally = {"kept": 0, "dropped": 0}
    empty_w_small_j = {"kept": 0, "dropped": 0}
    for r in rules:
        m = match_theorem_rule(r.lhs)
        key = "kept" if r.lhs in kept else "dropped"
        tally[key] += 1
        if m.kind is Family.RUN and m.position == 0 and m.length == len(r.lhs) and m.w_len == 0 and m.j <= m.i:
            empty_w_small_j[key] += 1
    print(f"\nrun family n={n} up to length {max_len}: {tally}")
    print(f"  of which W empty and j <= i: {empty_w_small_j}")


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--bounds", type=int, nargs="+", default=Config().bounds)
    ap.add_argument("--max-rules", type=int, default=Config.max_rules)
    a = ap.parse_args()
    survey(Config(a.bounds, a.max_rules))
    redundancy()
