"""Timing for positive normal forms and group Garside forms.

    python scripts/bench_normalize.py --lengths 50 100 200 400 --n 3 6 9
"""

import argparse
import random
import statistics
import time
from dataclasses import dataclass, field

from braidgs.braid import gs_normalize
from braidgs.garside import group_normal_form


@dataclass
class Config:
    lengths: list[int] = field(default_factory=lambda: [50, 100, 200])
    ns: list[int] = field(default_factory=lambda: [3, 6, 9])
    samples: int = 20
    seed: int = 0


def timed(f, *args):
    t0 = time.perf_counter()
    f(*args)
    return time.perf_counter() - t0


def run(cfg: Config):
    rng = random.Random(cfg.seed)
    print(f"{'kind':<8} {'n':>3} {'length':>6} {'median ms':>10} {'max ms':>8}")
    for n in cfg.ns:
        for L in cfg.lengths:
            pos = [timed(gs_normalize, tuple(rng.randint(1, n) for _ in range(L)), n) for _ in range(cfg.samples)]
            print(f"{'positive':<8} {n:>3} {L:>6} {1e3 * statistics.median(pos):>10.2f} {1e3 * max(pos):>8.2f}")
        for L in (12, 24):
            grp = [
                timed(group_normal_form, tuple(rng.choice((1, -1)) * rng.randint(1, n) for _ in range(L)), n)
                for _ in range(cfg.samples)
            ]
            print(f"{'group':<8} {n:>3} {L:>6} {1e3 * statistics.median(grp):>10.2f} {1e3 * max(grp):>8.2f}")


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--lengths", type=int, nargs="+", default=Config().lengths)
    ap.add_argument("--n", type=int, nargs="+", default=Config().ns, dest="ns")
    ap.add_argument("--samples", type=int, default=Config.samples)
    ap.add_argument("--seed", type=int, default=Config.seed)
    a = ap.parse_args()
    run(Config(a.lengths, a.ns, a.samples, a.seed))
