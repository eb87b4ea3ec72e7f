"""Materialize the run/commutation rule family and check every composition.

    python scripts/verify_theorem.py --n 2 3 4 5 --max-len 10
"""

import argparse
import time
from dataclasses import dataclass, field

from braidgs.braid import theorem_rules
from braidgs.completion import verify_gs_up_to


@dataclass
class Config:
    ns: list[int] = field(default_factory=lambda: [2, 3, 4])
    max_len: int = 10


def run(cfg: Config) -> bool:
    ok = True
    print(f"{'n':>2} {'rules':>7} {'compositions':>12} {'violations':>10} {'seconds':>8}")
    for n in cfg.ns:
        t0 = time.perf_counter()
        rules = theorem_rules(n, cfg.max_len)
        rep = verify_gs_up_to(rules, cfg.max_len)
        dt = time.perf_counter() - t0
        print(f"{n:>2} {len(rules):>7} {rep.checked:>12} {len(rep.violations):>10} {dt:>8.2f}")
        for line in rep.format().splitlines()[1:6]:
            print("   ", line)
        ok &= rep.ok
    return ok


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", type=int, nargs="+", default=Config().ns, dest="ns")
    ap.add_argument("--max-len", type=int, default=Config.max_len)
    a = ap.parse_args()
    raise SystemExit(0 if run(Config(a.ns, a.max_len)) else 1)
