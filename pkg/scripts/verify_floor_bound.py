"""Compare the integer k_max for Steiner 6-designs with the float closed form floor(sqrt(v - 19/4) + 9/2)."""
from __future__ import annotations

import argparse
import math
from dataclasses import dataclass

from steiner6.design import k_max_t6


@dataclass
class Config:
    v_lo: int = 8
    v_hi: int = 10**6


def main(cfg: Config) -> int:
    disagree = [v for v in range(cfg.v_lo, cfg.v_hi + 1)
                if k_max_t6(v) != math.floor(math.sqrt(v - 19 / 4) + 4.5)]
    print(f"v in [{cfg.v_lo}, {cfg.v_hi}]: {len(disagree)} disagreements")
    for v in disagree[:20]:
        print(f"  v={v} integer={k_max_t6(v)} float={math.floor(math.sqrt(v - 19 / 4) + 4.5)}")
    return 1 if disagree else 0


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--v-lo", type=int, default=Config.v_lo)
    ap.add_argument("--v-hi", type=int, default=Config.v_hi)
    a = ap.parse_args()
    raise SystemExit(main(Config(a.v_lo, a.v_hi)))
