"""Sweep the open PGammaL(2, p^e) cases over growing s_max and report timing and hits."""
from __future__ import annotations

import argparse
import time
from dataclasses import dataclass

from steiner6.residual import SearchBounds, search_residual


@dataclass
class Config:
    s_values: tuple[int, ...] = (100, 250, 500, 1000)
    u_max: int = 2
    c_max: int | None = None


def main(cfg: Config) -> int:
    print(f"{'s_max':>6} {'searched':>9} {'skipped':>8} {'hits':>5} {'survivors':>9} {'secs':>7}")
    for s_max in cfg.s_values:
        if cfg.c_max is None:
            bounds = SearchBounds(s_max=s_max, u_max=cfg.u_max)
        else:
            bounds = SearchBounds.free_c(cfg.c_max, s_max=s_max, u_max=cfg.u_max)
        t0 = time.perf_counter()
        res = search_residual(bounds)
        dt = time.perf_counter() - t0
        print(f"{s_max:>6} {res.searched:>9} {res.skipped:>8} {len(res.hits):>5} "
              f"{len(res.survivors):>9} {dt:>7.2f}")
        for h in res.hits:
            print(f"    hit q={h.q} k={h.k} aux={h.aux} killed_by={h.killed_by}")
    return 0


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--s", type=int, nargs="+", default=list(Config.s_values))
    ap.add_argument("--u-max", type=int, default=Config.u_max)
    ap.add_argument("--c-max", type=int)
    a = ap.parse_args()
    raise SystemExit(main(Config(tuple(a.s), a.u_max, a.c_max)))
