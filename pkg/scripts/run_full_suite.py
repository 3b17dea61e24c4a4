"""Run every case elimination, re-check the certificates and print a summary table."""
from __future__ import annotations

import argparse
import time
from collections import Counter
from dataclasses import dataclass
from pathlib import Path

from steiner6.cases import main_theorem_mismatches, run_full_suite
from steiner6.certificates import dump_lines, table_row
from steiner6.checker import check_all


@dataclass
class Config:
    output: Path | None = None
    show_rows: bool = False


def main(cfg: Config) -> int:
    t0 = time.perf_counter()
    certs = run_full_suite()
    elapsed = time.perf_counter() - t0
    problems = check_all(certs)
    mismatches = main_theorem_mismatches(certs)
    if cfg.show_rows:
        for c in certs:
            print(table_row(c))
    by_condition = Counter(c.violated_condition or c.verdict for c in certs)
    print(f"{len(certs)} certificates in {elapsed:.2f}s")
    for cond, n in sorted(by_condition.items()):
        print(f"  {cond:22s} {n}")
    print(f"checker problems: {len(problems)}, theorem mismatches: {len(mismatches)}")
    if cfg.output:
        cfg.output.write_text(dump_lines(certs))
        print(f"wrote {cfg.output}")
    return 0 if not problems and not mismatches else 1


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--output", type=Path)
    ap.add_argument("--rows", action="store_true")
    a = ap.parse_args()
    raise SystemExit(main(Config(a.output, a.rows)))
