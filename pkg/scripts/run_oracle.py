"""Fast-solver versus exact-search comparison for every class, written as JSON lines."""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from pathlib import Path

from tdcolor.harness import FAST_CLASSES, disagreements, oracle_compare


@dataclass(frozen=True)
class Config:
    count: int = 200
    seed: int = 42
    max_n: tuple[tuple[str, int], ...] = (("cograph", 10), ("chain", 12), ("split", 9), ("tree", 12))
    out: Path = Path("oracle_reports.jsonl")


def run(cfg: Config) -> int:
    failures = 0
    with cfg.out.open("w") as fh:
        for cls, max_n in cfg.max_n:
            reports = oracle_compare(cls, cfg.count, max_n, cfg.seed)
            for r in reports:
                fh.write(json.dumps({"class": cls, **r.to_dict()}) + "\n")
            bad = disagreements(reports)
            failures += len(bad)
            secs = sum(r.wall_time for r in reports)
            print(f"{cls:8} n<={max_n:2}  {len(reports)} instances  {len(bad)} disagreements  {secs:.2f}s")
    return failures


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--count", type=int, default=Config.count)
    ap.add_argument("--seed", type=int, default=Config.seed)
    ap.add_argument("--out", type=Path, default=Config.out)
    args = ap.parse_args()
    assert set(dict(Config.max_n)) == set(FAST_CLASSES)
    sys.exit(1 if run(Config(count=args.count, seed=args.seed, out=args.out)) else 0)


if __name__ == "__main__":
    main()
