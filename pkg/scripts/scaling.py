"""Wall time of recognize_thick_forest on generated thick trees.

Each row doubles the number of thick vertices at fixed clique size and
density, so n roughly doubles too.  Prints a table and optionally a CSV.
"""

from __future__ import annotations

import argparse
import csv
import statistics
import sys
import time
from dataclasses import dataclass

from thickgraphs.generators import gen_random_thick_forest
from thickgraphs.model import verify_model
from thickgraphs.recognition import recognize_thick_forest


@dataclass(frozen=True)
class ScalingConfig:
    start_nh: int = 100
    doublings: int = 2
    max_size: int = 38
    density: float = 0.5
    seeds: tuple[int, ...] = (1, 2, 3)


def measure(nh: int, cfg: ScalingConfig) -> dict:
    times, ns, ms = [], [], []
    for seed in cfg.seeds:
        g, _ = gen_random_thick_forest(seed, nh, cfg.max_size, cfg.density, connected=True)
        t0 = time.perf_counter()
        out = recognize_thick_forest(g)
        times.append(time.perf_counter() - t0)
        if not (out.accepted and verify_model(g, out.model, require="forest")):
            raise AssertionError(f"generated thick tree rejected (seed {seed}, nH {nh})")
        ns.append(g.n)
        ms.append(g.m)
    return {"nh": nh, "n": int(statistics.median(ns)), "m": int(statistics.median(ms)),
            "seconds": statistics.median(times)}


def run(cfg: ScalingConfig) -> list[dict]:
    rows = []
    nh = cfg.start_nh
    for _ in range(cfg.doublings + 1):
        rows.append(measure(nh, cfg))
        nh *= 2
    for prev, row in zip(rows, rows[1:]):
        row["ratio"] = row["seconds"] / prev["seconds"]
    return rows


def main(argv: list[str] | None = None) -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--start-nh", type=int, default=ScalingConfig.start_nh)
    ap.add_argument("--doublings", type=int, default=ScalingConfig.doublings)
    ap.add_argument("--csv")
    args = ap.parse_args(argv)
    sys.setrecursionlimit(100_000)
    rows = run(ScalingConfig(start_nh=args.start_nh, doublings=args.doublings))
    print(f"{'nH':>6} {'n':>7} {'m':>9} {'seconds':>9} {'ratio':>6}")
    for r in rows:
        ratio = f"{r['ratio']:.2f}" if "ratio" in r else "-"
        print(f"{r['nh']:>6} {r['n']:>7} {r['m']:>9} {r['seconds']:>9.2f} {ratio:>6}")
    if args.csv:
        with open(args.csv, "w", newline="") as fh:
            w = csv.DictWriter(fh, fieldnames=["nh", "n", "m", "seconds", "ratio"])
            w.writeheader()
            w.writerows(rows)


if __name__ == "__main__":
    main()
