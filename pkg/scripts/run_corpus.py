"""Run every registered example through all suites and print a summary table.

    python3 scripts/run_corpus.py --max-degree 4 --out corpus.json
"""

import argparse
import time

from hopfcyc.cli import RunConfig, render_table, run
from hopfcyc.serialize import dumps
from hopfcyc.zoo import REGISTRY


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--max-degree", type=int, default=4)
    p.add_argument("--out", default=None)
    args = p.parse_args()

    t0 = time.perf_counter()
    report, status = run(RunConfig(examples=list(REGISTRY), max_degree=args.max_degree))
    print(render_table(report), end="")
    for name, t in report["timing"].items():
        per = "  ".join(f"{s}={v:.2f}s" for s, v in t["suites"].items())
        print(f"  {name:<16} {per}")
    print(f"wall time {time.perf_counter() - t0:.2f}s")
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(dumps(report))
    return status


if __name__ == "__main__":
    raise SystemExit(main())
