"""Run every worked-example pipeline and write the reports to a directory."""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from ggscodes.reproduce import reproduce_ex61, reproduce_ex62, reproduce_family


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out", type=Path, default=Path("results"))
    ap.add_argument("--trials", type=int, default=100_000)
    ap.add_argument("--seed", type=int, default=1)
    ap.add_argument("--heavy", action="store_true")
    args = ap.parse_args()
    args.out.mkdir(parents=True, exist_ok=True)
    reports = {
        "ex61": reproduce_ex61(trials=args.trials, seed=args.seed),
        "ex61_family": reproduce_family(trials=min(args.trials, 10_000), seed=args.seed),
        "ex62": reproduce_ex62(heavy=args.heavy),
    }
    ok = True
    for name, rep in reports.items():
        text = "\n".join(rep.lines())
        (args.out / f"{name}.txt").write_text(text + "\n")
        print(text)
        ok &= rep.ok
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
