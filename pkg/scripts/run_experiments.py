"""Run every canned experiment and write one JSON file per runner.

usage: python scripts/run_experiments.py [OUTDIR] [NAME ...]
"""

import json
import sys
from pathlib import Path

from indsat.experiments import RUNNERS


def main(argv):
    out = Path(argv[0]) if argv else Path("results")
    names = argv[1:] or sorted(RUNNERS)
    out.mkdir(parents=True, exist_ok=True)
    for name in names:
        report = RUNNERS[name]()
        (out / f"{name}.json").write_text(json.dumps(report, sort_keys=True, indent=1) + "\n")
        print(f"{name}: written to {out / (name + '.json')}")


if __name__ == "__main__":
    main(sys.argv[1:])
