#!/usr/bin/env python3
"""Print the CR1-CR6 comparison table with Content, Structure and Overall.

Reads the bundled scores file unless --scores points elsewhere, and can
write the CSV form next to the text table.

    python scripts/reproduce_table1.py --csv out/table1.csv
"""

from __future__ import annotations

import argparse
from pathlib import Path

from iiconforge.evalsuite import build_report, load_scores


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--scores", type=Path, help="kg_name,cr1..cr6,computed_flags CSV (default: bundled)")
    ap.add_argument("--csv", type=Path, help="also write the report as CSV")
    args = ap.parse_args(argv)
    report = build_report(load_scores(args.scores))
    print(report.to_text(), end="")
    if args.csv:
        args.csv.parent.mkdir(parents=True, exist_ok=True)
        args.csv.write_text(report.to_csv(), encoding="utf-8")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
