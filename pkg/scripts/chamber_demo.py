#!/usr/bin/env python3
"""Chamber scan for E[1] with E = (1,0,2) at alpha = 1, beta = 3, written as JSON and SVG."""
import argparse
import json

from stabsys import ClassVector
from stabsys.plot import write_svg
from stabsys.walls import chamber_scan


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--bound", type=int, default=10)
    ap.add_argument("--svg", default="chambers.svg")
    args = ap.parse_args()
    scan = chamber_scan(-ClassVector(1, 0, 2), 1, 3, (1, 6), args.bound)
    report = scan.to_json()
    print(json.dumps(report, indent=2, sort_keys=True))
    write_svg(report, args.svg)
    print(f"wrote {args.svg}")


if __name__ == "__main__":
    main()
