#!/usr/bin/env python3
"""Destabilizer scans for (O_P,0), (0,V_1) and |O_P| over a grid of PS parameters."""
import argparse
from fractions import Fraction

from stabsys import ClassVector, fmt_q
from stabsys.walls import destabilizer_scan

CLASSES = {"(O_P,0)": ClassVector(0, 1, 0), "(0,V_1)": ClassVector(0, 0, 1), "|O_P|": ClassVector(0, 1, 1)}


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--bound", type=int, default=20)
    ap.add_argument("--alphas", default="1/3,1,5")
    ap.add_argument("--betas", default="0,1/2,3")
    ap.add_argument("--gammas", default="11/10,3,20")
    args = ap.parse_args()
    grid = [
        (Fraction(a), Fraction(b), Fraction(g))
        for a in args.alphas.split(",")
        for b in args.betas.split(",")
        for g in args.gammas.split(",")
    ]
    for name, cls in CLASSES.items():
        total = non_extremal = 0
        for a, b, g in grid:
            found = destabilizer_scan(cls, a, b, g, args.bound)
            total += len(found)
            non_extremal += sum(k != d + n for n, d, k in found)
        print(f"{name}: {len(grid)} points, {total} candidates, {non_extremal} with k < d + n")
    a, b, g = grid[0]
    print(f"sample point alpha={fmt_q(a)} beta={fmt_q(b)} gamma={fmt_q(g)}")


if __name__ == "__main__":
    main()
