#!/usr/bin/env python3
"""Sweep (alpha, beta) and print the S threshold, the t window at threshold + 1 and whether BG is valid there."""
import argparse
from fractions import Fraction

from stabsys import fmt_q
from stabsys.regions import bg_solve, s_threshold, t_window


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--alphas", default="1/3,1/2,1,2,5")
    ap.add_argument("--betas", default="1/2,3/2,2,3,6")
    args = ap.parse_args()
    alphas = [Fraction(x) for x in args.alphas.split(",")]
    betas = [Fraction(x) for x in args.betas.split(",")]
    print("alpha\tbeta\tthreshold\tt_window\tvalid_at_mid")
    for a in alphas:
        for b in betas:
            if b == 1:
                continue
            thr = s_threshold(a, b)
            gamma = max(thr, Fraction(1)) + 1
            w = t_window(a, b, gamma)
            if w is None:
                print(f"{fmt_q(a)}\t{fmt_q(b)}\t{fmt_q(thr)}\t-\t-")
                continue
            bg = bg_solve(a, b, gamma, w.midpoint())
            print(f"{fmt_q(a)}\t{fmt_q(b)}\t{fmt_q(thr)}\t[{fmt_q(w.lo)}, {fmt_q(w.hi)}]\t{bg.valid}")


if __name__ == "__main__":
    main()
