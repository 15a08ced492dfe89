#!/usr/bin/env python3
"""Sweep the spin-pair classifier over all admissible tau with n <= N.

Each orbit is classified at the canonical parameter and at a random
parameter with half-integral or integral column entries.
"""
import argparse
import random
from fractions import Fraction

from hcorbits.partitions import codim4_partitions
from hcorbits.typea import QuantizationParameterA, sweep


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-n", type=int, default=8)
    ap.add_argument("--jobs", type=int, default=1)
    ap.add_argument("--seed", type=int, default=20240611)
    a = ap.parse_args()

    rng = random.Random(a.seed)
    items = []
    for tau in codim4_partitions(a.max_n):
        if tau[1] > 8:  # component groups beyond Gamma_8 are slow to tabulate
            continue
        items.append((tau, None, "all"))
        lam = QuantizationParameterA(tuple(Fraction(rng.randint(-4, 4), 2) for _ in range(tau[1])))
        items.append((tau, lam, "all"))

    print(f"{'tau':<16} {'lambda':<24} {'group':<14} {'systems':>7} {'HC':>4}")
    for d in sweep(items, a.jobs):
        i, cg, c = d["input"], d["component_group"], d["counts"]
        print(f"{i['tau']:<16} {i['lambda']:<24} {cg['label']:<14} {c['local_systems']:>7} {c['hc_modules']:>4}")


if __name__ == "__main__":
    main()
