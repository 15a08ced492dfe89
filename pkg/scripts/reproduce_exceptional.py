#!/usr/bin/env python3
"""Print the E6(6) subalgebra weight evaluations and the exceptional verdicts."""
from hcorbits.root_systems import (
    THETA_CHI,
    THETA_CHI_PRIME,
    e6_6_datum,
    exceptional_catalog,
    exceptional_verdict,
    theta,
)


def main():
    datum = e6_6_datum()
    for name, spec in (("theta_chi", THETA_CHI), ("theta_chi'", THETA_CHI_PRIME)):
        th = theta(spec)
        vals = ", ".join(map(str, datum.evaluate_all(th)))
        print(f"{name:<11} coweight coords {tuple(map(str, th.coords))}")
        print(f"{'':<11} weights ({vals})  cover order {datum.cover_order(th)}")
    print()
    for entry in exceptional_catalog():
        v = exceptional_verdict(entry)
        line = f"{entry.key:<12} case {entry.case}  {v['verdict']}"
        if "counts" in v:
            line += "  counts " + ", ".join(f"{k}={n}" for k, n in v["counts"].items())
        print(line)


if __name__ == "__main__":
    main()
