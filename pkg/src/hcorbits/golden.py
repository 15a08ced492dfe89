"""Pinned values checked by ``hcorbits selftest``."""
from __future__ import annotations

from fractions import Fraction
from typing import Callable

from .partitions import Partition
from .pin_group import component_group
from .root_systems import THETA_CHI, THETA_CHI_PRIME, e6_6_datum, exceptional_verdict, lookup, theta
from .slices import a2_outer_verdict
from .typea import QuantizationParameterA, classify_spin


def _counts(tau, lam=None):
    r = classify_spin(Partition(tau), lam)
    return r.local_systems, r.hc_modules


def _half(*xs):
    return tuple(Fraction(x) for x in xs)


CHECKS: list[tuple[str, Callable[[], object], object]] = [
    ("(2,1) spin, lambda=0: 4 systems, 3 HC", lambda: _counts((2, 1)), (4, 3)),
    ("(2,1) spin, lambda=(1/2,0): 2 HC", lambda: _counts((2, 1), QuantizationParameterA(_half("1/2", 0)))[1], 2),
    ("(3,2,1) spin, lambda=0: 8 systems, 6 HC", lambda: _counts((3, 2, 1)), (8, 6)),
    ("component group of (3,2,1)", lambda: component_group(Partition((3, 2, 1))).describe(),
     "Z4xZ2 (order 8, extension model)"),
    ("a2 outer, p=0, scalar -i", lambda: a2_outer_verdict(0, "-i").level, "not_quantizable"),
    ("a2 outer, p=2, scalar i", lambda: a2_outer_verdict(2, "i").level, "quantizable"),
    ("E6(6) weights at theta_chi", lambda: e6_6_datum().evaluate_all(theta(THETA_CHI)), _half(0, 1, 0, -2)),
    ("E6(6) weights at theta_chi'", lambda: e6_6_datum().evaluate_all(theta(THETA_CHI_PRIME)),
     _half("-1/2", 0, "1/2", 0)),
    ("cover orders", lambda: (e6_6_datum().cover_order(theta(THETA_CHI)),
                              e6_6_datum().cover_order(theta(THETA_CHI_PRIME))), (1, 2)),
    ("E6(6)#10 counts", lambda: exceptional_verdict(lookup("E6(6)", 10))["counts"],
     {"local_systems": 4, "hc_modules": 3}),
    ("E7(7)#50 counts", lambda: exceptional_verdict(lookup("E7(7)", 50))["counts"],
     {"local_systems": 16, "none": 4, "K": 4, "Kbar_genuine": 4, "Ktilde_genuine": 4}),
    ("E8(8)#43", lambda: (lookup("E8(8)", 43).Ztilde_K, exceptional_verdict(lookup("E8(8)", 43))["verdict"][:11]),
     (("Z2",), "equivalence")),
]


def run_checks() -> list[tuple[str, bool, str]]:
    out = []
    for name, fn, expected in CHECKS:
        try:
            got = fn()
            out.append((name, got == expected, repr(got)))
        except Exception as exc:  # reported, not raised
            out.append((name, False, f"{type(exc).__name__}: {exc}"))
    return out
