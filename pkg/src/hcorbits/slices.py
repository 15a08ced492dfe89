"""The five 4-dimensional slice singularities and their quantizability verdicts."""
from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from importlib import resources

from .cyclotomic import Cyclotomic

KINDS = ("a2", "c2", "c4_mod_z3", "a2_mod_s2", "chi")
LEVELS = ("not_quantizable", "quantizable", "strongly_quantizable")

I = Cyclotomic.root_of_unity(4)
SCALARS = {"1": Cyclotomic.rational(1), "i": I, "-1": Cyclotomic.rational(-1), "-i": -I}


@dataclass(frozen=True)
class SliceSingularity:
    kind: str
    number: int
    name: str
    description: str
    exceptional_only: bool
    unobstructive: dict
    citation: str


@dataclass(frozen=True)
class QuantizabilityVerdict:
    level: str
    citation: str

    @property
    def quantizable(self) -> bool:
        return self.level != "not_quantizable"

    @property
    def strongly(self) -> bool:
        return self.level == "strongly_quantizable"


@lru_cache(maxsize=None)
def catalog() -> tuple[SliceSingularity, ...]:
    raw = json.loads(resources.files("hcorbits.data").joinpath("slices.json").read_text())
    return tuple(SliceSingularity(**entry) for entry in raw["slices"])


def get_slice(kind: str) -> SliceSingularity:
    for s in catalog():
        if s.kind == kind:
            return s
    raise ValueError(f"unknown slice kind {kind!r}; expected one of {KINDS}")


def unobstructive(kind: str, involution_class: str = "any"):
    """True/False, or a string for the conditional and externally settled cases."""
    s = get_slice(kind)
    if involution_class not in ("inner", "outer", "any"):
        raise ValueError(f"involution class {involution_class!r}")
    if "any" in s.unobstructive:
        return s.unobstructive["any"]
    if involution_class == "any":
        raise ValueError(f"{kind} depends on the involution: pass inner or outer")
    return s.unobstructive[involution_class]


def twist_from_period(period) -> Fraction:
    """TDO twist on P^2 of the a2 slice quantization with the given period."""
    return Fraction(period) + Fraction(3, 2)


def excluded_scalar(period) -> Cyclotomic:
    """The genuine Z_4 scalar i^(2p-1) that fails to quantize at integral period p."""
    p = Fraction(period)
    if p.denominator != 1:
        raise ValueError("only integral periods exclude a single scalar")
    return Cyclotomic.root_of_unity(4, 2 * int(p) - 1)


def _as_scalar(scalar) -> Cyclotomic:
    if isinstance(scalar, str):
        if scalar not in SCALARS:
            raise ValueError(f"scalar must be one of {sorted(SCALARS)}")
        return SCALARS[scalar]
    if isinstance(scalar, Cyclotomic):
        if scalar ** 4 != 1:
            raise ValueError(f"scalar {scalar} is not a 4th root of unity")
        return scalar
    return _as_scalar(str(scalar))


def a2_outer_verdict(period, scalar) -> QuantizabilityVerdict:
    """Quantizability of the rank-1 local system with Z_4 monodromy ``scalar``
    on the a2 slice with outer anti-involution, for the quantization of the
    given period (``None`` stands for a non-integral, unspecified period)."""
    s = _as_scalar(scalar)
    if s == 1 or s == -1:
        return QuantizabilityVerdict("strongly_quantizable", "SO_3-equivariant systems quantize for every period")
    integral = period is not None and Fraction(period).denominator == 1
    if not integral:
        return QuantizabilityVerdict("not_quantizable", "non-integral period: only SO_3-equivariant systems quantize")
    p = Fraction(period)
    if s == excluded_scalar(p):
        return QuantizabilityVerdict("not_quantizable", f"integral period {p}: scalar i^(2p-1) = {s} excluded")
    if p in (-1, 0, 1):
        return QuantizabilityVerdict("strongly_quantizable", f"twist {twist_from_period(p)} in {{1/2, 3/2, 5/2}}")
    return QuantizabilityVerdict("quantizable", f"twist {twist_from_period(p)} outside {{1/2, 3/2, 5/2}}: not strongly")
