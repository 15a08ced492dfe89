"""Type A classification of Harish-Chandra modules with full support.

A quantization parameter assigns a rational number to each column of tau and
is taken modulo the diagonal line.  For the (sl_n, so_n) pair the component
group is a Spin-type 2-group, and an irreducible of it gives an HC module iff
each odd codimension-2 slice accepts the central scalar of its distinguished
element.
"""
from __future__ import annotations

import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import Iterable

from .ab_diagrams import inner_case_verdict
from .cyclotomic import Cyclotomic
from .finite_groups import central_scalar
from .partitions import (
    Partition,
    boundary_codim_at_least_4,
    codim2_parts,
    degeneration,
    row_for_part,
    so_orbit_splits,
)
from .pin_group import component_group
from .slices import a2_outer_verdict

FILTERS = ("all", "trivial_on_minus_one")
PAIRS = ("spin", "inner", "symplectic")

# Slice parameter placeholder for slices marked non-integral without a value.
NONINTEGRAL = None


def _frac(x) -> Fraction:
    if isinstance(x, float):
        raise TypeError("floats are not accepted; pass a Fraction or a 'p/q' string")
    try:
        return Fraction(x)
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"not a rational number: {x!r}") from exc


@dataclass(frozen=True)
class QuantizationParameterA:
    """Column-indexed rational vector, stored as its representative with last entry 0."""
    values: tuple[Fraction, ...]
    nonintegral: frozenset[int] = frozenset()

    def __post_init__(self):
        vals = tuple(_frac(v) for v in self.values)
        if not vals:
            raise ValueError("quantization parameter needs at least one column")
        shift = vals[-1]
        object.__setattr__(self, "values", tuple(v - shift for v in vals))
        object.__setattr__(self, "nonintegral", frozenset(int(l) for l in self.nonintegral))

    @classmethod
    def zero(cls, columns: int) -> "QuantizationParameterA":
        return cls((0,) * columns)

    @classmethod
    def parse(cls, text: str | None, columns: int, nonintegral: Iterable[int] = ()) -> "QuantizationParameterA":
        if text is None or not text.strip():
            return cls((0,) * columns, frozenset(nonintegral))
        tokens = [t for t in text.replace(" ", "").split(",") if t]
        return cls(tuple(_frac(t) for t in tokens), frozenset(nonintegral))

    def shifted(self, c) -> "QuantizationParameterA":
        return QuantizationParameterA(tuple(v + _frac(c) for v in self.values), self.nonintegral)

    def column(self, j: int) -> Fraction:
        return self.values[j - 1]

    def __len__(self):
        return len(self.values)

    def __str__(self):
        return ",".join(str(v) for v in self.values)


def _as_param(tau: Partition, lam) -> QuantizationParameterA:
    if lam is None or (isinstance(lam, int) and lam == 0):
        lam = QuantizationParameterA.zero(tau[1])
    elif not isinstance(lam, QuantizationParameterA):
        lam = QuantizationParameterA(tuple(lam))
    if len(lam) != tau[1]:
        raise ValueError(f"lambda has {len(lam)} entries, tau has {tau[1]} columns")
    return lam


def slice_column(part: int) -> int:
    """Column c with slice parameter lambda_c - lambda_{c+1} for the part ``part``."""
    return part


def slice_parameter(tau: Partition, lam, part: int):
    """Slice parameter at the codim-2 part ``part``, or NONINTEGRAL if only marked."""
    lam = _as_param(tau, lam)
    if part not in codim2_parts(tau):
        raise ValueError(f"{part} is not a codimension-2 part of {tau}")
    c = slice_column(part)
    if c + 1 > tau[1]:
        raise ValueError(f"part {part} has no column to its right in {tau}")
    if part in lam.nonintegral:
        return NONINTEGRAL
    return lam.column(c) - lam.column(c + 1)


def _period_str(p) -> str:
    return "non-integral" if p is NONINTEGRAL else str(p)


@dataclass
class IrreducibleRow:
    id: int
    degree: int
    scalars: dict[str, str]
    admitted: bool
    rule: str


@dataclass
class ClassificationReport:
    tau: str
    pair: str
    lam: str | None
    group_label: str
    group_order: int | None
    model: str
    irreducibles: list[IrreducibleRow] = field(default_factory=list)
    local_systems: int | None = None
    hc_modules: int | None = None
    notes: list[str] = field(default_factory=list)
    verdict: str | None = None

    def to_dict(self) -> dict:
        out = {
            "input": {"tau": self.tau, "pair": self.pair, "lambda": self.lam},
            "component_group": {"label": self.group_label, "order": self.group_order, "model": self.model},
            "irreducibles": [asdict(r) for r in self.irreducibles],
            "counts": {"local_systems": self.local_systems, "hc_modules": self.hc_modules},
            "notes": list(self.notes),
        }
        if self.verdict is not None:
            out["verdict"] = self.verdict
        return out

    def to_json(self, **kw) -> str:
        return json.dumps(self.to_dict(), **kw)

    @property
    def admitted_ids(self) -> list[int]:
        return [r.id for r in self.irreducibles if r.admitted]


def slice_decision(period, scalar: Cyclotomic) -> tuple[bool, str]:
    """Admit/exclude for one odd slice, with the reason."""
    if period is NONINTEGRAL or _frac(period).denominator != 1:
        ok = scalar == 1 or scalar == -1
        why = "non-integral slice parameter: scalar must be +1 or -1"
    else:
        bad = Cyclotomic.root_of_unity(4, 2 * int(period) - 1)
        ok = scalar != bad
        why = f"integral slice parameter {period}: scalar {bad} = i^(2p-1) excluded"
    return ok, why


def _orbit_notes(tau: Partition) -> list[str]:
    notes = []
    for part in codim2_parts(tau):
        if so_orbit_splits(degeneration(tau, row_for_part(tau, part))):
            notes.append(f"l={part}: two K-orbits, identical verdicts")
    return notes


def classify_spin(tau: Partition, lam=None, genuine_filter: str = "all") -> ClassificationReport:
    if genuine_filter not in FILTERS:
        raise ValueError(f"genuine_filter must be one of {FILTERS}")
    if not boundary_codim_at_least_4(tau):
        raise ValueError(f"boundary of the orbit {tau} has codimension < 4")
    lam = _as_param(tau, lam)
    cg = component_group(tau)
    table = cg.table
    odd = sorted(cg.distinguished)
    periods = {l: slice_parameter(tau, lam, l) for l in odd}

    rows = []
    for r in range(len(table)):
        if genuine_filter == "trivial_on_minus_one" and central_scalar(table, r, cg.minus_one) != 1:
            continue
        scalars = {l: central_scalar(table, r, cg.distinguished[l]) for l in odd}
        rule = "no odd codimension-2 parts: no condition" if not odd else "every odd slice admits its scalar"
        admitted = True
        for l in odd:
            ok, why = slice_decision(periods[l], scalars[l])
            if not ok:
                admitted, rule = False, f"l={l}: {why}"
                break
        rows.append(IrreducibleRow(r, table.degrees[r], {str(l): str(s) for l, s in scalars.items()}, admitted, rule))

    notes = [f"slice parameter at l={l}: {_period_str(periods[l])}" for l in odd]
    even = [l for l in codim2_parts(tau) if l % 2 == 0]
    if even:
        notes.append("even codimension-2 parts impose no condition: " + ",".join(map(str, even)))
    if cg.model == "split":
        notes.append("split model: all central scalars are +1 or -1")
    if genuine_filter != "all":
        notes.append("filter: only characters trivial on -1")
    if lam.nonintegral:
        notes.append("marked non-integral: " + ",".join(map(str, sorted(lam.nonintegral))))
    notes.extend(_orbit_notes(tau))
    return ClassificationReport(
        tau=str(tau), pair="spin", lam=str(lam),
        group_label=cg.label, group_order=cg.order, model=cg.model,
        irreducibles=rows, local_systems=len(rows),
        hc_modules=sum(r.admitted for r in rows), notes=notes,
    )


def classify_canonical(tau: Partition) -> ClassificationReport:
    """The canonical quantization (lambda = 0): exclude scalar -i at every odd slice."""
    return classify_spin(tau, None, "all")


@dataclass(frozen=True)
class OrbitDatumA:
    tau: Partition
    pair: str = "spin"
    k: int | None = None

    def __post_init__(self):
        if self.pair not in PAIRS:
            raise ValueError(f"pair must be one of {PAIRS}")
        if self.pair == "inner" and self.k is None:
            raise ValueError("inner pair needs k")
        if self.pair == "symplectic" and self.tau.n % 2:
            raise ValueError("symplectic pair needs even n")


def classify(datum: OrbitDatumA, lam=None, genuine_filter: str = "all") -> ClassificationReport:
    tau = datum.tau
    if datum.pair == "spin":
        return classify_spin(tau, lam, genuine_filter)
    if datum.pair == "inner":
        info = inner_case_verdict(tau, datum.k)
        n_orbits = len(info["k_orbits"])
        return ClassificationReport(
            tau=str(tau), pair=f"inner({datum.k})", lam=None,
            group_label="per K-orbit Levi", group_order=None, model="inner",
            notes=[f"{n_orbits} K-orbits (ab-diagrams)", info["rule"]],
            verdict="equivalence",
        )
    return ClassificationReport(
        tau=str(tau), pair="symplectic", lam=None,
        group_label="n/a", group_order=None, model="symplectic",
        notes=["no codimension-4 degenerations; criterion vacuous"],
        verdict="equivalence",
    )


def _classify_job(args):
    tau, lam, flt = args
    return classify_spin(tau, lam, flt).to_dict()


def sweep(items: Iterable[tuple], jobs: int = 1) -> list[dict]:
    """Classify many (tau, lam, filter) triples; output order matches input order."""
    items = list(items)
    if jobs <= 1:
        return [_classify_job(it) for it in items]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(_classify_job, items))
