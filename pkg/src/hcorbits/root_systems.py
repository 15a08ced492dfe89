"""Exact root data for E6, E7, E8 (Bourbaki numbering) and the exceptional orbit catalog.

Weights are rational vectors in the simple-root basis alpha_1..alpha_r;
coweights are rational vectors in the fundamental-coweight basis, so that
``<alpha_m, omega_j^vee> = delta_{jm}``.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from importlib import resources
from math import lcm
from typing import Sequence

import sympy

from .finite_groups import (
    FiniteGroup,
    character_table,
    direct_product,
    cyclic_group,
    generated_subgroup,
    group_descriptor,
    quotient,
)
from .slices import a2_outer_verdict

TYPES = ("E6", "E7", "E8")

# Bourbaki: 1-3-4-5-6(-7-8) chain with 2 attached to 4.
_EDGES = {
    "E6": [(1, 3), (3, 4), (4, 5), (5, 6), (2, 4)],
    "E7": [(1, 3), (3, 4), (4, 5), (5, 6), (6, 7), (2, 4)],
    "E8": [(1, 3), (3, 4), (4, 5), (5, 6), (6, 7), (7, 8), (2, 4)],
}


@lru_cache(maxsize=None)
def cartan_matrix(type_label: str) -> sympy.ImmutableMatrix:
    if type_label not in _EDGES:
        raise ValueError(f"type must be one of {TYPES}")
    r = int(type_label[1])
    A = sympy.eye(r) * 2
    for i, j in _EDGES[type_label]:
        A[i - 1, j - 1] = A[j - 1, i - 1] = -1
    return sympy.ImmutableMatrix(A)


@dataclass(frozen=True)
class RootSystem:
    type_label: str

    @property
    def rank(self) -> int:
        return int(self.type_label[1])

    @property
    def cartan(self) -> sympy.ImmutableMatrix:
        return cartan_matrix(self.type_label)

    def fundamental_weights(self) -> sympy.Matrix:
        """Row j: omega_j in the alpha basis."""
        return self.cartan.inv().T

    def coroot(self, j: int) -> tuple[Fraction, ...]:
        """alpha_j^vee in omega^vee coordinates: its values on alpha_1..alpha_r."""
        return tuple(Fraction(int(x)) for x in self.cartan.row(j - 1))


def _q(x) -> Fraction:
    if isinstance(x, sympy.Rational):
        return Fraction(int(x.p), int(x.q))
    return Fraction(x)


@dataclass(frozen=True)
class CoweightVector:
    type_label: str
    coords: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "coords", tuple(_q(c) for c in self.coords))
        if len(self.coords) != RootSystem(self.type_label).rank:
            raise ValueError(f"{self.type_label} coweight needs {RootSystem(self.type_label).rank} coordinates")

    @classmethod
    def from_coroots(cls, type_label: str, coeffs: Sequence) -> "CoweightVector":
        R = RootSystem(type_label)
        if len(coeffs) != R.rank:
            raise ValueError(f"{type_label} needs {R.rank} coroot coefficients")
        out = [Fraction(0)] * R.rank
        for j, c in enumerate(coeffs, start=1):
            for m, v in enumerate(R.coroot(j)):
                out[m] += _q(c) * v
        return cls(type_label, tuple(out))

    @classmethod
    def parse(cls, type_label: str, text: str, basis: str = "coweight") -> "CoweightVector":
        vals = [Fraction(t) for t in text.replace(" ", "").split(",") if t]
        if basis == "coweight":
            return cls(type_label, tuple(vals))
        if basis == "coroot":
            return cls.from_coroots(type_label, vals)
        raise ValueError("basis must be coweight or coroot")

    def __mul__(self, k) -> "CoweightVector":
        return CoweightVector(self.type_label, tuple(c * _q(k) for c in self.coords))

    __rmul__ = __mul__


def evaluate(weight: Sequence, at: CoweightVector) -> Fraction:
    """Pair a weight in the alpha basis with a coweight in the omega^vee basis."""
    if len(weight) != len(at.coords):
        raise ValueError(f"weight of length {len(weight)} against rank {len(at.coords)}")
    return sum((_q(w) * c for w, c in zip(weight, at.coords)), Fraction(0))


def cover_order(theta: CoweightVector, weights: Sequence[Sequence]) -> int:
    """Least m >= 1 with every weight integral at m*theta."""
    if not weights:
        raise ValueError("need at least one weight")
    return lcm(*(evaluate(w, theta).denominator for w in weights))


@dataclass(frozen=True)
class SubalgebraDatum:
    """Simple roots of a symmetric subalgebra k and its fundamental weights.

    ``beta`` rows are beta_0..beta_4 in the alpha basis, ``simple_roots`` lists
    the k-simple roots as signed beta indices, and ``weight_matrix`` expresses
    the k-fundamental weights in those simple roots.
    """
    type_label: str
    beta: sympy.ImmutableMatrix
    simple_roots: tuple[tuple[int, int], ...]
    weight_matrix: sympy.ImmutableMatrix

    def simple_root_matrix(self) -> sympy.Matrix:
        return sympy.Matrix([list(sign * self.beta.row(i)) for sign, i in self.simple_roots])

    @cached_property
    def _weights(self) -> tuple[tuple[Fraction, ...], ...]:
        W = self.weight_matrix * self.simple_root_matrix()
        return tuple(tuple(_q(x) for x in W.row(i)) for i in range(W.rows))

    def weights(self) -> list[tuple[Fraction, ...]]:
        """k-fundamental weights in the alpha basis."""
        return list(self._weights)

    def evaluate_all(self, theta: CoweightVector) -> tuple[Fraction, ...]:
        return tuple(evaluate(w, theta) for w in self.weights())

    def cover_order(self, theta: CoweightVector) -> int:
        return cover_order(theta, self.weights())


@lru_cache(maxsize=None)
def e6_6_datum() -> SubalgebraDatum:
    """k = sp(8) inside e6 for the split real form."""
    R = sympy.Rational
    a = sympy.eye(6)
    b1, b2 = a.row(1), a.row(3)
    b3 = (a.row(2) + a.row(4)) * R(1, 2)
    b4 = (a.row(0) + a.row(5)) * R(1, 2)
    b0 = b1 + 2 * b2 + 3 * b3 + 2 * b4
    beta = sympy.ImmutableMatrix([list(b0), list(b1), list(b2), list(b3), list(b4)])
    W = sympy.ImmutableMatrix([
        [1, 1, 1, R(1, 2)],
        [1, 2, 2, 1],
        [1, 2, 3, R(3, 2)],
        [1, 2, 3, 2],
    ])
    if W.det() == 0:
        raise ArithmeticError("weight matrix is singular")
    return SubalgebraDatum("E6", beta, ((-1, 0), (1, 4), (1, 3), (1, 2)), W)


DATA = {"e6_6": e6_6_datum}

# The two torus generators used for orbit #10 of E6(6) and its a2 neighbour #8.
THETA_CHI = ("E6", (1, 0, 0, -2, 0, 1), "coroot")
THETA_CHI_PRIME = ("E6", (0, 0, 1, -1, 1, 0), "coweight")


def theta(spec) -> CoweightVector:
    t, coords, basis = spec
    return CoweightVector.from_coroots(t, coords) if basis == "coroot" else CoweightVector(t, coords)


# -- exceptional catalog -----------------------------------------------------------

@dataclass(frozen=True)
class ExceptionalEntry:
    form: str
    orbit: int
    g_orbit: str
    case: int
    Z_K: str | None
    Zbar_K: str | None
    Ztilde_K: tuple[str, ...] | None
    stated: dict | None
    note: str

    @property
    def key(self) -> str:
        return f"{self.form}#{self.orbit}"


@lru_cache(maxsize=None)
def exceptional_catalog() -> tuple[ExceptionalEntry, ...]:
    raw = json.loads(resources.files("hcorbits.data").joinpath("exceptional_catalog.json").read_text())
    out = []
    for e in raw["entries"]:
        zt = tuple(e["Ztilde_K"]) if e["Ztilde_K"] is not None else None
        out.append(ExceptionalEntry(e["form"], e["orbit"], e["g_orbit"], e["case"], e["Z_K"],
                                    e["Zbar_K"], zt, e["stated"], e["note"]))
    return tuple(out)


def lookup(form: str, orbit: int) -> ExceptionalEntry:
    for e in exceptional_catalog():
        if e.form == form and e.orbit == int(orbit):
            return e
    raise KeyError(f"no catalog entry {form}#{orbit}")


@dataclass(frozen=True)
class AbelianModel:
    """Ztilde_K as Z_a x Z_b with the image g of the Z4 from the a2 slice and
    the kernel C of Ztilde_K -> Z_K (the center of Ktilde)."""
    label: str
    orders: tuple[int, ...]
    g: tuple[int, ...]
    center_gens: tuple[tuple[int, ...], ...]


# Realizations consistent with the stated embeddings; the kernels are forced
# by requiring Ztilde_K / C to be the stated Z_K.
_MODELS = {
    "E6(6)#10": (AbelianModel("Z4", (4,), (1,), ((2,),)),),
    "E7(7)#50": (
        AbelianModel("Z8xZ2", (8, 2), (2, 0), ((2, 1),)),
        AbelianModel("Z4xZ4", (4, 4), (2, 1), ((0, 1),)),
    ),
}


def _model_group(m: AbelianModel) -> FiniteGroup:
    return cyclic_group(m.orders[0]) if len(m.orders) == 1 else direct_product(*m.orders)


def _label(orders, x):
    return x[0] if len(orders) == 1 else tuple(x)


def model_counts(m: AbelianModel, period=0) -> dict:
    """Split characters of Ztilde_K by the level they live at and by the a2 verdict."""
    G = _model_group(m)
    idx = {lab: i for i, lab in enumerate(G.labels)}
    g = idx[_label(m.orders, m.g)]
    C = generated_subgroup(G, [idx[_label(m.orders, c)] for c in m.center_gens])
    twoC = sorted({G.mul(c, c) for c in C})
    table = character_table(G)
    counts = {"local_systems": len(table), "none": 0, "K": 0, "Kbar_genuine": 0, "Ktilde_genuine": 0}
    for r in range(len(table)):
        if not a2_outer_verdict(period, table.value(r, g)).quantizable:
            counts["none"] += 1
        elif all(table.value(r, c) == 1 for c in C):
            counts["K"] += 1
        elif all(table.value(r, c) == 1 for c in twoC):
            counts["Kbar_genuine"] += 1
        else:
            counts["Ktilde_genuine"] += 1
    counts["hc_modules"] = counts["local_systems"] - counts["none"]
    labels = {
        "Ztilde_K": group_descriptor(G),
        "Z_K": group_descriptor(quotient(G, C)),
        "Zbar_K": group_descriptor(quotient(G, twoC)),
        "g_order": G.element_orders[g],
    }
    return {"counts": counts, "groups": labels}


def exceptional_verdict(entry: ExceptionalEntry, genuine_level: str = "all") -> dict:
    """Verdict at lambda = 0.  ``genuine_level`` selects a count in Case 3(b)."""
    out = {"entry": entry.key, "g_orbit": entry.g_orbit, "case": entry.case,
           "Z_K": entry.Z_K, "Zbar_K": entry.Zbar_K,
           "Ztilde_K": list(entry.Ztilde_K) if entry.Ztilde_K else None}
    if entry.case in (1, 2):
        out["verdict"] = "equivalence: every irreducible of Rep(Ktilde_Q, kappa_Q) quantizes"
        return out
    out["verdict"] = "not essentially surjective"
    models = _MODELS.get(entry.key)
    if models is None:
        out["result"] = entry.stated["text"] if entry.stated and "text" in entry.stated else None
        return out
    derived = [model_counts(m) for m in models]
    first = derived[0]["counts"]
    if any(d["counts"] != first for d in derived):
        raise ArithmeticError(f"{entry.key}: counts depend on the choice of Ztilde_K")
    out["models"] = [{"label": m.label, **d["groups"]} for m, d in zip(models, derived)]
    if entry.Zbar_K is None:
        for m in out["models"]:
            m.pop("Zbar_K")
    counts = dict(first)
    if entry.stated is None or "local_systems" not in entry.stated:
        raise ArithmeticError(f"{entry.key}: no stated counts to compare")
    if entry.form == "E6(6)":
        counts = {k: counts[k] for k in ("local_systems", "hc_modules")}
    else:
        counts = {k: counts[k] for k in ("local_systems", "none", "K", "Kbar_genuine", "Ktilde_genuine")}
    out["counts"] = counts
    out["matches_stated"] = counts == entry.stated
    if genuine_level != "all":
        if genuine_level not in counts:
            raise ValueError(f"genuine_level must be one of {sorted(counts)} or 'all'")
        out["selected"] = {genuine_level: counts[genuine_level]}
    return out
