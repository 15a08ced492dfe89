"""The unit Pin group Pin_{1^n} and the Spin_n component groups built from it.

Pin_{1^n} is generated by e_1..e_n and a central -1 with e_i^2 = 1 and
e_i e_j = -e_j e_i. Its elements are signed monomials, so a PinElement is a
sign and a strictly increasing support.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property, lru_cache

from .finite_groups import (
    CharacterTable,
    FiniteGroup,
    character_table,
    close_under_multiplication,
    generated_subgroup,
    group_descriptor,
    is_central,
    quotient_map,
)
from .partitions import Partition, codim2_parts, multiplicities, boundary_codim_at_least_4


@dataclass(frozen=True, order=True)
class PinElement:
    sign: int
    support: tuple[int, ...] = ()

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")
        if any(a >= b for a, b in zip(self.support, self.support[1:])):
            raise ValueError("support must be strictly increasing")

    def __mul__(self, other: "PinElement") -> "PinElement":
        return pin_mul(self, other)

    def __neg__(self):
        return PinElement(-self.sign, self.support)

    @property
    def is_even(self) -> bool:
        return len(self.support) % 2 == 0

    def __str__(self):
        sign = "-" if self.sign < 0 else ""
        if not self.support:
            return sign + "1"
        return (sign or "+") + "".join(f"e{i}" for i in self.support)


ONE = PinElement(1)
MINUS_ONE = PinElement(-1)


def pin_mul(x: PinElement, y: PinElement) -> PinElement:
    # moving each e_j of y left past every larger e_i of x costs a sign
    inversions = sum(1 for i in x.support for j in y.support if i > j)
    sign = x.sign * y.sign * (-1 if inversions % 2 else 1)
    return PinElement(sign, tuple(sorted(set(x.support) ^ set(y.support))))


def ambient_size(tau1: int) -> int:
    return tau1 * (tau1 + 1) // 2


def generator_E(i: int, n: int | None = None) -> PinElement:
    """E_i = e_{j+1} ... e_{j+i} with j = i(i-1)/2."""
    if i < 1:
        raise ValueError("E_i needs i >= 1")
    if n is None:
        n = ambient_size(i)
    if ambient_size(i) > n:
        raise ValueError(f"E_{i} needs ambient size {ambient_size(i)} > {n}")
    j = i * (i - 1) // 2
    return PinElement(1, tuple(range(j + 1, j + i + 1)))


def E_product(*indices: int) -> PinElement:
    out = ONE
    for i in indices:
        out = out * generator_E(i)
    return out


@lru_cache(maxsize=None)
def gamma_elements(tau1: int) -> frozenset[PinElement]:
    """All elements of Gamma = <E_1, ..., E_tau1, -1>."""
    gens = [generator_E(i) for i in range(1, tau1 + 1)] + [MINUS_ONE]
    found = {ONE}
    frontier = [ONE]
    while frontier:
        x = frontier.pop()
        for g in gens:
            y = x * g
            if y not in found:
                found.add(y)
                frontier.append(y)
    return frozenset(found)


@lru_cache(maxsize=None)
def gamma_spin_group(tau1: int) -> FiniteGroup:
    """Gamma intersected with Spin_{1^n} (the even-support elements)."""
    # -1, even E_k and E_1 E_j (j odd) generate the even part of Gamma
    gens = [MINUS_ONE] + [generator_E(k) for k in range(2, tau1 + 1, 2)]
    gens += [E_product(1, j) for j in range(3, tau1 + 1, 2)]
    return close_under_multiplication(gens, pin_mul, identity=ONE, name=f"Gamma_{tau1} & Spin")


def gamma_subgroup_orders(tau1: int) -> dict:
    """Brute-force orders of the subgroups Gamma_0, Gamma_1, Gamma_2, with the
    closed-form values they are usually quoted with, for comparison only."""
    def order(gens):
        if not gens:
            return 1
        return len(close_under_multiplication(gens, pin_mul, identity=ONE).labels)

    g0 = [generator_E(k) for k in range(4, tau1 + 1, 4)]
    g0 += [E_product(k, k + 2) for k in range(1, tau1 - 1, 4)]
    g1 = [generator_E(k) for k in range(1, tau1 + 1, 4)]
    g2 = [generator_E(k) for k in range(2, tau1 + 1, 4)]
    q = tau1 // 4 + max(0, (tau1 - 3) // 4)
    r = (tau1 - 1) // 4
    t = (tau1 - 2) // 4
    return {
        "gamma0": {"order": order(g0), "quoted_order": 2**q},
        "gamma1": {"order": order(g1), "quoted_order": 2 ** (r + 1)},
        "gamma2": {"order": order(g2), "quoted_order": 2 ** (t + 1) if t >= 1 else 1},
    }


@dataclass
class ComponentGroup:
    tau: Partition
    group: FiniteGroup
    model: str  # "extension" or "split"
    distinguished: dict[int, int]
    minus_one: int
    parent_ids: dict[int, PinElement] = field(default_factory=dict, repr=False)

    @cached_property
    def table(self) -> CharacterTable:
        return character_table(self.group)

    @property
    def label(self) -> str:
        return group_descriptor(self.group)

    @property
    def order(self) -> int:
        return self.group.order

    def describe(self) -> str:
        return f"{self.label} (order {self.order}, {self.model} model)"

    def element_name(self, g: int) -> str:
        lab = self.group.labels[g]
        if isinstance(lab, frozenset):
            return "{" + ", ".join(sorted(map(str, lab))) + "}"
        return str(lab)


def _require_codim4(tau: Partition):
    if not boundary_codim_at_least_4(tau):
        raise ValueError(f"boundary of the orbit {tau} has codimension < 4")


def is_split(tau: Partition) -> bool:
    return any(part % 2 == 1 and m > 1 for part, m in multiplicities(tau).items())


def distinguished_pin_element(tau: Partition, part: int) -> PinElement:
    if part % 2 == 0:
        raise ValueError(f"part {part} is even; no distinguished element")
    if part not in codim2_parts(tau):
        raise ValueError(f"{part} is not a codimension-2 part of {tau}")
    return generator_E(2) if part == 1 else E_product(part - 1, part + 1)


@lru_cache(maxsize=None)
def component_group(tau: Partition) -> ComponentGroup:
    _require_codim4(tau)
    tau1 = tau[1]
    spin = gamma_spin_group(tau1)
    odd_parts = [l for l in codim2_parts(tau) if l % 2 == 1]
    pin_images = {l: distinguished_pin_element(tau, l) for l in odd_parts}
    if not is_split(tau):
        dist = {l: spin.index[x] for l, x in pin_images.items()}
        return ComponentGroup(tau, spin, "extension", dist, spin.index[MINUS_ONE])
    Q, proj = quotient_map(spin, [spin.index[ONE], spin.index[MINUS_ONE]])
    dist = {l: proj[spin.index[x]] for l, x in pin_images.items()}
    return ComponentGroup(tau, Q, "split", dist, proj[spin.index[MINUS_ONE]])


def distinguished_element(tau: Partition, part: int) -> int:
    distinguished_pin_element(tau, part)  # validates
    return component_group(tau).distinguished[part]


def z4_hom_injective(tau: Partition, part: int) -> bool:
    if part not in codim2_parts(tau):
        raise ValueError(f"{part} is not a codimension-2 part of {tau}")
    if part % 2 == 0:
        return False
    cg = component_group(tau)
    return cg.group.element_orders[cg.distinguished[part]] == 4
