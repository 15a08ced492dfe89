import random

import numpy as np
import pytest
from hypothesis import given, strategies as st

from hcorbits.finite_groups import central_scalar, is_central
from hcorbits.partitions import Partition, codim2_parts, codim4_partitions
from hcorbits.pin_group import (
    MINUS_ONE,
    ONE,
    E_product,
    PinElement,
    ambient_size,
    component_group,
    distinguished_element,
    gamma_elements,
    gamma_spin_group,
    gamma_subgroup_orders,
    generator_E,
    is_split,
    pin_mul,
    z4_hom_injective,
)
from oracles import chirality, is_even_matrix, jordan_wigner, matrix_closure

P = Partition


def as_matrix(x: PinElement, gammas):
    M = np.eye(gammas[0].shape[0], dtype=complex) * x.sign
    for i in x.support:
        M = M @ gammas[i - 1]
    return M


def test_examples():
    e = lambda *s: PinElement(1, s)
    assert pin_mul(e(1), e(2)) == e(1, 2)
    assert pin_mul(e(2), e(1)) == -e(1, 2)
    assert pin_mul(e(1), e(1)) == ONE
    assert generator_E(1) == e(1) and generator_E(2) == e(2, 3) and generator_E(3) == e(4, 5, 6)
    assert str(-generator_E(2)) == "-e2e3"
    with pytest.raises(ValueError):
        generator_E(3, n=5)


def test_matches_matrix_model():
    n = 10
    gammas = jordan_wigner(n)
    for a in gammas:
        for b in gammas:
            same = a is b
            assert np.allclose(a @ b, np.eye(len(a)) if same else -(b @ a))
    rnd = random.Random(7)
    for _ in range(300):
        x = PinElement(rnd.choice([1, -1]), tuple(sorted(rnd.sample(range(1, n + 1), rnd.randint(0, n)))))
        y = PinElement(rnd.choice([1, -1]), tuple(sorted(rnd.sample(range(1, n + 1), rnd.randint(0, n)))))
        assert np.allclose(as_matrix(x * y, gammas), as_matrix(x, gammas) @ as_matrix(y, gammas))


supports = st.lists(st.integers(1, 12), unique=True).map(lambda s: tuple(sorted(s)))
elements = st.tuples(st.sampled_from([1, -1]), supports).map(lambda t: PinElement(*t))


@given(elements, elements, elements)
def test_associative(x, y, z):
    assert (x * y) * z == x * (y * z)


def test_associative_random_triples(rng):
    make = lambda: PinElement(rng.choice([1, -1]), tuple(sorted(rng.sample(range(1, 13), rng.randint(0, 12)))))
    for _ in range(10_000):
        x, y, z = make(), make(), make()
        assert (x * y) * z == x * (y * z)


@pytest.mark.parametrize("i", range(1, 13))
def test_E_relations(i):
    Ei = generator_E(i)
    assert Ei * Ei == (ONE if i % 4 in (0, 1) else MINUS_ONE)
    for j in range(1, 13):
        if j == i:
            continue
        Ej = generator_E(j)
        assert Ei * Ej == (Ej * Ei if (i * j) % 2 == 0 else -(Ej * Ei))


@pytest.mark.parametrize("tau1", range(1, 11))
def test_gamma_orders(tau1):
    G = gamma_elements(tau1)
    evens = {x for x in G if x.is_even}
    if tau1 >= 2:
        assert len(G) == 2 ** (tau1 + 1)
        assert len(evens) == 2 ** tau1
    if tau1 <= 8:
        assert set(gamma_spin_group(tau1).labels) == evens
    for k in range(2, tau1 + 1, 2):
        assert all(generator_E(k) * g == g * generator_E(k) for g in G)
    # E_iE_j (i, j odd, 4 | i + j) squares to 1 and commutes with every E_k
    # except E_i and E_j, which it anticommutes with; so it is not central in Gamma
    for i in range(1, tau1 + 1, 2):
        for j in range(i + 2, tau1 + 1, 2):
            if (i + j) % 4 == 0:
                z = E_product(i, j)
                assert z * z == ONE
                for k in range(1, tau1 + 1):
                    Ek = generator_E(k)
                    assert z * Ek == (-(Ek * z) if k in (i, j) else Ek * z)


@pytest.mark.parametrize("tau1", range(1, 5))
def test_gamma_matches_matrix_closure(tau1):
    n = ambient_size(tau1)
    gammas = jordan_wigner(n)
    gens = [as_matrix(generator_E(i), gammas) for i in range(1, tau1 + 1)] + [-np.eye(gammas[0].shape[0])]
    group = matrix_closure(gens)
    chi = chirality(gammas)
    even = [M for M in group if is_even_matrix(M, chi)]
    assert len(group) == len(gamma_elements(tau1))
    assert len(even) == len(gamma_spin_group(tau1).labels)


def test_component_group_examples():
    cg = component_group(P((2, 1)))
    assert (cg.label, cg.model, cg.order) == ("Z4", "extension", 4)
    assert cg.element_name(cg.distinguished[1]) == "+e2e3"
    cg = component_group(P((2, 1, 1)))
    assert (cg.label, cg.model) == ("Z2", "split")
    assert component_group(P((3, 2, 1))).describe() == "Z4xZ2 (order 8, extension model)"
    cg = component_group(P((4, 3, 2, 1)))
    assert cg.element_name(cg.distinguished[3]) == str(E_product(2, 4))
    with pytest.raises(ValueError):
        distinguished_element(P((2, 1)), 2)
    with pytest.raises(ValueError):
        component_group(P((2, 2)))


def test_z4_injectivity():
    assert z4_hom_injective(P((2, 1)), 1)
    assert not z4_hom_injective(P((2, 1, 1)), 1) if 1 in codim2_parts(P((2, 1, 1))) else True
    assert not z4_hom_injective(P((3, 2, 1)), 2)


@pytest.mark.parametrize("tau", list(codim4_partitions(12)))
def test_dichotomy_and_centrality(tau):
    cg = component_group(tau)
    split = any(p % 2 and tau.parts.count(p) > 1 for p in set(tau.parts))
    assert is_split(tau) == split
    expected = 2 ** (tau[1] - 1) if split else 2 ** tau[1]
    if tau[1] >= 2:
        assert cg.order == expected
    for l, g in cg.distinguished.items():
        assert is_central(cg.group, g)
        T = cg.table
        for r in range(len(T)):
            s = central_scalar(T, r, g)
            assert s ** 4 == 1
            if split:
                assert s ** 2 == 1


def test_subgroup_report_is_brute_force():
    rep = gamma_subgroup_orders(3)
    # E_1 E_3 is a nontrivial central involution in Gamma_0 for tau1 = 3
    assert rep["gamma0"]["order"] == 2
    assert rep["gamma0"]["quoted_order"] == 1
