"""Acceptance suite: one test per criterion, each reporting a PASS/FAIL line."""
import random
import time
from fractions import Fraction
from itertools import product

from hcorbits.ab_diagrams import enumerate_ab_diagrams
from hcorbits.finite_groups import character_table, dihedral_group, direct_product, group_descriptor, quaternion_group
from hcorbits.partitions import Partition, codim2_parts, codim4_partitions, multiplicities, partitions_of
from hcorbits.pin_group import MINUS_ONE, ONE, component_group, gamma_spin_group, generator_E, pin_mul
from hcorbits.root_systems import (
    THETA_CHI,
    THETA_CHI_PRIME,
    AbelianModel,
    _MODELS,
    _model_group,
    e6_6_datum,
    exceptional_verdict,
    lookup,
    theta,
)
from hcorbits.slices import a2_outer_verdict
from hcorbits.typea import QuantizationParameterA, classify, classify_canonical, classify_spin, OrbitDatumA
from oracles import brute_ab_diagrams, check_orthogonality

P = Partition
F = Fraction


def test_criterion_01_sl3_golden(acceptance_report):
    t0 = time.perf_counter()
    r = classify(OrbitDatumA(P((2, 1)), "spin"), QuantizationParameterA((0, 0)))
    dt = time.perf_counter() - t0
    ok = (r.group_label, r.local_systems, r.hc_modules) == ("Z4", 4, 3) and dt < 1.0
    acceptance_report(1, "(2,1) spin lambda=0: Z4, 4 systems, 3 HC", ok, f"{r.group_label} {r.local_systems}/{r.hc_modules} in {dt:.3f}s")


def test_criterion_02_E_relations(acceptance_report):
    bad = []
    for i in range(1, 13):
        Ei = generator_E(i)
        if Ei * Ei != (ONE if i % 4 in (0, 1) else MINUS_ONE):
            bad.append(("square", i))
        for j in range(1, 13):
            if i != j:
                Ej = generator_E(j)
                lhs, rhs = Ei * Ej, Ej * Ei
                if lhs != (rhs if (i * j) % 2 == 0 else -rhs):
                    bad.append((i, j))
    acceptance_report(2, "E_iE_j = (-1)^(ij) E_jE_i and E_i^2 mod-4 rule, 1<=i,j<=12", not bad, f"{len(bad)} violations")


def _brute_spin_order(tau1: int) -> int:
    gens = [generator_E(i) for i in range(1, tau1 + 1)] + [MINUS_ONE]
    seen, stack = {ONE}, [ONE]
    while stack:
        x = stack.pop()
        for g in gens:
            y = pin_mul(x, g)
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return sum(1 for x in seen if len(x.support) % 2 == 0)


def test_criterion_03_dichotomy(acceptance_report):
    bad, count = [], 0
    for tau in codim4_partitions(12):
        count += 1
        split = any(p % 2 == 1 and m > 1 for p, m in multiplicities(tau).items())
        expected = 2 ** (tau[1] - 1) if split else 2 ** tau[1]
        brute = _brute_spin_order(tau[1]) // (2 if split else 1)
        cg = component_group(tau)
        if not (cg.order == expected == brute and (cg.model == "split") == split):
            bad.append(str(tau))
    acceptance_report(3, "component group order 2^tau1 vs 2^(tau1-1), n<=12, brute-force checked", not bad, f"{count} partitions, bad={bad}")


def test_criterion_04_character_tables(acceptance_report):
    groups = {f"component {tau}": component_group(tau).group for tau in codim4_partitions(12)}
    for key, models in _MODELS.items():
        for m in models:
            groups[f"{key} model {m.label}"] = _model_group(m)
    groups.update({
        "D8": dihedral_group(4), "Q8": quaternion_group(), "D128": dihedral_group(128),
        "Gamma8&Spin": gamma_spin_group(8), "Z8^3": direct_product(8, 8, 8),
    })
    bad, seen = [], set()
    for name, G in groups.items():
        key = (G.order, G.table.tobytes()) if hasattr(G, "table") else id(G)
        if key in seen:
            continue
        seen.add(key)
        T = character_table(G)
        if sum(d * d for d in T.degrees) != G.order or not check_orthogonality(T):
            bad.append(name)
    labels = (group_descriptor(quaternion_group()), group_descriptor(dihedral_group(4)))
    ok = not bad and labels == ("Q8", "D8") and max(G.order for G in groups.values()) == 512
    acceptance_report(4, "character tables orthogonal, sum d^2 = |G| (up to order 512), Q8 != D8", ok, f"{len(seen)} groups, bad={bad}, labels={labels}")


def test_criterion_05_e6_6_orbit_10(acceptance_report):
    t0 = time.perf_counter()
    d = e6_6_datum()
    v1, v2 = d.evaluate_all(theta(THETA_CHI)), d.evaluate_all(theta(THETA_CHI_PRIME))
    m1, m2 = d.cover_order(theta(THETA_CHI)), d.cover_order(theta(THETA_CHI_PRIME))
    counts = exceptional_verdict(lookup("E6(6)", 10))["counts"]
    dt = time.perf_counter() - t0
    ok = (v1 == (0, 1, 0, -2) and v2 == (F(-1, 2), 0, F(1, 2), 0) and (m1, m2) == (1, 2)
          and counts == {"local_systems": 4, "hc_modules": 3} and dt < 1.0)
    acceptance_report(5, "E6(6)#10: (0,1,0,-2), (-1/2,0,1/2,0), orders 1 and 2, 4 systems / 3 HC", ok,
                      f"{tuple(map(str, v1))} {tuple(map(str, v2))} {m1},{m2} {counts} {dt:.3f}s")


# Decision table for the a2 slice with outer involution, rows = period p,
# columns = scalars 1, i, -1, -i.  S = strongly, Q = quantizable only, N = not.
A2_TABLE = {
    -1: "SNSS",
    0: "SSSN",
    1: "SNSS",
    2: "SQSN",
    F(1, 2): "SNSN",
}


def test_criterion_06_a2_table(acceptance_report):
    code = {"strongly_quantizable": "S", "quantizable": "Q", "not_quantizable": "N"}
    got = {p: "".join(code[a2_outer_verdict(p, s).level] for s in ("1", "i", "-1", "-i")) for p in A2_TABLE}
    acceptance_report(6, "a2 outer decision table on p in {-1,0,1,2,1/2} x {1,i,-1,-i}", got == A2_TABLE, str(got))


def test_criterion_07_invariances(acceptance_report, seed):
    rng = random.Random(seed)
    taus = list(codim4_partitions(10))
    bad = []
    for _ in range(100):
        tau = rng.choice(taus)
        lam = QuantizationParameterA(tuple(F(rng.randint(-12, 12), rng.randint(1, 4)) for _ in range(tau[1])))
        c = F(rng.randint(-100, 100), rng.randint(1, 9))
        if classify_spin(tau, lam).to_dict() != classify_spin(tau, lam.shifted(c)).to_dict():
            bad.append((str(tau), str(lam), str(c)))
    for tau in taus:
        if classify_canonical(tau).to_dict() != classify_spin(tau, QuantizationParameterA.zero(tau[1])).to_dict():
            bad.append(str(tau))
    acceptance_report(7, "diagonal-shift invariance (100 seeded shifts), canonical == lambda=0 for n<=10", not bad, f"seed={seed}, bad={bad[:3]}")


def _lam(tau, diffs):
    vals = [F(0)] * tau[1]
    for c in range(tau[1] - 1, 0, -1):
        vals[c - 1] = vals[c] + F(diffs.get(c, 0))
    return QuantizationParameterA(tuple(vals))


def test_criterion_08_oracle_equivalence(acceptance_report):
    grid = [-1, F(-1, 2), 0, F(1, 2), 1, 2]
    bad, checked = [], 0
    for tau in codim4_partitions(10):
        odd = [l for l in codim2_parts(tau) if l % 2]
        for values in product(grid, repeat=len(odd)):
            periods = dict(zip(odd, values))
            rep = classify_spin(tau, _lam(tau, periods))
            for row in rep.irreducibles:
                verdicts = {l: a2_outer_verdict(periods[l], row.scalars[str(l)]).quantizable for l in odd}
                checked += len(odd)
                first_fail = next((l for l in odd if not verdicts[l]), None)
                ok = row.admitted == all(verdicts.values())
                if first_fail is not None:
                    ok = ok and row.rule.startswith(f"l={first_fail}:")
                if not ok:
                    bad.append((str(tau), values, row.id))
    acceptance_report(8, "classifier decision == a2 slice verdict of central scalar, n<=10", not bad, f"{checked} (chi,l) pairs, bad={bad[:3]}")


def test_criterion_09_catalog(acceptance_report):
    e43 = lookup("E8(8)", 43)
    v43 = exceptional_verdict(e43)
    v50 = exceptional_verdict(lookup("E7(7)", 50))
    v44 = exceptional_verdict(lookup("E8(8)", 44))
    ok = (e43.Ztilde_K == ("Z2",) and e43.Z_K == "Z2" and v43["verdict"].startswith("equivalence")
          and v50["Zbar_K"] == "Z4xZ2"
          and v50["counts"] == {"local_systems": 16, "none": 4, "K": 4, "Kbar_genuine": 4, "Ktilde_genuine": 4}
          and set(v44["Ztilde_K"]) == {"Z2xZ4", "D8", "Q8"})
    acceptance_report(9, "catalog: E8(8)#43 Z2 equivalence, E7(7)#50 Z4xZ2 and 16=4+4+4+4, E8(8)#44 {Z2xZ4,D8,Q8}", ok)


def test_criterion_10_ab_diagrams(acceptance_report):
    bad, cases = [], 0
    for n in range(1, 9):
        for tau in partitions_of(n):
            for k in range(n + 1):
                cases += 1
                if len(enumerate_ab_diagrams(tau, k)) != len(brute_ab_diagrams(tau, k)):
                    bad.append((str(tau), k))
    acceptance_report(10, "ab-diagram counts == brute-force labeler, n<=8, all k", not bad, f"{cases} cases, bad={bad[:3]}")


if __name__ == "__main__":
    import sys
    import pytest
    sys.exit(pytest.main([__file__, "-q"]))
