"""Independent reference computations used by the tests."""
from __future__ import annotations

from itertools import product

import numpy as np

from hcorbits.cyclotomic import Cyclotomic, cyclotomic_polynomial
from hcorbits.partitions import Partition


# -- exact Gram matrices of character tables -----------------------------------

def _int_coeffs(x: Cyclotomic, m: int) -> list[int]:
    lifted = x._lift(m)
    out = [0] * m
    for k, c in enumerate(lifted.coeffs):
        if c.denominator != 1:
            raise AssertionError(f"character value {x} is not an algebraic integer in the power basis")
        out[k] = int(c)
    return out


def exact_gram(table, columns: bool = False) -> np.ndarray:
    """Row (or column) orthogonality sums, reduced in Z[zeta_m]."""
    m = table.group.exponent
    m = max(m, 1)
    cache: dict = {}

    def coeffs(v):
        key = id(v)  # table values are shared objects kept alive by the table
        if key not in cache:
            cache[key] = _int_coeffs(v, m)
        return cache[key]
    X = np.array([[coeffs(v) for v in row] for row in table.rows], dtype=np.int64)
    Xc = np.empty_like(X)
    for k in range(m):
        Xc[:, :, (-k) % m] = X[:, :, k]
    if columns:
        X, Xc, weights = X.transpose(1, 0, 2), Xc.transpose(1, 0, 2), np.ones(len(table.rows), dtype=np.int64)
    else:
        weights = np.array(table.sizes, dtype=np.int64)
    n = X.shape[0]
    out = np.zeros((n, n, m), dtype=np.int64)
    # float64 BLAS is exact here: every partial sum is an integer far below 2**53
    bound = int(np.abs(X).max()) ** 2 * int(weights.max()) * X.shape[1] * m
    assert bound < 2**52
    Xf = np.ascontiguousarray(X.transpose(2, 0, 1), dtype=np.float64)
    XcT = np.ascontiguousarray(Xc.transpose(2, 1, 0), dtype=np.float64)
    for a in range(m):
        Aw = Xf[a] * weights
        for b in range(m):
            out[:, :, (a + b) % m] += np.rint(Aw @ XcT[b]).astype(np.int64)
    phi = cyclotomic_polynomial(m)
    d = len(phi) - 1
    for top in range(m - 1, d - 1, -1):
        c = out[:, :, top].copy()
        for k, a in enumerate(phi):
            out[:, :, top - d + k] -= c * a
    return out[:, :, :d]


def check_orthogonality(table) -> bool:
    """Both orthogonality relations, exactly, in the power basis of Q(zeta_m)."""
    G = table.group
    n = len(table.rows)
    rows = exact_gram(table)
    expected = np.zeros_like(rows)
    expected[:, :, 0] = np.eye(n, dtype=np.int64) * G.order
    if not np.array_equal(rows, expected):
        return False
    cols = exact_gram(table, columns=True)
    expected = np.zeros_like(cols)
    expected[:, :, 0] = np.diag([G.order // s for s in table.sizes])
    return bool(np.array_equal(cols, expected))


# -- Clifford algebra via Jordan-Wigner matrices --------------------------------

def jordan_wigner(n: int) -> list[np.ndarray]:
    """Integer/complex matrices g_1..g_n with g_i^2 = 1 and g_i g_j = -g_j g_i, faithful."""
    m = n + (n % 2)
    k = m // 2
    X = np.array([[0, 1], [1, 0]], dtype=complex)
    Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
    Z = np.array([[1, 0], [0, -1]], dtype=complex)
    I2 = np.eye(2, dtype=complex)
    gens = []
    for q in range(k):
        for P in (X, Y):
            mats = [Z] * q + [P] + [I2] * (k - q - 1)
            M = mats[0]
            for A in mats[1:]:
                M = np.kron(M, A)
            gens.append(M)
    return gens[:n]


def matrix_closure(gens: list[np.ndarray], cap: int = 5000) -> list[np.ndarray]:
    dim = gens[0].shape[0]
    key = lambda M: tuple(np.round(M, 6).flatten().tolist())
    seen = {key(np.eye(dim)): np.eye(dim, dtype=complex)}
    frontier = list(seen.values())
    while frontier:
        nxt = []
        for A in frontier:
            for g in gens:
                B = A @ g
                k = key(B)
                if k not in seen:
                    seen[k] = B
                    nxt.append(B)
                    if len(seen) > cap:
                        raise RuntimeError("closure too large")
        frontier = nxt
    return list(seen.values())


def chirality(gammas: list[np.ndarray]) -> np.ndarray:
    """Operator commuting with even monomials and anticommuting with odd ones."""
    n = len(gammas)
    if n % 2 == 0:
        M = np.eye(gammas[0].shape[0], dtype=complex)
        for g in gammas:
            M = M @ g
        return M
    # odd n: use the spare Jordan-Wigner generator's partner
    full = jordan_wigner(n + 1)
    M = np.eye(full[0].shape[0], dtype=complex)
    for g in full:
        M = M @ g
    return M


def is_even_matrix(M: np.ndarray, chi: np.ndarray) -> bool:
    return np.allclose(M @ chi, chi @ M)


# -- ab-diagrams by brute force ----------------------------------------------------

def brute_ab_diagrams(tau: Partition, k: int) -> set[tuple[str, ...]]:
    out = set()
    for firsts in product("ab", repeat=len(tau)):
        rows = []
        for length, f in zip(tau.parts, firsts):
            o = "b" if f == "a" else "a"
            rows.append("".join(f if t % 2 == 0 else o for t in range(length)))
        if sum(r.count("a") for r in rows) == k:
            out.add(tuple(sorted(rows, key=lambda r: (-len(r), r))))
    return out
