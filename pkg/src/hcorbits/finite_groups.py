"""Finite groups given by Cayley tables, with exact character tables.

Elements are integers 0..order-1 and 0 is always the identity; the original
labels (Pin monomials, cosets, tuples, ...) are kept in ``FiniteGroup.labels``.
Character tables use Dixon's method: the class algebra is diagonalised over
a prime field F_p with p = 1 mod exponent, and values are lifted back to
Q(zeta_exponent) through eigenvalue multiplicities.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from math import gcd, isqrt
from typing import Callable, Hashable, Iterable, Sequence

import numpy as np

from .cyclotomic import Cyclotomic

DEFAULT_CAP = 2**16


class GroupSizeError(ValueError):
    pass


class FiniteGroup:
    def __init__(self, labels: Sequence[Hashable], table, name: str | None = None):
        self.labels = tuple(labels)
        self.table = np.asarray(table, dtype=np.int64)
        n = len(self.labels)
        if self.table.shape != (n, n):
            raise ValueError("Cayley table shape does not match the element list")
        if not (np.array_equal(self.table[0], np.arange(n)) and np.array_equal(self.table[:, 0], np.arange(n))):
            raise ValueError("element 0 is not the identity")
        rows, cols = np.nonzero(self.table == 0)
        if len(rows) != n or len(set(rows.tolist())) != n:
            raise ValueError("table has elements without a unique inverse")
        self.inverse = np.empty(n, dtype=np.int64)
        self.inverse[rows] = cols
        self.index = {lab: k for k, lab in enumerate(self.labels)}
        self.name = name

    @property
    def order(self) -> int:
        return len(self.labels)

    def __len__(self):
        return self.order

    def __repr__(self):
        return f"FiniteGroup({self.name or group_descriptor(self)}, order={self.order})"

    def mul(self, a: int, b: int) -> int:
        return int(self.table[a, b])

    def inv(self, a: int) -> int:
        return int(self.inverse[a])

    def power(self, a: int, k: int) -> int:
        if k < 0:
            a, k = self.inv(a), -k
        out = 0
        for _ in range(k):
            out = self.mul(out, a)
        return out

    @cached_property
    def element_orders(self) -> tuple[int, ...]:
        orders = []
        for a in range(self.order):
            k, x = 1, a
            while x != 0:
                x = self.mul(x, a)
                k += 1
            orders.append(k)
        return tuple(orders)

    @cached_property
    def exponent(self) -> int:
        e = 1
        for o in self.element_orders:
            e = e * o // gcd(e, o)
        return e

    def is_abelian(self) -> bool:
        return bool(np.array_equal(self.table, self.table.T))

    def check_associative(self, sample: int | None = None, seed: int = 0) -> bool:
        """Exhaustive check, or ``sample`` random triples when given."""
        t = self.table
        if sample is None:
            # (ab)c == a(bc) for all a, b, c via fancy indexing, one a at a time
            for a in range(self.order):
                if not np.array_equal(t[t[a]], t[a][t]):
                    return False
            return True
        rng = np.random.default_rng(seed)
        a, b, c = rng.integers(0, self.order, size=(3, sample))
        return bool(np.array_equal(t[t[a, b], c], t[a, t[b, c]]))


def close_under_multiplication(
    generators: Iterable[Hashable],
    mul: Callable[[Hashable, Hashable], Hashable],
    identity: Hashable | None = None,
    cap: int = DEFAULT_CAP,
    name: str | None = None,
) -> FiniteGroup:
    gens = list(generators)
    if identity is None:
        if not gens:
            raise ValueError("need a generator or an explicit identity")
        # g^k for the first generator eventually returns to the identity
        x = gens[0]
        seen = 0
        while mul(x, x) != x:
            x = mul(x, gens[0])
            seen += 1
            if seen > cap:
                raise GroupSizeError(f"closure exceeded cap {cap}")
        identity = x
    found = {identity: 0}
    labels = [identity]
    queue = deque([identity])
    while queue:
        x = queue.popleft()
        for g in gens:
            y = mul(x, g)
            if y not in found:
                found[y] = len(labels)
                labels.append(y)
                if len(labels) > cap:
                    raise GroupSizeError(f"closure exceeded cap {cap}")
                queue.append(y)
    n = len(labels)
    table = np.empty((n, n), dtype=np.int64)
    for i, x in enumerate(labels):
        table[i] = [found[mul(x, y)] for y in labels]
    return FiniteGroup(labels, table, name=name)


def cyclic_group(n: int) -> FiniteGroup:
    return close_under_multiplication([1 % n], lambda a, b: (a + b) % n, identity=0, name=f"Z{n}")


def direct_product(*orders: int) -> FiniteGroup:
    """Abelian group Z_{n1} x Z_{n2} x ... with tuple labels."""
    gens = []
    for k, n in enumerate(orders):
        gens.append(tuple(1 if t == k else 0 for t in range(len(orders))))

    def add(a, b):
        return tuple((x + y) % n for x, y, n in zip(a, b, orders))

    return close_under_multiplication(gens, add, identity=tuple(0 for _ in orders))


def dihedral_group(n: int) -> FiniteGroup:
    """Symmetries of an n-gon, order 2n; labels (rotation, reflection bit)."""
    def mul(a, b):
        r1, s1 = a
        r2, s2 = b
        return ((r1 + (-r2 if s1 else r2)) % n, s1 ^ s2)

    return close_under_multiplication([(1, 0), (0, 1)], mul, identity=(0, 0), name=f"D{2 * n}")


def quaternion_group() -> FiniteGroup:
    """Q8 as {+-1, +-i, +-j, +-k}; labels (sign, unit)."""
    unit_mul = {
        ("1", "1"): (1, "1"), ("1", "i"): (1, "i"), ("1", "j"): (1, "j"), ("1", "k"): (1, "k"),
        ("i", "1"): (1, "i"), ("i", "i"): (-1, "1"), ("i", "j"): (1, "k"), ("i", "k"): (-1, "j"),
        ("j", "1"): (1, "j"), ("j", "i"): (-1, "k"), ("j", "j"): (-1, "1"), ("j", "k"): (1, "i"),
        ("k", "1"): (1, "k"), ("k", "i"): (1, "j"), ("k", "j"): (-1, "i"), ("k", "k"): (-1, "1"),
    }

    def mul(a, b):
        s, u = unit_mul[(a[1], b[1])]
        return (a[0] * b[0] * s, u)

    return close_under_multiplication([(1, "i"), (1, "j")], mul, identity=(1, "1"), name="Q8")


# -- classes, centre, quotients -------------------------------------------------

def conjugacy_classes(G: FiniteGroup) -> list[tuple[int, ...]]:
    """Classes as sorted id tuples, ordered by smallest member (identity first)."""
    t, inv = G.table, G.inverse
    seen = np.zeros(G.order, dtype=bool)
    classes = []
    for a in range(G.order):
        if seen[a]:
            continue
        # x a x^-1 for all x at once
        members = np.unique(t[t[:, a], inv])
        seen[members] = True
        classes.append(tuple(int(m) for m in members))
    return classes


def center(G: FiniteGroup) -> tuple[int, ...]:
    t = G.table
    return tuple(a for a in range(G.order) if np.array_equal(t[a], t[:, a]))


def is_central(G: FiniteGroup, z: int) -> bool:
    return bool(np.array_equal(G.table[z], G.table[:, z]))


def generated_subgroup(G: FiniteGroup, gens: Iterable[int]) -> tuple[int, ...]:
    members = {0}
    frontier = [0]
    gens = list(gens)
    while frontier:
        x = frontier.pop()
        for g in gens:
            y = G.mul(x, g)
            if y not in members:
                members.add(y)
                frontier.append(y)
    return tuple(sorted(members))


def is_normal(G: FiniteGroup, N: Iterable[int]) -> bool:
    N = set(N)
    if 0 not in N or any(G.mul(a, b) not in N for a in N for b in N):
        return False
    t, inv = G.table, G.inverse
    for n in N:
        if not set(t[t[:, n], inv].tolist()) <= N:
            return False
    return True


def quotient_map(G: FiniteGroup, N: Iterable[int]) -> tuple[FiniteGroup, tuple[int, ...]]:
    """G/N together with the projection (element id of G -> coset id)."""
    N = sorted(set(N))
    if not is_normal(G, N):
        raise ValueError("subgroup is not normal")
    proj = [-1] * G.order
    reps = []
    for a in range(G.order):
        if proj[a] >= 0:
            continue
        for n in N:
            proj[G.mul(a, n)] = len(reps)
        reps.append(a)
    table = [[proj[G.mul(a, b)] for b in reps] for a in reps]
    labels = [frozenset(G.labels[G.mul(a, n)] for n in N) for a in reps]
    return FiniteGroup(labels, table), tuple(proj)


def quotient(G: FiniteGroup, N: Iterable[int]) -> FiniteGroup:
    return quotient_map(G, N)[0]


# -- character tables ----------------------------------------------------------

@dataclass
class CharacterTable:
    group: FiniteGroup
    classes: list[tuple[int, ...]]
    rows: list[tuple[Cyclotomic, ...]]
    class_of: tuple[int, ...] = field(repr=False)

    @property
    def sizes(self) -> list[int]:
        return [len(c) for c in self.classes]

    @property
    def representatives(self) -> list[int]:
        return [c[0] for c in self.classes]

    @property
    def degrees(self) -> list[int]:
        return [int(r[0].as_rational()) for r in self.rows]

    def __len__(self):
        return len(self.rows)

    def value(self, row: int, element: int) -> Cyclotomic:
        return self.rows[row][self.class_of[element]]

    def inner_product(self, r: Sequence[Cyclotomic], s: Sequence[Cyclotomic]):
        total = Cyclotomic.rational(0)
        for size, x, y in zip(self.sizes, r, s):
            total = total + x * y.conjugate() * size
        return total / self.group.order


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    for d in range(2, isqrt(n) + 1):
        if n % d == 0:
            return False
    return True


def _dixon_prime(exponent: int, order: int) -> int:
    p = exponent + 1
    while not (_is_prime(p) and p > 2 * isqrt(order) + 2):
        p += exponent
    return p


def _primitive_root(p: int) -> int:
    factors = [q for q in range(2, p) if (p - 1) % q == 0 and _is_prime(q)]
    for g in range(2, p):
        if all(pow(g, (p - 1) // q, p) != 1 for q in factors):
            return g
    return 1  # p == 2


def _nullspace_mod(M: np.ndarray, p: int) -> np.ndarray:
    """Basis of {v : M v = 0} over F_p, as columns."""
    M = M.copy() % p
    rows, cols = M.shape
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(M[r:, c])[0]
        if len(nz) == 0:
            continue
        k = r + nz[0]
        M[[r, k]] = M[[k, r]]
        M[r] = (M[r] * pow(int(M[r, c]), p - 2, p)) % p
        others = np.nonzero(M[:, c])[0]
        others = others[others != r]
        if len(others):
            M[others] = (M[others] - np.outer(M[others, c], M[r])) % p
        pivots.append(c)
        r += 1
    free = [c for c in range(cols) if c not in pivots]
    basis = np.zeros((cols, len(free)), dtype=np.int64)
    for t, f in enumerate(free):
        basis[f, t] = 1
        for row, c in enumerate(pivots):
            basis[c, t] = (-M[row, f]) % p
    return basis


def _solve_mod(V: np.ndarray, W: np.ndarray, p: int) -> np.ndarray:
    """X with V X = W over F_p, V of full column rank."""
    d = V.shape[1]
    aug = np.concatenate([V, W], axis=1) % p
    rows = aug.shape[0]
    r = 0
    for c in range(d):
        k = r + np.nonzero(aug[r:, c])[0][0]
        aug[[r, k]] = aug[[k, r]]
        aug[r] = (aug[r] * pow(int(aug[r, c]), p - 2, p)) % p
        others = np.nonzero(aug[:, c])[0]
        others = others[others != r]
        if len(others):
            aug[others] = (aug[others] - np.outer(aug[others, c], aug[r])) % p
        r += 1
    assert not aug[d:rows, d:].any(), "subspace is not invariant"
    return aug[:d, d:]


def _min_poly_roots(B: np.ndarray, p: int, v: np.ndarray) -> list[int]:
    """Roots in F_p of the minimal polynomial of B relative to v (Krylov)."""
    d = B.shape[0]
    krylov = [v % p]
    for _ in range(min(d, p)):
        krylov.append((B @ krylov[-1]) % p)
    N = _nullspace_mod(np.stack(krylov, axis=1), p)
    # lowest-degree relation: the basis vector with the smallest top index
    top = [max(np.nonzero(N[:, t])[0]) for t in range(N.shape[1])]
    coeffs = N[:, int(np.argmin(top))][: min(top) + 1]
    lam = np.arange(p, dtype=np.int64)
    value = np.zeros(p, dtype=np.int64)
    for c in coeffs[::-1]:
        value = (value * lam + int(c)) % p
    return [int(x) for x in np.nonzero(value == 0)[0]]


def _eigenspaces_mod(B: np.ndarray, p: int, rng) -> list[np.ndarray]:
    d = B.shape[0]
    eye = np.eye(d, dtype=np.int64)
    for _ in range(8):
        roots = _min_poly_roots(B, p, rng.integers(0, p, size=d))
        pieces = [_nullspace_mod((B - lam * eye) % p, p) for lam in roots]
        if sum(N.shape[1] for N in pieces) == d:
            return [N for N in pieces if N.shape[1]]
    raise ArithmeticError("class matrix not diagonalisable mod p")


def character_table(G: FiniteGroup, cap: int = DEFAULT_CAP) -> CharacterTable:
    if G.order > cap:
        raise GroupSizeError(f"|G|={G.order} exceeds cap {cap}")
    classes = conjugacy_classes(G)
    k = len(classes)
    class_of = np.empty(G.order, dtype=np.int64)
    for c, members in enumerate(classes):
        class_of[list(members)] = c
    reps = [c[0] for c in classes]
    sizes = np.array([len(c) for c in classes], dtype=np.int64)
    e = G.exponent
    p = _dixon_prime(e, G.order)

    # A_j[r, s] = #{x in C_j : x^-1 z_s in C_r}; central characters are common
    # right eigenvectors of all A_j
    def class_matrix(j):
        A = np.zeros((k, k), dtype=np.int64)
        xs = np.array(classes[j])
        for s, z in enumerate(reps):
            r = class_of[G.table[G.inverse[xs], z]]
            np.add.at(A[:, s], r, 1)
        return A % p

    spaces = [np.eye(k, dtype=np.int64)]
    rng = np.random.default_rng(0)
    for j in sorted(range(1, k), key=lambda c: (sizes[c], c)):
        if all(V.shape[1] == 1 for V in spaces):
            break
        A = class_matrix(j)
        split = []
        for V in spaces:
            d = V.shape[1]
            if d == 1:
                split.append(V)
                continue
            B = _solve_mod(V, (A @ V) % p, p)
            pieces = _eigenspaces_mod(B, p, rng)
            split += [(V @ N) % p for N in pieces]
        spaces = split
    if any(V.shape[1] != 1 for V in spaces):
        raise ArithmeticError("class sums did not separate the characters")

    inv_class = class_of[G.inverse[reps]]
    size_inv = np.array([pow(int(c), p - 2, p) for c in sizes], dtype=np.int64)
    omega = pow(_primitive_root(p), (p - 1) // e, p)
    # power map: class of z_s^l for l = 0..e-1
    powers = np.zeros((k, e), dtype=np.int64)
    for s, z in enumerate(reps):
        x = 0
        for l in range(e):
            powers[s, l] = class_of[x]
            x = G.mul(x, z)
    e_inv = pow(e, p - 2, p)
    # mu[s, t] = multiplicity of eigenvalue zeta^t of z_s in the representation
    dft = np.array([[pow(omega, (-t * l) % e, p) for l in range(e)] for t in range(e)], dtype=np.int64)
    lifted: dict[tuple[int, ...], Cyclotomic] = {}

    rows = []
    for V in spaces:
        w = V[:, 0] % p
        w = (w * pow(int(w[0]), p - 2, p)) % p
        norm = int((w * w[inv_class] % p * size_inv % p).sum() % p)
        deg_sq = (G.order * pow(norm, p - 2, p)) % p
        deg = next(d for d in range(1, isqrt(G.order) + 1) if (d * d - deg_sq) % p == 0)
        chi_mod = (w * deg % p) * size_inv % p
        mu = (chi_mod[powers] @ dft.T) % p * e_inv % p
        if (mu > deg).any():
            raise ArithmeticError("eigenvalue multiplicity out of range; prime too small")
        row = []
        for vec in map(tuple, mu.tolist()):
            if vec not in lifted:
                lifted[vec] = Cyclotomic(e, vec)
            row.append(lifted[vec])
        rows.append(tuple(row))

    rows.sort(key=lambda r: (int(r[0].as_rational()), [x.sort_key() for x in r]))
    table = CharacterTable(G, classes, rows, tuple(int(c) for c in class_of))
    if sum(d * d for d in table.degrees) != G.order:
        raise ArithmeticError("sum of squared degrees differs from |G|")
    return table


def central_scalar(table: CharacterTable, row: int, z: int) -> Cyclotomic:
    G = table.group
    if not is_central(G, z):
        raise ValueError(f"element {z} is not central")
    value = table.value(row, z) / table.degrees[row]
    if value ** G.exponent != 1:
        raise ArithmeticError("central scalar is not a root of unity")
    return value


# -- descriptors ---------------------------------------------------------------

def _prime_factors(n: int) -> list[int]:
    out, d = [], 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def abelian_invariants(G: FiniteGroup) -> list[int]:
    """Invariant factors n1 >= n2 >= ... with n_{t+1} | n_t."""
    orders = G.element_orders
    per_prime = {}
    for q in _prime_factors(G.order):
        # log_q |{x : x^(q^j) = 1}| = sum_i min(lambda_i, j)
        sylow = q
        while G.order % (sylow * q) == 0:
            sylow *= q
        logs = [0]
        j = 1
        while True:
            count = sum(1 for o in orders if (q**j) % o == 0)
            lg = 0
            while q**lg < count:
                lg += 1
            logs.append(lg)
            if count == sylow:
                break
            j += 1
        at_least = [logs[j] - logs[j - 1] for j in range(1, len(logs))]
        lam = []
        for j in range(len(at_least), 0, -1):
            lam += [j] * (at_least[j - 1] - (at_least[j] if j < len(at_least) else 0))
        per_prime[q] = sorted(lam, reverse=True)
    length = max((len(v) for v in per_prime.values()), default=0)
    factors = []
    for t in range(length):
        f = 1
        for q, lam in per_prime.items():
            if t < len(lam):
                f *= q ** lam[t]
        factors.append(f)
    return factors


def group_descriptor(G: FiniteGroup) -> str:
    if G.order == 1:
        return "1"
    if G.is_abelian():
        inv = abelian_invariants(G)
        if len(inv) > 1 and all(f == 2 for f in inv):
            return f"(Z2)^{len(inv)}"
        return "x".join(f"Z{f}" for f in inv)
    if G.order == 8:
        involutions = sum(1 for o in G.element_orders if o == 2)
        return "D8" if involutions == 5 else "Q8"
    return f"nonabelian-order-{G.order}"
