"""Exact arithmetic in cyclotomic fields Q(zeta_m), zeta_m = exp(2 pi i / m).

Numbers are stored as rational coordinates in the power basis
1, z, ..., z^(phi(m)-1), reduced modulo the m-th cyclotomic polynomial.
Operands from different fields are lifted to the field of the lcm conductor.
"""
from __future__ import annotations

import cmath
from fractions import Fraction
from functools import lru_cache
from math import gcd


@lru_cache(maxsize=None)
def cyclotomic_polynomial(m: int) -> tuple[int, ...]:
    """Integer coefficients of Phi_m, constant term first."""
    num = [-1] + [0] * (m - 1) + [1]  # x^m - 1
    for d in range(1, m):
        if m % d == 0:
            num = _exact_divide(num, cyclotomic_polynomial(d))
    return tuple(num)


def _exact_divide(num, den):
    num = list(num)
    out = [0] * (len(num) - len(den) + 1)
    for k in range(len(out) - 1, -1, -1):
        c = num[k + len(den) - 1] // den[-1]
        out[k] = c
        for t, dc in enumerate(den):
            num[k + t] -= c * dc
    assert not any(num), "non-exact polynomial division"
    return out


def _reduce(coeffs: list[Fraction], m: int) -> tuple[Fraction, ...]:
    phi = cyclotomic_polynomial(m)
    deg = len(phi) - 1
    coeffs = list(coeffs)
    for k in range(len(coeffs) - 1, deg - 1, -1):
        c = coeffs[k]
        if c:
            # phi is monic: x^deg = -(lower terms)
            for t in range(deg):
                coeffs[k - deg + t] -= c * phi[t]
            coeffs[k] = Fraction(0)
    coeffs += [Fraction(0)] * (deg - len(coeffs))
    return tuple(coeffs[:deg])


class Cyclotomic:
    __slots__ = ("m", "coeffs", "_approx")

    def __init__(self, m: int, coeffs):
        self.m = m
        self.coeffs = _reduce([Fraction(c) for c in coeffs], m)
        self._approx = None

    @classmethod
    def rational(cls, q, m: int = 1) -> "Cyclotomic":
        return cls(m, [q])

    @classmethod
    def root_of_unity(cls, m: int, k: int = 1) -> "Cyclotomic":
        k %= m
        return cls(m, [0] * k + [1])

    def _lift(self, m: int) -> "Cyclotomic":
        if m == self.m:
            return self
        step = m // self.m
        coeffs = [Fraction(0)] * m
        for k, c in enumerate(self.coeffs):
            coeffs[(k * step) % m] += c
        return Cyclotomic(m, coeffs)

    def _common(self, other):
        if not isinstance(other, Cyclotomic):
            other = Cyclotomic.rational(other)
        m = self.m * other.m // gcd(self.m, other.m)
        return self._lift(m), other._lift(m)

    def __add__(self, other):
        a, b = self._common(other)
        return Cyclotomic(a.m, [x + y for x, y in zip(a.coeffs, b.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return Cyclotomic(self.m, [-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-other if isinstance(other, Cyclotomic) else -Fraction(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        a, b = self._common(other)
        prod = [Fraction(0)] * max(1, 2 * len(a.coeffs) - 1)
        for i, x in enumerate(a.coeffs):
            if x:
                for j, y in enumerate(b.coeffs):
                    if y:
                        prod[i + j] += x * y
        return Cyclotomic(a.m, prod)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, Cyclotomic):
            q = other.as_rational()
            if q is None:
                raise NotImplementedError("division by an irrational cyclotomic")
            other = q
        other = Fraction(other)
        return Cyclotomic(self.m, [c / other for c in self.coeffs])

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative power")
        out = Cyclotomic.rational(1, self.m)
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def conjugate(self) -> "Cyclotomic":
        coeffs = [Fraction(0)] * self.m
        for k, c in enumerate(self.coeffs):
            coeffs[(-k) % self.m] += c
        return Cyclotomic(self.m, coeffs)

    def as_rational(self) -> Fraction | None:
        if any(self.coeffs[1:]):
            return None
        return self.coeffs[0]

    def __complex__(self):
        if self._approx is None:
            z = cmath.exp(2j * cmath.pi / self.m)
            self._approx = sum(float(c) * z**k for k, c in enumerate(self.coeffs))
        return complex(self._approx)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Cyclotomic.rational(other)
        if not isinstance(other, Cyclotomic):
            return NotImplemented
        a, b = self._common(other)
        return a.coeffs == b.coeffs

    def __hash__(self):
        # consistent with __eq__ across conductors: equal numbers share a value
        z = complex(self)
        return hash((round(z.real, 9) + 0.0, round(z.imag, 9) + 0.0))

    def sort_key(self):
        z = complex(self)
        return (-round(z.real, 9), -round(z.imag, 9))

    def gaussian_parts(self) -> tuple[Fraction, Fraction] | None:
        """(a, b) with self == a + b*i, when self lies in Q(i)."""
        lifted = self._lift(self.m * 4 // gcd(self.m, 4))
        a = lifted.coeffs[0]
        b = ((lifted - a) * -Cyclotomic.root_of_unity(4)).as_rational()
        if b is None or lifted != a + b * Cyclotomic.root_of_unity(4):
            return None
        return a, b

    def __str__(self):
        q = self.as_rational()
        if q is not None:
            return str(q)
        parts = self.gaussian_parts()
        if parts is not None:
            a, b = parts
            imag = {1: "i", -1: "-i"}.get(b, f"{b}i")
            if a == 0:
                return imag
            return f"{a}{'' if imag.startswith('-') else '+'}{imag}"
        return f"Q(z{self.m})[" + ",".join(str(c) for c in self.coeffs) + "]"

    def __repr__(self):
        return f"Cyclotomic({self})"
