"""Exact arithmetic in the cyclotomic field Q(zeta_20).

Elements are polynomials in zeta of degree < 8 with Fraction coefficients,
reduced modulo the 20th cyclotomic polynomial

    Phi_20(x) = x^8 - x^6 + x^4 - x^2 + 1,

so zeta^8 = zeta^6 - zeta^4 + zeta^2 - 1.  The field contains i = zeta^5 and
the primitive 10th root of unity xi = zeta^2, which is what the regular
double decagon needs.
"""
from __future__ import annotations

from fractions import Fraction

Q = Fraction

DEGREE = 8
#: Phi_20 coefficients, constant term first.
MODULUS = (1, 0, -1, 0, 1, 0, -1, 0, 1)


class CyclotomicElement:
    """An element of Q(zeta_20), stored as 8 Fraction coefficients of
    1, zeta, ..., zeta^7."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [Q(c) for c in coeffs]
        if len(cs) > DEGREE:
            cs = _reduce(cs)
        cs += [Q(0)] * (DEGREE - len(cs))
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, *a):
        raise AttributeError("CyclotomicElement is immutable")

    def _coerce(self, other) -> "CyclotomicElement":
        if isinstance(other, CyclotomicElement):
            return other
        return CyclotomicElement([other])

    def __add__(self, other):
        o = self._coerce(other)
        return CyclotomicElement([a + b for a, b in zip(self.coeffs, o.coeffs)])

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        return CyclotomicElement([a - b for a, b in zip(self.coeffs, o.coeffs)])

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __neg__(self):
        return CyclotomicElement([-a for a in self.coeffs])

    def __mul__(self, other):
        o = self._coerce(other)
        prod = [Q(0)] * (2 * DEGREE - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(o.coeffs):
                    if b:
                        prod[i + j] += a * b
        return CyclotomicElement(_reduce(prod))

    __rmul__ = __mul__

    def __truediv__(self, other):
        return self * self._coerce(other).inverse()

    def __rtruediv__(self, other):
        return self._coerce(other) * self.inverse()

    def __eq__(self, other):
        try:
            o = self._coerce(other)
        except (TypeError, ValueError):
            return NotImplemented
        return self.coeffs == o.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def is_rational(self) -> bool:
        return all(c == 0 for c in self.coeffs[1:])

    def as_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError("element is not rational")
        return self.coeffs[0]

    def conjugate(self) -> "CyclotomicElement":
        """Complex conjugation: zeta -> zeta^-1 = zeta^19."""
        out = CyclotomicElement()
        for k, c in enumerate(self.coeffs):
            if c:
                out = out + c * zeta_pow(-k)
        return out

    def inverse(self) -> "CyclotomicElement":
        """Inverse via the extended Euclidean algorithm against Phi_20."""
        if self.is_zero():
            raise ZeroDivisionError("zero has no inverse")
        # Bezout over Q[x]: s * self + t * Phi = gcd = nonzero constant.
        r0 = [Q(c) for c in MODULUS]
        r1 = list(self.coeffs)
        while r1 and r1[-1] == 0:
            r1.pop()
        s0, s1 = [], [Q(1)]
        while True:
            q, r = _polydivmod(r0, r1)
            if not r:
                break
            s0, s1 = s1, _polysub(s0, _polymul(q, s1))
            r0, r1 = r1, r
        lead = r1[0] if len(r1) == 1 else None
        if lead is None:
            raise ZeroDivisionError("element is a zero divisor (not in the field)")
        inv = [c / lead for c in s1]
        return CyclotomicElement(inv)

    def __repr__(self):
        terms = []
        for k, c in enumerate(self.coeffs):
            if c:
                terms.append(f"{c}" if k == 0 else f"{c}*z^{k}")
        return "CyclotomicElement(" + (" + ".join(terms) or "0") + ")"


def _reduce(coeffs):
    """Reduce a coefficient list modulo Phi_20 in place."""
    cs = list(coeffs)
    for i in range(len(cs) - 1, DEGREE - 1, -1):
        c = cs[i]
        if c:
            cs[i] = Q(0)
            # x^i = x^(i-8) * (x^6 - x^4 + x^2 - 1)
            cs[i - 2] += c
            cs[i - 4] -= c
            cs[i - 6] += c
            cs[i - 8] -= c
    return cs[:DEGREE]


def _polydivmod(a, b):
    """Quotient and remainder of dense Q[x] polynomials (constant first)."""
    a = list(a)
    db, lb = len(b) - 1, b[-1]
    q = [Q(0)] * max(len(a) - db, 1)
    for i in range(len(a) - 1, db - 1, -1):
        c = a[i] / lb
        if c:
            q[i - db] = c
            for j in range(db + 1):
                a[i - db + j] -= c * b[j]
    while a and a[-1] == 0:
        a.pop()
    return q, a


def _polymul(a, b):
    out = [Q(0)] * (len(a) + len(b) - 1 or 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def _polysub(a, b):
    out = [Q(0)] * max(len(a), len(b))
    for i, x in enumerate(a):
        out[i] += x
    for i, y in enumerate(b):
        out[i] -= y
    while out and out[-1] == 0:
        out.pop()
    return out


def zeta_pow(k: int) -> CyclotomicElement:
    """zeta_20^k for any integer k."""
    k %= 20
    coeffs = [Q(0)] * (k + 1)
    coeffs[k] = Q(1)
    return CyclotomicElement(coeffs)


ZETA = zeta_pow(1)
XI = zeta_pow(2)    # primitive 10th root of unity
I_UNIT = zeta_pow(5)
ONE = CyclotomicElement([1])


def real_part(p: "CyclotomicElement") -> "CyclotomicElement":
    return (p + p.conjugate()) * Q(1, 2)


def imag_part(p: "CyclotomicElement") -> "CyclotomicElement":
    """The (totally real) imaginary part (p - conj(p)) / (2i)."""
    return (p - p.conjugate()) / (2 * I_UNIT)
