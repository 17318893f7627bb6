"""Exact arithmetic in Q(lambda), lambda^2 = e*lambda + b, and the cylinder
moduli / multitwist matrices of the L-shaped surfaces L(b,e) and their
GL2+(R)-companions curly-L(b,e) (same shape, top square side lambda-2 and
bottom rectangle width b-2).

All comparisons are exact: the sign of x + y*lambda is decided by rational
case analysis on x, y and a comparison of squares against D = e^2 + 4b.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

Q = Fraction


class QuadraticElement:
    """x + y*lambda with lambda = (e + sqrt(D))/2, D = e^2 + 4b."""

    __slots__ = ("x", "y", "b", "e")

    def __init__(self, x, y, b: int, e: int):
        D = e * e + 4 * b
        if D < 5:
            raise ValueError("need D = e^2 + 4b >= 5")
        object.__setattr__(self, "x", Q(x))
        object.__setattr__(self, "y", Q(y))
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "e", e)

    def __setattr__(self, *a):
        raise AttributeError("QuadraticElement is immutable")

    @property
    def D(self) -> int:
        return self.e * self.e + 4 * self.b

    def _like(self, x, y) -> "QuadraticElement":
        return QuadraticElement(x, y, self.b, self.e)

    def _coerce(self, other) -> "QuadraticElement":
        if isinstance(other, QuadraticElement):
            if (other.b, other.e) != (self.b, self.e):
                raise ValueError("mixed ring parameters")
            return other
        return self._like(other, 0)

    # -- ring operations ---------------------------------------------------

    def __add__(self, other):
        o = self._coerce(other)
        return self._like(self.x + o.x, self.y + o.y)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        return self._like(self.x - o.x, self.y - o.y)

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __neg__(self):
        return self._like(-self.x, -self.y)

    def __mul__(self, other):
        o = self._coerce(other)
        # (x + y L)(x' + y' L) with L^2 = e L + b
        yy = self.y * o.y
        return self._like(self.x * o.x + self.b * yy,
                          self.x * o.y + self.y * o.x + self.e * yy)

    __rmul__ = __mul__

    def norm(self) -> Fraction:
        """Product with the conjugate: x^2 + e x y - b y^2."""
        return self.x * self.x + self.e * self.x * self.y - self.b * self.y * self.y

    def galois_conjugate(self) -> "QuadraticElement":
        """lambda -> e - lambda."""
        return self._like(self.x + self.e * self.y, -self.y)

    def inverse(self) -> "QuadraticElement":
        nrm = self.norm()
        if nrm == 0:
            raise ZeroDivisionError("element is zero or a zero divisor")
        conj = self.galois_conjugate()
        return self._like(conj.x / nrm, conj.y / nrm)

    def __truediv__(self, other):
        return self * self._coerce(other).inverse()

    def __rtruediv__(self, other):
        return self._coerce(other) * self.inverse()

    # -- order -------------------------------------------------------------

    def sign(self) -> int:
        """Sign of the real value under lambda = (e + sqrt(D))/2 > 0."""
        A = 2 * self.x + self.e * self.y  # value = (A + y sqrt(D)) / 2
        B = self.y
        if B == 0:
            return (A > 0) - (A < 0)
        if A == 0:
            return 1 if B > 0 else -1
        if A > 0 and B > 0:
            return 1
        if A < 0 and B < 0:
            return -1
        diff = A * A - B * B * self.D
        s = (diff > 0) - (diff < 0)
        return s if A > 0 else -s

    def __eq__(self, other):
        try:
            o = self._coerce(other)
        except (ValueError, TypeError):
            return NotImplemented
        return self.x == o.x and self.y == o.y

    def __hash__(self):
        return hash((self.x, self.y, self.b, self.e))

    def __lt__(self, other):
        return (self - other).sign() < 0

    def __le__(self, other):
        return (self - other).sign() <= 0

    def __gt__(self, other):
        return (self - other).sign() > 0

    def __ge__(self, other):
        return (self - other).sign() >= 0

    def is_rational(self) -> bool:
        return self.y == 0

    def as_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError("element has a nonzero lambda-part")
        return self.x

    def to_json(self) -> dict:
        return {"x": str(self.x), "y": str(self.y), "b": self.b, "e": self.e}

    def __repr__(self):
        return f"QuadraticElement({self.x} + {self.y}*lam; b={self.b}, e={self.e})"


def lam(b: int, e: int) -> QuadraticElement:
    return QuadraticElement(0, 1, b, e)


def rational(q, b: int, e: int) -> QuadraticElement:
    return QuadraticElement(q, 0, b, e)


# ---------------------------------------------------------------------------
# planar periods and cylinder moduli
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class PlanarPeriod:
    """The complex period horizontal + i * vertical."""

    horizontal: QuadraticElement
    vertical: QuadraticElement

    def __add__(self, other):
        return PlanarPeriod(self.horizontal + other.horizontal,
                            self.vertical + other.vertical)

    def __sub__(self, other):
        return PlanarPeriod(self.horizontal - other.horizontal,
                            self.vertical - other.vertical)

    def cmul(self, other: "PlanarPeriod") -> "PlanarPeriod":
        """Complex multiplication."""
        a, b = self.horizontal, self.vertical
        c, d = other.horizontal, other.vertical
        return PlanarPeriod(a * c - b * d, a * d + b * c)

    def is_zero(self) -> bool:
        return self.horizontal.sign() == 0 and self.vertical.sign() == 0


def period(hx, vx, b: int, e: int) -> PlanarPeriod:
    def mk(v):
        return v if isinstance(v, QuadraticElement) else rational(v, b, e)
    return PlanarPeriod(mk(hx), mk(vx))


def cylinder_modulus(core: PlanarPeriod, crossing: PlanarPeriod) -> QuadraticElement:
    """Im(crossing * conj(core)) / |core|^2: the modulus of the parallelogram
    cylinder with the given core and crossing periods (signed)."""
    ax, ay = core.horizontal, core.vertical
    cx, cy = crossing.horizontal, crossing.vertical
    denom = ax * ax + ay * ay
    if denom.sign() == 0:
        raise ZeroDivisionError("zero core period")
    return (cy * ax - cx * ay) / denom


@dataclass(frozen=True)
class CylinderData:
    core_class: tuple[int, int, int, int]
    core_period: PlanarPeriod
    crossing_period: PlanarPeriod
    modulus: QuadraticElement


# Frozen period data of the cylinder decompositions, read off the L shape:
# bottom rectangle b x 1 with the lambda x lambda square on top of its left
# part; the curly variant shrinks both by 2.

def _decomposition_moduli(case: str, b: int, e: int):
    L = lam(b, e)
    one = rational(1, b, e)

    def mods(*pairs):
        return [cylinder_modulus(c, x) for c, x in pairs]

    if case == "horizontal":
        return mods((period(L, 0, b, e), period(0, L, b, e)),
                    (period(b, 0, b, e), period(0, 1, b, e)))
    if case == "vertical":
        return mods((period(0, L + 1, b, e), period(-L, 0, b, e)),
                    (period(0, 1, b, e), period(-(rational(b, b, e) - L), 0, b, e)))
    if case == "slope_2_b":
        if e != 1 or b % 2 or b <= 6:
            raise ValueError("slope 2/b decomposition needs e = 1, b even, b > 6")
        c1 = period(b, 2, b, e)
        x1 = period(L, 1, b, e)
        c2 = period(rational(Q(b, 2), b, e) * L + b, L + 2, b, e)
        x2 = period(-L, 0, b, e)
        return mods((c1, x1), (c2, x2))
    if case in ("curly_horizontal", "curly_vertical", "curly_slope"):
        if e != 1:
            raise ValueError("the curly variant is defined for e = 1")
        Lp = L - 2          # top square side
        bp = b - 2          # bottom rectangle width
        if case == "curly_horizontal":
            return mods((period(Lp, 0, b, e), period(0, Lp, b, e)),
                        (period(bp, 0, b, e), period(0, 1, b, e)))
        if case == "curly_vertical":
            return mods((period(0, Lp + 1, b, e), period(-Lp, 0, b, e)),
                        (period(0, 1, b, e), period(-(rational(bp, b, e) - Lp), 0, b, e)))
        # curly_slope: slope 2/(b-2), needs lambda - 2 < (b-2)/2
        if b % 2 or b < 8:
            raise ValueError("curly slope decomposition needs b even, b >= 8")
        c1 = period(bp, 2, b, e)
        x1 = period(Lp, 1, b, e)
        c2 = period(rational(Q(bp, 2), b, e) * Lp + bp, Lp + 2, b, e)
        x2 = period(-Lp, 0, b, e)
        return mods((c1, x1), (c2, x2))
    raise ValueError(f"unknown decomposition case {case!r}")


#: which ratio each case reports (the commensurability witness in the paper)
_RATIO_ORDER = {
    "horizontal": ("m1", "m2"),        # m1/m2 = b
    "vertical": ("m2", "m1"),          # m2/m1 = b - e - 1
    "slope_2_b": ("m1", "m2"),         # m1/m2 = (b/2 - e - 2)/2
    "curly_horizontal": ("m1", "m2"),  # m1/m2 = b - 2
    "curly_vertical": ("m2", "m1"),    # m2/m1 = b
    "curly_slope": ("m1", "m2"),       # m1/m2 = b/4
}


def modulus_ratio(case: str, b: int, e: int) -> QuadraticElement:
    """The exact commensurability ratio of the two cylinder moduli of the
    given decomposition; always rational (asserted)."""
    m1, m2 = _decomposition_moduli(case, b, e)
    num, den = (m1, m2) if _RATIO_ORDER[case] == ("m1", "m2") else (m2, m1)
    ratio = num / den
    if not ratio.is_rational():
        raise AssertionError(f"modulus ratio for {case} has a lambda-part: {ratio!r}")
    return ratio


def twist_powers(ratio) -> tuple[int, int]:
    """(k1, k2) with m1/m2 = k1/k2 in lowest terms: the twist powers in the
    two cylinders of the smallest common multitwist."""
    if isinstance(ratio, QuadraticElement):
        ratio = ratio.as_fraction()
    ratio = Q(ratio)
    if ratio <= 0:
        raise ValueError("ratio must be positive")
    return ratio.numerator, ratio.denominator


# ---------------------------------------------------------------------------
# transvections
# ---------------------------------------------------------------------------

_J4 = ((0, 1, 0, 0), (-1, 0, 0, 0), (0, 0, 0, 1), (0, 0, -1, 0))


def _symp(u, w) -> int:
    """u^T J w in the basis (a1, b1, a2, b2)."""
    return (u[0] * w[1] - u[1] * w[0]) + (u[2] * w[3] - u[3] * w[2])


def multitwist_matrix(cylinders, handedness: int = 1):
    """Composite transvection x -> x + handedness * k <c, x> c over the given
    (core_class, power) pairs.

    Horizontal multitwists of the L surfaces use handedness +1, vertical ones
    -1 (a right-handed twist seen along the core points opposite ways relative
    to the orientation of the symplectic form).
    """
    if handedness not in (1, -1):
        raise ValueError("handedness must be +1 or -1")
    cols = []
    for j in range(4):
        x = [1 if i == j else 0 for i in range(4)]
        for core, k in cylinders:
            if k == 0:
                raise ValueError("twist powers must be nonzero")
            if gcd(gcd(abs(core[0]), abs(core[1])),
                   gcd(abs(core[2]), abs(core[3]))) != 1:
                raise ValueError("core class must be primitive")
            coef = handedness * k * _symp(core, x)
            x = [xi + coef * ci for xi, ci in zip(x, core)]
        cols.append(x)
    return tuple(tuple(cols[j][i] for j in range(4)) for i in range(4))


def horizontal_twist_matrix(b: int, e: int):
    """H, rebuilt from the horizontal cylinder cores (a1, power b), (a2, 1)."""
    return multitwist_matrix([((1, 0, 0, 0), b), ((0, 0, 1, 0), 1)], handedness=1)


def vertical_twist_matrix(b: int, e: int):
    """V, rebuilt from the vertical cores (b1+b2, 1), (b2, b-e-1)."""
    return multitwist_matrix([((0, 1, 0, 1), 1), ((0, 0, 0, 1), b - e - 1)],
                             handedness=-1)


def diagonal_twist_mod2(b: int, e: int):
    """Mod-2 matrix of the multitwist in the slope-2/b decomposition of
    L(b, e) (b = 2 mod 4) or the slope-2/(b-2) decomposition of curly-L
    (b = 0 mod 4), with cores alpha = (0,0,1,2) and alpha + beta,
    beta = (b/2, 1, 0, 0)."""
    if e != 1 or b % 2:
        raise ValueError("diagonal twists need e = 1 and b even")
    if b % 4 == 2:
        if b <= 6:
            raise ValueError("slope 2/b case needs b > 6")
        ratio = modulus_ratio("slope_2_b", b, e)
    else:
        if b < 8:
            raise ValueError("curly slope case needs b >= 8")
        ratio = modulus_ratio("curly_slope", b, e)
    k1, k2 = twist_powers(ratio)
    alpha = (0, 0, 1, 2)
    beta = (b // 2, 1, 0, 0)
    ab = tuple(x + y for x, y in zip(alpha, beta))
    M = multitwist_matrix([(alpha, k1), (ab, k2)], handedness=1)
    return tuple(tuple(x % 2 for x in row) for row in M)
