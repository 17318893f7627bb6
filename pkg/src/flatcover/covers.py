"""Abelian covers of a genus-2 origami.

A cover is stored as an edge cocycle: a residue mod m per right edge and per
top edge of each base square.  Crossing an edge adds its weight to the sheet
coordinate.  Covers are built from the values of their holonomy homomorphism
H_1(base, Z/m) -> Z/m on a symplectic cycle basis: spanning-tree edges get
weight zero and each cotree edge gets the value of the homomorphism on its
fundamental cycle, which kills the coboundary ambiguity at construction.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .origami import Cycle, Origami, intersection
from .perms import Permutation


@dataclass(frozen=True)
class Cover:
    """A connected Z/m cover of `base` given by edge weights (w_right, w_up)."""

    base: Origami
    m: int
    w_right: tuple[int, ...]
    w_up: tuple[int, ...]

    def holonomy(self, cycle: Cycle | str, start: int = 0) -> int:
        """Sum of edge weights crossed by the cycle, mod m."""
        if not isinstance(cycle, Cycle):
            cycle = Cycle.from_loop(self.base, start, cycle)
        hi = self.base.h.inverse().images
        vi = self.base.v.inverse().images
        total = 0
        for t in range(self.base.n):
            total += cycle.dtau[t] * self.w_right[hi[t]]
            total += cycle.dsig[t] * self.w_up[vi[t]]
        return total % self.m

    def holonomy_on_basis(self, basis) -> tuple[int, ...]:
        return tuple(self.holonomy(c) for c in basis)

    def lift(self) -> Origami:
        """Total space: squares are (base square, sheet), sheet shifted by the
        crossed edge weight."""
        n, m = self.base.n, self.m
        h, v = self.base.h.images, self.base.v.images
        him = [0] * (n * m)
        vim = [0] * (n * m)
        for s in range(n):
            for t in range(m):
                him[s + n * t] = h[s] + n * ((t + self.w_right[s]) % m)
                vim[s + n * t] = v[s] + n * ((t + self.w_up[s]) % m)
        try:
            return Origami(Permutation(him), Permutation(vim))
        except ValueError as exc:
            raise ValueError("cover is disconnected (holonomy not surjective)") from exc

    def deck_shift(self) -> Permutation:
        n, m = self.base.n, self.m
        return Permutation(tuple(s + n * ((t + 1) % m)
                                 for t in range(m) for s in range(n)))


def cover_from_basis_values(o: Origami, m: int, basis: list[Cycle],
                            values: tuple[int, ...]) -> Cover:
    """The cover whose holonomy takes the given values on the symplectic basis."""
    if len(values) != len(basis):
        raise ValueError("one value per basis cycle required")
    cycles, _, _, cotree = o._homology_data()
    n = o.n
    w_right = [0] * n
    w_up = [0] * n
    for cyc, (kind, s) in zip(cycles, cotree):
        # coordinates of cyc in the basis, read off through the symplectic form
        w = 0
        for k in range(0, len(basis), 2):
            a, b = basis[k], basis[k + 1]
            w += intersection(cyc, b) * values[k]      # coefficient along a_k
            w += -intersection(cyc, a) * values[k + 1]  # coefficient along b_k
        if kind == "E":
            w_right[s] = w % m
        else:
            w_up[s] = w % m
    cover = Cover(o, m, tuple(w_right), tuple(w_up))
    assert cover.holonomy_on_basis(basis) == tuple(x % m for x in values)
    return cover


def all_double_covers(o: Origami, basis: list[Cycle] | None = None) -> list[Cover]:
    """The 15 connected double covers of a genus-2 origami, indexed by the
    nonzero holonomy homomorphisms H_1 -> Z/2."""
    if o.stratum().genus != 2:
        raise ValueError("double-cover enumeration needs a genus-2 base")
    if basis is None:
        basis = o.symplectic_basis()
    covers = []
    for code in range(1, 16):
        values = tuple((code >> k) & 1 for k in range(4))
        covers.append(cover_from_basis_values(o, 2, basis, values))
    return covers


def cover_label(basis, c: Cover) -> tuple[tuple[int, int, int, int], int]:
    """Poincare-dual class gamma = (x1, y1, x2, y2) of a double cover and its
    numbering x1 + 2 y1 + 4 x2 + 8 y2 in {1..15}."""
    if c.m != 2:
        raise ValueError("labels are defined for double covers")
    a1, b1, a2, b2 = basis
    gamma = (c.holonomy(b1), c.holonomy(a1), c.holonomy(b2), c.holonomy(a2))
    label = gamma[0] + 2 * gamma[1] + 4 * gamma[2] + 8 * gamma[3]
    return gamma, label


def primitive_vector_count(n: int, length: int = 4) -> int:
    count = n ** length
    m = n
    p = 2
    while p * p <= m:
        if m % p == 0:
            count -= count // p ** length
            while m % p == 0:
                m //= p
        p += 1
    if m > 1:
        count -= count // m ** length
    return count


def cyclic_covers(o: Origami, n: int, basis: list[Cycle] | None = None) -> list[Cover]:
    """One connected Z/n cover per primitive dual vector in (Z/n)^4."""
    if n < 2:
        raise ValueError("modulus must be at least 2")
    if o.stratum().genus != 2:
        raise ValueError("cyclic-cover enumeration needs a genus-2 base")
    if basis is None:
        basis = o.symplectic_basis()
    covers = []
    for x1 in range(n):
        for y1 in range(n):
            for x2 in range(n):
                for y2 in range(n):
                    if gcd(gcd(x1, y1), gcd(gcd(x2, y2), n)) != 1:
                        continue
                    # holonomy of the functional <., gamma> on (a1, b1, a2, b2)
                    values = (y1, -x1 % n, y2, -x2 % n)
                    covers.append(cover_from_basis_values(o, n, basis, values))
    assert len(covers) == primitive_vector_count(n)
    return covers


def cover_text(c: Cover, basis=None) -> str:
    if c.m == 2 and basis is not None:
        _, label = cover_label(basis, c)
        return f"{c.base.to_text()} label={label}"
    values = c.holonomy_on_basis(basis) if basis is not None else None
    if values is not None:
        y1, mx1, y2, mx2 = values
        dual = ((-mx1) % c.m, y1, (-mx2) % c.m, y2)
        return f"{c.base.to_text()} n={c.m} dual=" + ",".join(map(str, dual))
    return f"{c.base.to_text()} n={c.m} w_right={list(c.w_right)} w_up={list(c.w_up)}"
