"""Exact permutation arithmetic on {0..n-1}.

Composition convention, fixed once for the whole package:

    compose(p, q) maps x to p(q(x))   ("p after q").

The text format for cycles is 1-based to match the usual notation in the
literature, e.g. "(1,2)(3,4)"; internally everything is 0-based.
"""
from __future__ import annotations

from typing import Iterable, Sequence


class Permutation:
    """A bijection of {0..n-1}, stored as the tuple of images."""

    __slots__ = ("images",)

    def __init__(self, images: Sequence[int]):
        images = tuple(images)
        n = len(images)
        if n < 1:
            raise ValueError("degree must be at least 1")
        if sorted(images) != list(range(n)):
            raise ValueError("images do not form a bijection of {0..n-1}")
        object.__setattr__(self, "images", images)

    # -- basic protocol ----------------------------------------------------

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i]

    def __eq__(self, other) -> bool:
        return isinstance(other, Permutation) and self.images == other.images

    def __hash__(self) -> int:
        return hash(self.images)

    def __repr__(self) -> str:
        return f"Permutation({self.format_cycles() or 'id'}, n={self.n})"

    def __setattr__(self, *a):
        raise AttributeError("Permutation is immutable")

    # -- arithmetic --------------------------------------------------------

    def __mul__(self, other: "Permutation") -> "Permutation":
        """self * other = compose(self, other): first other, then self."""
        return compose(self, other)

    def inverse(self) -> "Permutation":
        inv = [0] * self.n
        for i, j in enumerate(self.images):
            inv[j] = i
        return Permutation(inv)

    def conjugate(self, g: "Permutation") -> "Permutation":
        """g * self * g^-1."""
        return compose(compose(g, self), g.inverse())

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.images))

    def order(self) -> int:
        k = 1
        p = self
        while not p.is_identity():
            p = compose(p, self)
            k += 1
        return k

    # -- cycle structure ---------------------------------------------------

    def cycles(self, include_fixed: bool = False) -> list[tuple[int, ...]]:
        """Disjoint cycles, each starting at its smallest element, sorted."""
        seen = [False] * self.n
        out = []
        for start in range(self.n):
            if seen[start]:
                continue
            cyc = [start]
            seen[start] = True
            j = self.images[start]
            while j != start:
                cyc.append(j)
                seen[j] = True
                j = self.images[j]
            if len(cyc) > 1 or include_fixed:
                out.append(tuple(cyc))
        return out

    def format_cycles(self) -> str:
        """1-based disjoint-cycle text; identity formats as the empty string."""
        return "".join(
            "(" + ",".join(str(i + 1) for i in cyc) + ")" for cyc in self.cycles()
        )

    # -- constructors ------------------------------------------------------

    @staticmethod
    def identity(n: int) -> "Permutation":
        return Permutation(range(n))

    @staticmethod
    def from_cycles(n: int, cycles: Iterable[Sequence[int]]) -> "Permutation":
        """Build from 0-based cycles; elements not mentioned are fixed."""
        images = list(range(n))
        seen = set()
        for cyc in cycles:
            for i in cyc:
                if not 0 <= i < n:
                    raise ValueError(f"index {i} out of range for degree {n}")
                if i in seen:
                    raise ValueError(f"element {i} repeated across cycles")
                seen.add(i)
            for a, b in zip(cyc, tuple(cyc[1:]) + (cyc[0],)):
                images[a] = b
        return Permutation(images)


def compose(p: Permutation, q: Permutation) -> Permutation:
    """The permutation x -> p(q(x))."""
    if p.n != q.n:
        raise ValueError(f"degree mismatch: {p.n} != {q.n}")
    qi = q.images
    pi = p.images
    return Permutation(tuple(pi[qi[x]] for x in range(p.n)))


def commutator(p: Permutation, q: Permutation) -> Permutation:
    """p q p^-1 q^-1 under the compose convention."""
    return compose(compose(p, q), compose(p.inverse(), q.inverse()))


def is_transitive(gens: list[Permutation], n: int) -> bool:
    """True iff <gens> has a single orbit on {0..n-1}."""
    for g in gens:
        if g.n != n:
            raise ValueError(f"degree mismatch: generator has degree {g.n}, not {n}")
    maps = [g.images for g in gens] + [g.inverse().images for g in gens]
    seen = [False] * n
    seen[0] = True
    stack = [0]
    count = 1
    while stack:
        x = stack.pop()
        for m in maps:
            y = m[x]
            if not seen[y]:
                seen[y] = True
                count += 1
                stack.append(y)
    return count == n


def parse_cycles(text: str, n: int) -> Permutation:
    """Parse 1-based disjoint-cycle notation such as "(1,2)(3,4)".

    Whitespace is ignored; the empty string is the identity.
    """
    s = "".join(text.split())
    cycles: list[list[int]] = []
    pos = 0
    while pos < len(s):
        if s[pos] != "(":
            raise ValueError(f"expected '(' at position {pos} in {text!r}")
        end = s.find(")", pos)
        if end < 0:
            raise ValueError(f"unbalanced parenthesis in {text!r}")
        body = s[pos + 1 : end]
        if not body:
            raise ValueError(f"empty cycle in {text!r}")
        try:
            cyc = [int(t) - 1 for t in body.split(",")]
        except ValueError as exc:
            raise ValueError(f"malformed cycle {body!r} in {text!r}") from exc
        cycles.append(cyc)
        pos = end + 1
    return Permutation.from_cycles(n, cycles)


def format_cycles(p: Permutation) -> str:
    return p.format_cycles()
