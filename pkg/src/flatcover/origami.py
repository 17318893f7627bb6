"""Square-tiled surfaces (origamis) as permutation pairs.

An origami is a transitive pair (h, v) of permutations of {0..n-1}: h(s) is
the square to the right of s, v(s) the square above.  Origamis are considered
up to simultaneous conjugation; `canonical_form` computes a canonical
relabeling, and equality/hashing go through it.

Homology is handled through "taxi paths": closed paths of unit moves
(E, N, W, S) between square centers.  Each closed path determines
 * skeleton coefficients: how often it is homologous to running along the
   bottom edge (sigma_s) and left edge (tau_s) of each square, and
 * dual crossing counts: how often it crosses each such edge transversely.
The algebraic intersection number of two classes is the signed sum of
crossings of one path's edges by the other, which makes intersection numbers,
symplectic bases, winding numbers and the Arf invariant exactly computable.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import gcd
import json

from .perms import Permutation, commutator, compose, is_transitive, parse_cycles


# ---------------------------------------------------------------------------
# homology cycles
# ---------------------------------------------------------------------------

_MOVES = "ENWS"


@dataclass(frozen=True)
class Cycle:
    """An integer homology chain on an origami, stored redundantly.

    sig/tau are coefficients of the path pushed onto the edge skeleton
    (sigma_s = bottom edge of square s, rightward; tau_s = left edge, upward).
    dsig/dtau are transverse crossing counts of the same edges (upward and
    rightward positive).  (dx, dy) is the period.  `moves` keeps the taxi
    moves when the cycle came from a single closed loop.
    """

    n: int
    sig: tuple[int, ...]
    tau: tuple[int, ...]
    dsig: tuple[int, ...]
    dtau: tuple[int, ...]
    dx: int
    dy: int
    start: int | None = None
    moves: str | None = None

    @staticmethod
    def zero(n: int) -> "Cycle":
        z = (0,) * n
        return Cycle(n, z, z, z, z, 0, 0)

    @staticmethod
    def from_loop(o: "Origami", start: int, moves: str) -> "Cycle":
        n = o.n
        h, v = o.h.images, o.v.images
        hi, vi = o.h.inverse().images, o.v.inverse().images
        sig = [0] * n
        tau = [0] * n
        dsig = [0] * n
        dtau = [0] * n
        dx = dy = 0
        s = start
        for ch in moves:
            if ch == "E":
                sig[s] += 1
                dtau[h[s]] += 1
                dx += 1
                s = h[s]
            elif ch == "W":
                s2 = hi[s]
                sig[s2] -= 1
                dtau[s] -= 1
                dx -= 1
                s = s2
            elif ch == "N":
                tau[s] += 1
                dsig[v[s]] += 1
                dy += 1
                s = v[s]
            elif ch == "S":
                s2 = vi[s]
                tau[s2] -= 1
                dsig[s] -= 1
                dy -= 1
                s = s2
            else:
                raise ValueError(f"unknown move {ch!r}")
        if s != start:
            raise ValueError("taxi path is not closed")
        return Cycle(n, tuple(sig), tuple(tau), tuple(dsig), tuple(dtau),
                     dx, dy, start, moves)

    @property
    def period(self) -> tuple[int, int]:
        return (self.dx, self.dy)

    def __add__(self, other: "Cycle") -> "Cycle":
        if self.n != other.n:
            raise ValueError("cycles live on different origamis")
        add = lambda a, b: tuple(x + y for x, y in zip(a, b))
        return Cycle(self.n, add(self.sig, other.sig), add(self.tau, other.tau),
                     add(self.dsig, other.dsig), add(self.dtau, other.dtau),
                     self.dx + other.dx, self.dy + other.dy)

    def __sub__(self, other: "Cycle") -> "Cycle":
        return self + (-1) * other

    def __rmul__(self, k: int) -> "Cycle":
        mul = lambda a: tuple(k * x for x in a)
        return Cycle(self.n, mul(self.sig), mul(self.tau),
                     mul(self.dsig), mul(self.dtau), k * self.dx, k * self.dy)

    def __neg__(self) -> "Cycle":
        return (-1) * self


def intersection(a: Cycle, b: Cycle) -> int:
    """Algebraic intersection number a . b (signed crossing count)."""
    if a.n != b.n:
        raise ValueError("cycles live on different origamis")
    return (sum(x * y for x, y in zip(a.sig, b.dsig))
            - sum(x * y for x, y in zip(a.tau, b.dtau)))


def _reduce_cyclic(moves: list[str]) -> list[str]:
    """Cancel adjacent backtracks (EW, WE, NS, SN), cyclically."""
    opposite = {"E": "W", "W": "E", "N": "S", "S": "N"}
    changed = True
    while changed and moves:
        changed = False
        out: list[str] = []
        for ch in moves:
            if out and out[-1] == opposite[ch]:
                out.pop()
                changed = True
            else:
                out.append(ch)
        while len(out) >= 2 and out[0] == opposite[out[-1]]:
            out = out[1:-1]
            changed = True
        moves = out
    return moves


def winding_index(o: "Origami", cycle: Cycle | str, start: int | None = None) -> int:
    """Turning number (right turns - left turns)/4 of a smoothed taxi loop."""
    if isinstance(cycle, Cycle):
        if cycle.moves is None:
            raise ValueError("winding index needs an explicit taxi loop")
        moves, s0 = cycle.moves, cycle.start
    else:
        moves, s0 = cycle, start if start is not None else 0
        Cycle.from_loop(o, s0, moves)  # validates closedness
    seq = _reduce_cyclic(list(moves))
    if not seq:
        return 0
    idx = {"E": 0, "N": 1, "W": 2, "S": 3}
    left = right = 0
    for a, b in zip(seq, seq[1:] + seq[:1]):
        d = (idx[b] - idx[a]) % 4
        if d == 1:
            left += 1
        elif d == 3:
            right += 1
        elif d == 2:
            raise ValueError("reduced loop still backtracks")
    assert (right - left) % 4 == 0
    return (right - left) // 4


# ---------------------------------------------------------------------------
# integer symplectic reduction
# ---------------------------------------------------------------------------

def symplectic_reduce(gram: list[list[int]]) -> list[list[int]]:
    """Integer coordinate vectors (a1, b1, a2, b2, ...) for an antisymmetric
    Gram matrix whose nondegenerate quotient is unimodular.

    Returns 2g vectors with pairing(a_i, b_i) = 1 and all other pairings 0.
    """
    m = len(gram)

    def pair(u, v):
        return sum(u[i] * gram[i][j] * v[j] for i in range(m) for j in range(m)
                   if gram[i][j])

    remaining = [[1 if i == j else 0 for j in range(m)] for i in range(m)]
    basis: list[list[int]] = []
    while True:
        best = None
        for i in range(len(remaining)):
            for j in range(i + 1, len(remaining)):
                g = pair(remaining[i], remaining[j])
                if g and (best is None or abs(g) < abs(best[2])):
                    best = (i, j, g)
        if best is None:
            break
        i, j, g = best
        u, v = remaining[i], remaining[j]
        if g < 0:
            u, v = v, u
        others = [w for k, w in enumerate(remaining) if k not in (i, j)]
        # Euclid until pair(u, v) divides all pairings with u and v
        while True:
            g = pair(u, v)
            if g < 0:
                u, v = v, u
                g = -g
            for w in others:
                a = pair(u, w)
                if a % g:
                    v = [x - (a // g) * y for x, y in zip(w, v)]
                    break
                bb = pair(w, v)
                if bb % g:
                    u = [x - (bb // g) * y for x, y in zip(w, u)]
                    break
            else:
                break
        assert g == 1, "intersection form is not unimodular on the quotient"
        cleared = []
        for w in others:
            a = pair(u, w)
            bb = pair(v, w)
            cleared.append([x - a * y + bb * z for x, y, z in zip(w, v, u)])
        basis.extend([u, v])
        remaining = cleared
    return basis


def _hnf2(vectors: list[tuple[int, int]]) -> tuple[tuple[int, int], tuple[int, int]]:
    """Hermite form ((a, b), (0, c)) of the lattice spanned by 2d vectors."""

    def extgcd(a, b):
        old_r, r = a, b
        old_s, s = 1, 0
        old_t, t = 0, 1
        while r:
            q = old_r // r
            old_r, r = r, old_r - q * r
            old_s, s = s, old_s - q * s
            old_t, t = t, old_t - q * t
        return old_r, old_s, old_t

    a = b = c = 0
    for x, y in vectors:
        if x:
            if a:
                g, p, q = extgcd(a, x)
                if g < 0:
                    g, p, q = -g, -p, -q
                leftover = (a // g) * y - (x // g) * b
                a, b = g, p * b + q * y
                c = gcd(c, abs(leftover))
            else:
                a, b = abs(x), y if x > 0 else -y
        else:
            c = gcd(c, abs(y))
    if c:
        b %= c
    return ((a, b), (0, c))


# ---------------------------------------------------------------------------
# strata and reports
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Stratum:
    zero_orders: tuple[int, ...]  # sorted descending
    genus: int

    def __str__(self) -> str:
        if not self.zero_orders:
            return "torus"
        return "H(" + ",".join(str(k) for k in self.zero_orders) + ")"


@dataclass(frozen=True)
class OrbitReport:
    size: int
    stratum: str
    reduced: bool
    representatives: tuple[str, ...]

    def to_json(self) -> str:
        return json.dumps({
            "size": self.size,
            "stratum": self.stratum,
            "reduced": self.reduced,
            "representatives": list(self.representatives),
        })


class OrbitCapExceeded(RuntimeError):
    def __init__(self, partial_count: int):
        super().__init__(f"orbit cap exceeded after {partial_count} forms")
        self.partial_count = partial_count


# ---------------------------------------------------------------------------
# the Origami class
# ---------------------------------------------------------------------------

_GEN_MATS = {
    "L": ((1, 0), (1, 1)),
    "R": ((1, 1), (0, 1)),
    "Linv": ((1, 0), (-1, 1)),
    "Rinv": ((1, -1), (0, 1)),
    "-I": ((-1, 0), (0, -1)),
}


class Origami:
    __slots__ = ("h", "v", "_canon", "_homology")

    def __init__(self, h: Permutation, v: Permutation):
        if h.n != v.n:
            raise ValueError("h and v have different degrees")
        if not is_transitive([h, v], h.n):
            raise ValueError("permutation pair is not transitive")
        object.__setattr__(self, "h", h)
        object.__setattr__(self, "v", v)
        object.__setattr__(self, "_canon", None)
        object.__setattr__(self, "_homology", None)

    def __setattr__(self, *a):
        raise AttributeError("Origami is immutable")

    @property
    def n(self) -> int:
        return self.h.n

    # -- text form ---------------------------------------------------------

    def to_text(self) -> str:
        return f"n={self.n} h={self.h.format_cycles()} v={self.v.format_cycles()}"

    @staticmethod
    def from_text(text: str) -> "Origami":
        parts = dict()
        for tok in text.split():
            if "=" not in tok:
                raise ValueError(f"malformed origami text {text!r}")
            key, _, val = tok.partition("=")
            parts[key] = val
        try:
            n = int(parts["n"])
        except (KeyError, ValueError) as exc:
            raise ValueError(f"malformed origami text {text!r}") from exc
        if "h" not in parts or "v" not in parts:
            raise ValueError(f"malformed origami text {text!r}")
        return Origami(parse_cycles(parts["h"], n), parse_cycles(parts["v"], n))

    def __repr__(self) -> str:
        return f"Origami({self.to_text()!r})"

    # -- canonical form ----------------------------------------------------

    def canonical_form(self) -> tuple[tuple[int, ...], tuple[int, ...]]:
        """Lexicographically least relabeling over BFS from every start square
        with edge order (h, v, h^-1, v^-1)."""
        if self._canon is not None:
            return self._canon
        n = self.n
        h, v = self.h.images, self.v.images
        hi, vi = self.h.inverse().images, self.v.inverse().images
        best = None
        for start in range(n):
            new = [-1] * n
            order = [start]
            new[start] = 0
            cnt = 1
            qi = 0
            while qi < len(order):
                s = order[qi]
                qi += 1
                for t in (h[s], v[s], hi[s], vi[s]):
                    if new[t] < 0:
                        new[t] = cnt
                        cnt += 1
                        order.append(t)
            hn = [0] * n
            vn = [0] * n
            for s in range(n):
                hn[new[s]] = new[h[s]]
                vn[new[s]] = new[v[s]]
            enc = (tuple(hn), tuple(vn))
            if best is None or enc < best:
                best = enc
        object.__setattr__(self, "_canon", best)
        return best

    def canonical(self) -> "Origami":
        hn, vn = self.canonical_form()
        return Origami(Permutation(hn), Permutation(vn))

    def __eq__(self, other) -> bool:
        return isinstance(other, Origami) and self.canonical_form() == other.canonical_form()

    def __hash__(self) -> int:
        return hash(self.canonical_form())

    # -- stratum -----------------------------------------------------------

    def vertex_cycles(self) -> list[tuple[int, ...]]:
        """Cycles of the vertex rotation h v h^-1 v^-1; one per cone/marked
        point, the cycle listing squares with that point at bottom-left."""
        return commutator(self.h, self.v).cycles(include_fixed=True)

    def stratum(self) -> Stratum:
        orders = sorted((len(c) - 1 for c in self.vertex_cycles() if len(c) >= 2),
                        reverse=True)
        total = sum(orders)
        assert total % 2 == 0
        return Stratum(tuple(orders), total // 2 + 1)

    # -- SL(2,Z) action ----------------------------------------------------

    def act_generator(self, g: str) -> "Origami":
        h, v = self.h, self.v
        if g == "L":
            return Origami(compose(v.inverse(), h), v)
        if g == "Linv":
            return Origami(compose(v, h), v)
        if g == "R":
            return Origami(h, compose(h.inverse(), v))
        if g == "Rinv":
            return Origami(h, compose(h, v))
        if g == "-I":
            return Origami(h.inverse(), v.inverse())
        raise ValueError(f"unknown generator {g!r}")

    def act_matrix(self, M) -> "Origami":
        word = sl2z_word(M)
        o = self
        # left action: act(act(o, A), B) = act(o, B A), so the rightmost
        # factor of the product is applied first
        for tok in reversed(word):
            o = o.act_generator(tok)
        return o

    def veech_contains(self, M) -> bool:
        _check_det_one(M)
        return self.act_matrix(M).canonical_form() == self.canonical_form()

    def sl2z_orbit_forms(self, cap: int = 10**6) -> set:
        """Canonical forms of the full SL(2,Z)-orbit (BFS over L, R)."""
        seen = {self.canonical_form()}
        queue = [self]
        qi = 0
        while qi < len(queue):
            o = queue[qi]
            qi += 1
            for g in ("L", "R", "Linv", "Rinv"):
                o2 = o.act_generator(g)
                enc = o2.canonical_form()
                if enc not in seen:
                    if len(seen) >= cap:
                        raise OrbitCapExceeded(len(seen))
                    seen.add(enc)
                    queue.append(o2)
        return seen

    def sl2z_orbit(self, cap: int = 10**6) -> OrbitReport:
        reps = sorted(self.sl2z_orbit_forms(cap))
        texts = tuple(Origami(Permutation(h), Permutation(v)).to_text()
                      for h, v in reps)
        return OrbitReport(len(reps), str(self.stratum()), self.is_reduced(), texts)

    # -- translations and quotients ---------------------------------------

    def translations(self) -> list[Permutation]:
        """All permutations commuting with both h and v (the deck group of
        the origami over its translation quotients)."""
        n = self.n
        maps = (self.h.images, self.v.images,
                self.h.inverse().images, self.v.inverse().images)
        result = []
        for k in range(n):
            t = [-1] * n
            t[0] = k
            stack = [0]
            ok = True
            while stack and ok:
                s = stack.pop()
                for m in maps:
                    s2 = m[s]
                    im = m[t[s]]
                    if t[s2] < 0:
                        t[s2] = im
                        stack.append(s2)
                    elif t[s2] != im:
                        ok = False
                        break
            if ok:
                result.append(Permutation(t))
        return result

    def quotient_by_translation(self, t: Permutation) -> "Origami":
        if t.n != self.n or t.is_identity():
            raise ValueError("t must be a nontrivial translation of this origami")
        if compose(t, self.h) != compose(self.h, t) or \
           compose(t, self.v) != compose(self.v, t):
            raise ValueError("t does not commute with (h, v)")
        # orbits of <t>; free action means all orbits have size ord(t)
        n = self.n
        orbit = [-1] * n
        orbits: list[list[int]] = []
        for s in range(n):
            if orbit[s] >= 0:
                continue
            idx = len(orbits)
            members = []
            x = s
            while orbit[x] < 0:
                orbit[x] = idx
                members.append(x)
                x = t(x)
            orbits.append(members)
        sizes = {len(m) for m in orbits}
        if len(sizes) != 1 or sizes == {1}:
            raise ValueError("translation does not act freely")
        h_q = [orbit[self.h(m[0])] for m in orbits]
        v_q = [orbit[self.v(m[0])] for m in orbits]
        return Origami(Permutation(h_q), Permutation(v_q))

    # -- homology ----------------------------------------------------------

    def _homology_data(self):
        """Spanning-tree fundamental cycles, Gram matrix, and an integer
        symplectic basis expressed in fundamental-cycle coordinates."""
        if self._homology is not None:
            return self._homology
        n = self.n
        h, v = self.h.images, self.v.images
        hi, vi = self.h.inverse().images, self.v.inverse().images
        # BFS spanning tree of the square-adjacency (dual) graph
        parent_moves: list[str | None] = [None] * n
        parent: list[int] = [-1] * n
        used_edges: set[tuple[str, int]] = set()
        order = [0]
        seen = [False] * n
        seen[0] = True
        qi = 0
        while qi < len(order):
            s = order[qi]
            qi += 1
            for mv, t, edge in (("E", h[s], ("E", s)), ("N", v[s], ("N", s)),
                                ("W", hi[s], ("E", hi[s])), ("S", vi[s], ("N", vi[s]))):
                if not seen[t]:
                    seen[t] = True
                    parent[t] = s
                    parent_moves[t] = mv
                    used_edges.add(edge)
                    order.append(t)

        def path_from_root(s: int) -> str:
            out = []
            while s != 0:
                out.append(parent_moves[s])
                s = parent[s]
            return "".join(reversed(out))

        inv = {"E": "W", "N": "S", "W": "E", "S": "N"}

        def path_to_root(s: int) -> str:
            return "".join(inv[c] for c in reversed(path_from_root(s)))

        cycles: list[Cycle] = []
        cotree: list[tuple[str, int]] = []
        for kind in ("E", "N"):
            for s in range(n):
                if (kind, s) in used_edges:
                    continue
                t = h[s] if kind == "E" else v[s]
                moves = path_from_root(s) + kind + path_to_root(t)
                cycles.append(Cycle.from_loop(self, 0, moves))
                cotree.append((kind, s))
        assert len(cycles) == n + 1
        gram = [[intersection(a, b) for b in cycles] for a in cycles]
        basis_coords = symplectic_reduce(gram)
        self_hom = (cycles, gram, basis_coords, cotree)
        object.__setattr__(self, "_homology", self_hom)
        return self_hom

    def fundamental_cycles(self) -> list[Cycle]:
        return list(self._homology_data()[0])

    def cotree_edges(self) -> list[tuple[str, int]]:
        """The dual-graph edges ('E'|'N', square) not in the spanning tree,
        parallel to fundamental_cycles()."""
        return list(self._homology_data()[3])

    def symplectic_basis(self) -> list[Cycle]:
        """2g cycles (a1, b1, a2, b2, ...) with standard symplectic Gram."""
        cycles, _, coords, _ = self._homology_data()
        out = []
        for vec in coords:
            c = Cycle.zero(self.n)
            for k, cyc in zip(vec, cycles):
                if k:
                    c = c + k * cyc
            out.append(c)
        return out

    # -- periods and reducedness -------------------------------------------

    def absolute_period_lattice(self):
        return _hnf2([c.period for c in self.fundamental_cycles()])

    def _vertex_positions(self):
        """Positions (mod absolute periods) of the vertices of the square
        complex, and the list of zero (cone point) vertex ids."""
        vcycles = self.vertex_cycles()
        n = self.n
        vid = [0] * n
        for i, cyc in enumerate(vcycles):
            for s in cyc:
                vid[s] = i
        h, v = self.h.images, self.v.images
        hi, vi = self.h.inverse().images, self.v.inverse().images
        pos: dict[int, tuple[int, int]] = {vid[0]: (0, 0)}
        stack = [vid[0]]
        by_vid: dict[int, list[int]] = {}
        for s in range(n):
            by_vid.setdefault(vid[s], []).append(s)
        while stack:
            a = stack.pop()
            x, y = pos[a]
            for s in by_vid[a]:
                for b, dx, dy in ((vid[h[s]], 1, 0), (vid[v[s]], 0, 1),
                                  (vid[hi[s]], -1, 0), (vid[vi[s]], 0, -1)):
                    if b not in pos:
                        pos[b] = (x + dx, y + dy)
                        stack.append(b)
        zeros = [i for i, cyc in enumerate(vcycles) if len(cyc) >= 2]
        return pos, zeros

    def is_reduced(self) -> bool:
        gens = [c.period for c in self.fundamental_cycles()]
        pos, zeros = self._vertex_positions()
        if zeros:
            x0, y0 = pos[zeros[0]]
            for z in zeros[1:]:
                x, y = pos[z]
                gens.append((x - x0, y - y0))
        return _hnf2(gens) == ((1, 0), (0, 1))

    # -- Arf ---------------------------------------------------------------

    def arf_invariant(self) -> int:
        st = self.stratum()
        if any(k % 2 for k in st.zero_orders):
            raise ValueError("Arf invariant needs all zero orders even")
        cycles, gram, coords, _ = self._homology_data()
        q_cycle = [(winding_index(self, c) + 1) % 2 for c in cycles]

        def q(vec) -> int:
            support = [i for i, k in enumerate(vec) if k % 2]
            val = sum(q_cycle[i] for i in support)
            for ii in range(len(support)):
                for jj in range(ii + 1, len(support)):
                    val += gram[support[ii]][support[jj]]
            return val % 2

        arf = 0
        for k in range(0, len(coords), 2):
            arf += q(coords[k]) * q(coords[k + 1])
        return arf % 2


# ---------------------------------------------------------------------------
# SL(2,Z) matrix words
# ---------------------------------------------------------------------------

def _check_det_one(M) -> tuple[int, int, int, int]:
    (a, b), (c, d) = M
    if a * d - b * c != 1:
        raise ValueError("matrix must have determinant 1")
    return a, b, c, d


def sl2z_word(M) -> list[str]:
    """Decompose M in SL(2,Z) as a product of L, R, their inverses and -I.

    Returns the factors of the product read left to right; applying them to an
    origami under the left action means applying the last token first.
    """
    a, b, c, d = _check_det_one(M)
    factors: list[tuple[str, int]] = []
    while c != 0 and a != 0:
        if abs(c) >= abs(a):
            q = c // a
            factors.append(("L", q))
            c, d = c - q * a, d - q * b
        else:
            q = a // c
            factors.append(("R", q))
            a, b = a - q * c, b - q * d
    tokens: list[str] = []

    def emit(gen: str, power: int):
        if power > 0:
            tokens.extend([gen] * power)
        elif power < 0:
            tokens.extend([gen + "inv"] * (-power))

    for gen, p in factors:
        emit(gen, p)
    s_word = ["Rinv", "L", "Rinv"]  # S = [[0,-1],[1,0]] = R^-1 L R^-1
    if c == 0:
        if a == 1:
            emit("R", b)
        else:  # a = d = -1
            tokens.append("-I")
            emit("R", -b)
    else:  # a == 0, c = +-1
        if c == 1:
            tokens.extend(s_word)
            emit("R", d)
        else:
            tokens.append("-I")
            tokens.extend(s_word)
            emit("R", -d)
    return tokens


def mat2_mul(A, B):
    return tuple(tuple(sum(A[i][k] * B[k][j] for k in range(2)) for j in range(2))
                 for i in range(2))


# ---------------------------------------------------------------------------
# L-shaped origamis
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class LOrigami:
    """The reduced L-shaped origami for a square discriminant D = e^2+4b = d^2,
    together with its distinguished symplectic homology basis (a1, b1, a2, b2).
    """

    origami: Origami
    b: int
    e: int
    d: int
    lam: int
    basis: tuple[Cycle, Cycle, Cycle, Cycle]

    @property
    def n(self) -> int:
        return self.origami.n


def l_origami(b: int, e: int) -> LOrigami:
    """L-shaped origami with a column of lam squares above a row of lam-e
    squares, lam = (e+d)/2, total d squares."""
    if e not in (-1, 0, 1):
        raise ValueError("e must be in {-1, 0, 1}")
    if b < 1:
        raise ValueError("b must be positive")
    if e + 1 >= b:
        raise ValueError("need e + 1 < b")
    if e == 1 and b % 2:
        raise ValueError("e = 1 requires b even")
    D = e * e + 4 * b
    d = _isqrt(D)
    if d * d != D:
        raise ValueError(f"D = {D} is not a perfect square")
    lam = (e + d) // 2
    row = lam - e          # squares 0 .. row-1
    # squares row .. d-1 form the column above square 0
    h = Permutation.from_cycles(d, [list(range(row))])
    v = Permutation.from_cycles(d, [[0] + list(range(row, d))])
    o = Origami(h, v)
    a1 = Cycle.from_loop(o, row, "E")
    b1 = Cycle.from_loop(o, 0, "N" * (lam + 1)) - Cycle.from_loop(o, 1, "N")
    a2 = Cycle.from_loop(o, 0, "E" * row)
    b2 = Cycle.from_loop(o, 1, "N")
    basis = (a1, b1, a2, b2)
    # defining property of the basis
    expected = [[0, 1, 0, 0], [-1, 0, 0, 0], [0, 0, 0, 1], [0, 0, -1, 0]]
    gram = [[intersection(x, y) for y in basis] for x in basis]
    assert gram == expected, f"basis of l_origami({b},{e}) is not symplectic"
    return LOrigami(o, b, e, d, lam, basis)


def _isqrt(x: int) -> int:
    from math import isqrt
    return isqrt(x)
