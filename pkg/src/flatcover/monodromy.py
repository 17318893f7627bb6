"""Symplectic 4x4 matrices on H_1 of a genus-2 L-shaped surface, in the basis
(a1, b1, a2, b2): the explicit monodromy generators H, V, T, X and the double
decagon generators rho(R), rho(T); group closures mod m, commutants, dihedral
detection, orbit partitions, and the exact cyclotomic verification of the
decagon period map.

Matrices are tuples of 4 rows acting on column vectors; the intersection form
is J = diag([[0,1],[-1,0]], [[0,1],[-1,0]]).
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd

from .cyclotomic import CyclotomicElement, I_UNIT, XI, imag_part, zeta_pow

Mat = tuple  # 4-tuple of 4-tuples of ints

J4: Mat = ((0, 1, 0, 0), (-1, 0, 0, 0), (0, 0, 0, 1), (0, 0, -1, 0))
IDENTITY4: Mat = ((1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1))


# ---------------------------------------------------------------------------
# matrix helpers
# ---------------------------------------------------------------------------

def mat_mul(A: Mat, B: Mat, mod: int = 0) -> Mat:
    rows = []
    for i in range(4):
        row = []
        for j in range(4):
            x = sum(A[i][k] * B[k][j] for k in range(4))
            row.append(x % mod if mod else x)
        rows.append(tuple(row))
    return tuple(rows)


def mat_vec(A: Mat, v, mod: int = 0):
    out = tuple(sum(A[i][k] * v[k] for k in range(4)) for i in range(4))
    return tuple(x % mod for x in out) if mod else out


def mat_pow(A: Mat, k: int, mod: int = 0) -> Mat:
    if k < 0:
        raise ValueError("negative powers unsupported; invert first")
    R = IDENTITY4
    P = A
    while k:
        if k & 1:
            R = mat_mul(R, P, mod)
        P = mat_mul(P, P, mod)
        k >>= 1
    return R


def mat_mod(A: Mat, m: int) -> Mat:
    return tuple(tuple(x % m for x in row) for row in A)


def mat_neg(A: Mat) -> Mat:
    return tuple(tuple(-x for x in row) for row in A)


def mat_transpose(A: Mat) -> Mat:
    return tuple(tuple(A[j][i] for j in range(4)) for i in range(4))


def mat_det(A: Mat) -> Fraction:
    """Exact determinant by fraction-free Gaussian elimination."""
    M = [[Fraction(x) for x in row] for row in A]
    det = Fraction(1)
    for c in range(4):
        piv = next((r for r in range(c, 4) if M[r][c]), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            M[c], M[piv] = M[piv], M[c]
            det = -det
        det *= M[c][c]
        inv = 1 / M[c][c]
        for r in range(c + 1, 4):
            f = M[r][c] * inv
            if f:
                M[r] = [a - f * b for a, b in zip(M[r], M[c])]
    return det


def mat_inverse_mod(A: Mat, m: int) -> Mat:
    """Inverse of a matrix invertible mod m, via the adjugate."""
    # cofactor expansion on 3x3 minors
    def minor(r, c):
        rows = [i for i in range(4) if i != r]
        cols = [j for j in range(4) if j != c]
        a = [[A[i][j] for j in cols] for i in rows]
        return (a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1])
                - a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0])
                + a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]))

    det = int(mat_det(A)) % m
    if gcd(det, m) != 1:
        raise ValueError("matrix not invertible mod m")
    dinv = pow(det, -1, m)
    return tuple(tuple((-1) ** (i + j) * minor(j, i) * dinv % m for j in range(4))
                 for i in range(4))


def matrix_to_json(A: Mat, mod: int = 0) -> dict:
    return {"rows": [list(r) for r in A], "mod": mod}


# ---------------------------------------------------------------------------
# the builtin generators
# ---------------------------------------------------------------------------

def mat_H(b: int, e: int = 0) -> Mat:
    """Horizontal multitwist of L(b, e)."""
    return ((1, b, 0, 0), (0, 1, 0, 0), (0, 0, 1, 1), (0, 0, 0, 1))


def mat_V(b: int, e: int) -> Mat:
    """Vertical multitwist of L(b, e)."""
    return ((1, 0, 0, 0), (1, 1, 1, 0), (0, 0, 1, 0), (1, 0, b - e, 1))


def mat_T(b: int, e: int) -> Mat:
    """Real-multiplication generator: self-adjoint, T^2 = eT + b."""
    return ((e, 0, b, 0), (0, e, 0, 1), (1, 0, 0, 0), (0, b, 0, 0))


def mat_X() -> Mat:
    """Extra mod-2 generator for discriminants 1 mod 8."""
    return ((0, 1, 0, 1), (0, 0, 1, 0), (0, 1, 0, 0), (1, 0, 1, 0))


def rho_R() -> Mat:
    """Homology action of the decagon rotation R (order 10, rho(R)^5 = -I)."""
    return ((1, 1, 1, 0), (-1, 0, 0, 0), (1, 0, 0, 1), (0, 0, -1, 0))


def rho_T() -> Mat:
    """Homology action of the decagon shear T."""
    return ((2, -1, 0, 0), (1, 0, 0, 0), (0, 0, 2, -1), (0, 0, 1, 0))


def builtin_matrices(name: str, b: int | None = None, e: int | None = None) -> Mat:
    name = name.upper()
    if name in ("H", "V", "T") and (b is None or e is None):
        raise ValueError(f"matrix {name} needs parameters (b, e)")
    if name == "H":
        return mat_H(b, e)
    if name == "V":
        return mat_V(b, e)
    if name == "T":
        return mat_T(b, e)
    if name == "X":
        return mat_X()
    if name == "RHO_R":
        return rho_R()
    if name == "RHO_T":
        return rho_T()
    if name == "J":
        return J4
    raise ValueError(f"unknown builtin matrix {name!r}")


def is_symplectic(M: Mat, mod: int = 0) -> bool:
    """M^t J M = J (mod m when given)."""
    P = mat_mul(mat_mul(mat_transpose(M), J4), M)
    return mat_mod(P, mod) == mat_mod(J4, mod) if mod else P == J4


def commutes(A: Mat, B: Mat, mod: int = 0) -> bool:
    return mat_mul(A, B, mod) == mat_mul(B, A, mod)


def self_adjoint(T: Mat, mod: int = 0) -> bool:
    """T^t J = J T: T is self-adjoint for the intersection form."""
    L = mat_mul(mat_transpose(T), J4)
    R = mat_mul(J4, T)
    return mat_mod(L, mod) == mat_mod(R, mod) if mod else L == R


# ---------------------------------------------------------------------------
# finite groups mod m
# ---------------------------------------------------------------------------

class ClosureCapExceeded(RuntimeError):
    pass


def group_closure(gens, mod: int, cap: int = 10 ** 5) -> frozenset:
    """All products of the generators mod m (BFS; the ambient group is finite,
    so products alone already close under inverse)."""
    if mod < 2:
        raise ValueError("modulus must be at least 2")
    gens = [mat_mod(g, mod) for g in gens]
    for g in gens:
        if not is_symplectic(g, mod):
            raise ValueError("generator is not symplectic mod m")
    seen = {mat_mod(IDENTITY4, mod)}
    frontier = list(seen)
    while frontier:
        nxt = []
        for A in frontier:
            for g in gens:
                B = mat_mul(A, g, mod)
                if B not in seen:
                    seen.add(B)
                    if len(seen) > cap:
                        raise ClosureCapExceeded(f"closure exceeds cap {cap}")
                    nxt.append(B)
        frontier = nxt
    return frozenset(seen)


def transvection_mod(v, m: int = 2) -> Mat:
    """x -> x + <v, x> v mod m."""
    cols = []
    for j in range(4):
        x = [1 if i == j else 0 for i in range(4)]
        coef = (v[0] * x[1] - v[1] * x[0]) + (v[2] * x[3] - v[3] * x[2])
        x = [(xi + coef * vi) % m for xi, vi in zip(x, v)]
        cols.append(x)
    return tuple(tuple(cols[j][i] for j in range(4)) for i in range(4))


def nonzero_vectors_mod2():
    return [tuple((c >> k) & 1 for k in range(4)) for c in range(1, 16)]


def sp4_f2() -> frozenset:
    """All 720 elements of Sp(4, Z/2), as the closure of the 15 transvections."""
    group = group_closure([transvection_mod(v, 2) for v in nonzero_vectors_mod2()],
                          mod=2, cap=2000)
    assert len(group) == 720
    return group


def label_vector(label: int) -> tuple[int, int, int, int]:
    """(x1, y1, x2, y2) mod 2 with label = x1 + 2 y1 + 4 x2 + 8 y2."""
    if not 1 <= label <= 15:
        raise ValueError("label must be in 1..15")
    return tuple((label >> k) & 1 for k in range(4))


def vector_label(v) -> int:
    return (v[0] % 2) + 2 * (v[1] % 2) + 4 * (v[2] % 2) + 8 * (v[3] % 2)


def constrained_subgroup(T2: Mat, hyp_labels) -> frozenset:
    """Elements of Sp(4, F2) commuting with T2 and permuting the
    hyperelliptic cover vectors among themselves."""
    T2 = mat_mod(T2, 2)
    hyp = {label_vector(l) for l in hyp_labels}
    out = set()
    for M in sp4_f2():
        if not commutes(M, T2, 2):
            continue
        if {mat_vec(M, v, 2) for v in hyp} == hyp:
            out.add(M)
    return frozenset(out)


def dihedral_structure(group) -> int | None:
    """k if the group is dihedral of order 2k (a cyclic subgroup of order k
    plus an involution inverting it; k = 1, 2 degenerate cases allowed);
    None otherwise, and None for groups of order < 2."""
    elems = list(group)
    order = len(elems)
    if order < 2 or order % 2:
        return None
    k = order // 2
    mod = _infer_modulus(elems)

    def elt_order(A):
        P = A
        o = 1
        ident = mat_mod(IDENTITY4, mod)
        while P != ident:
            P = mat_mul(P, A, mod)
            o += 1
            if o > order:
                raise AssertionError("input is not a group")
        return o

    ident = mat_mod(IDENTITY4, mod)
    for r in elems:
        if elt_order(r) != k:
            continue
        cyc = set()
        P = ident
        for _ in range(k):
            cyc.add(P)
            P = mat_mul(P, r, mod)
        rinv = mat_inverse_mod(r, mod)
        for s in elems:
            if s in cyc:
                continue
            if mat_mul(s, s, mod) != ident:
                continue
            if mat_mul(mat_mul(s, r, mod), mat_inverse_mod(s, mod), mod) == rinv:
                return k
    return None


def _infer_modulus(mats) -> int:
    m = max(max(max(row) for row in A) for A in mats) + 1
    return max(m, 2)


# ---------------------------------------------------------------------------
# orbit partitions
# ---------------------------------------------------------------------------

def orbit_partition(gens, vectors, mod: int) -> list[tuple]:
    """Connected components of the graph v -- M v on the given vectors, for
    each generator M; equals the group-orbit partition since generators are
    bijections of a finite set.  Components sorted by least element."""
    vecs = [tuple(x % mod for x in v) for v in vectors]
    index = {v: i for i, v in enumerate(vecs)}
    parent = list(range(len(vecs)))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for v in vecs:
        for g in gens:
            w = mat_vec(g, v, mod)
            if w not in index:
                raise ValueError("vector set is not closed under the generators")
            a, b = find(index[v]), find(index[w])
            if a != b:
                parent[a] = b
    comps: dict[int, list] = {}
    for i, v in enumerate(vecs):
        comps.setdefault(find(i), []).append(v)
    return sorted((tuple(sorted(c)) for c in comps.values()), key=lambda c: c[0])


def primitive_vectors(n: int):
    out = []
    for x1 in range(n):
        for y1 in range(n):
            g1 = gcd(x1, y1)
            for x2 in range(n):
                g2 = gcd(g1, x2)
                for y2 in range(n):
                    if gcd(gcd(g2, y2), n) == 1:
                        out.append((x1, y1, x2, y2))
    return out


def decagon_cyclic_echo_count(n: int) -> int:
    """Number of orbits of the decagon monodromy on primitive vectors of
    (Z/n)^4: the count of cyclic echoes of degree n of the double decagon."""
    if n < 2:
        raise ValueError("n must be at least 2")
    gens = [mat_mod(rho_R(), n), mat_mod(rho_T(), n)]
    return len(orbit_partition(gens, primitive_vectors(n), n))


# ---------------------------------------------------------------------------
# exact decagon period verification
# ---------------------------------------------------------------------------

def _decagon_periods():
    """Periods of the symplectic basis of the double decagon in Q(zeta_20),
    with xi = zeta^2 a primitive 10th root of unity."""
    z = zeta_pow
    alpha1 = z(2) + 1
    beta1 = z(-2) + 1
    alpha2 = z(4) - z(8)
    beta2 = z(2) - z(6)
    return [alpha1, beta1, alpha2, beta2]


def _cot_pi_over_10() -> CyclotomicElement:
    # cot(pi/10) = cos/sin with e^{i pi/10} = zeta: i (zeta + 1/zeta)/(zeta - 1/zeta)
    z = zeta_pow
    return I_UNIT * (z(1) + z(-1)) / (z(1) - z(-1))


def verify_decagon_periods() -> dict:
    """Exact check that R (multiplication by xi) and T (the shear
    p -> p + 2 cot(pi/10) Im(p)) act on the periods through the integer
    matrices rho(R), rho(T), that the period map has rank 4 over Q, and that
    rho(R)^5 = -I."""
    periods = _decagon_periods()
    cot = _cot_pi_over_10()
    failures = []

    def check(name, got, expected):
        if got != expected:
            failures.append(name)

    names = ["alpha1", "beta1", "alpha2", "beta2"]
    for j in range(4):
        p = periods[j]
        expect_R = sum((rho_R()[i][j] * periods[i] for i in range(4)),
                       CyclotomicElement())
        check(f"R.{names[j]}", XI * p, expect_R)
        expect_T = sum((rho_T()[i][j] * periods[i] for i in range(4)),
                       CyclotomicElement())
        check(f"T.{names[j]}", p + 2 * cot * imag_part(p), expect_T)

    # rank of the rational-linear period map
    rows = [list(p.coeffs) for p in periods]
    rank = _rational_rank(rows)
    if rank != 4:
        failures.append("rank")

    if mat_pow(rho_R(), 5) != mat_neg(IDENTITY4):
        failures.append("rho(R)^5 = -I")
    if mat_pow(rho_R(), 10) != IDENTITY4:
        failures.append("rho(R)^10 = I")

    return {
        "identities_checked": 8,
        "rank": rank,
        "failures": failures,
        "ok": not failures,
    }


def _rational_rank(rows) -> int:
    M = [[Fraction(x) for x in row] for row in rows]
    rank = 0
    col = 0
    ncols = len(M[0]) if M else 0
    while rank < len(M) and col < ncols:
        piv = next((r for r in range(rank, len(M)) if M[r][col]), None)
        if piv is None:
            col += 1
            continue
        M[rank], M[piv] = M[piv], M[rank]
        inv = 1 / M[rank][col]
        for r in range(len(M)):
            if r != rank and M[r][col]:
                f = M[r][col] * inv
                M[r] = [a - f * b for a, b in zip(M[r], M[rank])]
        rank += 1
        col += 1
    return rank


# ---------------------------------------------------------------------------
# eigenbasis of T for square b, e = 0
# ---------------------------------------------------------------------------

def eigenbasis_checks(b: int, n: int) -> dict:
    """For b = b'^2, e = 0: exact eigen-decomposition of T and the mod-n
    invariant that separates at least phi(n) monodromy orbits.

    The eigenvectors are u1 = (b',0,1,0), u2 = (0,1,0,b') with eigenvalue b'
    and u3 = (b',0,-1,0), u4 = (0,1,0,-b') with eigenvalue -b'.  (A printed
    version transposes the middle coordinates of u2 and u4; the stated
    T-eigenvector identity forces the form used here.)
    """
    bp = _integer_sqrt(b)
    if bp is None or bp < 2:
        raise ValueError("b must be a perfect square with sqrt(b) >= 2")
    if n < 3 or n % 2 == 0 or gcd(n, b) != 1:
        raise ValueError("n must be odd, >= 3, and coprime to b")
    e = 0
    T = mat_T(b, e)

    # determinant of the stated basis-change matrix
    P_stated = ((bp, 0, bp, 0), (0, bp, 0, bp), (1, 0, -1, 0), (0, 1, 0, -1))
    det_ok = mat_det(P_stated) == 4 * b

    u1, u2 = (bp, 0, 1, 0), (0, 1, 0, bp)
    u3, u4 = (bp, 0, -1, 0), (0, 1, 0, -bp)
    eigen_ok = (mat_vec(T, u1) == tuple(bp * x for x in u1)
                and mat_vec(T, u2) == tuple(bp * x for x in u2)
                and mat_vec(T, u3) == tuple(-bp * x for x in u3)
                and mat_vec(T, u4) == tuple(-bp * x for x in u4))

    # H, V mod n in the u-basis: 2+2 block diagonal
    P = tuple(tuple(col[i] for col in (u1, u2, u3, u4)) for i in range(4))
    Pinv = mat_inverse_mod(P, n)
    blocks_ok = True
    for M in (mat_H(b, e), mat_V(b, e)):
        Mu = mat_mul(mat_mul(Pinv, mat_mod(M, n), n), mat_mod(P, n), n)
        for i in range(4):
            for j in range(4):
                if (i < 2) != (j < 2) and Mu[i][j] % n != 0:
                    blocks_ok = False

    # orbit classes of the family u1 + x u3 under <H, V> mod n, with the
    # subgroup of Z/n generated by the minus-eigenspace coordinates as the
    # separating invariant
    gens = [mat_mod(mat_H(b, e), n), mat_mod(mat_V(b, e), n)]
    gens += [mat_inverse_mod(g, n) for g in gens]

    def minus_invariant(v):
        c = mat_vec(Pinv, v, n)
        return gcd(gcd(c[2], c[3]), n)

    def orbit_of(v):
        seen = {v}
        stack = [v]
        while stack:
            w = stack.pop()
            for g in gens:
                u = mat_vec(g, w, n)
                if u not in seen:
                    seen.add(u)
                    stack.append(u)
        return frozenset(seen)

    family = [tuple((a + x * c) % n for a, c in zip(u1, u3)) for x in range(n)]
    orbits: list[frozenset] = []
    invariant_constant = True
    for v in family:
        if any(v in o for o in orbits):
            continue
        o = orbit_of(v)
        inv = {minus_invariant(w) for w in o}
        if len(inv) != 1:
            invariant_constant = False
        orbits.append(o)

    phi = sum(1 for k in range(1, n) if gcd(k, n) == 1)
    return {
        "b": b, "b_sqrt": bp, "n": n,
        "det_is_4b": det_ok,
        "eigenvectors_ok": eigen_ok,
        "blocks_diagonal": blocks_ok,
        "family_orbit_count": len(orbits),
        "invariant_constant": invariant_constant,
        "phi_n": phi,
        "ok": (det_ok and eigen_ok and blocks_ok and invariant_constant
               and len(orbits) >= phi),
    }


def _integer_sqrt(b: int):
    if b < 0:
        return None
    r = int(b ** 0.5)
    for c in (r - 1, r, r + 1):
        if c >= 0 and c * c == b:
            return c
    return None
