import pytest
from hypothesis import given, settings, strategies as st

from flatcover.monodromy import (ClosureCapExceeded, IDENTITY4, J4,
                                 builtin_matrices, commutes,
                                 constrained_subgroup,
                                 decagon_cyclic_echo_count,
                                 dihedral_structure, eigenbasis_checks,
                                 group_closure, is_symplectic, label_vector,
                                 mat_H, mat_T, mat_V, mat_X, mat_det,
                                 mat_inverse_mod, mat_mod, mat_mul, mat_pow,
                                 mat_vec, matrix_to_json, orbit_partition,
                                 primitive_vectors, rho_R, rho_T, self_adjoint,
                                 sp4_f2, transvection_mod, vector_label,
                                 verify_decagon_periods)

PARAMS = [(2, 0), (4, 1), (3, 0), (3, -1), (6, 1), (13, 1)]


# -- matrix helpers ----------------------------------------------------------

def test_det_and_inverse():
    for b, e in PARAMS:
        for M in (mat_H(b, e), mat_V(b, e)):
            assert mat_det(M) == 1
            for m in (2, 3, 5):
                inv = mat_inverse_mod(M, m)
                assert mat_mul(M, inv, m) == mat_mod(IDENTITY4, m)
    with pytest.raises(ValueError):
        mat_inverse_mod(((2, 0, 0, 0),) * 4, 2)


def test_mat_pow():
    R = rho_R()
    assert mat_pow(R, 0) == IDENTITY4
    assert mat_pow(R, 10) == IDENTITY4
    assert mat_pow(R, 7, mod=5) == mat_mod(mat_pow(R, 7), 5)
    with pytest.raises(ValueError):
        mat_pow(R, -3)


def test_matrix_json():
    assert matrix_to_json(IDENTITY4, mod=2) == {
        "rows": [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]],
        "mod": 2,
    }


# -- generator identities ----------------------------------------------------

def test_generators_are_symplectic():
    for b, e in PARAMS:
        for M in (mat_H(b, e), mat_V(b, e)):
            assert is_symplectic(M)
    assert is_symplectic(mat_X(), mod=2)
    assert is_symplectic(rho_R())
    assert is_symplectic(rho_T())


def test_T_is_self_adjoint_with_correct_minimal_polynomial():
    for b, e in PARAMS:
        T = mat_T(b, e)
        assert self_adjoint(T)
        lhs = mat_mul(T, T)
        rhs = tuple(tuple(e * T[i][j] + (b if i == j else 0) for j in range(4))
                    for i in range(4))
        assert lhs == rhs  # T^2 = eT + b
        assert commutes(T, mat_H(b, e), 2) and commutes(T, mat_V(b, e), 2)


def test_rho_R_order():
    R = rho_R()
    minus = tuple(tuple(-x for x in row) for row in IDENTITY4)
    assert mat_pow(R, 5) == minus
    assert mat_pow(R, 10) == IDENTITY4


def test_builtin_lookup():
    assert builtin_matrices("h", 6, 1) == mat_H(6, 1)
    assert builtin_matrices("rho_r") == rho_R()
    assert builtin_matrices("J") == J4
    with pytest.raises(ValueError):
        builtin_matrices("H")
    with pytest.raises(ValueError):
        builtin_matrices("Q")


# -- closures mod m ----------------------------------------------------------

#: |<H, V (, X)>| mod 2 for each discriminant class mod 8
MOD2_ORDERS = {0: 8, 1: 12, 4: 8, 5: 10}
REPS = {0: (2, 0), 1: (4, 1), 4: (3, 0), 5: (3, -1)}


def test_mod2_closure_orders():
    for cls, (b, e) in REPS.items():
        gens = [mat_H(b, e), mat_V(b, e)]
        assert len(group_closure(gens, 2)) == (6 if cls == 1 else MOD2_ORDERS[cls])
        if cls == 1:
            gens.append(mat_X())
        assert len(group_closure(gens, 2)) == MOD2_ORDERS[cls]


def test_closure_order_divides_sp4():
    # |Sp(4, Z/2)| = 720, |Sp(4, Z/3)| = 51840
    for b, e in ((2, 0), (4, 1), (3, -1)):
        gens = [mat_H(b, e), mat_V(b, e)]
        assert 720 % len(group_closure(gens, 2)) == 0
        assert 51840 % len(group_closure(gens, 3)) == 0


def test_closure_errors():
    with pytest.raises(ValueError):
        group_closure([IDENTITY4], 1)
    with pytest.raises(ValueError):
        # maps a1 to a1 + a2 with everything else fixed: not symplectic
        group_closure([((1, 0, 0, 0), (0, 1, 0, 0), (1, 0, 1, 0), (0, 0, 0, 1))], 2)
    with pytest.raises(ClosureCapExceeded):
        group_closure([mat_H(2, 0), mat_V(2, 0)], 2, cap=3)


def test_sp4_f2_and_transvections():
    G = sp4_f2()
    assert len(G) == 720
    for v in ((1, 0, 0, 0), (1, 1, 1, 0)):
        M = transvection_mod(v, 2)
        assert M in G
        assert mat_mul(M, M, 2) == mat_mod(IDENTITY4, 2)


HYP = (2, 3, 5, 9, 13)


def test_constrained_subgroup_matches_monodromy():
    for cls, (b, e) in REPS.items():
        gens = [mat_H(b, e), mat_V(b, e)]
        if cls == 1:
            gens.append(mat_X())
        closure = group_closure(gens, 2)
        constrained = constrained_subgroup(mat_T(b, e), HYP)
        assert closure == constrained


def test_dihedral_structure():
    decagon = group_closure([rho_R(), rho_T()], 2)
    assert len(decagon) == 10
    assert dihedral_structure(decagon) == 5
    assert dihedral_structure(group_closure([mat_H(4, 1), mat_V(4, 1)], 2)) == 3
    assert dihedral_structure(sp4_f2()) is None
    assert dihedral_structure([IDENTITY4]) is None


# -- labels and orbits -------------------------------------------------------

@given(st.integers(1, 15))
def test_label_vector_roundtrip(label):
    assert vector_label(label_vector(label)) == label


def test_label_vector_range():
    with pytest.raises(ValueError):
        label_vector(0)
    with pytest.raises(ValueError):
        label_vector(16)


def test_orbit_partition_basics():
    vectors = [label_vector(l) for l in range(1, 16)]
    parts = orbit_partition([mat_mod(IDENTITY4, 2)], vectors, 2)
    assert len(parts) == 15
    parts = orbit_partition([mat_mod(g, 2) for g in sp4_f2()], vectors, 2)
    assert len(parts) == 1
    with pytest.raises(ValueError):
        orbit_partition([mat_mod(mat_V(2, 0), 2)], vectors[:3], 2)


def test_decagon_orbits_mod2():
    gens = [mat_mod(rho_R(), 2), mat_mod(rho_T(), 2)]
    parts = orbit_partition(gens, [label_vector(l) for l in range(1, 16)], 2)
    assert [len(p) for p in parts] == [5, 5, 5]


def test_primitive_vectors():
    assert len(primitive_vectors(2)) == 15
    assert len(primitive_vectors(3)) == 80
    assert all(v != (0, 0, 0, 0) for v in primitive_vectors(2))


def test_decagon_echo_counts():
    # N(n) for n = 2..15
    expected = [3, 1, 3, 8, 3, 1, 3, 1, 24, 3, 3, 1, 3, 8]
    got = [decagon_cyclic_echo_count(n) for n in range(2, 16)]
    assert got == expected
    with pytest.raises(ValueError):
        decagon_cyclic_echo_count(1)


# -- exact decagon periods ---------------------------------------------------

def test_decagon_period_verification():
    report = verify_decagon_periods()
    assert report["ok"], report["failures"]
    assert report["rank"] == 4
    assert report["identities_checked"] == 8


# -- eigenbasis of the real-multiplication generator -------------------------

def test_eigenbasis_structural_checks():
    for b, n in ((4, 3), (9, 5), (4, 9)):
        r = eigenbasis_checks(b, n)
        assert r["det_is_4b"]
        assert r["eigenvectors_ok"]
        assert r["blocks_diagonal"]
        assert r["invariant_constant"]


def test_eigenbasis_orbit_count_shortfall():
    # the separating invariant gcd(x, n) yields one class per divisor of n,
    # so the family orbit count is at most d(n); for n = 3 that still meets
    # phi(3) = 2, but for n = 5 it falls short of phi(5) = 4
    ok_case = eigenbasis_checks(4, 3)
    assert ok_case["family_orbit_count"] == 2 == ok_case["phi_n"]
    assert ok_case["ok"]
    short = eigenbasis_checks(4, 5)
    assert short["family_orbit_count"] == 2 < short["phi_n"] == 4
    assert not short["ok"]


def test_eigenbasis_validation():
    with pytest.raises(ValueError):
        eigenbasis_checks(5, 3)   # b not a square
    with pytest.raises(ValueError):
        eigenbasis_checks(4, 4)   # n even
    with pytest.raises(ValueError):
        eigenbasis_checks(9, 9)   # n not coprime to b
