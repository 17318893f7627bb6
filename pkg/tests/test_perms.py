import pytest
from hypothesis import given, strategies as st

from flatcover.perms import (Permutation, commutator, compose, format_cycles,
                             is_transitive, parse_cycles)


def perms(max_n=8):
    return st.integers(2, max_n).flatmap(
        lambda n: st.permutations(range(n)).map(Permutation))


def perm_pairs(max_n=8):
    return st.integers(2, max_n).flatmap(
        lambda n: st.tuples(st.permutations(range(n)).map(Permutation),
                            st.permutations(range(n)).map(Permutation)))


def perm_triples(max_n=7):
    return st.integers(2, max_n).flatmap(
        lambda n: st.tuples(*[st.permutations(range(n)).map(Permutation)] * 3))


@given(perm_triples())
def test_compose_associative(ps):
    p, q, r = ps
    assert compose(compose(p, q), r) == compose(p, compose(q, r))


@given(perms())
def test_inverse(p):
    ident = Permutation.identity(p.n)
    assert compose(p, p.inverse()) == ident
    assert compose(p.inverse(), p) == ident
    assert p.inverse().inverse() == p


@given(perm_pairs())
def test_conjugate_preserves_cycle_type(pair):
    p, g = pair
    type_before = sorted(len(c) for c in p.cycles())
    type_after = sorted(len(c) for c in p.conjugate(g).cycles())
    assert type_before == type_after


@given(perm_pairs())
def test_commutator_identity_iff_commute(pair):
    p, q = pair
    assert commutator(p, q).is_identity() == (compose(p, q) == compose(q, p))


@given(perms())
def test_cycle_text_roundtrip(p):
    assert parse_cycles(p.format_cycles(), p.n) == p
    assert format_cycles(p) == p.format_cycles()


def test_compose_convention():
    # compose(p, q) applies q first
    p = Permutation((1, 0, 2))   # swaps 0,1
    q = Permutation((0, 2, 1))   # swaps 1,2
    assert compose(p, q)(1) == 2
    assert compose(q, p)(1) == 0


def test_order():
    assert parse_cycles("(1,2,3)(4,5)", 5).order() == 6
    assert Permutation.identity(4).order() == 1


def test_cycles_and_fixed_points():
    p = parse_cycles("(1,2)", 4)
    assert p.cycles() == [(0, 1)]
    assert p.cycles(include_fixed=True) == [(0, 1), (2,), (3,)]


def test_from_cycles_validation():
    with pytest.raises(ValueError):
        Permutation.from_cycles(3, [(0, 1), (1, 2)])
    with pytest.raises(ValueError):
        Permutation.from_cycles(2, [(0, 5)])
    with pytest.raises(ValueError):
        Permutation((0, 0, 1))


def test_parse_errors():
    with pytest.raises(ValueError):
        parse_cycles("(1,2", 3)
    with pytest.raises(ValueError):
        parse_cycles("1,2)", 3)
    with pytest.raises(ValueError):
        parse_cycles("()", 3)
    assert parse_cycles("", 3).is_identity()
    assert parse_cycles(" (1, 2) ", 3) == parse_cycles("(1,2)", 3)


def test_transitivity():
    a = parse_cycles("(1,2)", 4)
    b = parse_cycles("(2,3,4)", 4)
    assert is_transitive([a, b], 4)
    assert not is_transitive([a], 4)
    with pytest.raises(ValueError):
        is_transitive([a], 5)
