import pytest

from flatcover.covers import (all_double_covers, cover_from_basis_values,
                              cover_label, cyclic_covers,
                              primitive_vector_count)
from flatcover.origami import Origami, l_origami
from flatcover.perms import parse_cycles


def lshape(b, e):
    L = l_origami(b, e)
    return L.origami, list(L.basis)


def test_fifteen_connected_double_covers():
    o, basis = lshape(6, 1)
    covers = all_double_covers(o, basis)
    assert len(covers) == 15
    labels = sorted(cover_label(basis, c)[1] for c in covers)
    assert labels == list(range(1, 16))


def test_holonomy_matches_construction():
    o, basis = lshape(6, -1)
    for code in (1, 7, 10, 15):
        values = tuple((code >> k) & 1 for k in range(4))
        c = cover_from_basis_values(o, 2, basis, values)
        assert c.holonomy_on_basis(basis) == values


def test_published_b1_cover():
    # the double cover of the 5-square surface dual to b1 is the published
    # 10-square pair
    o, basis = lshape(6, 1)
    covers = {cover_label(basis, c)[1]: c for c in all_double_covers(o, basis)}
    lift = covers[2].lift()
    published = Origami(parse_cycles("(1,2)(6,7)(3,8)(4,9)(5,10)", 10),
                        parse_cycles("(2,3,4,5)(7,8,9,10)", 10))
    assert lift == published
    gamma, label = cover_label(basis, covers[2])
    assert gamma == (0, 1, 0, 0) and label == 2


def test_lift_geometry():
    for b, e in ((6, 1), (4, 0), (2, -1)):
        o, basis = lshape(b, e)
        for c in all_double_covers(o, basis):
            lift = c.lift()
            assert lift.n == 2 * o.n
            assert str(lift.stratum()) == "H(2,2)"
            assert lift.is_reduced()


def test_deck_shift_is_translation():
    o, basis = lshape(6, 1)
    c = all_double_covers(o, basis)[0]
    lift = c.lift()
    t = c.deck_shift()
    trans = lift.translations()
    assert t in trans
    assert t.order() == 2


def test_quotient_by_deck_recovers_base():
    o, basis = lshape(6, -1)
    for c in all_double_covers(o, basis)[:4]:
        lift = c.lift()
        assert lift.quotient_by_translation(c.deck_shift()) == o


def test_cover_needs_genus_two():
    torus = Origami.from_text("n=1 h= v=")
    with pytest.raises(ValueError):
        all_double_covers(torus)


def test_disconnected_cover_rejected():
    o, basis = lshape(6, 1)
    with pytest.raises(ValueError):
        cover_from_basis_values(o, 2, basis, (0, 0, 0, 0)).lift()


def test_primitive_vector_count():
    assert primitive_vector_count(2) == 15
    assert primitive_vector_count(3) == 80
    assert primitive_vector_count(6) == 15 * 80
    # n^4 prod (1 - p^-4)
    assert primitive_vector_count(5) == 5 ** 4 - 1


def test_cyclic_covers_enumeration():
    o, basis = lshape(6, 1)
    covers = cyclic_covers(o, 3, basis)
    assert len(covers) == 80
    # each cover is connected with deck group Z/3
    sample = covers[0].lift()
    assert sample.n == 3 * o.n
    assert covers[0].deck_shift().order() == 3
    with pytest.raises(ValueError):
        cyclic_covers(o, 1, basis)
