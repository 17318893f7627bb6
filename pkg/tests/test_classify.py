import json

import pytest

from flatcover.classify import (EchoTable, HYP_LABELS, branched_cover_types,
                                census_to_json, count_formulas, echo_degree,
                                echoes_of_WD, hyperelliptic_labels,
                                is_primitive_cover, primitive_cover_oracle,
                                primitive_echo_table, verify_sts_orbits)

# expected orbit tables by discriminant class mod 8
TABLE2 = {
    0: (((2,), (3, 5, 9, 13)),
        ((1, 7, 11, 15), (4, 6), (8, 10, 12, 14))),
    1: (((2, 5), (3, 9, 13)),
        ((1, 6, 8, 11, 12, 15), (4, 10, 14), (7,))),
    4: (((2, 3, 9, 13), (5,)),
        ((1, 4, 11, 14), (6, 7, 8, 12), (10, 15))),
    5: (((2, 3, 5, 9, 13),),
        ((1, 8, 11, 12, 14), (4, 6, 7, 10, 15))),
}


def test_hyperelliptic_labels():
    assert hyperelliptic_labels() == HYP_LABELS == frozenset({2, 3, 5, 9, 13})


def test_echo_tables_by_discriminant_class():
    for D, e in ((8, None), (24, 0), (17, 1), (17, -1), (33, 1),
                 (12, None), (28, 0), (13, -1), (21, -1), (29, None)):
        table = echoes_of_WD(D, e)
        hyp, odd = TABLE2[D % 8]
        assert table.hyp_orbits == hyp, (D, e)
        assert table.odd_orbits == odd, (D, e)
        assert table.echo_count == len(hyp) + len(odd)


def test_spin_parameter_validation():
    with pytest.raises(ValueError):
        echoes_of_WD(7)          # 3 mod 4
    with pytest.raises(ValueError):
        echoes_of_WD(4)          # too small
    with pytest.raises(ValueError):
        echoes_of_WD(8, 1)       # wrong parity
    with pytest.raises(ValueError):
        echoes_of_WD(9, 1)       # e=1 needs b even
    assert echoes_of_WD(9, -1).b == 2


def test_echo_degree():
    table = echoes_of_WD(8)
    assert echo_degree(table, (3, 5, 9, 13)) == 4
    assert echo_degree(table, [13, 3, 9, 5]) == 4
    with pytest.raises(ValueError):
        echo_degree(table, (1, 2))


def test_table_serialization():
    table = echoes_of_WD(8)
    out = table.to_json()
    assert out["D"] == 8 and out["e"] == 0
    assert out["hyp"] == [[2], [3, 5, 9, 13]]
    md = table.to_markdown()
    assert "D = 8" in md and "{3, 5, 9, 13}" in md
    assert isinstance(table, EchoTable)


# expected primitive tables keyed by (d mod 4, (d - e) mod 4)
TABLE3 = {
    (0, 0): (((3, 5, 9, 13),), ((1, 7, 11, 15), (8, 10, 12, 14))),
    (2, 2): (((2, 3, 9, 13),), ((1, 4, 11, 14), (6, 7, 8, 12))),
    (1, 0): (((3, 9, 13),), ((1, 6, 8, 11, 12, 15), (4, 10, 14))),
    (1, 2): (((2, 5), (3, 9, 13)), ((1, 6, 8, 11, 12, 15), (7,))),
}


def test_primitive_tables():
    for d, e in ((4, 0), (8, 0), (6, 0), (10, 0), (5, 1), (9, 1), (13, 1),
                 (5, -1), (7, -1), (7, 1), (11, 1), (3, -1)):
        key = (d % 4 if d % 2 == 0 else 1, (d - e) % 4)
        expected_hyp, expected_odd = TABLE3[key]
        table = primitive_echo_table(d, e)
        assert table.hyp_orbits == expected_hyp, (d, e)
        assert table.odd_orbits == expected_odd, (d, e)


def test_primitivity_against_lattice_oracle():
    for d, e in ((3, -1), (4, 0), (5, 1), (5, -1), (6, 0), (7, 1), (7, -1),
                 (8, 0), (9, 1), (9, -1), (10, 0), (11, 1), (11, -1), (12, 0)):
        for label in range(1, 16):
            assert is_primitive_cover(d, e, label) == \
                primitive_cover_oracle(d, e, label), (d, e, label)


def test_primitivity_validation():
    with pytest.raises(ValueError):
        is_primitive_cover(4, 1, 1)    # even d needs e = 0
    with pytest.raises(ValueError):
        is_primitive_cover(5, 0, 1)    # odd d needs e = +-1
    with pytest.raises(ValueError):
        is_primitive_cover(4, 0, 0)
    with pytest.raises(ValueError):
        primitive_cover_oracle(4, 0, (0, 0, 0, 0))


def test_branched_cover_types():
    # even d: 3 types; d = 3: 4; odd d >= 5: depends on the two spins
    assert branched_cover_types(4) == 3
    assert branched_cover_types(6) == 3
    assert branched_cover_types(3) == 3       # only the e = -1 spin exists
    assert branched_cover_types(5) == 3 + 4   # keys (1, 0) and (1, 2)
    assert branched_cover_types(7) == 4 + 3
    with pytest.raises(ValueError):
        branched_cover_types(2)


def test_count_formulas():
    assert count_formulas(3) == (3, None)
    assert count_formulas(5) == (18, 9)
    assert count_formulas(7) == (54, 36)
    assert count_formulas(9) == (108, 81)
    assert count_formulas(11) == (225, 180)
    with pytest.raises(ValueError):
        count_formulas(4)


def test_sts_census_small():
    for n, expected in ((3, 5), (4, 5), (5, 10)):
        census = verify_sts_orbits(n)
        assert census["ok"]
        assert census["orbit_count"] == expected
        for spin in census["spins"]:
            for orbit in spin["orbits"]:
                assert (orbit["arf"] == 0) == (orbit["labels"][0] in HYP_LABELS)
                if orbit["translation_order"] == 2:
                    assert orbit["size_matches_product"]


def test_sts_orbit_sizes_five():
    census = verify_sts_orbits(5)
    by_spin = {s["e"]: sorted(o["size"] for o in s["orbits"]) for s in census["spins"]}
    # base orbit 18 for e = 1 (d - e divisible by 4), 9 for e = -1
    assert by_spin[1] == [18, 36, 54, 54, 108]
    assert by_spin[-1] == [9, 18, 27, 27, 54]


def test_sts_cap():
    with pytest.raises(ValueError):
        verify_sts_orbits(13)


def test_census_json_roundtrip():
    census = verify_sts_orbits(3)
    out = json.loads(census_to_json(census))
    assert out["n"] == 3 and out["ok"]
