import pytest

from altgt.geodesics import (
    AltPath,
    branch_count_r,
    class_members,
    class_signature,
    enumerate_paths,
    geodesic_representatives,
    path_equivalent,
)
from altgt.labels import AltLabel, dim_alt, labels


def path(text):
    return AltPath.parse(text)


def test_parse_and_render():
    p = path("1,1;2,1^+;2,1,1;3,1,1^+;4,1,1")
    assert str(p) == "1,1;2,1^+;2,1,1;3,1,1^+;4,1,1"
    assert p.n == 6
    assert str(p.endpoint) == "4,1,1"
    assert len(p) == 5
    assert [str(x) for x in p] == ["1,1", "2,1^+", "2,1,1", "3,1,1^+", "4,1,1"]


def test_validation():
    with pytest.raises(ValueError):
        path("2;4")  # level gap
    with pytest.raises(ValueError):
        path("2;3;3,1;2,1,1,1")  # not a branching step
    with pytest.raises(ValueError):
        path("2;2,1^+;2,2^-")  # sign flip along self-conjugate covers
    with pytest.raises(ValueError):
        path("3;3,1")  # must start at level 2
    with pytest.raises(ValueError):
        path("")
    with pytest.raises(ValueError):
        AltPath(())


def test_truncated_and_extended():
    p = path("2;3;3,1;4,1;4,1,1")
    assert str(p.truncated()) == "2;3;3,1;4,1"
    assert p.truncated().extended(AltLabel.parse("4,1,1")) == p
    with pytest.raises(ValueError):
        path("2").truncated()
    with pytest.raises(ValueError):
        p.extended(AltLabel.parse("4,1,1"))  # wrong size for the next level


def test_enumerate_small():
    assert [str(p) for p in enumerate_paths(AltLabel.parse("2,1^+"))] == [
        "2;2,1^+",
        "1,1;2,1^+",
    ]
    assert [str(p) for p in enumerate_paths(AltLabel.parse("3,1"))] == [
        "2;3;3,1",
        "2;2,1^+;3,1",
        "2;2,1^-;3,1",
        "1,1;2,1^+;3,1",
        "1,1;2,1^-;3,1",
    ]


def test_path_equivalence():
    a = path("1,1;2,1^+;2,1,1;3,1,1^+;4,1,1")
    b = path("2;2,1^+;3,1;3,1,1^+;4,1,1")
    c = path("1,1;2,1^-;2,1,1;3,1,1^+;4,1,1")
    assert path_equivalent(a, b)
    assert not path_equivalent(a, c)  # signs must match exactly
    assert path_equivalent(a, a)
    with pytest.raises(ValueError):
        path_equivalent(a, path("2;3;3,1"))


def test_class_signature_constant_on_members():
    p = path("1,1;2,1^+;2,1,1;3,1,1^+;4,1,1")
    sig = class_signature(p)
    for member in class_members(p):
        assert class_signature(member) == sig


def test_frozen_eight_member_class():
    p = path("1,1;2,1^+;2,1,1;3,1,1^+;4,1,1")
    assert branch_count_r(p) == 2
    members = [str(q) for q in class_members(p)]
    assert members == [
        "2;2,1^+;3,1;3,1,1^+;4,1,1",
        "2;2,1^+;3,1;3,1,1^+;3,1,1,1",
        "2;2,1^+;2,1,1;3,1,1^+;4,1,1",
        "2;2,1^+;2,1,1;3,1,1^+;3,1,1,1",
        "1,1;2,1^+;3,1;3,1,1^+;4,1,1",
        "1,1;2,1^+;3,1;3,1,1^+;3,1,1,1",
        "1,1;2,1^+;2,1,1;3,1,1^+;4,1,1",
        "1,1;2,1^+;2,1,1;3,1,1^+;3,1,1,1",
    ]


def test_class_members_cover_enumeration():
    for n in range(2, 7):
        for label in labels(n):
            for p in enumerate_paths(label):
                members = [q for q in class_members(p) if q.endpoint == label]
                assert p in members
                for q in members:
                    assert path_equivalent(p, q)


def test_class_size_power_of_two():
    for n in range(2, 7):
        for label in labels(n):
            for p in enumerate_paths(label):
                r = branch_count_r(p)
                assert len(class_members(p)) == 2 ** (r + 1)


def test_representative_counts_match_dimension():
    for n in range(2, 8):
        for label in labels(n):
            assert len(geodesic_representatives(label)) == dim_alt(label)


def test_geodesic_representatives_are_minimal():
    label = AltLabel.parse("4,1,1")
    reps = geodesic_representatives(label)
    assert len(reps) == 10
    assert len({class_signature(p) for p in reps}) == 10
    for p in reps:
        assert p.endpoint == label
        members = [q for q in class_members(p) if q.endpoint == label]
        assert p == min(members, key=AltPath.sort_key)


def test_representatives_small_frozen():
    reps = [str(p) for p in geodesic_representatives(AltLabel.parse("2,1,1"))]
    assert reps == [
        "2;2,1^+;2,1,1",
        "2;2,1^-;2,1,1",
        "1,1;1,1,1;2,1,1",
    ]
