import json

import pytest
from hypothesis import given, strategies as st

from qchar.rootsystem import (NAMED_SYSTEMS, NotFiniteType, NotSymmetrizable, from_cartan,
                              load_root_system)

ROOT_COUNTS = {"A1": 1, "A2": 3, "A3": 6, "A4": 10, "B2": 4, "B3": 9, "C3": 9, "D4": 12, "F4": 24, "G2": 6}


@pytest.fixture(params=NAMED_SYSTEMS)
def rs(request):
    return load_root_system(request.param)


def test_symmetrizer_examples():
    assert load_root_system("A1").cartan == ((2,),) and load_root_system("A1").d == (1,)
    b2 = from_cartan([[2, -2], [-1, 2]])
    assert b2.d == (1, 2)
    g2 = from_cartan([[2, -1], [-3, 2]])
    assert g2.d == (3, 1)


def test_invariants(rs):
    a, d = rs.cartan, rs.d
    n = rs.rank
    for i in range(n):
        assert a[i][i] == 2
        for j in range(n):
            assert d[i] * a[i][j] == d[j] * a[j][i]
            if i != j:
                assert a[i][j] <= 0 and (a[i][j] == 0) == (a[j][i] == 0)
    assert set(d) <= {1, 2, 3} and 1 in d


def test_positive_root_counts(rs):
    assert len(rs.positive_roots) == ROOT_COUNTS[rs.name]
    assert len(set(rs.positive_roots)) == len(rs.positive_roots)
    # simple roots are positive roots
    for i in range(rs.rank):
        assert tuple(int(i == j) for j in range(rs.rank)) in rs.positive_roots


def test_positive_roots_a2():
    assert set(load_root_system("A2").positive_roots) == {(1, 0), (0, 1), (1, 1)}


def test_pairing_examples():
    a2 = load_root_system("A2")
    assert a2.pairing((3, -1), 1) == -1
    assert load_root_system("A1").pairing((0,), 0) == 0
    for rs in map(load_root_system, NAMED_SYSTEMS):
        for i in range(rs.rank):
            for j in range(rs.rank):
                assert rs.pairing(rs.simple_root_as_weight(i), j) == rs.cartan[i][j]


def test_simple_root_as_weight():
    assert load_root_system("A2").simple_root_as_weight(0) == (2, -1)
    assert load_root_system("A1").simple_root_as_weight(0) == (2,)
    assert load_root_system("G2").simple_root_as_weight(1) == (-3, 2)


def test_root_decompose_examples():
    a2 = load_root_system("A2")
    assert a2.root_decompose((1, 1)) == (1, 1)
    assert a2.root_decompose((1, 0)) is None
    for rs in map(load_root_system, NAMED_SYSTEMS):
        assert rs.root_decompose((0,) * rs.rank) == (0,) * rs.rank


@pytest.mark.parametrize("name", NAMED_SYSTEMS)
@given(data=st.data())
def test_root_decompose_roundtrip(name, data):
    rs = load_root_system(name)
    c = tuple(data.draw(st.lists(st.integers(0, 9), min_size=rs.rank, max_size=rs.rank)))
    assert rs.root_decompose(rs.root_to_weight(c)) == c
    if any(c):
        assert rs.root_decompose(tuple(-x for x in rs.root_to_weight(c))) is None


@pytest.mark.parametrize("name", ["A2", "B2", "G2", "B3"])
@given(data=st.data())
def test_dominance_antisymmetric(name, data):
    rs = load_root_system(name)
    nu = tuple(data.draw(st.lists(st.integers(-6, 6), min_size=rs.rank, max_size=rs.rank)))
    zero = (0,) * rs.rank
    if rs.leq(zero, nu) and rs.leq(nu, zero):
        assert nu == zero


def test_reflection_preserves_roots(rs):
    roots = set(rs.positive_roots)
    for i in range(rs.rank):
        for c in roots:
            r = rs.reflect_root(i, c)
            simple_i = tuple(int(i == j) for j in range(rs.rank))
            if c == simple_i:
                assert r == tuple(-x for x in c)
            else:
                assert r in roots


@pytest.mark.parametrize("cartan,err", [
    ([[2, -1], [-1, 1]], NotFiniteType),
    ([[2, -2], [-2, 2]], NotFiniteType),          # affine A1
    ([[2, 1], [1, 2]], NotFiniteType),
    ([[2, -1], [0, 2]], NotFiniteType),
    ([[2, -1, 0], [-1, 2, -1], [-1, -1, 2]], NotFiniteType),
    ([[2, -4], [-1, 2]], NotFiniteType),
])
def test_rejects_bad_matrices(cartan, err):
    with pytest.raises(err):
        from_cartan(cartan)


def test_non_symmetrizable():
    with pytest.raises(NotSymmetrizable):
        from_cartan([[2, -1, -1], [-2, 2, -1], [-1, -1, 2]])


def test_load_json(tmp_path):
    path = tmp_path / "g2.json"
    path.write_text(json.dumps({"cartan": [[2, -1], [-3, 2]]}))
    rs = load_root_system(str(path))
    assert rs.d == (3, 1) and len(rs.positive_roots) == 6
    assert load_root_system({"cartan": [[2]]}).rank == 1


def test_unknown_name():
    with pytest.raises(KeyError):
        load_root_system("E9")
