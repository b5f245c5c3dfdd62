from __future__ import annotations

from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from momentkit.geometry import vector
from momentkit.lie import (RootSystemError, WEYL_ORDER_BOUND, build_root_system, explicit_root_system,
                           identity, on_wall, parse_group, stabilizer, to_dominant, walls, weyl_group)

A2 = build_root_system("A", 2)
B2 = build_root_system("B", 2)
WA2 = weyl_group(A2)
WB2 = weyl_group(B2)


def test_root_counts_and_ambient():
    assert len(A2.roots) == 6 and A2.ambient_dim == 3
    assert all(sum(r) == 0 for r in A2.roots)
    assert len(B2.roots) == 8 and B2.ambient_dim == 2
    assert len(build_root_system("A", 3).roots) == 12
    assert len(build_root_system("B", 3).roots) == 18


def test_simple_roots_are_a_basis():
    assert set(B2.simple_roots) == {vector((0, 1)), vector((1, -1))}
    assert set(A2.simple_roots) == {vector((1, -1, 0)), vector((0, 1, -1))}


def test_b2_dominant_chamber():
    assert B2.is_dominant((2, 1))
    assert not B2.is_dominant((1, 2))
    assert B2.is_dominant((1, 0)) and B2.is_dominant((1, 1))
    assert not B2.is_dominant((1, -1))


def test_unsupported_families():
    for fam, rank in (("C", 2), ("A", 0), ("B", 4)):
        with pytest.raises(RootSystemError):
            build_root_system(fam, rank)
    with pytest.raises(RootSystemError):
        parse_group("Z9")
    assert parse_group("B2") == B2


def test_weyl_orders():
    assert WA2.order == 6 and WB2.order == 8
    assert weyl_group(build_root_system("A", 3)).order == 24
    assert weyl_group(build_root_system("B", 3)).order == 48
    assert WA2.elements[0].is_identity()


def test_weyl_closure_bound():
    # reflections in lines at an angle that is not a rational multiple of pi
    # generate an infinite group
    bad = explicit_root_system([(1, 0), (-1, 0), (3, 1), (-3, -1)])
    with pytest.raises(RootSystemError):
        weyl_group(bad)
    assert WEYL_ORDER_BOUND == 10_000


def test_group_elements_permute_roots_and_are_orthogonal():
    for rs, w in ((A2, WA2), (B2, WB2), (build_root_system("B", 3), None)):
        group = w or weyl_group(rs)
        roots = set(rs.roots)
        n = rs.ambient_dim
        for g in group:
            assert {g(r) for r in roots} == roots
            assert (g @ g.transpose()).is_identity()
            assert g.inverse() @ g == identity(n)


def test_orbits_of_example_points():
    assert WB2.orbit((1, 1)) == sorted(vector(v) for v in ((1, 1), (1, -1), (-1, 1), (-1, -1)))
    g = F(3, 2)
    assert set(WB2.orbit((g, 0))) == {vector(v) for v in ((g, 0), (-g, 0), (0, g), (0, -g))}


def test_to_dominant_examples():
    assert to_dominant(B2, (1, 2))[1] == vector((2, 1))
    assert to_dominant(B2, (-2, 1))[1] == vector((2, 1))
    t, s = F(1), F(2)
    v = ((2 * t - s) / 3, (2 * s - t) / 3, -(t + s) / 3)
    w, dv = to_dominant(A2, v)
    assert dv == (v[1], v[0], v[2])
    assert w(v) == dv


def test_stabilizer_examples():
    assert stabilizer(WB2, (2, 1)).order == 1
    st_q = stabilizer(WB2, (1, 1))
    assert st_q.order == 2
    assert any(g(vector((1, 0))) == vector((0, 1)) for g in st_q)
    assert stabilizer(WB2, (0, 0)).order == 8
    with pytest.raises(RootSystemError):
        stabilizer(WB2, (0, 0, 0))


def test_walls():
    lines = {h.normal for h in walls(B2)}
    assert lines == {vector(v) for v in ((1, 0), (0, 1), (1, 1), (1, -1))}
    assert len(walls(A2)) == 3
    assert B2.walls_through((1, 1)) == [vector((1, -1))]
    assert on_wall(B2, (1, 1)) and not on_wall(B2, (2, 1))


rat = st.fractions(min_value=-4, max_value=4, max_denominator=5)


@settings(max_examples=100, deadline=None)
@given(st.tuples(rat, rat))
def test_to_dominant_is_weyl_invariant_b2(v):
    w, dv = to_dominant(B2, v)
    assert B2.is_dominant(dv) and w(vector(v)) == dv
    assert to_dominant(B2, dv)[1] == dv
    for g in WB2:
        assert to_dominant(B2, g(vector(v)))[1] == dv


@settings(max_examples=100, deadline=None)
@given(st.tuples(rat, rat))
def test_to_dominant_is_weyl_invariant_a2(v):
    v = (v[0], v[1], -v[0] - v[1])
    dv = to_dominant(A2, v)[1]
    assert dv == tuple(sorted(vector(v), reverse=True))
    for g in WA2:
        assert to_dominant(A2, g(vector(v)))[1] == dv


@settings(max_examples=100, deadline=None)
@given(st.tuples(st.integers(-3, 3), st.integers(-3, 3)))
def test_orbit_stabilizer(v):
    assert len(WB2.orbit(v)) * stabilizer(WB2, v).order == WB2.order
