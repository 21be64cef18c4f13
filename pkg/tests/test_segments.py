from __future__ import annotations

import pytest
from hypothesis import given, strategies as st

from arthur.errors import InputError
from arthur.halfint import HalfInt
from arthur.segments import (
    EsegInterval,
    VExtZSeg,
    ZSegment,
    adjacent_intervals,
    chain_position,
    dagger,
    enumerate_eseg,
    from_chain_position,
    is_adjacent,
    is_interval,
    shift,
)
from conftest import eseg, zseg


class TestHalfInt:
    def test_parse_and_str(self):
        assert str(HalfInt.parse("3/2")) == "3/2"
        assert str(HalfInt.parse("-1/2")) == "-1/2"
        assert str(HalfInt.parse("2")) == "2"
        assert HalfInt.parse("1/2").twice == 1

    def test_parse_rejects_garbage(self):
        with pytest.raises(InputError):
            HalfInt.parse("1/3")
        with pytest.raises(InputError):
            HalfInt.parse("x")

    def test_floor(self):
        assert HalfInt(1).floor() == 0
        assert HalfInt(-1).floor() == -1
        assert HalfInt(4).floor() == 2

    def test_arithmetic_is_exact(self):
        assert HalfInt(1) + HalfInt(1) == HalfInt(2)
        assert HalfInt(3) - 1 == HalfInt(1)
        assert -HalfInt(1) == HalfInt(-1)
        assert HalfInt(1) < HalfInt(2)


class TestEnumerate:
    def test_length_two_support(self):
        got = enumerate_eseg(zseg(1, 0))
        assert got == [eseg(1, 0, 0, 1), eseg(1, 0, 1, 1), eseg(1, 0, 0, -1)]

    def test_singleton_support(self):
        assert enumerate_eseg(zseg(0, 0)) == [eseg(0, 0, 0, 1), eseg(0, 0, 0, -1)]

    def test_length_three_support(self):
        got = enumerate_eseg(zseg(2, 0))
        assert got == [
            eseg(2, 0, 0, 1),
            eseg(2, 0, 1, 1),
            eseg(2, 0, 1, -1),
            eseg(2, 0, 0, -1),
        ]

    @pytest.mark.parametrize("A,B", [(a, b) for a in range(0, 6) for b in range(0, a + 1)])
    def test_cardinality(self, A, B):
        assert len(enumerate_eseg(zseg(A, B))) == A - B + 2

    @pytest.mark.parametrize("A", range(0, 6))
    def test_consecutive_entries_are_adjacent(self, A):
        items = enumerate_eseg(zseg(A, 0))
        for e1, e2 in zip(items, items[1:]):
            assert is_adjacent(e1, e2)

    def test_identified_sign_is_canonical(self):
        assert eseg(1, 0, 1, -1) == eseg(1, 0, 1, 1)
        assert len(set(enumerate_eseg(zseg(3, 0)))) == 5


class TestAdjacency:
    def test_lifted_neighbour(self):
        assert is_adjacent(eseg(1, 0, 0, -1), eseg(1, 0, 1, 1))

    def test_opposite_ends_not_adjacent(self):
        assert not is_adjacent(eseg(1, 0, 0, -1), eseg(1, 0, 0, 1))

    def test_middle_flip_on_odd_length(self):
        assert is_adjacent(eseg(2, 0, 1, 1), eseg(2, 0, 1, -1))

    def test_different_supports_never_adjacent(self):
        assert not is_adjacent(eseg(1, 0, 0, 1), eseg(2, 0, 0, 1))

    @given(
        st.integers(0, 4),
        st.integers(-3, 2),
        st.integers(-3, 2),
        st.sampled_from([1, -1]),
        st.sampled_from([1, -1]),
    )
    def test_symmetric_and_irreflexive(self, length, l1, l2, t1, t2):
        delta = zseg(length, 0)
        if 2 * l1 > delta.length or 2 * l2 > delta.length:
            return
        e1, e2 = VExtZSeg(delta, l1, t1), VExtZSeg(delta, l2, t2)
        assert is_adjacent(e1, e2) == is_adjacent(e2, e1)
        assert not is_adjacent(e1, e1)

    def test_chain_position_roundtrip(self):
        delta = zseg(3, 0)
        for pos in range(-3, delta.length + 4):
            assert chain_position(from_chain_position(delta, pos)) == pos


class TestIntervals:
    def test_gap_is_not_an_interval(self):
        e1, _, e3 = enumerate_eseg(zseg(1, 0))
        assert not is_interval({e1, e3})

    def test_empty_is_interval(self):
        assert is_interval(set())

    def test_full_fiber_is_interval(self):
        assert is_interval(set(enumerate_eseg(zseg(1, 0))))

    def test_mixed_supports_are_not(self):
        assert not is_interval({eseg(1, 0, 0, 1), eseg(2, 0, 0, 1)})

    def test_interval_type_rejects_gaps(self):
        e1, _, e3 = enumerate_eseg(zseg(1, 0))
        from arthur.errors import IntervalViolation

        with pytest.raises(IntervalViolation):
            EsegInterval(zseg(1, 0), (e1, e3))

    def test_members_come_back_sorted(self):
        e1, e2, e3 = enumerate_eseg(zseg(1, 0))
        assert EsegInterval(zseg(1, 0), (e3, e1, e2)).members == (e1, e2, e3)


class TestAdjacentIntervals:
    def _sets(self, delta, members):
        got = adjacent_intervals(EsegInterval(delta, tuple(members)))
        return {frozenset(t.members) for t in got}

    def test_boundary_singleton(self):
        delta = zseg(1, 0)
        e1, e2, e3 = enumerate_eseg(delta)
        assert self._sets(delta, [e1]) == {
            frozenset(),
            frozenset({e2}),
            frozenset({e1, e2}),
        }

    def test_full_interval(self):
        delta = zseg(1, 0)
        e1, e2, e3 = enumerate_eseg(delta)
        assert self._sets(delta, [e1, e2, e3]) == {
            frozenset({e1, e2, e3}),
            frozenset({e1, e2}),
            frozenset({e2, e3}),
        }

    def test_empty_interval(self):
        delta = zseg(1, 0)
        e1, e2, e3 = enumerate_eseg(delta)
        assert self._sets(delta, []) == {
            frozenset(),
            frozenset({e1}),
            frozenset({e3}),
        }

    @pytest.mark.parametrize("A", range(0, 5))
    def test_at_most_three_everywhere(self, A):
        delta = zseg(A, 0)
        items = enumerate_eseg(delta)
        for lo in range(len(items) + 1):
            for hi in range(lo - 1, len(items)):
                members = items[lo : hi + 1]
                assert len(self._sets(delta, members)) <= 3

    @pytest.mark.parametrize("A", range(0, 5))
    def test_pairwise_intersections_are_intervals(self, A):
        delta = zseg(A, 0)
        items = enumerate_eseg(delta)
        ranges = [
            frozenset(items[lo : hi + 1])
            for lo in range(len(items) + 1)
            for hi in range(lo - 1, len(items))
        ]
        for s1 in ranges:
            for s2 in ranges:
                assert is_interval(s1 & s2)


class TestDagger:
    def test_odd_difference_flips(self):
        assert dagger(eseg(1, 0, 0, 1)) == eseg(1, 0, 0, -1)

    def test_even_difference_keeps(self):
        assert dagger(eseg(2, 0, 1, 1)) == eseg(2, 0, 1, 1)

    def test_identified_sign_is_fixed(self):
        assert dagger(eseg(1, 0, 1, 1)) == eseg(1, 0, 1, 1)

    @pytest.mark.parametrize("A,B", [(a, b) for a in range(0, 6) for b in range(0, a + 1)])
    def test_involution(self, A, B):
        for e in enumerate_eseg(zseg(A, B)):
            assert dagger(dagger(e)) == e

    def test_nonvanishing_with_partner(self):
        from arthur.pairs import nv_pair

        for A, B in [(0, 0), (1, 0), (2, 0), (3, 1)]:
            for e in enumerate_eseg(zseg(A, B)):
                assert nv_pair(e, dagger(e))


class TestShift:
    def test_translate(self):
        assert shift(eseg(1, 0, 0, 1), 2) == eseg(3, 2, 0, 1)
        assert shift(eseg(0, 0, 0, -1), -1) == eseg(-1, -1, 0, -1)
        assert shift(eseg(1, 0, 1, 1), 0) == eseg(1, 0, 1, 1)

    @given(st.integers(-3, 3), st.integers(0, 4), st.sampled_from([1, -1]))
    def test_preserves_decoration(self, t, length, eta):
        e = VExtZSeg(zseg(length, 0), 0, eta)
        moved = shift(e, t)
        assert (moved.l, moved.eta) == (e.l, e.eta)
        assert moved.A - e.A == t and moved.B - e.B == t
