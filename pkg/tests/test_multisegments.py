from __future__ import annotations

import random

import pytest

from arthur.errors import (
    BadParity,
    EndpointMismatch,
    InputError,
    NegativeCenter,
    OrderNotAdmissible,
    OrderNotPPrime,
    PreconditionFailed,
    SignConditionFailed,
)
from arthur.halfint import HalfInt
from arthur.multisegments import (
    ArthurParameter,
    ArthurSummand,
    Cuspidal,
    ExtMultiSegment,
    ExtSegment,
    GroupType,
    canonical_rows,
    character,
    characters_of,
    good_parity,
    multiseg,
    pi_nonzero,
    same_pi,
    validate,
    zlevel,
)
from arthur.segments import is_adjacent
from conftest import CHI, RHO_SP, TRIV, h, random_valid_multiseg, so, sp


def hseg(A2, B2, l, eta):
    return ExtSegment(h(A2), h(B2), l, eta)


class TestGoodParity:
    def test_orthogonal_character_tables(self):
        assert good_parity(CHI, 1, 2, so(0))
        assert not good_parity(CHI, 1, 1, so(0))
        assert good_parity(CHI, 1, 1, sp(0))
        assert not good_parity(CHI, 1, 2, sp(0))

    def test_symplectic_type(self):
        assert good_parity(RHO_SP, 1, 1, so(0))
        assert not good_parity(RHO_SP, 1, 2, so(0))
        assert good_parity(RHO_SP, 1, 2, sp(0))

    def test_non_selfdual_is_never_good(self):
        from conftest import RHO_NSD

        assert not good_parity(RHO_NSD, 1, 2, so(0))
        assert not good_parity(RHO_NSD, 1, 1, sp(0))


class TestCuspidal:
    def test_character_must_be_orthogonal(self):
        with pytest.raises(InputError):
            Cuspidal("bad", 1, "symplectic")

    def test_non_selfdual_needs_distinct_dual(self):
        with pytest.raises(InputError):
            Cuspidal("bad", 2, "none")
        with pytest.raises(InputError):
            Cuspidal("bad", 2, "none", "bad")


class TestValidate:
    def test_twin_half_rows(self):
        ms = multiseg(so(2), {CHI: [hseg(1, 1, 0, 1), hseg(1, 1, 0, 1)]})
        validate(ms)

    def test_sign_condition_failure(self):
        ms = multiseg(so(1), {CHI: [hseg(1, -1, 0, -1)]})
        with pytest.raises(SignConditionFailed):
            validate(ms)

    def test_negative_center(self):
        ms = multiseg(so(1), {CHI: [hseg(0, -2, 0, 1)]})
        with pytest.raises(NegativeCenter):
            validate(ms)

    def test_bad_parity(self):
        ms = multiseg(so(1), {CHI: [hseg(0, 0, 0, 1)]})
        with pytest.raises(BadParity):
            validate(ms)

    def test_dimension_mismatch(self):
        ms = multiseg(so(5), {CHI: [hseg(1, 1, 0, 1), hseg(1, 1, 0, 1)]})
        with pytest.raises(BadParity):
            validate(ms)

    def test_order_not_admissible(self):
        ms = multiseg(so(4), {CHI: [hseg(3, 1, 0, 1), hseg(1, -1, 0, 1)]})
        with pytest.raises(OrderNotAdmissible):
            validate(ms)

    def test_mixed_endpoint_classes(self):
        ms = multiseg(so(3), {CHI: [hseg(1, 1, 0, 1), hseg(2, 2, 0, 1)]})
        with pytest.raises(EndpointMismatch):
            validate(ms)

    def test_segment_endpoints_must_differ_by_integers(self):
        with pytest.raises(EndpointMismatch):
            hseg(2, 1, 0, 1)


class TestZLevel:
    def test_floors_halves(self):
        ms = multiseg(so(2), {CHI: [hseg(1, 1, 0, 1), hseg(1, 1, 0, 1)]})
        assert zlevel(ms, CHI) == (
            __import__("conftest").eseg(0, 0, 0, 1),
            __import__("conftest").eseg(0, 0, 0, 1),
        )

    def test_negative_half_floors_down(self):
        seg = hseg(3, -1, 1, -1)
        z = seg.zfloor()
        assert (z.A, z.B, z.l, z.eta) == (1, -1, 1, -1)

    def test_integral_row_unchanged(self):
        seg = hseg(4, 2, 1, -1)
        z = seg.zfloor()
        assert (z.A, z.B, z.l, z.eta) == (2, 1, 1, -1)

    def test_missing_row_is_an_error(self):
        ms = multiseg(so(2), {CHI: [hseg(1, 1, 0, 1), hseg(1, 1, 0, 1)]})
        with pytest.raises(InputError):
            zlevel(ms, TRIV)


class TestPiNonzero:
    def test_twin_rows(self):
        assert pi_nonzero(multiseg(so(2), {CHI: [hseg(1, 1, 0, 1), hseg(1, 1, 0, 1)]}))

    def test_endpoint_inequality_failure(self):
        ms = multiseg(so(2), {CHI: [hseg(1, -1, 0, -1), hseg(1, -1, 0, -1)]})
        assert not pi_nonzero(ms)

    def test_empty_multisegment(self):
        assert pi_nonzero(multiseg(so(0), {}))

    def test_invariant_under_exchange_equivalence(self):
        rng = random.Random(29)
        for _ in range(120):
            ms = random_valid_multiseg(rng)
            value = pi_nonzero(ms)
            if not value:
                continue
            moved = canonical_rows(ms)
            assert pi_nonzero(moved) == value
            assert same_pi(ms, moved)


class TestCharactersOf:
    def test_doubled_summand(self):
        psi = ArthurParameter(so(2), (ArthurSummand(CHI, 2, 1), ArthurSummand(CHI, 2, 1)))
        chars = characters_of(psi)
        values = {tuple(v for _, v in c.values) for c in chars}
        assert values == {(1,), (-1,)}

    def test_no_good_parity_summands(self):
        from conftest import RHO_NSD, RHO_NSD_DUAL
        from fractions import Fraction

        psi = ArthurParameter(
            so(2),
            (
                ArthurSummand(RHO_NSD, 1, 1, Fraction(0)),
                ArthurSummand(RHO_NSD_DUAL, 1, 1, Fraction(0)),
            ),
        )
        chars = characters_of(psi)
        assert len(chars) == 1 and next(iter(chars)).values == ()

    def test_two_distinct_classes_pair_up(self):
        psi = ArthurParameter(so(2), (ArthurSummand(CHI, 1, 2), ArthurSummand(TRIV, 1, 2)))
        chars = characters_of(psi)
        values = {tuple(v for _, v in c.values) for c in chars}
        assert values == {(1, 1), (-1, -1)}


class TestCharacter:
    def test_twin_half_rows_plus(self):
        ms = multiseg(so(2), {CHI: [hseg(1, 1, 0, 1), hseg(1, 1, 0, 1)]})
        assert character(ms).value(CHI, 2, 1) == 1

    def test_twin_half_rows_minus(self):
        ms = multiseg(so(2), {CHI: [hseg(1, 1, 0, -1), hseg(1, 1, 0, -1)]})
        assert character(ms).value(CHI, 2, 1) == -1

    def test_single_wide_row(self):
        ms = multiseg(so(1), {TRIV: [hseg(1, -1, 1, 1)]})
        assert character(ms).value(TRIV, 1, 2) == 1

    def test_requires_sorted_rows(self):
        ms = multiseg(so(4), {CHI: [hseg(3, 3, 0, 1), hseg(5, 1, 1, 1)]})
        validate(ms)
        with pytest.raises(OrderNotPPrime):
            character(ms)

    def test_requires_nonzero(self):
        ms = multiseg(so(2), {CHI: [hseg(1, -1, 0, -1), hseg(1, -1, 0, -1)]})
        with pytest.raises(PreconditionFailed):
            character(ms)

    def test_random_characters_satisfy_group_constraints(self):
        rng = random.Random(41)
        found = 0
        while found < 200:
            ms = random_valid_multiseg(rng)
            ms = canonical_rows(ms) if pi_nonzero(ms) else None
            if ms is None or not pi_nonzero(ms):
                continue
            found += 1
            char = character(ms)  # construction asserts constancy and product one
            psi = ms.psi()
            classes = psi.good_parity_classes()
            assert set(dict(char.values)) == set(classes)
            product = 1
            for key, mult in classes.items():
                product *= char.value(*key) ** mult
            assert product == 1

    def test_adjacent_single_row_flip(self):
        # Two multi-segments equal except for adjacent decorations in one
        # row position carry opposite signs at that row's summand.
        rng = random.Random(53)
        found = 0
        while found < 120:
            ms = random_valid_multiseg(rng)
            if not pi_nonzero(ms):
                continue
            ms = canonical_rows(ms)
            rho, segs = ms.rows[0]
            i = rng.randrange(len(segs))
            old = segs[i]
            candidates = []
            from arthur.segments import enumerate_eseg

            for alt in enumerate_eseg(old.zfloor().seg):
                if is_adjacent(alt, old.zfloor()):
                    candidates.append(alt)
            if not candidates:
                continue
            alt = candidates[rng.randrange(len(candidates))]
            new_seg = ExtSegment(old.A, old.B, alt.l, alt.eta)
            new_row = segs[:i] + (new_seg,) + segs[i + 1 :]
            try:
                other = ms.with_row(rho, new_row)
                validate(other)
            except InputError:
                continue
            if not pi_nonzero(other):
                continue
            found += 1
            assert character(ms).value(rho, old.a, old.b) == -character(other).value(
                rho, old.a, old.b
            ), (str(old), str(new_seg))


class TestSamePi:
    def test_reflexive(self):
        ms = multiseg(so(2), {CHI: [hseg(1, 1, 0, 1), hseg(1, 1, 0, 1)]})
        assert same_pi(ms, ms)

    def test_one_step_exchange(self):
        base = multiseg(so(3), {CHI: [hseg(2, 2, 0, 1), hseg(2, 0, 0, 1)]})
        assert pi_nonzero(base)
        moved = canonical_rows(base)
        assert moved.rows != base.rows
        assert same_pi(base, moved)

    def test_same_order_different_data_differ(self):
        m1 = multiseg(so(2), {CHI: [hseg(1, 1, 0, 1), hseg(1, 1, 0, 1)]})
        m2 = multiseg(so(2), {CHI: [hseg(1, 1, 0, -1), hseg(1, 1, 0, -1)]})
        assert not same_pi(m1, m2)

    def test_different_parameters_rejected(self):
        m1 = multiseg(so(2), {CHI: [hseg(1, 1, 0, 1), hseg(1, 1, 0, 1)]})
        m2 = multiseg(so(2), {CHI: [hseg(3, 1, 1, 1)]})
        with pytest.raises(InputError):
            same_pi(m1, m2)


class TestPacketCensus:
    def test_multiplicity_free_packets(self):
        # For a fixed sorted order, distinct surviving decorations attach
        # distinct members.
        from arthur.oracle import packet_sweep

        psi1 = ArthurParameter(so(2), (ArthurSummand(CHI, 2, 1), ArthurSummand(CHI, 2, 1)))
        psi2 = ArthurParameter(so(3), (ArthurSummand(CHI, 1, 2), ArthurSummand(CHI, 2, 1), ArthurSummand(CHI, 1, 1)))
        psi3 = ArthurParameter(so(4), (ArthurSummand(CHI, 3, 2), ArthurSummand(CHI, 1, 2)))
        for psi in (psi1, psi3):
            report = packet_sweep(psi)
            assert report.collisions == ()
            assert report.size >= 1

    def test_bad_parity_parameter_rejected(self):
        from arthur.oracle import packet_sweep

        psi = ArthurParameter(so(2), (ArthurSummand(CHI, 1, 1), ArthurSummand(CHI, 1, 1), ArthurSummand(CHI, 1, 2)))
        with pytest.raises(InputError):
            packet_sweep(psi)
