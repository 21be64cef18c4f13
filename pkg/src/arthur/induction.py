"""Decomposing unitary parabolic induction against a packet member.

Inducing the unitary representation labelled (rho, a, b) against a nonzero
multi-segment produces one candidate per extended segment over the inserted
support [A, B] with A = (a+b)/2 - 1 and B = (a-b)/2; the surviving
candidates are exactly the nonzero ones, they always exist, their inserted
segments form an interval, and consecutive survivors carry opposite
character signs at the inserted summand, which bounds the signed component
counts by |m+ - m-| <= 1.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    BadParity,
    ContainsSummand,
    InternalCheckError,
    PreconditionFailed,
)
from .halfint import HalfInt
from .multisegments import (
    Character,
    Cuspidal,
    ExtMultiSegment,
    ExtSegment,
    canonical_rows,
    character,
    good_parity,
    pi_nonzero,
    segment_from_z,
)
from .segments import EsegInterval, ZSegment, dagger, from_chain_position
from .sequences import DEFAULT_CAP, canonical_p2, insertion_index


@dataclass(frozen=True)
class InductionResult:
    """The nonzero constituents of one unitary induction.

    ``components`` is ordered by the inserted segment, largest first;
    ``inserted`` records which extended segment each component came from.
    """

    rho: Cuspidal
    A: HalfInt
    B: HalfInt
    components: tuple[ExtMultiSegment, ...]
    inserted: tuple[ExtSegment, ...]

    def inserted_interval(self) -> EsegInterval:
        return EsegInterval(
            ZSegment(self.A.floor(), self.B.floor()),
            tuple(seg.zfloor() for seg in self.inserted),
        )


def inserted_support(a: int, b: int) -> tuple[HalfInt, HalfInt]:
    """The support [A, B] of the inserted segments: A=(a+b)/2-1, B=(a-b)/2."""
    return HalfInt(a + b - 2), HalfInt(a - b)


def induce(
    ms: ExtMultiSegment,
    rho: Cuspidal,
    a: int,
    b: int,
    cap: int = DEFAULT_CAP,
) -> InductionResult:
    """Decompose the induction of the (rho, a, b) representation against ``ms``.

    The summand must be of good parity for the group kind.  Each candidate
    inserts a partner pair into the canonical rho-row at the integer level;
    rows for other cuspidals are untouched.
    """
    if not pi_nonzero(ms, cap):
        raise PreconditionFailed("induction requires a nonzero multi-segment")
    if not good_parity(rho, a, b, ms.group):
        raise BadParity(
            f"{rho.name} (x) S_{a} (x) S_{b} is not of good parity for {ms.group.kind}"
        )
    A, B = inserted_support(a, b)
    grown = ms.group.grown(2 * rho.dim * a * b)
    base_row = ms.row_or_empty(rho)
    zrow = tuple(seg.zfloor() for seg in base_row)
    canonical = canonical_p2(zrow, cap)
    delta = ZSegment(A.floor(), B.floor())
    j = insertion_index(canonical, delta.B)
    offset = B.twice % 2
    components: list[ExtMultiSegment] = []
    inserted: list[ExtSegment] = []
    for pos in range(delta.length + 1):
        e = from_chain_position(delta, pos)
        extended = canonical[:j] + (e, dagger(e)) + canonical[j:]
        row = tuple(segment_from_z(z, offset) for z in extended)
        candidate = ExtMultiSegment(grown, ms.with_row(rho, row).rows)
        if pi_nonzero(candidate, cap):
            components.append(candidate)
            inserted.append(segment_from_z(e, offset))
    if not components:
        raise InternalCheckError("an induction decomposed into zero components")
    # Construction already raises IntervalViolation if the survivors are gapped.
    EsegInterval(delta, tuple(seg.zfloor() for seg in inserted))
    return InductionResult(
        rho=rho,
        A=A,
        B=B,
        components=tuple(components),
        inserted=tuple(inserted),
    )


def is_reducible(
    ms: ExtMultiSegment,
    rho: Cuspidal,
    a: int,
    b: int,
    cap: int = DEFAULT_CAP,
) -> bool:
    """Whether the induction of the (rho, a, b) representation reduces.

    A summand of bad parity induces irreducibly; otherwise reducibility
    means more than one nonzero constituent.
    """
    if not good_parity(rho, a, b, ms.group):
        if not pi_nonzero(ms, cap):
            raise PreconditionFailed("reducibility requires a nonzero multi-segment")
        return False
    return len(induce(ms, rho, a, b, cap).components) > 1


def sign_counts(
    ms: ExtMultiSegment,
    rho: Cuspidal,
    a: int,
    b: int,
    cap: int = DEFAULT_CAP,
) -> tuple[int, int]:
    """Component counts (m+, m-) by character sign at the inserted summand.

    Undefined when the base parameter already contains the summand, since
    the two signs are then not separated.  Rows are brought to canonical
    order first so every component supports a character evaluation; that
    does not change any component.  The counts always satisfy
    |m+ - m-| <= 1, asserted here.
    """
    base_classes = ms.psi().good_parity_classes()
    if (rho, a, b) in base_classes:
        raise ContainsSummand(
            f"base parameter already contains {rho.name} (x) S_{a} (x) S_{b}"
        )
    ordered = canonical_rows(ms, cap)
    result = induce(ordered, rho, a, b, cap)
    plus = minus = 0
    for component in result.components:
        value = character(component, cap).value(rho, a, b)
        if value == 1:
            plus += 1
        else:
            minus += 1
    if abs(plus - minus) > 1:
        raise InternalCheckError(
            f"signed component counts ({plus}, {minus}) are out of balance"
        )
    return plus, minus


def component_characters(
    result: InductionResult, cap: int = DEFAULT_CAP
) -> tuple[Character, ...]:
    """Characters of all components, in component order."""
    return tuple(character(c, cap) for c in result.components)
