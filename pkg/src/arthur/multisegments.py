"""Cuspidal symbols, Arthur parameters, and extended multi-segments.

A multi-segment keeps one admissibly ordered row of half-integer extended
segments per cuspidal symbol.  Non-vanishing of the attached packet member
combines the orbit-level criterion of the integer rows with an endpoint
inequality evaluated at the half-integer level; the component-group
character comes from an explicit sign recipe on sorted rows.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    BadParity,
    EndpointMismatch,
    InputError,
    InternalCheckError,
    NegativeCenter,
    OrderNotAdmissible,
    OrderNotPPrime,
    PreconditionFailed,
    SignConditionFailed,
)
from .halfint import HalfInt
from .segments import VExtZSeg, ZSegment
from .sequences import (
    DEFAULT_CAP,
    ZSeq,
    canonical_p2,
    is_admissible,
    nv_seq,
    orbit,
)

SELFDUAL_KINDS = ("orthogonal", "symplectic", "none")


@dataclass(frozen=True, slots=True)
class Cuspidal:
    """A unitary supercuspidal symbol: name, dimension, self-duality type.

    Non-self-dual symbols must name their dual partner; duality is expected
    to be an involution across whatever registry the caller assembles.
    """

    name: str
    dim: int
    selfdual: str
    dual: str | None = None

    def __post_init__(self):
        if self.dim < 1:
            raise InputError(f"cuspidal {self.name!r} needs a positive dimension")
        if self.selfdual not in SELFDUAL_KINDS:
            raise InputError(f"unknown self-duality kind {self.selfdual!r}")
        if self.selfdual == "none":
            if not self.dual or self.dual == self.name:
                raise InputError(
                    f"non-self-dual cuspidal {self.name!r} needs a distinct dual name"
                )
        elif self.dim == 1 and self.selfdual != "orthogonal":
            raise InputError("self-dual characters are of orthogonal type")

    @property
    def is_selfdual(self) -> bool:
        return self.selfdual != "none"

    @property
    def dual_name(self) -> str:
        return self.name if self.is_selfdual else self.dual  # type: ignore[return-value]


@dataclass(frozen=True, slots=True)
class GroupType:
    """Sp(2n) or split SO(2n+1), with the dual-side dimension N."""

    kind: str
    n: int

    def __post_init__(self):
        if self.kind not in ("Sp", "SOodd"):
            raise InputError(f"unknown group kind {self.kind!r}")
        if self.n < 0:
            raise InputError("group rank must be nonnegative")

    @property
    def N(self) -> int:
        return 2 * self.n + 1 if self.kind == "Sp" else 2 * self.n

    def grown(self, extra_dim: int) -> "GroupType":
        """The group of the same kind whose dual dimension is N + extra_dim."""
        if extra_dim % 2 != 0:
            raise InputError("dual dimension can only grow by an even amount")
        return GroupType(self.kind, self.n + extra_dim // 2)


def good_parity(rho: Cuspidal, a: int, b: int, group: GroupType) -> bool:
    """Whether the summand rho (x) S_a (x) S_b is of good parity for the group."""
    if not rho.is_selfdual:
        return False
    odd = (a + b) % 2 == 1
    if group.kind == "SOodd":
        wanted = "orthogonal" if odd else "symplectic"
    else:
        wanted = "orthogonal" if not odd else "symplectic"
    return rho.selfdual == wanted


@dataclass(frozen=True, slots=True)
class ArthurSummand:
    rho: Cuspidal
    a: int
    b: int
    x: Fraction = Fraction(0)

    def __post_init__(self):
        if self.a < 1 or self.b < 1:
            raise InputError("summand needs positive a and b")
        x = Fraction(self.x)
        object.__setattr__(self, "x", x)
        if abs(x) >= Fraction(1, 2):
            raise InputError(f"exponent {x} is not strictly inside (-1/2, 1/2)")

    @property
    def dimension(self) -> int:
        return self.rho.dim * self.a * self.b


@dataclass(frozen=True)
class ArthurParameter:
    """A formal sum of summands with the dual-side dimension of the group."""

    group: GroupType
    summands: tuple[ArthurSummand, ...]

    def validate(self) -> None:
        total = sum(s.dimension for s in self.summands)
        if total != self.group.N:
            raise BadParity(
                f"summands have total dimension {total}, group needs {self.group.N}"
            )
        counts = Counter(
            (s.rho.name, s.a, s.b, s.x) for s in self.summands
        )
        for s in self.summands:
            if s.x != 0 or not s.rho.is_selfdual:
                partner = (s.rho.dual_name, s.a, s.b, -s.x)
                if counts[(s.rho.name, s.a, s.b, s.x)] != counts[partner]:
                    raise InputError(
                        f"summand {s.rho.name} (x={s.x}) has no dual partner"
                    )

    def good_parity_classes(self) -> Counter:
        """Multiplicities of the good-parity isomorphism classes (all x = 0)."""
        out: Counter = Counter()
        for s in self.summands:
            if s.x == 0 and good_parity(s.rho, s.a, s.b, self.group):
                out[(s.rho, s.a, s.b)] += 1
        return out


@dataclass(frozen=True, slots=True)
class ExtSegment:
    """A half-integer extended segment ([A, B], l, eta) on one cuspidal row."""

    A: HalfInt
    B: HalfInt
    l: int
    eta: int

    def __post_init__(self):
        if (self.A.twice - self.B.twice) % 2 != 0:
            raise EndpointMismatch(f"endpoints {self.A}, {self.B} differ by a non-integer")
        if self.A < self.B:
            raise InputError(f"empty segment [{self.A},{self.B}]")
        if self.eta not in (1, -1):
            raise InputError(f"eta must be +1 or -1, got {self.eta!r}")
        if self.l < 0 or 2 * self.l > self.b:
            raise InputError(f"l={self.l} out of range for length {self.b}")
        if 2 * self.l == self.b and self.eta == -1:
            object.__setattr__(self, "eta", 1)

    @property
    def b(self) -> int:
        return (self.A.twice - self.B.twice) // 2 + 1

    @property
    def a(self) -> int:
        return (self.A.twice + self.B.twice) // 2 + 1

    def zfloor(self) -> VExtZSeg:
        return VExtZSeg(ZSegment(self.A.floor(), self.B.floor()), self.l, self.eta)

    def __str__(self) -> str:
        return f"([{self.A},{self.B}],{self.l},{'+' if self.eta > 0 else '-'})"


def segment_from_z(z: VExtZSeg, offset_twice: int) -> ExtSegment:
    """Lift an integer-level segment back to half level with a 0 or 1/2 offset."""
    if offset_twice not in (0, 1):
        raise InputError("offset must be 0 or 1 in doubled units")
    return ExtSegment(
        HalfInt(2 * z.A + offset_twice), HalfInt(2 * z.B + offset_twice), z.l, z.eta
    )


@dataclass(frozen=True)
class ExtMultiSegment:
    """Ordered rows of extended segments, one row per cuspidal symbol."""

    group: GroupType
    rows: tuple[tuple[Cuspidal, tuple[ExtSegment, ...]], ...]

    def __post_init__(self):
        ordered = tuple(sorted(self.rows, key=lambda r: r[0].name))
        names = [rho.name for rho, _ in ordered]
        if len(set(names)) != len(names):
            raise InputError("duplicate cuspidal rows")
        object.__setattr__(self, "rows", ordered)

    def cuspidals(self) -> tuple[Cuspidal, ...]:
        return tuple(rho for rho, _ in self.rows)

    def row(self, rho: Cuspidal) -> tuple[ExtSegment, ...]:
        for r, segs in self.rows:
            if r == rho:
                return segs
        raise InputError(f"no row for cuspidal {rho.name!r}")

    def row_or_empty(self, rho: Cuspidal) -> tuple[ExtSegment, ...]:
        for r, segs in self.rows:
            if r == rho:
                return segs
        return ()

    def with_row(self, rho: Cuspidal, segs: tuple[ExtSegment, ...]) -> "ExtMultiSegment":
        kept = tuple((r, s) for r, s in self.rows if r != rho)
        if segs:
            kept = kept + ((rho, segs),)
        return ExtMultiSegment(self.group, kept)

    def psi(self) -> ArthurParameter:
        summands = tuple(
            ArthurSummand(rho, seg.a, seg.b)
            for rho, segs in self.rows
            for seg in segs
        )
        return ArthurParameter(self.group, summands)


def multiseg(group: GroupType, rows: dict[Cuspidal, list[ExtSegment]]) -> ExtMultiSegment:
    return ExtMultiSegment(
        group, tuple((rho, tuple(segs)) for rho, segs in rows.items() if segs)
    )


def validate(ms: ExtMultiSegment) -> None:
    """Check every defining clause, raising a typed error for the first failure."""
    for rho, segs in ms.rows:
        offsets = {seg.B.twice % 2 for seg in segs}
        if len(offsets) > 1:
            raise EndpointMismatch(
                f"row {rho.name!r} mixes integral and half-integral endpoints"
            )
        if not is_admissible(tuple(seg.zfloor() for seg in segs)):
            raise OrderNotAdmissible(f"row {rho.name!r} is not admissibly ordered")
        for seg in segs:
            if seg.A.twice + seg.B.twice < 0:
                raise NegativeCenter(f"segment {seg} has A + B < 0")
            if not good_parity(rho, seg.a, seg.b, ms.group):
                raise BadParity(
                    f"summand {rho.name} (x) S_{seg.a} (x) S_{seg.b} is not of good"
                    f" parity for {ms.group.kind}"
                )
    total = sum(rho.dim * seg.a * seg.b for rho, segs in ms.rows for seg in segs)
    if total != ms.group.N:
        raise BadParity(
            f"rows have total dual dimension {total}, group needs {ms.group.N}"
        )
    sign = 1
    for _, segs in ms.rows:
        for seg in segs:
            sign *= (-1) ** (seg.b // 2 + seg.l)
            if seg.b % 2 == 1:
                sign *= seg.eta
    if sign != 1:
        raise SignConditionFailed("the global sign condition fails")


def zlevel(ms: ExtMultiSegment, rho: Cuspidal) -> ZSeq:
    """The integer-level row for ``rho``: floor both endpoints, keep (l, eta)."""
    return tuple(seg.zfloor() for seg in ms.row(rho))


def _row_offset(segs: tuple[ExtSegment, ...]) -> int:
    return segs[0].B.twice % 2 if segs else 0


def _star_holds(segs: tuple[ExtSegment, ...]) -> bool:
    """The endpoint inequality along one row.

    Integral B needs B + l >= 0.  Non-integral B compares against a half
    whose sign flips with the partial sum of the a-values before the row and
    with eta; when b = 2l both lifts are accepted, and B + l = a/2 >= 1/2
    makes the inequality automatic.
    """
    alpha = 0
    for seg in segs:
        lhs = seg.B.twice + 2 * seg.l
        if seg.B.is_integral:
            if lhs < 0:
                return False
        elif 2 * seg.l != seg.b:
            sign = (1 if alpha % 2 == 1 else -1) * seg.eta
            if lhs < sign:
                return False
        alpha += seg.a
    return True


def pi_nonzero(ms: ExtMultiSegment, cap: int = DEFAULT_CAP) -> bool:
    """Whether the packet member attached to ``ms`` is nonzero.

    Every integer-level row must satisfy the orbit non-vanishing criterion
    and every half-integer row the endpoint inequality.
    """
    validate(ms)
    for rho, segs in ms.rows:
        if not _star_holds(segs):
            return False
        if not nv_seq(tuple(seg.zfloor() for seg in segs), cap):
            return False
    return True


@dataclass(frozen=True)
class Character:
    """A sign function on good-parity summand classes with total product one."""

    values: tuple[tuple[tuple[Cuspidal, int, int], int], ...]

    def __post_init__(self):
        ordered = tuple(
            sorted(self.values, key=lambda kv: (kv[0][0].name, kv[0][1], kv[0][2]))
        )
        object.__setattr__(self, "values", ordered)

    def value(self, rho: Cuspidal, a: int, b: int) -> int:
        for (r, aa, bb), v in self.values:
            if r == rho and aa == a and bb == b:
                return v
        raise InputError(f"character has no value at {rho.name} (x) S_{a} (x) S_{b}")

    def as_dict(self) -> dict:
        return {k: v for k, v in self.values}


def characters_of(psi: ArthurParameter) -> set[Character]:
    """All characters of the component group of ``psi``.

    Sign functions on good-parity classes whose product over all good-parity
    indices, counted with multiplicity, is one.
    """
    for s in psi.summands:
        if s.x != 0:
            raise InputError("component groups are attached to exponent-zero parameters")
    classes = psi.good_parity_classes()
    keys = sorted(classes, key=lambda k: (k[0].name, k[1], k[2]))
    out = set()
    for signs in itertools.product((1, -1), repeat=len(keys)):
        product = 1
        for key, sgn in zip(keys, signs):
            product *= sgn ** classes[key]
        if product == 1:
            out.add(Character(tuple(zip(keys, signs))))
    return out


def _p_prime(segs: tuple[ExtSegment, ...]) -> bool:
    return all(x.B <= y.B for x, y in zip(segs, segs[1:]))


def character(ms: ExtMultiSegment, cap: int = DEFAULT_CAP) -> Character:
    """The component-group character attached to a nonzero multi-segment.

    Every row must already have non-decreasing B-values; reordering is the
    caller's explicit step.  The result is checked to be constant on
    isomorphism classes and to have total product one.
    """
    for rho, segs in ms.rows:
        if not _p_prime(segs):
            raise OrderNotPPrime(f"row {rho.name!r} has decreasing B-values")
    if not pi_nonzero(ms, cap):
        raise PreconditionFailed("character requires a nonzero multi-segment")
    per_class: dict[tuple[Cuspidal, int, int], list[int]] = {}
    for rho, segs in ms.rows:
        abs_ = [(seg.a, seg.b) for seg in segs]
        for i, seg in enumerate(segs):
            a_i, b_i = abs_[i]
            z = 0
            for j, (a_j, b_j) in enumerate(abs_):
                if (b_i - b_j) % 2 == 0:
                    continue
                if not ((j > i and a_j < a_i) or (j < i and a_j > a_i)):
                    continue
                if (b_j % 2 == 0 and b_j > b_i) or (b_j % 2 == 1 and b_i > b_j):
                    z += 1
            value = (-1) ** (z + b_i // 2 + seg.l)
            if b_i % 2 == 1:
                value *= seg.eta
            per_class.setdefault((rho, a_i, b_i), []).append(value)
    values = []
    product = 1
    for key, vals in per_class.items():
        if len(set(vals)) != 1:
            raise InternalCheckError(
                f"character not constant on the class {key[0].name}, S_{key[1]}, S_{key[2]}"
            )
        values.append((key, vals[0]))
        for v in vals:
            product *= v
    if product != 1:
        raise InternalCheckError("character product over all indices is not one")
    return Character(tuple(values))


def same_psi(m1: ExtMultiSegment, m2: ExtMultiSegment) -> bool:
    if m1.group != m2.group:
        return False
    def key(ms: ExtMultiSegment):
        return {
            rho: Counter((seg.a, seg.b) for seg in segs) for rho, segs in ms.rows
        }
    return key(m1) == key(m2)


def same_pi(m1: ExtMultiSegment, m2: ExtMultiSegment, cap: int = DEFAULT_CAP) -> bool:
    """Whether two multi-segments with equal parameter attach the same member.

    Decided row by row: the integer rows must lie in each other's exchange
    orbits.
    """
    if not pi_nonzero(m1, cap):
        raise PreconditionFailed("same_pi requires a nonzero first argument")
    validate(m2)
    if not same_psi(m1, m2):
        raise InputError("the two multi-segments have different parameters")
    for rho, segs in m1.rows:
        z1 = tuple(seg.zfloor() for seg in segs)
        z2 = tuple(seg.zfloor() for seg in m2.row(rho))
        if z2 not in orbit(z1, cap):
            return False
    return True


def canonical_rows(ms: ExtMultiSegment, cap: int = DEFAULT_CAP) -> ExtMultiSegment:
    """Bring every row to canonical order through exchanges (same member)."""
    new_rows = []
    for rho, segs in ms.rows:
        z = tuple(seg.zfloor() for seg in segs)
        off = _row_offset(segs)
        can = canonical_p2(z, cap)
        new_rows.append((rho, tuple(segment_from_z(e, off) for e in can)))
    return ExtMultiSegment(ms.group, tuple(new_rows))
