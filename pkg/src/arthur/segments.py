"""Integer segments and (virtual) extended Z-segments.

An extended Z-segment decorates a run of consecutive integers [A, B] with a
shift ``l`` (0 <= l <= b/2 when real, unbounded below when virtual) and a
sign ``eta``.  When b = 2l the sign carries no information and is stored
canonically as +1, so equality and hashing are decidable on the nose.

The fiber of extended segments over a fixed support carries a linear
"chain" structure: real elements occupy the positions ``0 .. b`` of an
infinite chain whose outer positions are virtual.  Adjacency of elements is
"distance one on the chain", an interval is a set of consecutive positions,
and adjacency of intervals is "shift the window by one".  All interval
machinery here reduces to that picture; the definition-level brute force in
:mod:`arthur.oracle` double-checks it.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .errors import InputError, IntervalViolation


@dataclass(frozen=True, slots=True)
class ZSegment:
    """The consecutive integers {A, A-1, ..., B} with A >= B."""

    A: int
    B: int

    def __post_init__(self):
        if self.A < self.B:
            raise InputError(f"empty segment [{self.A},{self.B}]")

    @property
    def length(self) -> int:
        return self.A - self.B + 1

    def contains(self, other: "ZSegment") -> bool:
        return self.A >= other.A and self.B <= other.B

    def shifted(self, t: int) -> "ZSegment":
        return ZSegment(self.A + t, self.B + t)

    def __str__(self) -> str:
        return f"[{self.A},{self.B}]"


@dataclass(frozen=True, slots=True)
class VExtZSeg:
    """A (possibly virtual) extended Z-segment ([A,B], l, eta).

    ``l`` may be negative (virtual); real elements have l >= 0.  The sign is
    canonicalized to +1 whenever b = 2l.
    """

    seg: ZSegment
    l: int
    eta: int

    def __post_init__(self):
        if self.eta not in (1, -1):
            raise InputError(f"eta must be +1 or -1, got {self.eta!r}")
        if 2 * self.l > self.seg.length:
            raise InputError(f"l={self.l} exceeds half the length of {self.seg}")
        if 2 * self.l == self.seg.length and self.eta == -1:
            object.__setattr__(self, "eta", 1)

    @property
    def A(self) -> int:
        return self.seg.A

    @property
    def B(self) -> int:
        return self.seg.B

    @property
    def b(self) -> int:
        return self.seg.length

    @property
    def is_real(self) -> bool:
        return self.l >= 0

    def lifts(self) -> tuple[int, ...]:
        """All representatives of eta in {+1, -1}."""
        if 2 * self.l == self.b:
            return (1, -1)
        return (self.eta,)

    def __str__(self) -> str:
        return f"({self.seg},{self.l},{'+' if self.eta > 0 else '-'})"


def make_eseg(A: int, B: int, l: int, eta: int) -> VExtZSeg:
    return VExtZSeg(ZSegment(A, B), l, eta)


def chain_position(e: VExtZSeg) -> int:
    """Position of ``e`` on the chain of its fiber; real elements sit in [0, b]."""
    if e.eta > 0:
        return e.l
    return e.b - e.l


def from_chain_position(delta: ZSegment, pos: int) -> VExtZSeg:
    b = delta.length
    if 2 * pos <= b:
        return VExtZSeg(delta, pos, 1)
    return VExtZSeg(delta, b - pos, -1)


def enumerate_eseg(delta: ZSegment) -> list[VExtZSeg]:
    """All b+1 extended segments over ``delta``, largest first.

    The head is (delta, 0, +1), the tail (delta, 0, -1); consecutive entries
    are adjacent.
    """
    return [from_chain_position(delta, c) for c in range(delta.length + 1)]


def is_adjacent(e1: VExtZSeg, e2: VExtZSeg) -> bool:
    """Whether two virtual extended segments over the same support are adjacent.

    Either some sign lifts agree while the shifts differ by one, or the
    support has odd length, both shifts equal (A-B)/2, and the signs differ.
    """
    if e1.seg != e2.seg:
        return False
    for t1 in e1.lifts():
        for t2 in e2.lifts():
            if t1 == t2 and abs(e1.l - e2.l) == 1:
                return True
    d = e1.A - e1.B
    if d % 2 == 0 and e1.l == e2.l == d // 2 and e1.eta == -e2.eta:
        return True
    return False


def is_interval(members: Iterable[VExtZSeg]) -> bool:
    """Whether a set of virtual extended segments forms a (virtual) interval."""
    items = set(members)
    if not items:
        return True
    supports = {e.seg for e in items}
    if len(supports) != 1:
        return False
    positions = sorted(chain_position(e) for e in items)
    return all(q - p == 1 for p, q in zip(positions, positions[1:]))


@dataclass(frozen=True, slots=True)
class EsegInterval:
    """An interval of real extended segments over a fixed support.

    Members are stored largest-first (chain position increasing), so output
    order is deterministic everywhere.
    """

    delta: ZSegment
    members: tuple[VExtZSeg, ...]

    def __post_init__(self):
        for e in self.members:
            if e.seg != self.delta:
                raise IntervalViolation(f"{e} is not supported on {self.delta}")
            if not e.is_real:
                raise IntervalViolation(f"{e} is virtual")
        ordered = tuple(sorted(self.members, key=chain_position))
        if len(set(ordered)) != len(ordered):
            raise IntervalViolation("duplicate members in interval")
        if not is_interval(ordered):
            raise IntervalViolation(f"not an interval: {[str(e) for e in self.members]}")
        object.__setattr__(self, "members", ordered)

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def __contains__(self, e: VExtZSeg) -> bool:
        return e in self.members

    def positions(self) -> tuple[int, ...]:
        return tuple(chain_position(e) for e in self.members)


def interval_from_positions(delta: ZSegment, lo: int, hi: int) -> EsegInterval:
    """The interval of real elements with chain positions in [lo, hi]."""
    b = delta.length
    lo, hi = max(lo, 0), min(hi, b)
    if lo > hi:
        return EsegInterval(delta, ())
    return EsegInterval(delta, tuple(from_chain_position(delta, c) for c in range(lo, hi + 1)))


def adjacent_intervals(s: EsegInterval) -> set[EsegInterval]:
    """All intervals adjacent to ``s`` in the fiber over its support.

    Computed by extending ``s`` with virtual elements past each boundary it
    touches, shifting the window one step either way, and intersecting with
    the real part of the chain.  One virtual step per side already yields
    every answer; longer extensions repeat them.
    """
    delta = s.delta
    b = delta.length
    out: set[EsegInterval] = set()
    if len(s) == 0:
        out.add(EsegInterval(delta, ()))
        out.add(interval_from_positions(delta, 0, 0))
        out.add(interval_from_positions(delta, b, b))
        return out
    pos = s.positions()
    lo, hi = pos[0], pos[-1]
    lo_exts = (lo,) if lo > 0 else (lo, lo - 1)
    hi_exts = (hi,) if hi < b else (hi, hi + 1)
    for x in lo_exts:
        for y in hi_exts:
            for d in (1, -1):
                out.add(interval_from_positions(delta, x + d, y + d))
    return out


def dagger(e: VExtZSeg) -> VExtZSeg:
    """The partner with the same support and shift forming a non-vanishing pair.

    The sign flips exactly when A - B is odd; the map is an involution.
    """
    if not e.is_real:
        raise InputError(f"dagger is only defined for real extended segments, got {e}")
    sign = -1 if (e.A - e.B) % 2 else 1
    return VExtZSeg(e.seg, e.l, sign * e.eta)


def shift(e: VExtZSeg, t: int) -> VExtZSeg:
    """Translate the support by t, keeping (l, eta)."""
    return VExtZSeg(e.seg.shifted(t), e.l, e.eta)
