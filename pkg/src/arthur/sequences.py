"""Admissible sequences of extended Z-segments and their exchange orbits.

A sequence is admissible when no later entry has both endpoints strictly
below an earlier one.  Local exchanges act on nested neighbours, generating
a finite orbit; sequence-level non-vanishing quantifies the pairwise
criterion over that whole orbit.  Every orbit of a non-vanishing sequence
contains exactly one member with B non-decreasing and A non-increasing on
ties, which serves as the canonical form for insertion.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .errors import (
    CapExceeded,
    IncomparableSupports,
    InputError,
    NoCanonical,
    NotAdmissible,
    NotUnique,
    PreconditionFailed,
)
from .pairs import nv_pair, row_exchange
from .segments import EsegInterval, VExtZSeg, dagger, shift

ZSeq = tuple[VExtZSeg, ...]

DEFAULT_CAP = 10**6


def is_admissible(seq: ZSeq) -> bool:
    for i, e in enumerate(seq):
        for f in seq[i + 1 :]:
            if f.A < e.A and f.B < e.B:
                return False
    return True


def ensure_admissible(seq: ZSeq) -> None:
    if not is_admissible(seq):
        raise NotAdmissible(f"sequence is not admissible: {[str(e) for e in seq]}")


def shift_seq(seq: ZSeq, t: int) -> ZSeq:
    return tuple(shift(e, t) for e in seq)


def r_k(seq: ZSeq, k: int) -> ZSeq:
    """Exchange entries k and k+1 (1-based); their supports must be nested."""
    if not 1 <= k <= len(seq) - 1:
        raise InputError(f"exchange index {k} out of range for length {len(seq)}")
    e1, e2 = seq[k - 1], seq[k]
    if not (e1.seg.contains(e2.seg) or e2.seg.contains(e1.seg)):
        raise IncomparableSupports(f"{e1.seg} and {e2.seg} are not nested")
    e2p, e1p = row_exchange(e1, e2)
    return seq[: k - 1] + (e2p, e1p) + seq[k + 1 :]


def _serial_key(seq: ZSeq) -> tuple:
    return tuple((e.A, e.B, e.l, e.eta) for e in seq)


@dataclass(frozen=True)
class Orbit:
    """The closure of a seed sequence under all defined local exchanges."""

    seed: ZSeq
    members: tuple[ZSeq, ...]
    cap: int

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def __contains__(self, seq: ZSeq) -> bool:
        return seq in set(self.members)


def _exchange_neighbours(seq: ZSeq):
    for k in range(1, len(seq)):
        e1, e2 = seq[k - 1], seq[k]
        if e1.seg.contains(e2.seg) or e2.seg.contains(e1.seg):
            e2p, e1p = row_exchange(e1, e2)
            yield seq[: k - 1] + (e2p, e1p) + seq[k + 1 :]


def orbit(seq: ZSeq, cap: int = DEFAULT_CAP) -> Orbit:
    """Breadth-first closure of ``seq`` under local exchanges.

    Members come back sorted on their serialized form, so the enumeration
    order never depends on the walk.  Exceeding ``cap`` is a hard error.
    """
    ensure_admissible(seq)
    seen = {seq}
    queue = deque([seq])
    while queue:
        current = queue.popleft()
        for nxt in _exchange_neighbours(current):
            if nxt not in seen:
                seen.add(nxt)
                if len(seen) > cap:
                    raise CapExceeded(cap)
                queue.append(nxt)
    return Orbit(seed=seq, members=tuple(sorted(seen, key=_serial_key)), cap=cap)


def tilde_nv(seq: ZSeq) -> bool:
    """The pairwise criterion on consecutive entries only.

    A pair touching a virtual entry vanishes, so any virtual entry inside a
    sequence of length >= 2 makes this false.
    """
    return all(nv_pair(seq[i], seq[i + 1]) for i in range(len(seq) - 1))


def _supports_nested_descending(seq: ZSeq) -> bool:
    return all(
        seq[i].seg.contains(seq[i + 1].seg) for i in range(len(seq) - 1)
    )


def nv_seq(seq: ZSeq, cap: int = DEFAULT_CAP) -> bool:
    """Sequence-level non-vanishing: the pairwise criterion on every orbit member.

    When the supports decrease along the sequence under containment the
    pairwise criterion on the sequence itself is already equivalent, and the
    orbit walk is skipped.  Otherwise the walk checks members as they are
    discovered: a vanishing sequence can have an orbit drifting into virtual
    data without bound, but any such member fails the pairwise criterion, so
    the first failure ends the walk.  A completed walk proves the orbit
    finite; only an unfinished all-passing walk raises the cap error.
    """
    ensure_admissible(seq)
    if _supports_nested_descending(seq):
        return tilde_nv(seq)
    if not tilde_nv(seq):
        return False
    seen = {seq}
    queue = deque([seq])
    while queue:
        current = queue.popleft()
        for nxt in _exchange_neighbours(current):
            if nxt not in seen:
                if not tilde_nv(nxt):
                    return False
                seen.add(nxt)
                if len(seen) > cap:
                    raise CapExceeded(cap)
                queue.append(nxt)
    return True


def satisfies_p2(seq: ZSeq) -> bool:
    """B non-decreasing along the sequence, A non-increasing among equal B."""
    for e, f in zip(seq, seq[1:]):
        if e.B > f.B:
            return False
        if e.B == f.B and e.A < f.A:
            return False
    return True


def canonical_p2(seq: ZSeq, cap: int = DEFAULT_CAP) -> ZSeq:
    """The unique orbit member in canonical order.

    Requires the sequence to be non-vanishing; an orbit with zero or several
    canonical members would contradict the theory and raises accordingly.
    """
    if not nv_seq(seq, cap):
        raise PreconditionFailed("canonical form requires a non-vanishing sequence")
    hits = [member for member in orbit(seq, cap) if satisfies_p2(member)]
    if not hits:
        raise NoCanonical(f"orbit of {[str(e) for e in seq]} has no canonical member")
    if len(hits) > 1:
        raise NotUnique(
            f"orbit of {[str(e) for e in seq]} has {len(hits)} canonical members"
        )
    return hits[0]


def insertion_index(canonical: ZSeq, b_value: int) -> int:
    """0-based insertion slot: before the first entry with B above ``b_value``."""
    for i, e in enumerate(canonical):
        if e.B > b_value:
            return i
    return len(canonical)


def insert_pair(seq: ZSeq, e: VExtZSeg, cap: int = DEFAULT_CAP) -> ZSeq:
    """Insert (e, dagger(e)) into the canonical form of ``seq``.

    The pair lands just before the first entry whose B exceeds B(e), keeping
    the canonical ordering; the result has n + 2 entries.
    """
    if not e.is_real:
        raise InputError(f"cannot insert the virtual segment {e}")
    canonical = canonical_p2(seq, cap)
    j = insertion_index(canonical, e.B)
    return canonical[:j] + (e, dagger(e)) + canonical[j:]


def nv_set(seq: ZSeq, candidates: EsegInterval, cap: int = DEFAULT_CAP) -> EsegInterval:
    """Filter an interval of candidates by non-vanishing after insertion.

    The survivors always form an interval; a violation is reported as an
    internal error, not swallowed.
    """
    canonical = canonical_p2(seq, cap)
    j = insertion_index(canonical, candidates.delta.B)
    hits = []
    for e in candidates:
        extended = canonical[:j] + (e, dagger(e)) + canonical[j:]
        if nv_seq(extended, cap):
            hits.append(e)
    return EsegInterval(candidates.delta, tuple(hits))
