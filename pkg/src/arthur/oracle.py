"""Brute-force reference implementations, independent of the main path.

Everything here re-derives its answers from first principles: the pairwise
criterion through the closed-form partner intervals rather than the case
conditions, the orbit through a depth-first walk with no shortcut, the
partner-with-same-support through search, interval structure through
chain-order backtracking, and interval adjacency through explicit virtual
windows.  The test suite pits these against the main path; disagreement
means a bug on one side.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass

from .errors import (
    CapExceeded,
    InputError,
    InternalCheckError,
    NotAdmissible,
)
from .halfint import HalfInt
from .multisegments import (
    ArthurParameter,
    Cuspidal,
    ExtMultiSegment,
    ExtSegment,
    good_parity,
    same_pi,
    segment_from_z,
    validate,
)
from .multisegments import character as main_character
from .segments import (
    EsegInterval,
    VExtZSeg,
    ZSegment,
    adjacent_intervals,
    is_interval,
)
from .sequences import DEFAULT_CAP, ZSeq, is_admissible


@dataclass(frozen=True)
class Counterexample:
    property_name: str
    input: str
    expected: str
    actual: str

    def as_dict(self) -> dict:
        return {
            "property": self.property_name,
            "input": self.input,
            "expected": self.expected,
            "actual": self.actual,
        }


def brute_enumerate(delta: ZSegment) -> list[VExtZSeg]:
    """All real extended segments over delta, by raw (l, eta) enumeration."""
    seen = []
    for l in range(delta.length // 2 + 1):
        for eta in (1, -1):
            e = VExtZSeg(delta, l, eta)
            if e not in seen:
                seen.append(e)
    return seen


def brute_nv_right_set(e1: VExtZSeg, delta2: ZSegment) -> frozenset[VExtZSeg]:
    """Partners of e1 over delta2, from the closed-form interval description.

    For each support case the partner set is a union of two runs of l-values
    with prescribed signs.  The result must not depend on the sign lift of
    e1, which is asserted.
    """
    if not e1.is_real:
        return frozenset()
    if e1.A > delta2.A and e1.B > delta2.B:
        return frozenset()
    A1, B1, l1, b1 = e1.A, e1.B, e1.l, e1.b
    A2, B2 = delta2.A, delta2.B
    b2 = delta2.length
    lmax = b2 // 2
    per_lift = []
    for t1 in e1.lifts():
        s_keep = t1 * (-1 if (A1 - B1) % 2 else 1)
        cases = []
        if A1 <= A2 and B1 <= B2:
            cases.append(((B1 - B2 + l1, A2 - A1 + l1), (A1 - B2 - l1 + 1, lmax)))
        if A1 <= A2 and B1 >= B2:
            cases.append(((l1, b2 - b1 + l1), (b1 - l1, lmax)))
        if A1 >= A2 and B1 <= B2:
            cases.append(((b2 - b1 + l1, l1), (b2 - l1, lmax)))
        per_case = []
        for (lo1, hi1), (lo2, hi2) in cases:
            members = set()
            for l2 in range(max(lo1, 0), min(hi1, lmax) + 1):
                members.add(VExtZSeg(delta2, l2, s_keep))
            for l2 in range(max(lo2, 0), min(hi2, lmax) + 1):
                members.add(VExtZSeg(delta2, l2, -s_keep))
            per_case.append(frozenset(members))
        if len(set(per_case)) != 1:
            raise InternalCheckError(
                f"overlapping support cases disagree for {e1} over {delta2}"
            )
        per_lift.append(per_case[0])
    if len(set(per_lift)) != 1:
        raise InternalCheckError(f"partner set of {e1} over {delta2} depends on lifts")
    return per_lift[0]


def brute_nv_pair(e1: VExtZSeg, e2: VExtZSeg) -> bool:
    if e1.A > e2.A and e1.B > e2.B:
        raise NotAdmissible(f"({e1.seg}, {e2.seg}) is not admissible")
    if not (e1.is_real and e2.is_real):
        return False
    return e2 in brute_nv_right_set(e1, e2.seg)


def brute_dagger(e: VExtZSeg) -> VExtZSeg:
    """The same-support partner, found by search instead of a sign formula."""
    hits = [x for x in brute_enumerate(e.seg) if x.l == e.l and brute_nv_pair(e, x)]
    if len(hits) != 1:
        raise InternalCheckError(f"{e} has {len(hits)} same-support partners")
    return hits[0]


def _brute_exchange_lifted(e1, e2, t1, t2):
    A1, B1, l1, b1 = e1.A, e1.B, e1.l, e1.b
    A2, B2, l2, b2 = e2.A, e2.B, e2.l, e2.b
    u1, u2 = b1 - 2 * l1, b2 - 2 * l2
    s1 = -1 if (A1 - B1) % 2 else 1
    s2 = -1 if (A2 - B2) % 2 else 1
    eps = s1 * t1 * t2
    if A1 <= A2 and B1 >= B2:
        kept = VExtZSeg(e1.seg, l1, s2 * t1)
        if eps == -1:
            moved = VExtZSeg(e2.seg, l2 - u1, -s1 * t2)
        elif u2 < 2 * u1:
            moved = VExtZSeg(e2.seg, b2 - l2 - u1, s1 * t2)
        else:
            moved = VExtZSeg(e2.seg, l2 + u1, -s1 * t2)
        return (moved, kept)
    if A1 >= A2 and B1 <= B2:
        kept = VExtZSeg(e2.seg, l2, s1 * t2)
        if eps == -1:
            moved = VExtZSeg(e1.seg, l1 - u2, -s2 * t1)
        elif u1 < 2 * u2:
            moved = VExtZSeg(e1.seg, b1 - l1 - u2, s2 * t1)
        else:
            moved = VExtZSeg(e1.seg, l1 + u2, -s2 * t1)
        return (kept, moved)
    raise InputError(f"{e1.seg} and {e2.seg} are not nested")


def brute_row_exchange(e1: VExtZSeg, e2: VExtZSeg) -> tuple[VExtZSeg, VExtZSeg]:
    outs = {
        _brute_exchange_lifted(e1, e2, t1, t2)
        for t1 in e1.lifts()
        for t2 in e2.lifts()
    }
    if len(outs) != 1:
        raise InternalCheckError(f"exchange of ({e1}, {e2}) depends on lifts: {outs}")
    return outs.pop()


def _brute_orbit(seq: ZSeq, cap: int):
    """Depth-first closure under exchanges; yields every member once."""
    if not is_admissible(seq):
        raise NotAdmissible("sequence is not admissible")
    seen = {seq}
    stack = [seq]
    while stack:
        current = stack.pop()
        yield current
        for k in range(len(current) - 1):
            a, b = current[k], current[k + 1]
            if a.seg.contains(b.seg) or b.seg.contains(a.seg):
                bp, ap = brute_row_exchange(a, b)
                nxt = current[:k] + (bp, ap) + current[k + 2 :]
                if nxt not in seen:
                    seen.add(nxt)
                    if len(seen) > cap:
                        raise CapExceeded(cap)
                    stack.append(nxt)


def brute_tilde_nv(seq: ZSeq) -> bool:
    return all(brute_nv_pair(seq[i], seq[i + 1]) for i in range(len(seq) - 1))


def brute_nv_seq(seq: ZSeq, cap: int = DEFAULT_CAP) -> bool:
    """Orbit-quantified non-vanishing with no shortcut of any kind."""
    return all(brute_tilde_nv(member) for member in _brute_orbit(seq, cap))


def brute_canonical(seq: ZSeq, cap: int = DEFAULT_CAP) -> ZSeq:
    hits = [
        m
        for m in _brute_orbit(seq, cap)
        if all(
            (x.B < y.B) or (x.B == y.B and x.A >= y.A) for x, y in zip(m, m[1:])
        )
    ]
    if len(hits) != 1:
        raise InternalCheckError(f"{len(hits)} canonical members in one orbit")
    return hits[0]


def _brute_star_row(segs: tuple[ExtSegment, ...]) -> bool:
    alpha = 0
    for seg in segs:
        need = []
        if seg.B.is_integral:
            need.append(0)
        else:
            for t in ((1, -1) if 2 * seg.l == seg.b else (seg.eta,)):
                need.append(((-1) ** (alpha + 1)) * t)
        if not any(seg.B.twice + 2 * seg.l >= n for n in need):
            return False
        alpha += seg.a
    return True


def brute_pi_nonzero(ms: ExtMultiSegment, cap: int = DEFAULT_CAP) -> bool:
    validate(ms)
    for rho, segs in ms.rows:
        if not _brute_star_row(segs):
            return False
        if not brute_nv_seq(tuple(s.zfloor() for s in segs), cap):
            return False
    return True


def brute_induce(
    ms: ExtMultiSegment, rho: Cuspidal, a: int, b: int, cap: int = DEFAULT_CAP
) -> list[ExtMultiSegment]:
    """Second route through the induction decomposition."""
    if not good_parity(rho, a, b, ms.group):
        raise InputError("inserted summand must be of good parity")
    A2, B2 = a + b - 2, a - b  # doubled endpoints of the inserted support
    grown = ms.group.grown(2 * rho.dim * a * b)
    zrow = tuple(s.zfloor() for s in ms.row_or_empty(rho))
    canonical = brute_canonical(zrow, cap)
    j = 0
    while j < len(canonical) and canonical[j].B <= B2 // 2:
        j += 1
    delta = ZSegment(A2 // 2, B2 // 2)
    out = []
    for e in brute_enumerate(delta):
        extended = canonical[:j] + (e, brute_dagger(e)) + canonical[j:]
        row = tuple(segment_from_z(z, B2 % 2) for z in extended)
        rows = tuple((r, s) for r, s in ms.rows if r != rho) + ((rho, row),)
        candidate = ExtMultiSegment(grown, rows)
        if brute_pi_nonzero(candidate, cap):
            out.append(candidate)
    return out


def _definition_adjacent(e1: VExtZSeg, e2: VExtZSeg) -> bool:
    if e1.seg != e2.seg or e1 == e2:
        return False
    if any(
        t1 == t2 and abs(e1.l - e2.l) == 1 for t1 in e1.lifts() for t2 in e2.lifts()
    ):
        return True
    return (
        e1.b % 2 == 1
        and 2 * e1.l == e1.A - e1.B
        and 2 * e2.l == e1.A - e1.B
        and e1.eta == -e2.eta
    )


def _has_chain_order(items: tuple[VExtZSeg, ...]) -> bool:
    """Whether the items can be arranged with consecutive pairs adjacent."""
    items = tuple(set(items))
    if len(items) <= 1:
        return True

    def extend(chain, rest):
        if not rest:
            return True
        return any(
            _definition_adjacent(chain[-1], nxt)
            and extend(chain + [nxt], rest - {nxt})
            for nxt in rest
        )

    pool = set(items)
    return any(extend([start], pool - {start}) for start in pool)


def _virtual_window(delta: ZSegment, depth: int) -> list[VExtZSeg]:
    out = []
    for l in range(-depth, delta.length // 2 + 1):
        for eta in (1, -1):
            e = VExtZSeg(delta, l, eta)
            if e not in out:
                out.append(e)
    return out


@dataclass(frozen=True)
class CensusReport:
    delta: ZSegment
    n_elements: int
    n_intervals: int
    non_intervals: tuple[frozenset[VExtZSeg], ...]
    adjacency: dict
    counterexamples: tuple[Counterexample, ...]


def exhaustive_interval_census(delta: ZSegment, window_depth: int = 3) -> CensusReport:
    """Definition-level census of the whole fiber over a short support.

    Enumerates every subset, classifies intervals by chain-order search,
    derives interval adjacency from explicit virtual windows, checks the
    intersection/at-most-three/size-two facts clause by clause, and compares
    everything against the main-path machinery.  The returned report must
    carry zero counterexamples.
    """
    if delta.length > 5:
        raise InputError("census is limited to supports of length at most 5")
    elements = brute_enumerate(delta)
    bad: list[Counterexample] = []

    def note(prop: str, inp, expected, actual):
        bad.append(
            Counterexample(
                property_name=prop,
                input=json.dumps(inp, default=str),
                expected=json.dumps(expected, default=str),
                actual=json.dumps(actual, default=str),
            )
        )

    subsets = []
    for r in range(len(elements) + 1):
        subsets.extend(frozenset(c) for c in itertools.combinations(elements, r))
    intervals = []
    non_intervals = []
    for s in subsets:
        brute = _has_chain_order(tuple(s))
        main = is_interval(s)
        if brute != main:
            note("interval_classification", sorted(map(str, s)), brute, main)
        (intervals if brute else non_intervals).append(s)

    window = _virtual_window(delta, window_depth)
    virtual_intervals = [
        frozenset(c)
        for r in range(1, len(window) + 1)
        for c in itertools.combinations(window, r)
        if _has_chain_order(tuple(c))
    ]
    real = set(elements)

    def definition_adjacent_intervals(s: frozenset) -> set[frozenset]:
        lifts1 = [t for t in virtual_intervals if t & real == s]
        out = set()
        for t1 in lifts1:
            for t2 in virtual_intervals:
                if len(t2) != len(t1):
                    continue
                union = t1 | t2
                if len(union) != len(t1) + 1:
                    continue
                if _has_chain_order(tuple(union)):
                    out.add(t2 & real)
        return out

    adjacency = {}
    for s in intervals:
        brute_adj = definition_adjacent_intervals(s)
        main_adj = {
            frozenset(t.members) for t in adjacent_intervals(EsegInterval(delta, tuple(s)))
        }
        if brute_adj != main_adj:
            note(
                "interval_adjacency",
                sorted(map(str, s)),
                sorted(sorted(map(str, t)) for t in brute_adj),
                sorted(sorted(map(str, t)) for t in main_adj),
            )
        adjacency[s] = brute_adj
        if len(brute_adj) > 3:
            note("at_most_three_adjacent", sorted(map(str, s)), "<=3", len(brute_adj))

    for s1 in intervals:
        for s2 in intervals:
            if not (s1 and s2):
                continue
            if not _has_chain_order(tuple(s1 & s2)):
                note(
                    "intersection_is_interval",
                    [sorted(map(str, s1)), sorted(map(str, s2))],
                    True,
                    False,
                )
            if len(s1) > 1 and len(s2) > 1 and len(s1 & s2) == 1:
                for s1p in adjacency[s1]:
                    if len(s1p & s2) > 0 and len(s1p & s2) != 2:
                        note(
                            "adjacent_overlap_size_two",
                            [sorted(map(str, s1)), sorted(map(str, s2)),
                             sorted(map(str, s1p))],
                            2,
                            len(s1p & s2),
                        )

    return CensusReport(
        delta=delta,
        n_elements=len(elements),
        n_intervals=len(intervals),
        non_intervals=tuple(non_intervals),
        adjacency=adjacency,
        counterexamples=tuple(bad),
    )


@dataclass(frozen=True)
class PacketReport:
    size: int
    characters: tuple
    collisions: tuple


def packet_sweep(
    psi: ArthurParameter, max_rows: int = 6, cap: int = DEFAULT_CAP
) -> PacketReport:
    """Enumerate the whole packet of a good-parity parameter.

    Fixes one sorted order per cuspidal row, sweeps every (l, eta)
    assignment, filters by the sign condition and nonzero-ness, and reports
    size, the character multiset, and any pair of distinct surviving
    multi-segments attached to the same member (there must be none).
    """
    if len(psi.summands) > max_rows:
        raise InputError(f"parameter has more than {max_rows} summands")
    psi.validate()
    for s in psi.summands:
        if s.x != 0 or not good_parity(s.rho, s.a, s.b, psi.group):
            raise InputError("packet sweep needs a good-parity parameter")
    rows: dict[Cuspidal, list] = {}
    for s in psi.summands:
        rows.setdefault(s.rho, []).append(s)
    for rho in rows:
        rows[rho].sort(key=lambda s: (s.a - s.b, -(s.a + s.b)))
    choices = []
    layout = []
    for rho, summands in sorted(rows.items(), key=lambda kv: kv[0].name):
        for s in summands:
            opts = []
            seenopts = set()
            for l in range(s.b // 2 + 1):
                for eta in (1, -1):
                    key = (l, 1) if 2 * l == s.b else (l, eta)
                    if key not in seenopts:
                        seenopts.add(key)
                        opts.append(key)
            layout.append((rho, (s.a + s.b - 2, s.a - s.b)))  # doubled endpoints
            choices.append(opts)
    members = []
    for assignment in itertools.product(*choices):
        row_map: dict[Cuspidal, list[ExtSegment]] = {}
        for (rho, (a2, b2)), (l, eta) in zip(layout, assignment):
            row_map.setdefault(rho, []).append(
                ExtSegment(HalfInt(a2), HalfInt(b2), l, eta)
            )
        try:
            ms = ExtMultiSegment(
                psi.group, tuple((rho, tuple(segs)) for rho, segs in row_map.items())
            )
            validate(ms)
        except InputError:
            continue
        if brute_pi_nonzero(ms, cap):
            members.append(ms)
    collisions = []
    for i, m1 in enumerate(members):
        for m2 in members[i + 1 :]:
            if same_pi(m1, m2, cap):
                collisions.append((m1, m2))
    characters = tuple(
        sorted(
            tuple(
                ((rho.name, a, b), v)
                for (rho, a, b), v in main_character(m, cap).values
            )
            for m in members
        )
    )
    return PacketReport(
        size=len(members), characters=characters, collisions=tuple(collisions)
    )
