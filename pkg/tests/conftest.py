"""Shared builders and random generators for the whole suite.

Generators are deterministic (seeded by the caller) so every run exercises
the same instances; anything random that fails can be replayed verbatim.
"""

from __future__ import annotations

import itertools
import random

import pytest

from arthur.halfint import HalfInt
from arthur.multisegments import (
    Cuspidal,
    ExtMultiSegment,
    ExtSegment,
    GroupType,
    good_parity,
    validate,
)
from arthur.errors import InputError
from arthur.segments import VExtZSeg, ZSegment, enumerate_eseg
from arthur.sequences import ZSeq, is_admissible


def zseg(A, B):
    return ZSegment(A, B)


def eseg(A, B, l, eta):
    return VExtZSeg(ZSegment(A, B), l, eta)


def h(twice):
    return HalfInt(twice)


CHI = Cuspidal("chi", 1, "orthogonal")
TRIV = Cuspidal("triv", 1, "orthogonal")
RHO_SP = Cuspidal("rho_sp", 2, "symplectic")
RHO_NSD = Cuspidal("rho", 2, "none", "rho_dual")
RHO_NSD_DUAL = Cuspidal("rho_dual", 2, "none", "rho")


def so(n):
    return GroupType("SOodd", n)


def sp(n):
    return GroupType("Sp", n)


def all_segments(window_A=3, window_B=-1):
    """Every support [A, B] inside the window."""
    return [
        ZSegment(a, b)
        for a in range(window_B, window_A + 1)
        for b in range(window_B, a + 1)
    ]


def all_pairs(window_A=3, window_B=-1, admissible_only=True):
    """Every ordered pair of real extended segments in the window."""
    for d1 in all_segments(window_A, window_B):
        for d2 in all_segments(window_A, window_B):
            if admissible_only and d1.A > d2.A and d1.B > d2.B:
                continue
            for e1 in enumerate_eseg(d1):
                for e2 in enumerate_eseg(d2):
                    yield e1, e2


def random_eseg(rng: random.Random, window_A=3, window_B=-1) -> VExtZSeg:
    a = rng.randint(window_B, window_A)
    b = rng.randint(window_B, a)
    options = enumerate_eseg(ZSegment(a, b))
    return options[rng.randrange(len(options))]


def random_zseq(rng: random.Random, n_max=4, window_A=3, window_B=-1) -> ZSeq:
    n = rng.randint(1, n_max)
    while True:
        seq = tuple(random_eseg(rng, window_A, window_B) for _ in range(n))
        if is_admissible(seq):
            return seq


def random_nested_zseq(rng: random.Random, n_max=4, window_A=3, window_B=-1) -> ZSeq:
    """A sequence whose supports decrease under containment."""
    n = rng.randint(1, n_max)
    A = rng.randint(window_B, window_A)
    B = rng.randint(window_B, A)
    out = []
    for _ in range(n):
        options = enumerate_eseg(ZSegment(A, B))
        out.append(options[rng.randrange(len(options))])
        if A > B and rng.random() < 0.7:
            shrink = rng.choice(["A", "B", "AB"])
            if "A" in shrink and A - 1 >= B:
                A -= 1
            if "B" in shrink and A >= B + 1:
                B += 1
    return tuple(out)


def random_multiseg(
    rng: random.Random,
    max_rows=3,
    max_A_twice=5,
    cuspidals=(CHI,),
) -> ExtMultiSegment | None:
    """One random validate-passing multi-segment, or None if the draw fails.

    All rows share a group kind chosen to make the drawn parities good.
    """
    rho = cuspidals[rng.randrange(len(cuspidals))]
    n_rows = rng.randint(1, max_rows)
    integral = rng.random() < 0.5
    segs = []
    for _ in range(n_rows):
        twice_vals = range(0, max_A_twice + 1, 2) if integral else range(1, max_A_twice + 1, 2)
        twice_vals = list(twice_vals)
        A2 = rng.choice(twice_vals)
        B2 = rng.choice([t for t in twice_vals if t <= A2] + [-t for t in twice_vals if 0 < t <= A2])
        if (A2 - B2) % 2:
            return None
        if A2 + B2 < 0:
            return None
        b = (A2 - B2) // 2 + 1
        l = rng.randint(0, b // 2)
        eta = rng.choice([1, -1])
        segs.append(ExtSegment(h(A2), h(B2), l, eta))
    a_plus_b_parities = {(seg.a + seg.b) % 2 for seg in segs}
    if len(a_plus_b_parities) != 1:
        return None
    odd = a_plus_b_parities.pop() == 1
    if rho.selfdual == "orthogonal":
        kind = "SOodd" if odd else "Sp"
    else:
        kind = "Sp" if odd else "SOodd"
    total = sum(rho.dim * seg.a * seg.b for seg in segs)
    if kind == "Sp":
        if total % 2 == 0:
            return None
        group = GroupType("Sp", (total - 1) // 2)
    else:
        if total % 2 == 1:
            return None
        group = GroupType("SOodd", total // 2)
    rng.shuffle(segs)
    ms = ExtMultiSegment(group, ((rho, tuple(segs)),))
    try:
        validate(ms)
    except InputError:
        return None
    return ms


def random_valid_multiseg(rng: random.Random, **kw) -> ExtMultiSegment:
    while True:
        ms = random_multiseg(rng, **kw)
        if ms is not None:
            return ms


def insertable_summands(group_kind: str, max_ab=6):
    """All (a, b) of good parity for an orthogonal character on this group."""
    out = []
    for a in range(1, max_ab + 1):
        for b in range(1, max_ab + 1):
            if a * b > max_ab:
                continue
            odd = (a + b) % 2 == 1
            if (group_kind == "SOodd") == odd:
                out.append((a, b))
    return out
