"""Pairwise non-vanishing, the precedence order on supports, and row exchange.

The non-vanishing criterion for an ordered admissible pair splits into three
cases by how the supports overlap, each with a separate condition for the
two values of eps = (-1)^(A1-B1) * eta1 * eta2.  Where a sign is identified
(b = 2l) we quantify existentially over its lifts; the verdict provably does
not depend on the choice and the test suite re-checks that.

Row exchange swaps two nested rows while transporting (l, eta) through an
explicit case table.  It is an involution, may leave the real locus (the
result is then virtual), and preserves pairwise non-vanishing.
"""

from __future__ import annotations

from functools import lru_cache

from .errors import IncomparableSupports, LiftDependence, NotAdmissible
from .segments import EsegInterval, VExtZSeg, ZSegment, enumerate_eseg


def pair_admissible(d1: ZSegment, d2: ZSegment) -> bool:
    """Admissibility of the ordered pair of supports: not (A1 > A2 and B1 > B2)."""
    return not (d1.A > d2.A and d1.B > d2.B)


def _ensure_admissible(d1: ZSegment, d2: ZSegment) -> None:
    if not pair_admissible(d1, d2):
        raise NotAdmissible(f"({d1}, {d2}) is not admissible")


def _nv_pair_lifted(e1: VExtZSeg, e2: VExtZSeg, t1: int, t2: int) -> bool:
    """Evaluate the non-vanishing conditions for one fixed choice of lifts."""
    A1, B1, l1, b1 = e1.A, e1.B, e1.l, e1.b
    A2, B2, l2, b2 = e2.A, e2.B, e2.l, e2.b
    eps = t1 * t2 * (-1 if (A1 - B1) % 2 else 1)
    ok = True
    if A1 <= A2 and B1 <= B2:
        if eps == 1:
            ok = ok and (B1 + l1 <= B2 + l2) and (A1 - l1 <= A2 - l2)
        else:
            ok = ok and (A1 - l1 < B2 + l2)
    if A1 <= A2 and B1 >= B2:
        if eps == 1:
            ok = ok and (0 <= l2 - l1 <= b2 - b1)
        else:
            ok = ok and (l1 + l2 >= b1)
    if A1 >= A2 and B1 <= B2:
        if eps == 1:
            ok = ok and (0 <= l1 - l2 <= b1 - b2)
        else:
            ok = ok and (l1 + l2 >= b2)
    return ok


@lru_cache(maxsize=None)
def nv_pair(e1: VExtZSeg, e2: VExtZSeg) -> bool:
    """Whether the ordered admissible pair (e1, e2) is non-vanishing.

    Virtual arguments vanish.  Raises on a non-admissible pair; callers that
    want the "empty set" convention should go through :func:`nv_right_set`.
    """
    _ensure_admissible(e1.seg, e2.seg)
    if not (e1.is_real and e2.is_real):
        return False
    return any(
        _nv_pair_lifted(e1, e2, t1, t2) for t1 in e1.lifts() for t2 in e2.lifts()
    )


def precedes(d1: ZSegment, d2: ZSegment) -> bool:
    """The precedence order on supports of an admissible pair.

    True when d1 is contained in d2, or when the two are incomparable under
    containment and B1 < B2.
    """
    _ensure_admissible(d1, d2)
    if d2.contains(d1):
        return True
    if d1.contains(d2):
        return False
    return d1.B < d2.B


def nv_right_set(e: VExtZSeg, delta2: ZSegment) -> EsegInterval:
    """All partners over delta2 completing ``e`` to a non-vanishing pair.

    Empty exactly when (Supp(e), delta2) is not admissible; otherwise a
    non-empty interval.
    """
    if not pair_admissible(e.seg, delta2):
        return EsegInterval(delta2, ())
    hits = tuple(x for x in enumerate_eseg(delta2) if nv_pair(e, x))
    return EsegInterval(delta2, hits)


def nv_left_set(delta1: ZSegment, e: VExtZSeg) -> EsegInterval:
    """Mirror of :func:`nv_right_set` with the pair order reversed."""
    if not pair_admissible(delta1, e.seg):
        return EsegInterval(delta1, ())
    hits = tuple(x for x in enumerate_eseg(delta1) if nv_pair(x, e))
    return EsegInterval(delta1, hits)


def _row_exchange_lifted(
    e1: VExtZSeg, e2: VExtZSeg, t1: int, t2: int
) -> tuple[VExtZSeg, VExtZSeg]:
    """The exchange case table for one fixed choice of lifts."""
    A1, B1, l1, b1 = e1.A, e1.B, e1.l, e1.b
    A2, B2, l2, b2 = e2.A, e2.B, e2.l, e2.b
    s1 = -1 if (A1 - B1) % 2 else 1
    s2 = -1 if (A2 - B2) % 2 else 1
    eps = t1 * t2 * s1
    if e2.seg.contains(e1.seg):
        new1 = (l1, s2 * t1)
        if eps == 1 and b2 - 2 * l2 < 2 * (b1 - 2 * l1):
            new2 = (b2 - (l2 + (b1 - 2 * l1)), s1 * t2)
        elif eps == 1:
            new2 = (l2 + (b1 - 2 * l1), -s1 * t2)
        else:
            new2 = (l2 - (b1 - 2 * l1), -s1 * t2)
    elif e1.seg.contains(e2.seg):
        new2 = (l2, s1 * t2)
        if eps == 1 and b1 - 2 * l1 < 2 * (b2 - 2 * l2):
            new1 = (b1 - (l1 + (b2 - 2 * l2)), s2 * t1)
        elif eps == 1:
            new1 = (l1 + (b2 - 2 * l2), -s2 * t1)
        else:
            new1 = (l1 - (b2 - 2 * l2), -s2 * t1)
    else:
        raise IncomparableSupports(f"{e1.seg} and {e2.seg} are not nested")
    return (VExtZSeg(e2.seg, *new2), VExtZSeg(e1.seg, *new1))


@lru_cache(maxsize=None)
def row_exchange(e1: VExtZSeg, e2: VExtZSeg) -> tuple[VExtZSeg, VExtZSeg]:
    """Exchange a nested pair, returning (e2', e1').

    The supports must be nested (containment either way; equality goes
    through the contained-in case).  Every choice of sign lifts must give the
    same canonical answer, which is asserted here rather than assumed.
    """
    results = {
        _row_exchange_lifted(e1, e2, t1, t2)
        for t1 in e1.lifts()
        for t2 in e2.lifts()
    }
    if len(results) != 1:
        raise LiftDependence(
            f"row exchange of ({e1}, {e2}) depends on sign lifts: {results}"
        )
    return results.pop()
