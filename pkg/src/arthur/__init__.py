"""Exact combinatorics of extended multi-segments for Sp(2n) and SO(2n+1).

The package decides non-vanishing of packet members, computes their
component-group characters, decomposes unitary parabolic inductions, and
settles Hermitian/unitary membership for representations given in
decomposed form, together with the derived parity checker for unitary
local components of general linear groups.
"""

__version__ = "0.1.0"

from .errors import (
    ArthurError,
    BadParity,
    CapExceeded,
    ContainsSummand,
    EndpointMismatch,
    IncomparableSupports,
    InputError,
    InternalCheckError,
    IntervalViolation,
    NegativeCenter,
    NoCanonical,
    NotAdmissible,
    NotUnique,
    OrderNotAdmissible,
    OrderNotPPrime,
    PreconditionFailed,
    SignConditionFailed,
)
from .halfint import HalfInt
from .segments import (
    EsegInterval,
    VExtZSeg,
    ZSegment,
    adjacent_intervals,
    dagger,
    enumerate_eseg,
    is_adjacent,
    is_interval,
    make_eseg,
    shift,
)
from .pairs import nv_left_set, nv_pair, nv_right_set, precedes, row_exchange
from .sequences import (
    DEFAULT_CAP,
    Orbit,
    canonical_p2,
    insert_pair,
    nv_seq,
    nv_set,
    orbit,
    r_k,
    tilde_nv,
)
from .multisegments import (
    ArthurParameter,
    ArthurSummand,
    Character,
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
from .induction import InductionResult, induce, is_reducible, sign_counts
from .unitarity import APlusRep, BpEntry, NuEntry, UnitarityVerdict, is_hermitian, is_unitary
from .glconstraints import GLLocalComponent, GLNuEntry, TemperedFactor, check_constraint, speh_type
