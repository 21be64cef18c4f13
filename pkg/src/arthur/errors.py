"""Exception hierarchy shared by the whole engine.

Three tiers matter for callers (and fix the CLI exit codes):

* ``InputError`` -- the caller handed us something malformed or outside a
  documented precondition.
* ``InternalCheckError`` -- a structural guarantee of the calculus failed at
  runtime; this always signals a bug, never bad input.
* ``CapExceeded`` -- an orbit walk outgrew its configured cap.
"""


class ArthurError(Exception):
    """Base class for every error raised by this package."""


class InputError(ArthurError):
    """Malformed input or a violated caller-side precondition."""


class NotAdmissible(InputError):
    """An ordered pair (or sequence) of segments violates admissibility."""


class IncomparableSupports(InputError):
    """Row exchange requested on supports with no containment either way."""


class OrderNotAdmissible(InputError):
    """A row order of a multi-segment is not admissible."""


class NegativeCenter(InputError):
    """A segment with A + B < 0 appeared in a multi-segment."""


class BadParity(InputError):
    """The attached parameter is not of good parity for the group."""


class SignConditionFailed(InputError):
    """The global sign condition of a multi-segment does not hold."""


class EndpointMismatch(InputError):
    """Endpoints are not half-integers of a consistent congruence class."""


class OrderNotPPrime(InputError):
    """A character was requested on a row order without sorted B-values."""


class ContainsSummand(InputError):
    """Signed component counts requested although the base parameter already
    contains the inserted summand."""


class PreconditionFailed(InputError):
    """A documented precondition (e.g. non-vanishing of the base) is false."""


class InternalCheckError(ArthurError):
    """A structural invariant of the calculus failed; this is a bug."""


class IntervalViolation(InternalCheckError):
    """A set that the theory guarantees to be an interval is not one."""


class NoCanonical(InternalCheckError):
    """An orbit expected to contain a canonical member has none."""


class NotUnique(InternalCheckError):
    """An orbit expected to contain one canonical member has several."""


class LiftDependence(InternalCheckError):
    """A quantity that must not depend on sign lifts came out ambiguous."""


class CapExceeded(ArthurError):
    """An orbit enumeration exceeded the configured cap."""

    def __init__(self, cap: int):
        super().__init__(f"orbit enumeration exceeded cap {cap}")
        self.cap = cap
