"""Hermitian and unitary membership for decomposed representations.

Input is the decomposed shape: complementary factors with exponents in
(0, 1/2), exponent-zero factors of bad parity, and a good-parity
multi-segment.  Hermitian means the complementary factors pair up under
duality.  Unitary additionally requires that every complementary class
whose induction against the good-parity member reduces occurs an even
number of times; only reducibility against the good-parity part matters,
and bad-parity classes never reduce.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction

from .errors import InputError, PreconditionFailed
from .induction import is_reducible
from .multisegments import (
    Cuspidal,
    ExtMultiSegment,
    GroupType,
    good_parity,
    pi_nonzero,
    validate,
)
from .sequences import DEFAULT_CAP


@dataclass(frozen=True, slots=True)
class NuEntry:
    """One complementary factor: (rho, a, b) with exponent 0 < x < 1/2."""

    rho: Cuspidal
    a: int
    b: int
    x: Fraction

    def __post_init__(self):
        if self.a < 1 or self.b < 1:
            raise InputError("factor needs positive a and b")
        x = Fraction(self.x)
        object.__setattr__(self, "x", x)
        if not Fraction(0) < x < Fraction(1, 2):
            raise InputError(f"exponent {x} is not strictly inside (0, 1/2)")


@dataclass(frozen=True, slots=True)
class BpEntry:
    """One exponent-zero factor that must be of bad parity for the group."""

    rho: Cuspidal
    a: int
    b: int

    def __post_init__(self):
        if self.a < 1 or self.b < 1:
            raise InputError("factor needs positive a and b")


@dataclass(frozen=True)
class APlusRep:
    """A representation given in decomposed form."""

    group: GroupType
    nu: tuple[NuEntry, ...]
    bp: tuple[BpEntry, ...]
    gp: ExtMultiSegment

    def validate(self, cap: int = DEFAULT_CAP) -> None:
        validate(self.gp)
        if self.gp.group.kind != self.group.kind:
            raise InputError("good-parity part lives on a different kind of group")
        for entry in self.bp:
            if good_parity(entry.rho, entry.a, entry.b, self.group):
                raise InputError(
                    f"{entry.rho.name} (x) S_{entry.a} (x) S_{entry.b} is of good"
                    " parity; it belongs to the good-parity part"
                )
        total = self.gp.group.N
        total += sum(2 * e.rho.dim * e.a * e.b for e in self.nu)
        total += sum(2 * e.rho.dim * e.a * e.b for e in self.bp)
        if total != self.group.N:
            raise InputError(
                f"parts have total dual dimension {total}, group needs {self.group.N}"
            )
        if not pi_nonzero(self.gp, cap):
            raise PreconditionFailed("the good-parity part must be nonzero")


@dataclass(frozen=True)
class Witness:
    """Per-factor record: class reducibility flag and class cardinality."""

    index: int
    reducible: bool
    class_cardinality: int


@dataclass(frozen=True)
class UnitarityVerdict:
    hermitian: bool
    unitary: bool
    witnesses: tuple[Witness, ...]


def is_hermitian(rep: APlusRep) -> bool:
    """Whether the complementary factors admit a duality pairing.

    Each class (rho, a, b, x) with a non-self-dual rho must occur exactly as
    often as its dual class; self-dual classes impose nothing.
    """
    counts = Counter((e.rho.name, e.a, e.b, e.x) for e in rep.nu)
    for e in rep.nu:
        if e.rho.is_selfdual:
            continue
        mine = counts[(e.rho.name, e.a, e.b, e.x)]
        partner = counts[(e.rho.dual_name, e.a, e.b, e.x)]
        if mine != partner:
            return False
    return True


def is_unitary(rep: APlusRep, cap: int = DEFAULT_CAP) -> UnitarityVerdict:
    """The full decision: Hermitian, plus even multiplicity on reducible classes.

    Reducibility is evaluated against the good-parity part alone; factors of
    bad parity (or with non-self-dual rho) never reduce.  Class cardinality
    counts factors with the same (rho, a, b) regardless of exponent.
    """
    rep.validate(cap)
    hermitian = is_hermitian(rep)
    cards = Counter((e.rho.name, e.a, e.b) for e in rep.nu)
    reducible_cache: dict[tuple[str, int, int], bool] = {}
    witnesses = []
    unitary = hermitian
    for i, e in enumerate(rep.nu):
        key = (e.rho.name, e.a, e.b)
        if key not in reducible_cache:
            if good_parity(e.rho, e.a, e.b, rep.group):
                reducible_cache[key] = is_reducible(rep.gp, e.rho, e.a, e.b, cap)
            else:
                reducible_cache[key] = False
        reducible = reducible_cache[key]
        card = cards[key]
        witnesses.append(Witness(index=i, reducible=reducible, class_cardinality=card))
        if reducible and card % 2 != 0:
            unitary = False
    return UnitarityVerdict(
        hermitian=hermitian, unitary=unitary, witnesses=tuple(witnesses)
    )
