"""Parity constraints on unitary local components of general linear groups.

A local component in its unitary-classification shape carries ladder
factors with exponents in (0, 1/2) and a tempered part.  When the global
representation is self-dual of a given type, every non-tempered ladder
factor of that same type which does not also occur in the tempered part
must appear an even number of times.  The checker is purely syntactic on
that shape.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import InputError
from .multisegments import Cuspidal


@dataclass(frozen=True, slots=True)
class GLNuEntry:
    """One non-tempered ladder factor (rho, a) with exponent 0 < x < 1/2."""

    rho: Cuspidal
    a: int
    x: Fraction

    def __post_init__(self):
        if self.a < 1:
            raise InputError("ladder factor needs a positive a")
        x = Fraction(self.x)
        object.__setattr__(self, "x", x)
        if not Fraction(0) < x < Fraction(1, 2):
            raise InputError(f"exponent {x} is not strictly inside (0, 1/2)")


@dataclass(frozen=True, slots=True)
class TemperedFactor:
    rho: Cuspidal
    a: int

    def __post_init__(self):
        if self.a < 1:
            raise InputError("tempered factor needs a positive a")


@dataclass(frozen=True)
class GLLocalComponent:
    nu: tuple[GLNuEntry, ...]
    tempered: tuple[TemperedFactor, ...]
    global_type: str

    def __post_init__(self):
        if self.global_type not in ("orthogonal", "symplectic"):
            raise InputError(f"unknown global type {self.global_type!r}")


def speh_type(rho: Cuspidal, a: int) -> str:
    """Self-duality type of the ladder representation labelled (rho, a).

    Orthogonal when the types of rho and the parity of a agree in the
    orthogonal direction (orthogonal rho with odd a, symplectic rho with
    even a), symplectic in the two crossed cases, and none when rho is not
    self-dual.
    """
    if not rho.is_selfdual:
        return "none"
    if rho.selfdual == "orthogonal":
        return "orthogonal" if a % 2 == 1 else "symplectic"
    return "orthogonal" if a % 2 == 0 else "symplectic"


def check_constraint(component: GLLocalComponent) -> tuple[bool, list[int]]:
    """Evaluate the even-multiplicity constraint on one local component.

    Returns (ok, violations) where violations lists the indices of ladder
    factors of the global type, absent from the tempered part, whose class
    occurs an odd number of times.
    """
    tempered_classes = {(f.rho.name, f.a) for f in component.tempered}
    violations = []
    for i, entry in enumerate(component.nu):
        if speh_type(entry.rho, entry.a) != component.global_type:
            continue
        if (entry.rho.name, entry.a) in tempered_classes:
            continue
        count = sum(
            1
            for other in component.nu
            if other.rho.name == entry.rho.name and other.a == entry.a
        )
        if count % 2 != 0:
            violations.append(i)
    return (not violations, violations)
