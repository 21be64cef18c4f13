"""Exact half-integer arithmetic.

Every endpoint and exponent in this package lives in (1/2)Z.  A value is
stored as its double, so equality, hashing and ordering are plain integer
operations and nothing ever touches floating point.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InputError


@dataclass(frozen=True, slots=True, order=True)
class HalfInt:
    """A half-integer, stored as twice its value."""

    twice: int

    def __post_init__(self):
        if not isinstance(self.twice, int):
            raise InputError(f"half-integer needs an integer double, got {self.twice!r}")

    @classmethod
    def from_int(cls, n: int) -> "HalfInt":
        return cls(2 * n)

    @classmethod
    def parse(cls, text: str) -> "HalfInt":
        """Parse the wire form: a decimal integer "k" or a half "k/2"."""
        s = str(text).strip()
        try:
            if "/" in s:
                num, den = s.split("/")
                if int(den) != 2:
                    raise ValueError(s)
                return cls(int(num))
            return cls(2 * int(s))
        except ValueError as exc:
            raise InputError(f"not a half-integer literal: {text!r}") from exc

    @property
    def is_integral(self) -> bool:
        return self.twice % 2 == 0

    def floor(self) -> int:
        return self.twice // 2

    def __add__(self, other):
        if isinstance(other, HalfInt):
            return HalfInt(self.twice + other.twice)
        if isinstance(other, int):
            return HalfInt(self.twice + 2 * other)
        return NotImplemented

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, HalfInt):
            return HalfInt(self.twice - other.twice)
        if isinstance(other, int):
            return HalfInt(self.twice - 2 * other)
        return NotImplemented

    def __neg__(self):
        return HalfInt(-self.twice)

    def __str__(self) -> str:
        if self.is_integral:
            return str(self.twice // 2)
        return f"{self.twice}/2"

    def __repr__(self) -> str:
        return f"HalfInt({self})"


def int_sum(a: HalfInt, b: HalfInt) -> int:
    """The integer a + b; raises if the sum is not integral."""
    t = a.twice + b.twice
    if t % 2 != 0:
        raise InputError(f"{a} + {b} is not an integer")
    return t // 2


def int_diff(a: HalfInt, b: HalfInt) -> int:
    """The integer a - b; raises if the difference is not integral."""
    t = a.twice - b.twice
    if t % 2 != 0:
        raise InputError(f"{a} - {b} is not an integer")
    return t // 2
