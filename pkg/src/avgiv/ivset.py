"""Closed-form sets of values that running averages cannot skip.

For an alphabet a_1 < ... < a_r with normalized interior letters mu_i, the
unskippable values going up form the family

    (1/(M t)) a_1 + (1 - 1/(M t)) a_r,   t = 1, 2, ...

restricted to the open interval (a_1, a_r), where M is the lcm of the reduced
denominators of the mu_i (M = 1 for a two-letter alphabet). The set is empty
as soon as one mu_i is irrational. The decreasing-direction set is obtained by
negating the alphabet, solving the increasing problem, and negating back.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Optional, Union

from .alphabet import AllRational, Alphabet, check_target, classify, normalize, reflect
from .exact import DomainError, ExactReal


class Direction(str, enum.Enum):
    INCREASING = "increasing"
    DECREASING = "decreasing"

    @property
    def flipped(self) -> Direction:
        if self is Direction.INCREASING:
            return Direction.DECREASING
        return Direction.INCREASING


@dataclass(frozen=True)
class Empty:
    pass


@dataclass(frozen=True)
class Family:
    M: int
    a1: ExactReal
    ar: ExactReal
    direction: Direction = Direction.INCREASING

    def contains_open(self, x: ExactReal) -> bool:
        return self.a1 < x < self.ar


IvCharacterization = Union[Empty, Family]


@dataclass(frozen=True)
class MemberResult:
    member: bool
    t: Optional[int] = None


def characterize(
    alphabet: Alphabet, direction: Direction = Direction.INCREASING
) -> IvCharacterization:
    direction = Direction(direction)
    if direction is Direction.DECREASING:
        mirrored = characterize(reflect(alphabet), Direction.INCREASING)
        if isinstance(mirrored, Empty):
            return mirrored
        # -(increasing family over -a_r < -a_1) is the decreasing family over a_1 < a_r
        return Family(mirrored.M, -mirrored.ar, -mirrored.a1, Direction.DECREASING)
    mus, _ = normalize(alphabet)
    cls = classify(mus)
    if not isinstance(cls, AllRational):
        return Empty()
    return Family(cls.M, alphabet.first, alphabet.last, Direction.INCREASING)


def family_element(char: Family, t: int) -> ExactReal:
    """The t-th family value, before any open-interval filtering."""
    if t < 1:
        raise DomainError(f"family index must be >= 1, got {t}")
    w = ExactReal.of(1) / (char.M * t)
    if char.direction is Direction.INCREASING:
        return w * char.a1 + (1 - w) * char.ar
    return (1 - w) * char.a1 + w * char.ar


def enumerate_family(char: IvCharacterization, count: int) -> list[ExactReal]:
    """First ``count`` in-interval family values, in increasing t."""
    if isinstance(char, Empty) or count <= 0:
        return []
    out = []
    t = 1
    while len(out) < count:
        x = family_element(char, t)
        if char.contains_open(x):
            out.append(x)
        t += 1
    return out


def membership(
    alphabet: Alphabet, pi: ExactReal, direction: Direction = Direction.INCREASING
) -> MemberResult:
    direction = Direction(direction)
    pi = check_target(alphabet, pi)
    char = characterize(alphabet, direction)
    if isinstance(char, Empty):
        return MemberResult(False)
    span = char.ar - char.a1
    gap = char.ar - pi if direction is Direction.INCREASING else pi - char.a1
    # the family index solves 1/(M t) = gap/span
    mt = span / gap
    if not mt.is_rational() or mt.rat.denominator != 1:
        return MemberResult(False)
    n = mt.rat.numerator
    if n % char.M:
        return MemberResult(False)
    t = n // char.M
    if t < 1 or family_element(char, t) != pi:
        return MemberResult(False)
    return MemberResult(True, t)
