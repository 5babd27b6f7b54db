"""Alphabets a_1 < ... < a_r and their normalized interior letters."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Union

from .exact import DomainError, ExactReal, Number


@dataclass(frozen=True)
class Alphabet:
    values: tuple[ExactReal, ...]

    @property
    def first(self) -> ExactReal:
        return self.values[0]

    @property
    def last(self) -> ExactReal:
        return self.values[-1]

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self):
        return iter(self.values)

    def __contains__(self, x: object) -> bool:
        return x in self.values

    def contains_open(self, x: ExactReal) -> bool:
        """True iff ``a_1 < x < a_r``."""
        return self.first < x < self.last

    def __str__(self) -> str:
        return "{" + ", ".join(str(v) for v in self.values) + "}"


def make_alphabet(values: Iterable[Number]) -> Alphabet:
    vals = tuple(ExactReal.of(v) for v in values)
    if len(vals) < 2:
        raise DomainError(
            f"an alphabet needs at least 2 letters, got {len(vals)}"
        )
    rads = {v.rad for v in vals if v.rad}
    if len(rads) > 1:
        raise DomainError(
            "letters span several quadratic fields: "
            + ", ".join(f"sqrt({d})" for d in sorted(rads))
        )
    for i, (a, b) in enumerate(zip(vals, vals[1:])):
        if not a < b:
            what = "duplicate" if a == b else "unordered"
            raise DomainError(
                f"{what} letters at positions {i} and {i + 1} ({a}, {b}); "
                "pass the alphabet sorted and without repeats"
            )
    return Alphabet(vals)


def check_target(alphabet: Alphabet, pi: Number) -> ExactReal:
    """Validate a candidate value: same field as the letters, strictly inside (a_1, a_r)."""
    pi = ExactReal.of(pi)
    rad = next((v.rad for v in alphabet if v.rad), 0)
    if pi.rad and rad and pi.rad != rad:
        raise DomainError(
            f"{pi} lies outside the field Q(sqrt({rad})) of the alphabet"
        )
    if not alphabet.contains_open(pi):
        raise DomainError(
            f"{pi} is not strictly between {alphabet.first} and {alphabet.last}"
        )
    return pi


def reflect(alphabet: Alphabet) -> Alphabet:
    """The alphabet -a_r < ... < -a_1 of negated letters."""
    return Alphabet(tuple(-v for v in reversed(alphabet.values)))


@dataclass(frozen=True)
class AffineMap:
    """x -> offset + scale * x, sending [0, 1] onto [a_1, a_r]."""

    offset: ExactReal
    scale: ExactReal

    def __call__(self, x: Number) -> ExactReal:
        return self.offset + self.scale * x

    def inverse(self, y: Number) -> ExactReal:
        return (ExactReal.of(y) - self.offset) / self.scale


def normalize(alphabet: Alphabet) -> tuple[list[ExactReal], AffineMap]:
    """Interior letters rescaled into (0, 1), with the map that undoes it."""
    amap = AffineMap(alphabet.first, alphabet.last - alphabet.first)
    mus = [amap.inverse(a) for a in alphabet.values[1:-1]]
    return mus, amap


@dataclass(frozen=True)
class AllRational:
    fractions: tuple[Fraction, ...]
    M: int


@dataclass(frozen=True)
class HasIrrational:
    index: int


RationalityClass = Union[AllRational, HasIrrational]


def classify(mus: Iterable[ExactReal]) -> RationalityClass:
    fracs = []
    for i, mu in enumerate(mus):
        if not mu.is_rational():
            return HasIrrational(i)
        fracs.append(mu.rat)
    M = math.lcm(*(f.denominator for f in fracs)) if fracs else 1
    return AllRational(tuple(fracs), M)
