"""Explicit sequences whose averages jump over a given value.

Witnesses are built in normalized coordinates (a_1 -> 0, a_r -> 1) and always
use at most three letters: a_1, a_r and one interior letter a_i.

* If the normalized target is not of the form k/(k+1), the sequence
  a_1, a_r, a_r, ... already jumps over it.
* Otherwise pick an interior letter whose normalized value is irrational or
  has a reduced denominator not dividing k+1. Above that letter, use
  a_i, a_r, a_r, ...; below it, use a_1, a_i, a_i, ... and, if those averages
  land exactly on the target at step n, replace the n-th term by a_r.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Union

from .alphabet import Alphabet, check_target, normalize, reflect
from .engine import CrossKind, SequenceSpec, first_upcross
from .exact import ExactReal, Number
from .ivset import Direction

__all__ = [
    "InvariantViolation",
    "NotSkippable",
    "SequenceSpec",
    "SkipCertificate",
    "build_skip_witness",
    "verify_certificate",
]


class InvariantViolation(RuntimeError):
    """A constructed witness failed its own verification."""


@dataclass(frozen=True)
class SkipCertificate:
    spec: SequenceSpec
    step: int
    below: ExactReal
    above: ExactReal
    direction: Direction = Direction.INCREASING

    def negated(self) -> SkipCertificate:
        return SkipCertificate(
            self.spec.negated(), self.step, -self.below, -self.above,
            self.direction.flipped,
        )


@dataclass(frozen=True)
class NotSkippable:
    t: Optional[int] = None


def verify_certificate(cert: SkipCertificate, pi: Number) -> bool:
    """Recompute the two averages around ``cert.step`` and check the strict straddle."""
    if cert.step < 1:
        return False
    lo = cert.spec.average(cert.step)
    hi = cert.spec.average(cert.step + 1)
    if lo != cert.below or hi != cert.above:
        return False
    if cert.direction is Direction.INCREASING:
        return lo < pi < hi
    return lo > pi > hi


def _unit_fraction_denominator(x: ExactReal) -> Optional[int]:
    """A when x == 1 - 1/A for an integer A >= 2, else None."""
    if not x.is_rational() or x.rat >= 1:
        return None
    inv = 1 / (1 - x.rat)
    return inv.numerator if inv.denominator == 1 and inv >= 2 else None


def _certify(spec: SequenceSpec, pi: ExactReal) -> Optional[SkipCertificate]:
    ev = first_upcross(spec, pi)
    if ev.kind is CrossKind.SKIP:
        return SkipCertificate(spec, ev.step, ev.below, ev.above)
    return None


def _pick_interior(mus: list[ExactReal], A: int) -> Optional[int]:
    for i, mu in enumerate(mus):
        if mu.is_rational() and A % mu.rat.denominator:
            return i
    for i, mu in enumerate(mus):
        if not mu.is_rational():
            return i
    return None


def _build_increasing(
    alphabet: Alphabet, pi: ExactReal
) -> Union[SkipCertificate, NotSkippable]:
    lo, hi = alphabet.first, alphabet.last
    mus, amap = normalize(alphabet)
    A = _unit_fraction_denominator(amap.inverse(pi))
    if A is None:
        cert = _certify(SequenceSpec((lo,), hi), pi)
        if cert is None:
            raise InvariantViolation(f"binary witness failed to skip {pi}")
        return cert

    i = _pick_interior(mus, A)
    if i is None:
        # every interior denominator divides A, i.e. M | A
        M = math.lcm(*(mu.rat.denominator for mu in mus)) if mus else 1
        return NotSkippable(A // M)
    mid = alphabet.values[i + 1]
    if pi > mid:
        cert = _certify(SequenceSpec((mid,), hi), pi)
    else:
        spec = SequenceSpec((lo,), mid)
        ev = first_upcross(spec, pi)
        if ev.kind is CrossKind.SKIP:
            cert = SkipCertificate(spec, ev.step, ev.below, ev.above)
        elif ev.kind is CrossKind.HIT:
            n = ev.step
            patched = SequenceSpec((lo,) + (mid,) * (n - 2), hi)
            cert = _certify(patched, pi)
            if cert is not None and cert.step != n - 1:
                raise InvariantViolation(
                    f"patched witness skipped at {cert.step}, expected {n - 1}"
                )
        else:
            cert = None
    if cert is None:
        raise InvariantViolation(f"no skip of {pi} using interior letter {mid}")
    return cert


def build_skip_witness(
    alphabet: Alphabet, pi: Number, direction: Direction = Direction.INCREASING
) -> Union[SkipCertificate, NotSkippable]:
    direction = Direction(direction)
    pi = check_target(alphabet, pi)
    if direction is Direction.DECREASING:
        res = _build_increasing(reflect(alphabet), -pi)
        if isinstance(res, SkipCertificate):
            res = res.negated()
    else:
        res = _build_increasing(alphabet, pi)
    if isinstance(res, SkipCertificate):
        if not verify_certificate(res, pi):
            raise InvariantViolation(f"certificate for {pi} does not verify")
        if any(x not in alphabet for x in res.spec.prefix + (res.spec.tail,)):
            raise InvariantViolation("witness uses a letter outside the alphabet")
    return res
