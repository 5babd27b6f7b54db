"""Consecutive averages of eventually-constant sequences.

A sequence is a finite prefix followed by one letter repeated forever. Past
the prefix the partial sums are affine in n, so the first index where the
averages rise to a target is found by solving a linear inequality instead of
iterating.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Optional, Sequence

from .exact import DomainError, ExactReal, Number


@dataclass(frozen=True)
class SequenceSpec:
    prefix: tuple[ExactReal, ...]
    tail: ExactReal

    @classmethod
    def of(cls, prefix: Sequence[Number], tail: Number) -> SequenceSpec:
        return cls(tuple(ExactReal.of(x) for x in prefix), ExactReal.of(tail))

    def term(self, n: int) -> ExactReal:
        """The n-th term (1-based)."""
        if n < 1:
            raise DomainError(f"terms are 1-based, got {n}")
        return self.prefix[n - 1] if n <= len(self.prefix) else self.tail

    def partial_sum(self, n: int) -> ExactReal:
        L = len(self.prefix)
        if n <= L:
            return sum(self.prefix[:n], ExactReal.of(0))
        return sum(self.prefix, ExactReal.of(0)) + (n - L) * self.tail

    def average(self, n: int) -> ExactReal:
        if n < 1:
            raise DomainError(f"averages are 1-based, got {n}")
        return self.partial_sum(n) / n

    def negated(self) -> SequenceSpec:
        return SequenceSpec(tuple(-x for x in self.prefix), -self.tail)

    def __str__(self) -> str:
        head = ", ".join(str(x) for x in self.prefix)
        return f"{head}{', ' if head else ''}{self.tail}, {self.tail}, ..."


class CrossKind(str, enum.Enum):
    SKIP = "skip"
    HIT = "hit"
    NO_CROSS = "no_cross"


@dataclass(frozen=True)
class CrossEvent:
    kind: CrossKind
    step: Optional[int] = None
    below: Optional[ExactReal] = None
    above: Optional[ExactReal] = None


def running_averages(values: Sequence[Number]) -> list[ExactReal]:
    out = []
    s = ExactReal.of(0)
    for n, x in enumerate(values, 1):
        s = s + x
        out.append(s / n)
    return out


def averages(spec: SequenceSpec, horizon: int) -> list[ExactReal]:
    if horizon < 1:
        raise DomainError(f"horizon must be >= 1, got {horizon}")
    return running_averages([spec.term(n) for n in range(1, horizon + 1)])


def _first_tail_index(
    slack: ExactReal, drift: ExactReal, start: int, at_least: bool
) -> Optional[int]:
    """Smallest n >= start with ``slack >= n*drift`` (or ``<`` when not at_least).

    In the tail, avg_n >= pi  <=>  S_L - L*c >= n*(pi - c); slack and drift are
    the two sides' constants.
    """
    sd = drift.sign()
    if at_least:
        if sd < 0:
            return max(start, math.ceil(slack / drift))
        if sd == 0:
            return start if slack.sign() >= 0 else None
        return start if start * drift <= slack else None
    if sd > 0:
        return max(start, math.floor(slack / drift) + 1)
    if sd == 0:
        return start if slack.sign() < 0 else None
    return start if start * drift > slack else None


def first_upcross(spec: SequenceSpec, pi: Number) -> CrossEvent:
    """First time the averages climb from below ``pi`` to ``pi`` or beyond."""
    pi = ExactReal.of(pi)
    L = len(spec.prefix)

    # prefix region: walk explicitly with running sums
    sums = [ExactReal.of(0)]
    for x in spec.prefix:
        sums.append(sums[-1] + x)

    def below(n: int, s: ExactReal) -> bool:
        return s < n * pi

    low = next((n for n in range(1, L + 1) if below(n, sums[n])), None)
    slack = sums[L] - L * spec.tail
    drift = pi - spec.tail
    if low is None:
        low = _first_tail_index(slack, drift, L + 1, at_least=False)
        if low is None:
            return CrossEvent(CrossKind.NO_CROSS)

    m = next((n for n in range(low + 1, L + 1) if not below(n, sums[n])), None)
    if m is None:
        m = _first_tail_index(slack, drift, max(low + 1, L + 1), at_least=True)
        if m is None:
            return CrossEvent(CrossKind.NO_CROSS)

    top = spec.average(m)
    if top == pi:
        return CrossEvent(CrossKind.HIT, m)
    return CrossEvent(CrossKind.SKIP, m - 1, spec.average(m - 1), top)


def detect_skip(avgs: Sequence[ExactReal], pi: Number) -> Optional[int]:
    """First 1-based n with avgs[n] < pi < avgs[n+1]."""
    for n in range(1, len(avgs)):
        if avgs[n - 1] < pi < avgs[n]:
            return n
    return None


def detect_skip_definitional(avgs: Sequence[ExactReal], pi: Number) -> bool:
    """Direct reading of the skip definition: some k < l with avgs[k] < pi < avgs[l]
    and no s strictly between with avgs[s] == pi. Quadratic; used as a cross-check."""
    n = len(avgs)
    for k in range(n):
        if not avgs[k] < pi:
            continue
        for l in range(k + 1, n):
            if avgs[l] == pi:
                break
            if avgs[l] > pi:
                return True
    return False


def detect_downskip(avgs: Sequence[ExactReal], pi: Number) -> Optional[int]:
    """First 1-based n with avgs[n] > pi > avgs[n+1]."""
    for n in range(1, len(avgs)):
        if avgs[n - 1] > pi > avgs[n]:
            return n
    return None
