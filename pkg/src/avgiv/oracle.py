"""Brute-force skip search over letter counts.

An average depends only on how many times each letter was used, so the search
runs over achievable sums per length n rather than over sequences. A jump over
pi between steps n and n+1 is possible iff some achievable sum s of n letters
has s/n < pi < (s + a_r)/(n + 1): appending the largest letter gives the
largest possible next average.

``search_skip`` shares no code with :mod:`avgiv.ivset` or :mod:`avgiv.witness`
beyond exact arithmetic; it is the cross-check for both.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Iterator, Optional

from .alphabet import AllRational, Alphabet, check_target, classify, normalize, reflect
from .exact import DomainError, ExactReal, Number, make_exact
from .ivset import Direction, Empty, characterize, enumerate_family, membership
from .witness import NotSkippable, build_skip_witness

_Key = tuple[Fraction, Fraction]


@dataclass(frozen=True)
class CountWitness:
    counts: tuple[int, ...]
    n: int
    sum: ExactReal
    appended: int = -1  # index of the letter appended at step n+1


def search_skip(
    alphabet: Alphabet,
    pi: Number,
    max_n: int,
    direction: Direction = Direction.INCREASING,
    all_letters: bool = False,
) -> Optional[CountWitness]:
    """First count vector (smallest n <= max_n) from which one more letter jumps over ``pi``.

    ``all_letters`` tries every appended letter instead of only the largest;
    it exists to test that the largest letter is always enough.
    """
    direction = Direction(direction)
    pi = check_target(alphabet, pi)
    if direction is Direction.DECREASING:
        w = search_skip(reflect(alphabet), -pi, max_n, all_letters=all_letters)
        if w is None:
            return None
        r = len(alphabet)
        return CountWitness(w.counts[::-1], w.n, -w.sum, r - 1 - w.appended)

    r = len(alphabet)
    rad = max(v.rad for v in alphabet)
    letters: list[_Key] = [(v.rat, v.coef) for v in alphabet]
    to_try = range(r) if all_letters else (r - 1,)
    exact_rational = rad == 0 and pi.is_rational()

    level: dict[_Key, tuple[int, ...]] = {(Fraction(0), Fraction(0)): (0,) * r}
    for n in range(1, max_n + 1):
        nxt: dict[_Key, tuple[int, ...]] = {}
        for (sr, sc), counts in level.items():
            for j, (lr, lc) in enumerate(letters):
                key = (sr + lr, sc + lc)
                if key not in nxt:
                    c = list(counts)
                    c[j] += 1
                    nxt[key] = tuple(c)
        level = nxt
        if exact_rational:
            # fast path: plain fractions, same inequalities
            lo, hi = n * pi.rat, (n + 1) * pi.rat
            for (sr, _), counts in level.items():
                if sr < lo:
                    for j in to_try:
                        if hi < sr + letters[j][0]:
                            return CountWitness(counts, n, ExactReal.of(sr), j)
            continue
        lo, hi = n * pi, (n + 1) * pi
        for (sr, sc), counts in level.items():
            s = make_exact(sr, sc, rad)
            if not s < lo:
                continue
            for j in to_try:
                if hi < s + alphabet.values[j]:
                    return CountWitness(counts, n, s, j)
    return None


def count_vectors(r: int, n: int) -> Iterator[tuple[int, ...]]:
    """All r-tuples of non-negative integers summing to n."""
    for cuts in itertools.combinations(range(n + r - 1), r - 1):
        prev = -1
        out = []
        for c in cuts:
            out.append(c - prev - 1)
            prev = c
        out.append(n + r - 2 - prev)
        yield tuple(out)


def integer_gap_violations(
    alphabet: Alphabet, t: int, max_n: int
) -> list[tuple[int, ...]]:
    """Count vectors for which both cleared-denominator inequalities hold at once.

    For normalized letters 0 < p_i/q_i < 1 with M = lcm(q_i), Q_i = M/q_i,
    counts (u, v_1..v_k, w) and P = sum p_i Q_i v_i, a jump over 1 - 1/(M t)
    at step n needs

        P t + M w t < M n t - n   and   M n t + M t - n - 1 < P t + M w t + M t,

    which would put the integer M n t - n strictly between two consecutive
    integers. The returned list is expected to be empty.
    """
    mus, _ = normalize(alphabet)
    cls = classify(mus)
    if not isinstance(cls, AllRational):
        raise DomainError("integer-gap check needs every interior letter rational")
    M = cls.M
    pq = [(f.numerator, M // f.denominator) for f in cls.fractions]
    bad = []
    for n in range(1, max_n + 1):
        for counts in count_vectors(len(alphabet), n):
            w = counts[-1]
            P = sum(p * Q * v for (p, Q), v in zip(pq, counts[1:-1]))
            lhs18 = P * t + M * w * t < M * n * t - n
            lhs19 = M * n * t + M * t - n - 1 < P * t + M * w * t + M * t
            if lhs18 and lhs19:
                bad.append(counts)
    return bad


@dataclass
class ConsistencyReport:
    alphabet: Alphabet
    direction: Direction
    max_n: int
    family: list[ExactReal] = field(default_factory=list)
    grid_members: int = 0
    grid_skippable: int = 0
    violations: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def summary(self) -> str:
        lines = [
            f"alphabet {self.alphabet} ({self.direction.value}), horizon {self.max_n}",
            "family checked: " + (", ".join(map(str, self.family)) or "(empty set)"),
            f"grid: {self.grid_members} members (no skip within horizon), "
            f"{self.grid_skippable} skippable",
        ]
        lines += [f"VIOLATION: {v}" for v in self.violations]
        lines.append("ok" if self.ok else f"{len(self.violations)} violation(s)")
        return "\n".join(lines)


def consistency_report(
    alphabet: Alphabet,
    max_n: int,
    family_count: int,
    grid: Iterable[Number],
    direction: Direction = Direction.INCREASING,
) -> ConsistencyReport:
    """Cross-check closed form, witness builder and brute force on one alphabet.

    Grid values outside the open interval (a_1, a_r) are ignored.
    """
    direction = Direction(direction)
    char = characterize(alphabet, direction)
    rep = ConsistencyReport(alphabet, direction, max_n)

    rep.family = enumerate_family(char, family_count)
    for x in rep.family:
        w = search_skip(alphabet, x, max_n, direction)
        if w is not None:
            rep.violations.append(
                f"family value {x} skipped by counts {w.counts} at n={w.n}"
            )

    for pi in map(ExactReal.of, grid):
        if not alphabet.contains_open(pi):
            continue
        member = membership(alphabet, pi, direction).member
        if member and isinstance(char, Empty):
            rep.violations.append(f"{pi} reported member of an empty set")
        found = search_skip(alphabet, pi, max_n, direction)
        built = build_skip_witness(alphabet, pi, direction)
        if member:
            rep.grid_members += 1
            if found is not None:
                rep.violations.append(
                    f"member {pi} skipped by counts {found.counts} at n={found.n}"
                )
            if not isinstance(built, NotSkippable):
                rep.violations.append(f"member {pi} received a skip witness")
        else:
            rep.grid_skippable += 1
            if found is None:
                rep.violations.append(
                    f"non-member {pi}: no skip found within horizon {max_n}"
                )
            if isinstance(built, NotSkippable):
                rep.violations.append(f"non-member {pi} reported not skippable")
    return rep


def rational_grid(lo: Fraction, hi: Fraction, max_den: int) -> list[Fraction]:
    """All reduced fractions strictly between lo and hi with denominator <= max_den."""
    out = set()
    for q in range(1, max_den + 1):
        for p in range(math.floor(lo * q), math.ceil(hi * q) + 1):
            x = Fraction(p, q)
            if lo < x < hi:
                out.add(x)
    return sorted(out)
