"""Brute-force reference definitions used to validate the formula modules.

Nothing here evaluates a rounding division.  Halves come from the parity
picture of an array: walk inward from both ends until the cursors meet; if
they land on the same element it is the center.
"""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass, field
from typing import Callable, Iterable, Iterator, List, Optional, Sequence, Tuple

from .errors import DomainError
from .ranges import Range
from .splitter import ALL_POLICIES, Partition, SplitPolicy, split_n

# partitions up to this length are also checked index by index
SMALL_N = 64


@dataclass(frozen=True)
class Failure:
    case: str
    expected: object
    actual: object

    def __str__(self) -> str:
        return f"{self.case}: expected {self.expected}, got {self.actual}"


@dataclass
class VerificationReport:
    name: str = "verification"
    checked: int = 0
    failures: List[Failure] = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.failures

    def fail(self, case: str, expected, actual) -> None:
        self.failures.append(Failure(case, expected, actual))

    def merge(self, other: "VerificationReport") -> "VerificationReport":
        return VerificationReport(
            self.name,
            self.checked + other.checked,
            self.failures + other.failures,
            self.elapsed + other.elapsed,
        )

    def to_record(self, max_failures: int = 10) -> dict:
        return {
            "check": self.name,
            "passed": self.passed,
            "checked": self.checked,
            "failures": len(self.failures),
            "elapsed_s": round(self.elapsed, 4),
            "examples": [
                {"case": f.case, "expected": str(f.expected), "actual": str(f.actual)}
                for f in self.failures[:max_failures]
            ],
        }

    def summary(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"{status} {self.name}: {self.checked} checked, {len(self.failures)} failures ({self.elapsed:.2f}s)"


class timed:
    """Context manager filling in ``report.elapsed``."""

    def __init__(self, report: VerificationReport):
        self.report = report

    def __enter__(self):
        self.start = time.perf_counter()
        return self.report

    def __exit__(self, *exc):
        self.report.elapsed += time.perf_counter() - self.start
        return False


def _halves(n: int) -> Tuple[int, Optional[int]]:
    """Length of each half and the center, found by walking inward from both ends."""
    known = _HALF_CACHE.get(n)
    if known is not None:
        return known
    previous = _HALF_CACHE.get(n - 2)
    if previous is not None:
        # two more elements: one more on each side, the center moves right by one
        half, center = previous
        known = (half + 1, None if center is None else center + 1)
    else:
        half, lo, hi = 0, 0, n - 1
        while lo < hi:
            half += 1
            lo += 1
            hi -= 1
        known = (half, lo if lo == hi else None)
    _HALF_CACHE[n] = known
    return known


_HALF_CACHE = {0: (0, None), 1: (0, 0)}


def oracle_split(n: int, policy: SplitPolicy) -> Partition:
    """Reference partition of ``[0, n)`` constructed case by case."""
    if n < 0:
        raise DomainError(f"array length must be non-negative, got {n}")
    if n == 0:
        return Partition(Range(0, 0), None, Range(0, 0), policy)
    half, center = _halves(n)
    if center is not None:
        # left part | center | right part
        left, right = Range(0, center), Range(center + 1, n)
        if policy is SplitPolicy.LEFT_PLUS:
            return Partition(Range(0, center + 1), None, right, policy)
        if policy is SplitPolicy.RIGHT_PLUS:
            return Partition(left, None, Range(center, n), policy)
        return Partition(left, center, right, policy)
    # left part | right part; el is the last of the left, rs the first of the right
    el, rs = half - 1, half
    if policy is SplitPolicy.CUT_LEFT:
        return Partition(Range(0, el), el, Range(rs, n), policy)
    if policy is SplitPolicy.CUT_RIGHT:
        return Partition(Range(0, rs), rs, Range(rs + 1, n), policy)
    return Partition(Range(0, half), None, Range(half, n), policy)


def _size_law_failure(p: Partition, n: int) -> Optional[str]:
    nl, nr = len(p.left), len(p.right)
    policy = p.policy
    if policy is SplitPolicy.NATURAL:
        half, _ = _halves(n)
        if nl != half or nr != half:
            return f"natural halves {nl}, {nr} != {half}"
    elif policy in (SplitPolicy.LEFT_PLUS, SplitPolicy.RIGHT_PLUS):
        if abs(nl - nr) > 1:
            return f"imbalance {nl} vs {nr}"
        if nl + nr != n:
            return f"halves sum to {nl + nr}, not {n}"
        bigger = nl >= nr if policy is SplitPolicy.LEFT_PLUS else nr >= nl
        if not bigger:
            return f"center on the wrong side: {nl} vs {nr}"
    elif n >= 1 and nl + nr != n - 1:
        return f"cut halves sum to {nl + nr}, not {n - 1}"
    return None


def _coverage_failure(p: Partition, n: int) -> Optional[str]:
    # left, excluded, right must tile [0, n) in order with no gap or overlap
    cursor = 0
    pieces = [p.left] if p.excluded is None else [p.left, Range(p.excluded, p.excluded + 1)]
    for piece in pieces + [p.right]:
        if piece.lo != cursor:
            return f"piece {piece} does not start at {cursor}"
        cursor = piece.hi
    if cursor != n:
        return f"pieces end at {cursor}, not {n}"
    if n <= SMALL_N:
        seen = [0] * n
        members = list(p.left.indices()) + list(p.right.indices())
        if p.excluded is not None:
            members.append(p.excluded)
        for i in members:
            if not 0 <= i < n:
                return f"index {i} outside [0, {n})"
            seen[i] += 1
        if any(c != 1 for c in seen):
            return f"coverage counts {seen}"
    return None


def verify_partitions(
    max_n: int,
    policies: Iterable[SplitPolicy] = ALL_POLICIES,
    split: Callable[[int, SplitPolicy], Partition] = split_n,
) -> VerificationReport:
    """Compare ``split`` with :func:`oracle_split` for every ``n <= max_n``.

    Besides equality, each partition must be disjoint, cover ``[0, n)``
    exactly and obey its policy's size law.
    """
    policies = tuple(policies)
    report = VerificationReport("partitions")
    with timed(report):
        for n in range(max_n + 1):
            for policy in policies:
                report.checked += 1
                case = f"n={n} {policy.value}"
                try:
                    got = split(n, policy)
                except Exception as exc:  # a broken split is a finding, not a crash
                    report.fail(case, "a partition", f"{type(exc).__name__}: {exc}")
                    continue
                want = oracle_split(n, policy)
                if got != want:
                    report.fail(case, want, got)
                    continue
                problem = _coverage_failure(got, n) or _size_law_failure(got, n)
                if problem:
                    report.fail(case, "partition laws", problem)
    return report


def linear_search(a: Sequence[int], t: int) -> Optional[int]:
    for i, x in enumerate(a):
        if x == t:
            return i
    return None


def enumerate_sorted_arrays(max_n: int, alphabet_size: int) -> Iterator[List[int]]:
    """Every non-decreasing list of length ``0..max_n`` over ``range(alphabet_size)``."""
    if alphabet_size < 1:
        raise DomainError("alphabet must have at least one symbol")
    for n in range(max_n + 1):
        for combo in itertools.combinations_with_replacement(range(alphabet_size), n):
            yield list(combo)


def words(text: Sequence[str]) -> List[Range]:
    """Index ranges of the maximal runs of non-space characters."""
    runs = []
    start = None
    for i, ch in enumerate(text):
        if ch.isspace():
            if start is not None:
                runs.append(Range(start, i))
                start = None
        elif start is None:
            start = i
    if start is not None:
        runs.append(Range(start, len(text)))
    return runs


def brute_word_cross(text: Sequence[str]) -> bool:
    """Does some word own positions in the left half, the right half and any center?"""
    n = len(text)
    half, center = _halves(n) if n else (0, None)
    if center is None:
        left, right = set(range(0, half)), set(range(half, n))
        needed = [left, right]
    else:
        needed = [set(range(0, center)), {center}, set(range(center + 1, n))]
    for word in words(text):
        spots = set(word.indices())
        if all(spots & region for region in needed):
            return True
    return False
