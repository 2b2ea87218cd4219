"""Splitting an array frame into left half, optional excluded index, right half.

Five policies are supported:

* ``NATURAL``: equal halves of ``n/2`` each, an odd center belongs to neither.
* ``LEFT_PLUS`` / ``RIGHT_PLUS``: the odd center joins the left / right half.
* ``CUT_LEFT`` / ``CUT_RIGHT``: always exclude one element: the center when
  ``n`` is odd, otherwise the last of the left half (``el``) or the first of
  the right half (``rs``).

Every boundary is an expression of the form ``(x + add)/2 + offset`` with
floor division, where ``x`` is ``n`` for frames given by length, ``m = b + e``
for frames given by first/last index and ``b + ex`` for ``ex = e + 1``.  The
tables below are the only place those constants live; :mod:`rangesplit.tables`
renders them as text, so the printed formulas are the evaluated ones.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from .errors import DomainError
from .ranges import Range, check_index, rebase


class SplitPolicy(enum.Enum):
    NATURAL = "natural"
    LEFT_PLUS = "leftplus"
    RIGHT_PLUS = "rightplus"
    CUT_LEFT = "cutleft"
    CUT_RIGHT = "cutright"

    @property
    def label(self) -> str:
        return _LABELS[self]

    @classmethod
    def parse(cls, text: str) -> "SplitPolicy":
        key = text.strip().lower().replace("-", "").replace("_", "").replace("+", "plus")
        for policy in cls:
            if policy.value == key:
                return policy
        raise DomainError(f"unknown split policy {text!r}")


_LABELS = {
    SplitPolicy.NATURAL: "Natural",
    SplitPolicy.LEFT_PLUS: "Left+",
    SplitPolicy.RIGHT_PLUS: "Right+",
    SplitPolicy.CUT_LEFT: "Cut-out left",
    SplitPolicy.CUT_RIGHT: "Cut-out right",
}

ALL_POLICIES = tuple(SplitPolicy)


@dataclass(frozen=True)
class HalfBound:
    """The integer expression ``(x + add) / 2 + offset``."""

    add: int
    offset: int = 0

    def __call__(self, x: int) -> int:
        return (x + self.add) // 2 + self.offset

    def render(self, var: str = "n") -> str:
        if self.add == 0:
            text = f"{var}/2"
        else:
            sign = "+" if self.add > 0 else "-"
            text = f"({var}{sign}{abs(self.add)})/2"
        if self.offset:
            sign = "+" if self.offset > 0 else "-"
            text += f"{sign}{abs(self.offset)}"
        return text


# policy -> (end of left half, start of right half), x = n
LENGTH_BOUNDS: Dict[SplitPolicy, Tuple[HalfBound, HalfBound]] = {
    SplitPolicy.NATURAL: (HalfBound(0), HalfBound(1)),
    SplitPolicy.LEFT_PLUS: (HalfBound(1), HalfBound(1)),
    SplitPolicy.RIGHT_PLUS: (HalfBound(0), HalfBound(0)),
    SplitPolicy.CUT_LEFT: (HalfBound(1, -1), HalfBound(1)),
    SplitPolicy.CUT_RIGHT: (HalfBound(0), HalfBound(0, 1)),
}

# x = m = b + e; the frame is b <= i <= e
ENDPOINT_BOUNDS: Dict[SplitPolicy, Tuple[HalfBound, HalfBound]] = {
    SplitPolicy.NATURAL: (HalfBound(1), HalfBound(0, 1)),
    SplitPolicy.LEFT_PLUS: (HalfBound(0, 1), HalfBound(0, 1)),
    SplitPolicy.RIGHT_PLUS: (HalfBound(1), HalfBound(1)),
    SplitPolicy.CUT_LEFT: (HalfBound(0), HalfBound(0, 1)),
    SplitPolicy.CUT_RIGHT: (HalfBound(1), HalfBound(1, 1)),
}

# x = b + ex with ex = e + 1; only the policies with a closed form in b, ex
EXCLUSIVE_END_BOUNDS: Dict[SplitPolicy, Tuple[HalfBound, HalfBound]] = {
    SplitPolicy.NATURAL: (HalfBound(0), HalfBound(-1, 1)),
    SplitPolicy.RIGHT_PLUS: (HalfBound(0), HalfBound(0)),
    SplitPolicy.CUT_RIGHT: (HalfBound(0), HalfBound(0, 1)),
}


@dataclass(frozen=True)
class Partition:
    left: Range
    excluded: Optional[int]
    right: Range
    policy: SplitPolicy

    def rebase(self, b: int) -> "Partition":
        excluded = None if self.excluded is None else check_index(self.excluded + b)
        return Partition(rebase(self.left, b), excluded, rebase(self.right, b), self.policy)

    def to_record(self) -> dict:
        return {
            "policy": self.policy.value,
            "left": self.left.as_list(),
            "excluded": self.excluded,
            "right": self.right.as_list(),
        }

    def __str__(self) -> str:
        ex = "-" if self.excluded is None else str(self.excluded)
        return f"{self.policy.value}: left {self.left} excluded {ex} right {self.right}"


@dataclass(frozen=True)
class Landmarks:
    el: int
    center: Optional[int]
    rs: int


def _check_length(n: int) -> None:
    if n < 0:
        raise DomainError(f"array length must be non-negative, got {n}")


def _assemble(lo: int, hi: int, left_end: int, right_start: int, policy) -> Partition:
    # Clip into the frame; only the cut policies at n = 0 need it.
    left_end = min(max(left_end, lo), hi)
    right_start = min(max(right_start, left_end), hi)
    gap = right_start - left_end
    if gap not in (0, 1):
        raise AssertionError(f"{policy}: gap of {gap} between halves")
    excluded = left_end if gap == 1 else None
    return Partition(Range(lo, left_end), excluded, Range(right_start, hi), policy)


def boundary(n: int, policy: SplitPolicy) -> Tuple[int, int]:
    """``(end of left half, start of right half)`` for a 0-based frame of length ``n``.

    This is the cheap form used inside loops; for ``n >= 1`` no clipping is
    involved, so callers may offset it by their own base.
    """
    left_end, right_start = LENGTH_BOUNDS[policy]
    return left_end(n), right_start(n)


def split_n(n: int, policy: SplitPolicy) -> Partition:
    """Split ``0 <= i < n``."""
    _check_length(n)
    left_end, right_start = boundary(n, policy)
    return _assemble(0, n, left_end, right_start, policy)


def split_based(b: int, n: int, policy: SplitPolicy) -> Partition:
    """Split ``b <= i < b + n``."""
    _check_length(n)
    check_index(b)
    hi = check_index(b + n)
    left_end, right_start = boundary(n, policy)
    return _assemble(b, hi, check_index(b + left_end), check_index(b + right_start), policy)


def split_be(b: int, e: int, policy: SplitPolicy) -> Partition:
    """Split ``b <= i <= e`` using only ``m = b + e``; needs ``e >= b``."""
    if e < b:
        raise DomainError(f"last index {e} precedes first index {b}; use split_based for empty frames")
    check_index(b)
    check_index(e)
    m = b + e  # exact, may exceed the index width; only results are checked
    left_end, right_start = ENDPOINT_BOUNDS[policy]
    return _assemble(b, check_index(e + 1), check_index(left_end(m)), check_index(right_start(m)), policy)


def split_bex(b: int, ex: int, policy: SplitPolicy) -> Partition:
    """Split ``b <= i < ex`` using only ``b + ex``."""
    if policy not in EXCLUSIVE_END_BOUNDS:
        raise DomainError(f"{policy.value} has no (b, e+1) form")
    if ex < b:
        raise DomainError(f"end {ex} precedes start {b}")
    check_index(b)
    check_index(ex)
    x = b + ex
    left_end, right_start = EXCLUSIVE_END_BOUNDS[policy]
    return _assemble(b, ex, check_index(left_end(x)), check_index(right_start(x)), policy)


def landmarks(n: int) -> Landmarks:
    """Last index of the left half, center (odd n only), first of the right half."""
    if n < 2:
        raise DomainError(f"landmarks need n >= 2, got {n}")
    center = n // 2 if n % 2 else None
    return Landmarks(el=n // 2 - 1, center=center, rs=(n + 1) // 2)


def center_band(n: int) -> Range:
    """``n/2 <= i < (n+1)/2``: the center for odd ``n``, empty otherwise."""
    _check_length(n)
    return Range(n // 2, (n + 1) // 2)


def center_index(n: int) -> Optional[int]:
    band = center_band(n)
    return None if band.empty else band.lo


def center_window(n: int, k: int) -> Range:
    """``k`` elements on each side of the center, plus the center itself if any."""
    _check_length(n)
    if k < 0:
        raise DomainError(f"negative window width {k}")
    lo = n // 2 - k
    hi = (n + 1) // 2 + k
    if lo < 0 or hi > n:
        raise DomainError(f"center window of half-width {k} does not fit n={n}")
    return Range(lo, hi)


def kway_split(n: int, k: int) -> List[Range]:
    """Cut ``[0, n)`` into ``k`` contiguous parts of length ``(n + r) / k``, r = 0..k-1."""
    _check_length(n)
    if k < 1:
        raise DomainError(f"number of parts must be >= 1, got {k}")
    cuts = [0]
    for r in range(k):
        cuts.append(cuts[-1] + (n + r) // k)
    if cuts[-1] != n:
        raise AssertionError(f"k-way parts cover {cuts[-1]} of {n}")
    return [Range(lo, hi) for lo, hi in zip(cuts, cuts[1:])]
