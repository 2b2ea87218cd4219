"""Half-open integer ranges and the promotion/reduction algebra.

Every boundary description ends up as a :class:`Range` ``[lo, hi)``.  Other
bound styles (``<=`` on either side, ``<`` on the left) are converted with
:func:`make_range`:

    ==========  ==============
    relations   count
    ==========  ==============
    u <= i <= w  w - u + 1
    u <= i <  w  w - u
    u <  i <= w  w - u
    u <  i <  w  w - u - 1
    ==========  ==============
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from .errors import DomainError, IndexOverflowError, RangeUnderflowError

INDEX_BITS = 64
INDEX_MIN = -(1 << (INDEX_BITS - 1))
INDEX_MAX = (1 << (INDEX_BITS - 1)) - 1


def check_index(value: int, what: str = "index") -> int:
    """Return ``value`` unchanged, or raise if it does not fit the index width.

    Python ints never wrap, so every intermediate is computed exactly and
    only results are checked against the public 64-bit width.
    """
    if not INDEX_MIN <= value <= INDEX_MAX:
        raise IndexOverflowError(f"{what} {value} exceeds signed {INDEX_BITS}-bit range")
    return value


class BoundSpec(NamedTuple):
    value: int
    inclusive: bool


@dataclass(frozen=True, slots=True, order=True)
class Range:
    """Half-open interval ``lo <= i < hi``."""

    lo: int
    hi: int

    def __post_init__(self):
        if not INDEX_MIN <= self.lo <= self.hi <= INDEX_MAX:
            if self.lo > self.hi:
                raise DomainError(f"malformed range: lo={self.lo} > hi={self.hi}")
            check_index(self.lo, "range low bound")
            check_index(self.hi, "range high bound")

    def __len__(self) -> int:
        return self.hi - self.lo

    def __contains__(self, i) -> bool:
        return self.lo <= i < self.hi

    def __str__(self) -> str:
        return f"[{self.lo}, {self.hi})"

    @property
    def empty(self) -> bool:
        return self.lo == self.hi

    def indices(self) -> range:
        return range(self.lo, self.hi)

    def as_list(self) -> list:
        return [self.lo, self.hi]


def length(r: Range) -> int:
    return r.hi - r.lo


def contains(r: Range, i: int) -> bool:
    return r.lo <= i < r.hi


def make_range(lo: BoundSpec, hi: BoundSpec) -> Range:
    """Normalize ``lo (<=|<) i (<=|<) hi`` to half-open form.

    A description with no solutions collapses to the empty range at the
    normalized low bound, so ``0 <= i <= -1`` gives ``[0, 0)``.
    """
    low = lo.value if lo.inclusive else lo.value + 1
    high = hi.value + 1 if hi.inclusive else hi.value
    if high < low:
        high = low
    return Range(low, high)


def drop_front(r: Range, g: int) -> Range:
    """Exclude the first ``g`` elements."""
    if g < 0:
        raise DomainError(f"negative count {g}")
    if g > length(r):
        raise RangeUnderflowError(f"cannot drop {g} elements from {r}")
    return Range(r.lo + g, r.hi)


def drop_back(r: Range, h: int) -> Range:
    """Exclude the last ``h`` elements."""
    if h < 0:
        raise DomainError(f"negative count {h}")
    if h > length(r):
        raise RangeUnderflowError(f"cannot drop {h} elements from {r}")
    return Range(r.lo, r.hi - h)


def left_window(p: int, k: int, include_p: bool = False) -> Range:
    """The ``k`` positions immediately left of ``p`` (or ending at ``p``).

    The window is not clipped to any array; use :func:`intersect` for that.
    """
    if k < 0:
        raise DomainError(f"negative window width {k}")
    if include_p:
        return Range(check_index(p - k + 1), check_index(p + 1))
    return Range(check_index(p - k), p)


def right_window(p: int, k: int, include_p: bool = True) -> Range:
    """The ``k`` positions starting at ``p`` (or just after it)."""
    if k < 0:
        raise DomainError(f"negative window width {k}")
    if include_p:
        return Range(p, check_index(p + k))
    return Range(check_index(p + 1), check_index(p + k + 1))


def rebase(r: Range, b: int) -> Range:
    return Range(check_index(r.lo + b), check_index(r.hi + b))


def intersect(r: Range, frame: Range) -> Range:
    lo = max(r.lo, frame.lo)
    hi = min(r.hi, frame.hi)
    if hi < lo:
        # disjoint: keep the empty result inside the frame
        lo = hi = min(max(r.lo, frame.lo), frame.hi)
    return Range(lo, hi)


def mirror_index(i: int, n: int) -> int:
    """Map position ``i`` to its partner ``n - 1 - i`` in the reversed array."""
    if not 0 <= i < n:
        raise DomainError(f"index {i} outside [0, {n})")
    return n - 1 - i


def frame(n: int, b: int = 0) -> Range:
    """The whole array ``b <= i < b + n``."""
    if n < 0:
        raise DomainError(f"negative length {n}")
    return Range(b, check_index(b + n))


def range_from_text(text: str) -> Range:
    """Read the textual form ``[lo, hi)`` back into a :class:`Range`."""
    s = text.strip()
    if not (s.startswith("[") and s.endswith(")")):
        raise DomainError(f"not a half-open range literal: {text!r}")
    parts = s[1:-1].split(",")
    if len(parts) != 2:
        raise DomainError(f"not a half-open range literal: {text!r}")
    return Range(int(parts[0]), int(parts[1]))
