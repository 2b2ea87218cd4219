"""Divide-and-conquer algorithms written against the splitter's boundaries.

All frames are tracked as ``(b, n)``: first index and length.  Moving the
start up by some amount always shrinks the length by the same amount.
"""

from __future__ import annotations

import enum
from typing import Callable, List, Optional, Sequence

from .errors import ContractError
from .splitter import SplitPolicy, boundary


class SearchVariant(enum.Enum):
    RIGHT_PLUS = "rightplus"
    CUT_OUT = "cutout"
    COMPACT = "compact"


Observer = Optional[Callable[[int, int], None]]


def _check_sorted(a: Sequence[int]) -> None:
    for i in range(1, len(a)):
        if a[i - 1] > a[i]:
            raise ContractError(f"input not sorted at index {i}: {a[i - 1]} > {a[i]}")


def _search_right_plus(a, n, t, observe):
    if n <= 0:
        return None
    b = 0
    while n > 1:
        if observe:
            observe(b, n)
        left_end, right_start = boundary(n, SplitPolicy.RIGHT_PLUS)
        # the right half of a Right+ split is never empty, so b + right_start < b + n
        if a[b + right_start] > t:
            n = left_end
        else:
            b += right_start
            n -= right_start
    return b if a[b] == t else None


def _search_cut_out(a, n, t, observe):
    b = 0
    while n > 0:
        if observe:
            observe(b, n)
        left_end, right_start = boundary(n, SplitPolicy.CUT_RIGHT)
        r = b + left_end
        if a[r] == t:
            return r
        if a[r] < t:
            b += right_start
            n -= right_start
        else:
            n = left_end
    return None


def _search_compact(a, n, t, observe):
    b = 0
    while n > 0:
        if observe:
            observe(b, n)
        r = b + n // 2
        if a[r] == t:
            return r
        if a[r] < t:
            b = r + 1
            n -= 1
        # (n-1)/2 on the right branch, n/2 on the left
        n //= 2
    return None


_SEARCHES = {
    SearchVariant.RIGHT_PLUS: _search_right_plus,
    SearchVariant.CUT_OUT: _search_cut_out,
    SearchVariant.COMPACT: _search_compact,
}


def binary_search(
    a: Sequence[int],
    t: int,
    variant: SearchVariant = SearchVariant.RIGHT_PLUS,
    *,
    check_sorted: bool = False,
    observe: Observer = None,
) -> Optional[int]:
    """Index of some element equal to ``t`` in sorted ``a``, or ``None``.

    Which of several equal elements is found depends on the variant.  With
    ``check_sorted`` the precondition is verified first (O(n)).  ``observe``
    is called with the frame ``(b, n)`` at the top of every loop iteration.
    """
    if check_sorted:
        _check_sorted(a)
    return _SEARCHES[variant](a, len(a), t, observe)


def merge_sort(a: Sequence[int]) -> List[int]:
    """Sorted copy of ``a``, halving frames with the Left+ split."""
    items = list(a)
    scratch = [0] * len(items)

    def sort(b: int, n: int) -> None:
        if n < 2:
            return
        mid, _ = boundary(n, SplitPolicy.LEFT_PLUS)
        sort(b, mid)
        sort(b + mid, n - mid)
        i, j, end_left, end = b, b + mid, b + mid, b + n
        k = b
        while i < end_left and j < end:
            if items[j] < items[i]:
                scratch[k] = items[j]
                j += 1
            else:
                scratch[k] = items[i]
                i += 1
            k += 1
        while i < end_left:
            scratch[k] = items[i]
            i += 1
            k += 1
        while j < end:
            scratch[k] = items[j]
            j += 1
            k += 1
        items[b:end] = scratch[b:end]

    sort(0, len(items))
    return items


def quicksort(a: Sequence[int]) -> List[int]:
    """Sorted copy of ``a`` using first-element pivots.

    Frames are ``(b, n)``.  After partitioning, the pivot sits at offset
    ``k``; the left part is the frame ``(b, k)`` and the right part starts at
    ``b + k + 1`` with length ``n - k - 1``.  An explicit stack replaces the
    recursion so already-sorted input cannot exhaust the call stack.
    """
    items = list(a)
    stack = [(0, len(items))]
    while stack:
        b, n = stack.pop()
        if n <= 0:
            continue
        t = items[b]
        k = 0
        for i in range(1, n):
            if items[b + i] < t:
                # the pivot always sits at b + k; rotate the smaller item under it
                items[b + k], items[b + i] = items[b + i], items[b + k]
                k += 1
                items[b + k], items[b + i] = items[b + i], items[b + k]
        items[b + k] = t
        stack.append((b + k + 1, n - k - 1))
        stack.append((b, k))
    return items


def chop_points(a: Sequence[int]) -> List[int]:
    """Indices ``j`` with everything left of ``j`` <= ``a[j]`` <= everything right of it."""
    n = len(a)
    if n == 0:
        return []
    suffix_min = list(a)
    for i in range(n - 2, -1, -1):
        suffix_min[i] = min(a[i], suffix_min[i + 1])
    points = []
    prefix_max = None
    for j in range(n):
        if (prefix_max is None or prefix_max <= a[j]) and (j == n - 1 or a[j] <= suffix_min[j + 1]):
            points.append(j)
        prefix_max = a[j] if prefix_max is None else max(prefix_max, a[j])
    return points


def word_crosses_center(text: Sequence[str]) -> bool:
    """True when one word spans both halves (and the center, for odd length).

    Only the positions ``n/2 - 1 <= i <= (n+1)/2`` are inspected: two of
    them for even ``n``, three for odd ``n``.
    """
    n = len(text)
    if n < 2:
        return False
    return all(not text[i].isspace() for i in range(n // 2 - 1, (n + 1) // 2 + 1))
