"""Exhaustive sweeps that pit the formula modules against the oracle.

Each function returns a :class:`~rangesplit.oracle.VerificationReport`;
:func:`run_all` is what ``rangesplit verify`` executes.
"""

from __future__ import annotations

import itertools
import random
from typing import Iterable, List, Optional, Sequence

from . import algorithms, intdiv, oracle, splitter
from .intdiv import Bindings, DivMode
from .oracle import VerificationReport, timed
from .ranges import drop_back, drop_front, mirror_index
from .splitter import ALL_POLICIES, SplitPolicy

DEFAULT_SEED = 20141019


class CheckedArray:
    """Read-only sequence that records every out-of-bounds read.

    Plain lists would quietly accept ``a[-1]``; this wrapper refuses it.
    """

    def __init__(self, items: Sequence[int]):
        self.items = list(items)
        self.bad_reads: List[int] = []
        self.reads = 0

    def __len__(self):
        return len(self.items)

    def __getitem__(self, i):
        self.reads += 1
        if not isinstance(i, int) or not 0 <= i < len(self.items):
            self.bad_reads.append(i)
            raise IndexError(f"read at {i} outside [0, {len(self.items)})")
        return self.items[i]


def partitions(max_n: int = 10000, policies: Iterable[SplitPolicy] = ALL_POLICIES) -> VerificationReport:
    return oracle.verify_partitions(max_n, policies)


def expression_table(max_n: int = 2000, mode: DivMode = DivMode.FLOOR) -> VerificationReport:
    """Re-evaluate the rendered boundary formulas through the DSL and compare with the oracle."""
    from .tables import split_range_texts

    report = VerificationReport(f"expression table ({mode.value})")
    parsed = {
        policy: tuple(intdiv.parse_range(t) for t in split_range_texts(policy))
        for policy in ALL_POLICIES
    }
    with timed(report):
        for n in range(max_n + 1):
            env = Bindings(n)
            for policy, (left_rx, right_rx) in parsed.items():
                report.checked += 1
                want = oracle.oracle_split(n, policy)
                left = intdiv.eval_range(left_rx, env, mode)
                right = intdiv.eval_range(right_rx, env, mode)
                got = (intdiv.index_set(left), intdiv.index_set(right))
                if got != (intdiv.index_set(want.left), intdiv.index_set(want.right)):
                    report.fail(f"n={n} {policy.value}", (want.left, want.right), (left, right))
    return report


def identities(max_n: int = 10**6, kway_n: int = 5000, max_k: int = 64) -> VerificationReport:
    report = VerificationReport("identities")
    with timed(report):
        sweeps = [
            ("halves", intdiv.check_identity("halves", range(0, max_n + 1))),
            ("connecting", intdiv.check_identity("connecting", range(1, max_n + 1))),
            ("kway", intdiv.check_identity("kway", range(0, kway_n + 1), range(1, max_k + 1))),
        ]
        for name, sweep in sweeps:
            report.checked += sweep.checked
            for cx in sweep.counterexamples:
                report.fail(f"{name} {cx.binding}", cx.right, cx.left)
    return report


EQUIVALENCE_PAIRS = (("(n-2)/2", "n/2-1"), ("(n-1)/2+1", "(n+1)/2"))


def equivalences(max_n: int = 100) -> VerificationReport:
    """Floor division: both pairs agree everywhere.  Truncation: exactly one failing n each."""
    report = VerificationReport("equivalences")
    expected_trunc_failures = {EQUIVALENCE_PAIRS[0]: [1], EQUIVALENCE_PAIRS[1]: [0]}
    with timed(report):
        for pair in EQUIVALENCE_PAIRS:
            floor = intdiv.check_equiv(*pair, range(0, max_n + 1), DivMode.FLOOR)
            trunc = intdiv.check_equiv(*pair, range(0, max_n + 1), DivMode.TRUNC)
            report.checked += floor.checked + trunc.checked
            if not floor.holds:
                report.fail(f"{pair} floor", "holds", [str(c) for c in floor.counterexamples])
            got = [c.binding["n"] for c in trunc.counterexamples]
            if got != expected_trunc_failures[pair]:
                report.fail(f"{pair} trunc", expected_trunc_failures[pair], got)
    return report


def duality(max_n: int = 2000) -> VerificationReport:
    """Left+ minus its first element is Right+ of the shorter frame, and vice versa."""
    report = VerificationReport("duality")
    L, R = SplitPolicy.LEFT_PLUS, SplitPolicy.RIGHT_PLUS
    with timed(report):
        for n in range(1, max_n + 1):
            report.checked += 2
            lp = splitter.split_n(n, L)
            got = (drop_front(lp.left, 1), lp.right)
            rp_short = splitter.split_based(1, n - 1, R)
            if got != (rp_short.left, rp_short.right):
                report.fail(f"n={n} left+ minus first", rp_short, got)

            rp = splitter.split_n(n, R)
            got = (rp.left, drop_back(rp.right, 1))
            lp_short = splitter.split_n(n - 1, L)
            if got != (lp_short.left, lp_short.right):
                report.fail(f"n={n} right+ minus last", lp_short, got)
    return report


def cut_derivation(max_n: int = 2000) -> VerificationReport:
    """Cut-out right is Right+ without the first of its right half; cut-out left is
    Left+ without the last of its left half."""
    report = VerificationReport("cut derivation")
    with timed(report):
        for n in range(1, max_n + 1):
            report.checked += 2
            rp = splitter.split_n(n, SplitPolicy.RIGHT_PLUS)
            cr = splitter.split_n(n, SplitPolicy.CUT_RIGHT)
            if (cr.left, cr.excluded, cr.right) != (rp.left, rp.right.lo, drop_front(rp.right, 1)):
                report.fail(f"n={n} cut right", rp, cr)
            lp = splitter.split_n(n, SplitPolicy.LEFT_PLUS)
            cl = splitter.split_n(n, SplitPolicy.CUT_LEFT)
            if (cl.left, cl.excluded, cl.right) != (drop_back(lp.left, 1), lp.left.hi - 1, lp.right):
                report.fail(f"n={n} cut left", lp, cl)
    return report


def mirror(max_n: int = 2000) -> VerificationReport:
    """Reversal maps the Natural left half onto the Natural right half."""
    report = VerificationReport("mirror")
    with timed(report):
        for n in range(0, max_n + 1):
            report.checked += 1
            p = splitter.split_n(n, SplitPolicy.NATURAL)
            image = sorted(mirror_index(i, n) for i in p.left.indices())
            if image != list(p.right.indices()):
                report.fail(f"n={n}", p.right, image)
    return report


def coordinates(b_range: Iterable[int] = range(-50, 51), n_range: Iterable[int] = range(1, 201)) -> VerificationReport:
    """All four coordinate forms give the same partition of the same frame."""
    report = VerificationReport("coordinates")
    n_values = list(n_range)
    with timed(report):
        for b in b_range:
            for n in n_values:
                for policy in ALL_POLICIES:
                    reference = splitter.split_n(n, policy).rebase(b)
                    forms = [("based", splitter.split_based(b, n, policy))]
                    if n >= 1:
                        forms.append(("be", splitter.split_be(b, b + n - 1, policy)))
                    if policy in splitter.EXCLUSIVE_END_BOUNDS:
                        forms.append(("bex", splitter.split_bex(b, b + n, policy)))
                    for name, got in forms:
                        report.checked += 1
                        if got != reference:
                            report.fail(f"b={b} n={n} {policy.value} {name}", reference, got)
    return report


def kway(max_n: int = 5000, max_k: int = 64) -> VerificationReport:
    report = VerificationReport("kway")
    with timed(report):
        for k in range(1, max_k + 1):
            for n in range(0, max_n + 1):
                report.checked += 1
                parts = splitter.kway_split(n, k)
                sizes = [p.hi - p.lo for p in parts]
                tiles = all(a.hi == b.lo for a, b in zip(parts, parts[1:]))
                ok = (
                    len(parts) == k
                    and tiles
                    and parts[0].lo == 0
                    and parts[-1].hi == n
                    and sum(sizes) == n
                    and sizes[-1] - sizes[0] <= 1
                    and sizes == sorted(sizes)
                )
                if not ok:
                    report.fail(f"n={n} k={k}", "balanced tiling", sizes)
    return report


def _search_case(report, a, t, want_found, case):
    for variant in algorithms.SearchVariant:
        report.checked += 1
        checked = CheckedArray(a)
        try:
            r = algorithms.binary_search(checked, t, variant)
        except IndexError as exc:
            report.fail(f"{case} {variant.value}", "in-bounds reads", str(exc))
            continue
        if checked.bad_reads:
            report.fail(f"{case} {variant.value}", "in-bounds reads", checked.bad_reads)
        if (r is not None) != want_found:
            report.fail(f"{case} {variant.value}", want_found, r)
        elif r is not None and a[r] != t:
            report.fail(f"{case} {variant.value}", t, f"a[{r}]={a[r]}")


def search(max_n: int = 10, alphabet: int = 3, random_cases: int = 10_000, random_max_n: int = 64,
           seed: int = DEFAULT_SEED) -> VerificationReport:
    report = VerificationReport(f"binary search (seed {seed})")
    rng = random.Random(seed)
    with timed(report):
        for a in oracle.enumerate_sorted_arrays(max_n, alphabet):
            for t in range(-1, alphabet + 1):
                found = oracle.linear_search(a, t) is not None
                _search_case(report, a, t, found, f"a={a} t={t}")
        for _ in range(random_cases):
            n = rng.randint(0, random_max_n)
            a = sorted(rng.randint(-50, 50) for _ in range(n))
            t = rng.choice(a) if a and rng.random() < 0.5 else rng.randint(-52, 52)
            found = oracle.linear_search(a, t) is not None
            _search_case(report, a, t, found, f"a={a} t={t}")
    return report


def sorting(max_n: int = 8, alphabet: int = 3, random_cases: int = 10_000, random_max_n: int = 256,
            seed: int = DEFAULT_SEED) -> VerificationReport:
    report = VerificationReport(f"sorting (seed {seed})")
    rng = random.Random(seed)

    def cases():
        for n in range(max_n + 1):
            for combo in itertools.product(range(alphabet), repeat=n):
                yield list(combo)
        for _ in range(random_cases):
            n = rng.randint(0, random_max_n)
            yield [rng.randint(-1000, 1000) for _ in range(n)]

    with timed(report):
        for a in cases():
            want = sorted(a)
            for name, fn in (("merge_sort", algorithms.merge_sort), ("quicksort", algorithms.quicksort)):
                report.checked += 1
                got = fn(a)
                if got != want:
                    report.fail(f"{name} {a}", want, got)
    return report


def crossing(max_len: int = 12) -> VerificationReport:
    report = VerificationReport("word crossing")
    with timed(report):
        for n in range(max_len + 1):
            for chars in itertools.product("a ", repeat=n):
                text = "".join(chars)
                report.checked += 1
                want = oracle.brute_word_cross(text)
                got = algorithms.word_crosses_center(text)
                if want != got:
                    report.fail(repr(text), want, got)
    return report


def chop(max_n: int = 7, alphabet: int = 4) -> VerificationReport:
    """chop_points against the quadratic definition on every small array."""
    report = VerificationReport("chop points")
    with timed(report):
        for n in range(max_n + 1):
            for a in itertools.product(range(alphabet), repeat=n):
                report.checked += 1
                want = [j for j in range(n) if all(x <= a[j] for x in a[:j]) and all(x >= a[j] for x in a[j + 1:])]
                got = algorithms.chop_points(a)
                if want != got:
                    report.fail(str(list(a)), want, got)
    return report


def run_all(max_n: int = 10000, policies: Iterable[SplitPolicy] = ALL_POLICIES,
            mode: Optional[DivMode] = None, seed: int = DEFAULT_SEED) -> List[VerificationReport]:
    """The full verification battery, scaled by ``max_n`` where a sweep depends on n."""
    policies = tuple(policies)
    modes = [mode] if mode is not None else list(DivMode)
    small = min(max_n, 2000)
    cases = min(10_000, 100 * max_n)
    reports = [partitions(max_n, policies)]
    reports += [expression_table(small, m) for m in modes]
    reports += [
        identities(min(100 * max_n, 10**6), min(max_n, 5000)),
        equivalences(),
        duality(small),
        cut_derivation(small),
        mirror(small),
        coordinates(range(-50, 51), range(1, min(max_n, 200) + 1)),
        kway(min(max_n, 5000)),
        search(random_cases=cases, seed=seed),
        sorting(random_cases=cases, seed=seed),
        crossing(),
        chop(),
    ]
    return reports
