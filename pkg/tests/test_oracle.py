from math import comb

import pytest

from rangesplit import oracle
from rangesplit.errors import DomainError
from rangesplit.oracle import (
    VerificationReport,
    brute_word_cross,
    enumerate_sorted_arrays,
    linear_search,
    oracle_split,
    verify_partitions,
    words,
)
from rangesplit.ranges import Range
from rangesplit.splitter import ALL_POLICIES, Partition, SplitPolicy, split_n


def test_oracle_split_examples():
    assert oracle_split(5, SplitPolicy.NATURAL) == Partition(Range(0, 2), 2, Range(3, 5), SplitPolicy.NATURAL)
    assert oracle_split(4, SplitPolicy.CUT_LEFT) == Partition(Range(0, 1), 1, Range(2, 4), SplitPolicy.CUT_LEFT)
    p = oracle_split(0, SplitPolicy.RIGHT_PLUS)
    assert p.left.empty and p.right.empty and p.excluded is None


def test_oracle_split_rejects_negative():
    with pytest.raises(DomainError):
        oracle_split(-1, SplitPolicy.NATURAL)


def test_halves_matches_direct_walk():
    for n in range(0, 300):
        lo, hi, half = 0, n - 1, 0
        while lo < hi:
            lo, hi, half = lo + 1, hi - 1, half + 1
        assert oracle._halves(n) == (half, lo if lo == hi else None)


def test_oracle_never_divides():
    # The oracle module must not import or use the splitter's formulas.
    import inspect

    source = inspect.getsource(oracle)
    assert "//" not in source and "boundary(" not in source


def test_verify_partitions_full_domain():
    report = verify_partitions(10_000, ALL_POLICIES)
    assert report.passed, report.failures[:3]
    assert report.checked == 10_001 * 5


def test_verify_partitions_only_zero():
    report = verify_partitions(0, ALL_POLICIES)
    assert report.passed and report.checked == 5


def broken_split(n, policy):
    if policy is SplitPolicy.LEFT_PLUS and n % 2:
        # center on the wrong side
        wrong = split_n(n, SplitPolicy.RIGHT_PLUS)
        return Partition(wrong.left, wrong.excluded, wrong.right, policy)
    return split_n(n, policy)


def test_harness_catches_broken_policy():
    report = verify_partitions(50, [SplitPolicy.LEFT_PLUS], split=broken_split)
    assert not report.passed
    assert {f.case for f in report.failures} >= {"n=3 leftplus", "n=5 leftplus"}


def test_harness_catches_crash():
    def crashing(n, policy):
        raise RuntimeError("boom")

    report = verify_partitions(2, [SplitPolicy.NATURAL], split=crashing)
    assert len(report.failures) == 3


def test_harness_checks_laws_independently_of_equality(monkeypatch):
    # a wrong oracle and a wrong splitter that agree are still caught by the laws
    def lopsided(n, policy):
        return Partition(Range(0, n), None, Range(n, n), policy)

    monkeypatch.setattr(oracle, "oracle_split", lopsided)
    report = verify_partitions(6, [SplitPolicy.NATURAL], split=lopsided)
    assert {f.case for f in report.failures} == {f"n={n} natural" for n in range(1, 7)}


@pytest.mark.parametrize("a, t, expected", [([1, 3, 5], 5, 2), ([1, 3, 5], 4, None), ([2, 2], 2, 0)])
def test_linear_search(a, t, expected):
    assert linear_search(a, t) == expected


def test_enumerate_sorted_arrays_examples():
    assert list(enumerate_sorted_arrays(2, 2)) == [[], [0], [1], [0, 0], [0, 1], [1, 1]]
    assert list(enumerate_sorted_arrays(0, 5)) == [[]]
    assert list(enumerate_sorted_arrays(3, 1)) == [[], [0], [0, 0], [0, 0, 0]]


@pytest.mark.parametrize("max_n, k", [(10, 3), (6, 4), (4, 5)])
def test_enumerate_sorted_arrays_counts(max_n, k):
    arrays = list(enumerate_sorted_arrays(max_n, k))
    for n in range(max_n + 1):
        of_len = [a for a in arrays if len(a) == n]
        assert len(of_len) == comb(n + k - 1, k - 1)
        assert all(a == sorted(a) for a in of_len)
        assert len({tuple(a) for a in of_len}) == len(of_len)


def test_enumerate_needs_alphabet():
    with pytest.raises(DomainError):
        list(enumerate_sorted_arrays(2, 0))


@pytest.mark.parametrize("text, expected", [("Two cats above", True), ("One cat above", False), ("ab", True)])
def test_brute_word_cross(text, expected):
    assert brute_word_cross(text) is expected


def test_words():
    assert words("  ab c  def") == [Range(2, 4), Range(5, 6), Range(8, 11)]


def test_report_merge_and_record():
    a = VerificationReport("x", 3)
    b = VerificationReport("x", 2)
    b.fail("case", 1, 2)
    merged = a.merge(b)
    assert merged.checked == 5 and not merged.passed
    rec = merged.to_record()
    assert rec["failures"] == 1 and rec["examples"][0]["case"] == "case"
