import math
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from rangesplit.errors import ExprSyntaxError, IntDivisionError
from rangesplit.intdiv import (
    BinOp,
    Bindings,
    DivMode,
    Num,
    RangeExpr,
    Var,
    check_equiv,
    check_identity,
    eval_expr,
    eval_range,
    idiv,
    parse_expr,
    parse_range,
    to_text,
)
from rangesplit.ranges import Range

FLOOR, TRUNC = DivMode.FLOOR, DivMode.TRUNC


def exact_floor(a, d):
    return math.floor(Fraction(a, d))


def exact_trunc(a, d):
    return math.trunc(Fraction(a, d))


@pytest.mark.parametrize("a, d, mode, expected", [(-1, 2, FLOOR, -1), (-1, 2, TRUNC, 0), (5, 2, FLOOR, 2), (5, 2, TRUNC, 2)])
def test_idiv_examples(a, d, mode, expected):
    assert idiv(a, d, mode) == expected


def test_idiv_by_zero():
    with pytest.raises(IntDivisionError):
        idiv(3, 0, FLOOR)


@given(st.integers(-10**6, 10**6), st.integers(-50, 50).filter(bool))
def test_idiv_matches_rational_rounding(a, d):
    assert idiv(a, d, FLOOR) == exact_floor(a, d)
    assert idiv(a, d, TRUNC) == exact_trunc(a, d)


def test_modes_agree_on_positive_or_exact():
    for a in range(-1000, 1001):
        for d in (1, 2, 3, 7):
            if a > 0 or a % d == 0:
                assert idiv(a, d, FLOOR) == idiv(a, d, TRUNC)


def test_floor_law():
    for a in range(-1000, 1001):
        for d in (1, 2, 3, 7):
            q = idiv(a, d, FLOOR)
            assert d * q <= a < d * q + d


def test_trunc_law():
    for a in range(-1000, 1001):
        for d in (-7, -3, -2, -1, 1, 2, 3, 7):
            q = idiv(a, d, TRUNC)
            assert abs(q) == idiv(abs(a), abs(d), TRUNC)
            if q:
                assert (q > 0) == (a * d > 0)


def test_parse_examples():
    assert parse_expr("(n+1)/2") == BinOp("/", BinOp("+", Var("n"), Num(1)), Num(2))
    assert parse_expr("n-n/2") == BinOp("-", Var("n"), BinOp("/", Var("n"), Num(2)))
    assert parse_expr(" n - 1 - 1 ") == BinOp("-", BinOp("-", Var("n"), Num(1)), Num(1))


@pytest.mark.parametrize(
    "text, position",
    [("n//2", 2), ("x+1", 0), ("(n+1", 4), ("n+", 2), ("2 $ n", 2), ("n i", 2)],
)
def test_parse_errors_carry_position(text, position):
    with pytest.raises(ExprSyntaxError) as err:
        parse_expr(text)
    assert err.value.position == position


def test_parse_range_examples():
    assert parse_range("0 <= i < (n+1)/2") == RangeExpr(Num(0), "<=", "<", parse_expr("(n+1)/2"))
    assert parse_range("n/2-1 < i < n") == RangeExpr(parse_expr("n/2-1"), "<", "<", Var("n"))


@pytest.mark.parametrize("text", ["0 <= j < n", "0 <= n < i", "0 <= i", "0 <= i < n < 5", "0 = i < n"])
def test_parse_range_errors(text):
    with pytest.raises(ExprSyntaxError):
        parse_range(text)


FIXTURES = [
    "(n-1)/2", "n/2", "(n+1)/2", "(s-1)/2", "s/2", "(s+1)/2", "n/2-1", "n/2+1", "s/2-1", "s/2+1",
    "(n-2)/2", "(n-1)/2+1", "n-n/2", "n-1-(n+1)/2", "n-(n+1)/2", "(m+1)/2", "m/2+1", "b+(e-b)/2",
    "(b+(e+1))/2", "(b+(e+1)-1)/2+1", "b+n/2+1", "(-1)/2", "0-n", "2*n-(n-(1-n))", "n/2*2",
]


@pytest.mark.parametrize("text", FIXTURES)
def test_print_parse_round_trip(text):
    tree = parse_expr(text)
    printed = to_text(tree)
    assert parse_expr(printed) == tree
    assert to_text(parse_expr(printed)) == printed


def test_range_round_trip():
    rx = parse_range("n/2-1 < i <= (n+1)/2")
    assert parse_range(str(rx)) == rx


@pytest.mark.parametrize(
    "text, n, mode, expected",
    [("(n+1)/2", 5, FLOOR, 3), ("(s-1)/2", 5, FLOOR, 1), ("(n-1)/2+1", 0, TRUNC, 1), ("(n-1)/2+1", 0, FLOOR, 0)],
)
def test_eval_examples(text, n, mode, expected):
    assert eval_expr(text, Bindings(n), mode) == expected


def test_derived_bindings():
    env = Bindings(6, b=10)
    assert (env.e, env.s, env.m) == (15, 5, 25)
    assert eval_expr("b+(e-b)/2", env) == eval_expr("m/2", env) == 12


def test_eval_division_by_zero():
    with pytest.raises(IntDivisionError):
        eval_expr("n/(n-5)", Bindings(5))


@pytest.mark.parametrize(
    "text, n, expected",
    [("0 <= i < n/2", 4, Range(0, 2)), ("0 <= i <= n/2", 1, Range(0, 1)), ("n/2 < i < n", 2, Range(2, 2))],
)
def test_eval_range_examples(text, n, expected):
    assert eval_range(text, Bindings(n), FLOOR) == expected


def test_check_equiv_examples():
    domain = range(0, 101)
    assert check_equiv("(n-2)/2", "n/2-1", domain, FLOOR).holds
    trunc = check_equiv("(n-2)/2", "n/2-1", domain, TRUNC)
    assert [(c.binding["n"], c.left, c.right) for c in trunc.counterexamples] == [(1, 0, -1)]
    trunc = check_equiv("(n-1)/2+1", "(n+1)/2", domain, TRUNC)
    assert [(c.binding["n"], c.left, c.right) for c in trunc.counterexamples] == [(0, 1, 0)]
    assert check_equiv("0 <= i < n-n/2", "0 <= i < (n+1)/2", range(0, 1001), FLOOR).holds


def test_check_equiv_compares_index_sets_not_bounds():
    # both are empty at n = 0 but with different bounds
    report = check_equiv("0 <= i <= n/2-1", "n/2 < i < n/2", range(0, 2))
    assert report.holds


def test_symmetric_forms_match_selected_forms():
    pairs = [
        ("0 <= i <= n-1-(n+1)/2", "0 <= i < n/2"),
        ("n-n/2 <= i < n", "(n+1)/2 <= i < n"),
        ("0 <= i < n-(n+1)/2", "0 <= i < n/2"),
        ("n-(n+1)/2 <= i < n", "n/2 <= i < n"),
    ]
    for a, b in pairs:
        assert check_equiv(a, b, range(0, 1001), FLOOR).holds, (a, b)


def test_counterexamples_capped_but_counted():
    report = check_equiv("n", "n+1", range(50))
    assert report.failures == 50 and len(report.counterexamples) == 10 and not report.holds


def test_division_errors_become_counterexamples():
    report = check_equiv("n/(n-3)", "n/(n-3)", range(0, 6))
    assert report.failures == 1 and report.counterexamples[0].binding["n"] == 3


def test_reports_merge():
    a = check_equiv("n", "n+1", range(0, 8))
    b = check_equiv("n", "n+1", range(8, 16))
    merged = a.merge(b)
    assert merged.checked == 16 and merged.failures == 16 and len(merged.counterexamples) == 10


def test_identities_small_domains():
    assert check_identity("halves", range(0, 10_001)).holds
    assert check_identity("connecting", range(1, 10_001)).holds
    assert check_identity("kway", range(0, 300), range(1, 20)).holds


def test_connecting_identity_needs_positive_n():
    # at n = 0 floor division gives 0 - (-1) = 1 as well, but the sweep skips it
    report = check_identity("connecting", range(-3, 3))
    assert report.checked == 2


def test_literal_ceiling_reading_of_halves_identity_fails_for_even_n():
    # floor(n/2) + ceil((n+1)/2) = n read literally over the reals fails at every even n
    bad = [n for n in range(0, 20) if n // 2 + -(-(n + 1) // 2) != n]
    assert bad == list(range(0, 20, 2))
