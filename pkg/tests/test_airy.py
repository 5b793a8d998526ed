"""Tests for the Airy moments and the convergence report."""

from decimal import Decimal
from fractions import Fraction

import pytest

from parkstat.airy import airy_moments, asymptotic_check

# independently known values of the first six moments; they pin the
# transcription of the moment recurrence
PINNED = [
    (Fraction(1, 4), 1),
    (Fraction(5, 12), 0),
    (Fraction(15, 128), 1),
    (Fraction(221, 1008), 0),
    (Fraction(565, 8192), 1),
    (Fraction(82825, 576576), 0),
]


def test_first_six_moments_pinned():
    moments = airy_moments(6)
    assert [(m.r, m.h) for m in moments] == PINNED


def test_parity_invariant():
    for m in airy_moments(12):
        assert m.h == m.k % 2
        assert m.r > 0


def test_moment_decimals():
    m1, m2 = airy_moments(2)
    assert str(m1.decimal(12)).startswith("0.6266570686")
    assert str(m2.decimal(12)).startswith("0.4166666666")


def test_airy_moments_validation():
    with pytest.raises(ValueError):
        airy_moments(0)


def test_asymptotic_check_small_grid():
    report = asymptotic_check(2, [9, 36, 144])
    assert report.ok is False or report.ok is True  # structural smoke
    assert len(report.rows) == 6
    for summary in report.per_k:
        assert summary.decreasing  # deviations shrink as n quadruples


def test_asymptotic_check_ratio_value_at_tiny_n():
    # second moment at n = 3: E_2 = 3/4 against e_2 * 27 = 45/4, ratio 1/15
    report = asymptotic_check(2, [3, 12])
    row = next(r for r in report.rows if r.k == 2 and r.n == 3)
    assert row.ratio == "0.066666666666666666667"  # 1/15 at 20 digits
    assert row.deviation.startswith("0.9333333333")


def test_asymptotic_check_deviation_halves_when_n_quadruples():
    # the n^(-1/2) error scale: dev(4n)/dev(n) should sit in (0.3, 0.8)
    report = asymptotic_check(2, [50, 200])
    for k in (1, 2):
        devs = [Decimal(r.deviation) for r in report.rows if r.k == k]
        ratio = devs[1] / devs[0]
        assert Decimal("0.3") < ratio < Decimal("0.8"), (k, ratio)


def test_asymptotic_check_grid_validation():
    with pytest.raises(ValueError):
        asymptotic_check(2, [100, 50])
    with pytest.raises(ValueError):
        asymptotic_check(2, [50, 50])
    with pytest.raises(ValueError):
        asymptotic_check(0, [10])


def test_report_serialization():
    report = asymptotic_check(2, [4, 16])
    csv = report.to_csv()
    lines = csv.strip().split("\n")
    assert lines[0] == "k,n,ratio,deviation"
    assert len(lines) == 5
    obj = report.to_json_obj()
    assert obj["k_max"] == 2
    assert obj["moments"][0] == {"k": 1, "r": "1/4", "h": 1}
    assert len(obj["rows"]) == 4
