import math
from decimal import Decimal

import pytest

from rulecover import smooth
from rulecover.highprec import (
    DecimalBackend,
    NATIVE,
    cos_decimal,
    pi_decimal,
    sin_decimal,
    truncate_digits,
)

PI_50 = "3.1415926535897932384626433832795028841971693993751"


def test_pi_matches_reference():
    assert str(pi_decimal(50)) == PI_50


def test_trig_matches_math_module():
    for x in (0.3, 1.1107321367714721, 2.9, -0.7, 6.664392820628832):
        assert abs(float(sin_decimal(Decimal(repr(x)), 30)) - math.sin(x)) < 5e-16
        assert abs(float(cos_decimal(Decimal(repr(x)), 30)) - math.cos(x)) < 5e-16


def test_argument_reduction():
    # 10 full turns away from a small angle
    big = Decimal("0.25") + 20 * pi_decimal(45)
    assert abs(float(sin_decimal(big, 35)) - math.sin(0.25)) < 1e-15
    assert abs(float(cos_decimal(big, 35)) - math.cos(0.25)) < 1e-15


def test_known_sine_value():
    # sin(0.5) to 28 digits, a fixed external reference
    want = Decimal("0.4794255386042030002732879352")
    assert abs(sin_decimal(Decimal("0.5"), 28) - want) <= Decimal("2E-28")


class TestTruncateDigits:
    def test_truncates_not_rounds(self):
        assert truncate_digits(Decimal("0.99999"), 3) == "0.999"
        assert truncate_digits(Decimal("0.123456789"), 4) == "0.1234"

    def test_negative(self):
        assert truncate_digits(Decimal("-0.310039"), 4) == "-0.3100"

    def test_zero(self):
        assert truncate_digits(Decimal(0), 10) == "0"

    def test_integer_part(self):
        assert truncate_digits(Decimal("1.11073213677"), 6) == "1.11073"


class TestBackends:
    def test_native_ops(self):
        assert NATIVE.sin(0.0) == 0.0
        assert NATIVE.num("0.5") == 0.5
        assert NATIVE.pi() == math.pi

    def test_decimal_tolerance(self):
        assert DecimalBackend(40).tolerance() == Decimal("1E-38")

    def test_minimum_digits(self):
        with pytest.raises(ValueError):
            DecimalBackend(2)

    def test_context_precision(self):
        be = DecimalBackend(35)
        with be.context():
            x = Decimal(1) / Decimal(3)
        assert len(str(x).replace("0.", "")) == 35


def test_high_precision_reproduces_native_formulas():
    # 40-digit mode agrees with native mode to 15 digits at the reference
    # angle; nearby angles sit closer to the coefficient formulas' pole and
    # native floats are conditioning-limited to ~14 digits there
    be = DecimalBackend(40)
    for a, rel in ((1.1107321367714721, 5e-15), (1.05, 1e-12), (1.25, 1e-12)):
        co_n = smooth.solve_coefficients(a)
        co_d = smooth.solve_coefficients(Decimal(repr(a)), be)
        for name in ("b0", "b1", "b2", "b"):
            native = getattr(co_n, name)
            dec = float(getattr(co_d, name))
            assert abs(native - dec) <= rel * max(1.0, abs(native))
        area_n = smooth.smooth_area(co_n)
        area_d = float(smooth.smooth_area(co_d, be))
        assert abs(area_n - area_d) <= rel
