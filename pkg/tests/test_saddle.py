import math
from unittest import TestCase

from chebdisc.base.common import ScaledParams
from chebdisc.base.exceptions import ParameterException
from chebdisc.base.regime import Regime
from chebdisc.saddle import (classify_regime, critical_as, default_delta,
                             kummer_saddles, phase, phase_gradient, radicand, saddles,
                             t0_plus)


class TestTurningPoints(TestCase):
    def test_critical_as(self):
        a_minus, a_plus = critical_as(0.5)
        self.assertAlmostEqual(a_minus, (1.0 - math.sqrt(0.75)) / 2.0, places=15)
        self.assertAlmostEqual(a_minus + a_plus, 1.0, places=15)
        self.assertAlmostEqual(a_minus, 0.0669872981, places=9)
        for b in (1e-4, 0.1, 0.5, 0.9, 0.999):
            a_minus, a_plus = critical_as(b)
            self.assertLess(abs(radicand(a_minus, b)), 1e-15)
            self.assertLess(abs(radicand(a_plus, b)), 1e-14)

    def test_invalid_b(self):
        for b in (0.0, 1.0, -0.2, 1.5):
            with self.assertRaises(ParameterException):
                critical_as(b)

    def test_default_delta(self):
        self.assertEqual(default_delta(), 0.02)
        self.assertAlmostEqual(default_delta(1000), 0.005, places=15)


class TestClassifyRegime(TestCase):
    def test_regimes(self):
        cases = {
            -0.5: Regime.NEGATIVE_A,
            0.0: Regime.MONOTONE,
            0.04: Regime.MONOTONE,
            0.07: Regime.TRANSITION,
            0.4: Regime.OSCILLATORY,
            0.5: Regime.OSCILLATORY,
            0.6: Regime.REFLECTED,
        }
        for a, regime in cases.items():
            self.assertIs(classify_regime(ScaledParams(a, 0.5), 0.02), regime, a)

    def test_invalid_delta(self):
        with self.assertRaises(ParameterException):
            classify_regime(ScaledParams(0.1, 0.5), 0.0)


class TestSaddles(TestCase):
    def test_gradient_vanishes(self):
        for a in (-1.0, -0.5, -1e-3, 0.04, 0.3, 0.5):
            data = saddles(ScaledParams(a, 0.5))
            for t, w in ((data.t_plus, data.w_plus), (data.t_minus, data.w_minus)):
                gradient = phase_gradient(a, 0.5, t, w)
                self.assertLess(max(abs(d) for d in gradient), 1e-10, a)

    def test_real_and_complex_branches(self):
        monotone = saddles(ScaledParams(0.04, 0.5))
        self.assertEqual(monotone.w_plus.imag, 0.0)
        self.assertAlmostEqual((monotone.w_plus + monotone.w_minus).real, 1.0,
                               places=14)
        self.assertIs(monotone.regime, Regime.MONOTONE)
        oscillatory = saddles(ScaledParams(0.3, 0.5))
        self.assertGreater(oscillatory.w_plus.imag, 0.0)
        self.assertAlmostEqual(oscillatory.w_plus.conjugate(), oscillatory.w_minus)
        self.assertAlmostEqual(oscillatory.t_plus.conjugate(), oscillatory.t_minus)

    def test_saddles_coalesce_at_turning_point(self):
        for b in (0.3, 0.5, 0.9):
            a_minus, _ = critical_as(b)
            for side in (-1.0, 1.0):
                gaps = []
                for k in range(1, 9):
                    data = saddles(ScaledParams(a_minus + side * 10.0 ** -k, b))
                    gaps.append(abs(data.w_plus - data.w_minus))
                self.assertEqual(gaps, sorted(gaps, reverse=True), (b, side))
                self.assertLess(gaps[-1], 1e-3, (b, side))
            data = saddles(ScaledParams(a_minus, b))
            self.assertLess(abs(data.w_plus - data.w_minus), 1e-6, b)

    def test_small_negative_a_is_stable(self):
        a, b = -1e-12, 0.5
        data = saddles(ScaledParams(a, b))
        self.assertAlmostEqual(data.w_minus.real / (a * (1.0 - a) / (b * b)), 1.0,
                               places=10)

    def test_t0_plus_recovers_saddles(self):
        for a in (-0.5, 0.04):
            data = saddles(ScaledParams(a, 0.5))
            self.assertAlmostEqual(t0_plus(data.w_plus, 0.5), data.t_plus, places=12)
            self.assertAlmostEqual(t0_plus(data.w_minus, 0.5), data.t_minus,
                                   places=12)
        with self.assertRaises(ParameterException):
            t0_plus(0, 0.5)

    def test_undefined_at_one(self):
        with self.assertRaises(ParameterException):
            saddles(ScaledParams(1.0, 0.5))


class TestPhase(TestCase):
    def test_gradient_matches_finite_differences(self):
        a, b = 0.2, 0.5
        t, w = 0.3 + 0.1j, 0.4 + 0.2j
        h = 1e-6
        d_t, d_w = phase_gradient(a, b, t, w)
        numeric_t = (phase(a, b, t + h, w) - phase(a, b, t - h, w)) / (2 * h)
        numeric_w = (phase(a, b, t, w + h) - phase(a, b, t, w - h)) / (2 * h)
        self.assertLess(abs(d_t - numeric_t), 1e-7)
        self.assertLess(abs(d_w - numeric_w), 1e-7)


class TestKummerSaddles(TestCase):
    def test_real_saddles(self):
        a, eta = 0.1, -1.0
        u_plus, u_minus = kummer_saddles(a, eta)
        self.assertAlmostEqual((u_plus + u_minus).real, 1.0, places=15)
        self.assertLess(u_plus.real, 0.5)
        self.assertAlmostEqual(a / u_plus.real - a / (u_plus.real - 1.0) + eta, 0.0,
                               places=12)

    def test_complex_saddles(self):
        a, eta = 0.1, -0.1
        for u in kummer_saddles(a, eta):
            self.assertNotEqual(u.imag, 0.0)
            self.assertLess(abs(u * (u - 1.0) - a / eta), 1e-14)

    def test_small_a_is_stable(self):
        u_plus, _ = kummer_saddles(1e-14, -0.5)
        self.assertAlmostEqual(u_plus.real / (1e-14 / 0.5), 1.0, places=10)

    def test_nonnegative_eta(self):
        with self.assertRaises(ParameterException):
            kummer_saddles(0.1, 0.0)
