import math
from unittest import TestCase
from unittest.mock import patch

from chebdisc.base.common import ScaledParams
from chebdisc.base.exceptions import (ParameterException, RegimeRefusalException,
                                      SolverException)
from chebdisc.base.regime import Regime
from chebdisc.mapping import (_bisect, eta_limit, gamma_hankel, gamma_limit,
                              gamma_negative_a, k_of_eta, kummer_phase,
                              kummer_real_phase, neg_i_g_of_eta, q_of_a, r_of_a,
                              real_phase, solve_eta_gamma, system_residual)
from chebdisc.saddle import critical_as, kummer_saddles, saddles


class TestScalarFunctions(TestCase):
    def test_k_of_eta_matches_direct_form(self):
        for a, eta in ((0.1, -2.0), (0.02, -0.5), (0.3, -5.0)):
            root = math.sqrt(eta * eta + 4.0 * a * eta)
            direct = 2.0 * a * math.log((eta - root) / (eta + root)) - root
            self.assertAlmostEqual(k_of_eta(a, eta), direct, places=12)

    def test_k_of_eta_endpoints(self):
        self.assertAlmostEqual(k_of_eta(0.1, -0.4), 0.0, places=14)
        self.assertEqual(k_of_eta(0.0, -2.0), -2.0)
        self.assertLess(k_of_eta(0.1, -10.0), k_of_eta(0.1, -5.0))
        with self.assertRaises(ParameterException):
            k_of_eta(0.1, -0.3)

    def test_neg_i_g_of_eta(self):
        a = 0.2
        self.assertAlmostEqual(neg_i_g_of_eta(a, -4.0 * a), -2.0 * math.pi * a,
                               places=14)
        self.assertEqual(neg_i_g_of_eta(a, 0.0), 0.0)
        values = [neg_i_g_of_eta(a, -0.8 + 0.1 * i) for i in range(1, 8)]
        self.assertEqual(values, sorted(values))
        with self.assertRaises(ParameterException):
            neg_i_g_of_eta(a, -1.0)
        with self.assertRaises(ParameterException):
            neg_i_g_of_eta(0.0, -1.0)

    def test_q_of_a_bounds(self):
        b = 0.5
        a_minus, _ = critical_as(b)
        self.assertAlmostEqual(q_of_a(a_minus, b), -2.0 * math.pi * a_minus, places=7)
        for a in (0.1, 0.25, 0.4, 0.5):
            self.assertLess(q_of_a(a, b), 0.0)
            self.assertGreater(q_of_a(a, b), -2.0 * math.pi * a)
        with self.assertRaises(ParameterException):
            q_of_a(0.01, b)

    def test_r_of_a(self):
        self.assertLess(r_of_a(0.01, 0.5), 0.0)
        a_minus, _ = critical_as(0.5)
        self.assertAlmostEqual(r_of_a(a_minus, 0.5), 0.0, places=6)

    def test_kummer_phase(self):
        for a, eta in ((0.1, -0.2), (0.25, -0.5), (0.5, -1.9)):
            u_plus, u_minus = kummer_saddles(a, eta)
            self.assertGreater(u_minus.imag, 0.0)
            # twice the imaginary part at the upper saddle is -i g(eta)
            self.assertAlmostEqual(2.0 * kummer_phase(a, eta, u_minus).imag,
                                   neg_i_g_of_eta(a, eta), places=12)
            self.assertAlmostEqual(kummer_phase(a, eta, u_plus),
                                   kummer_phase(a, eta, u_minus).conjugate(),
                                   places=12)
            for u in (u_plus, u_minus):
                self.assertAlmostEqual(kummer_phase(a, eta, u).real,
                                       kummer_real_phase(a, eta, u), places=12)
        self.assertEqual(kummer_phase(0.0, -2.0, 0.25), -0.5)

    def test_mislabelled_saddles_raise(self):
        data = saddles(ScaledParams(0.01, 0.5))
        swapped = data._replace(t_plus=data.t_minus, t_minus=data.t_plus,
                                w_plus=data.w_minus, w_minus=data.w_plus)
        with patch("chebdisc.mapping.saddles", return_value=swapped):
            with self.assertRaises(SolverException):
                r_of_a(0.01, 0.5)
        with patch("chebdisc.mapping.q_of_a", return_value=0.1):
            with self.assertRaises(SolverException):
                solve_eta_gamma(0.3, 0.5)
        with patch("chebdisc.mapping.q_of_a", return_value=-2.0):
            with self.assertRaises(SolverException):
                solve_eta_gamma(0.3, 0.5)

    def test_bisect(self):
        root = _bisect(lambda value: value ** 3 - 2.0, 0.0, 2.0)
        self.assertAlmostEqual(root, 2.0 ** (1.0 / 3.0), places=12)
        with self.assertRaises(SolverException):
            _bisect(lambda value: value + 10.0, 0.0, 1.0)


class TestSolveEtaGamma(TestCase):
    def test_small_a_limits(self):
        b, a = 0.5, 1e-4
        eta0, eta1 = eta_limit(b)
        gamma0, gamma1 = gamma_limit(b)
        self.assertAlmostEqual(eta0, -0.2616241, places=7)
        self.assertAlmostEqual(gamma0, -0.6931472, places=7)
        self.assertAlmostEqual(eta1, -2.0 * math.log(0.2616241 / 0.25), places=6)
        constants = solve_eta_gamma(a, b)
        self.assertIs(constants.regime, Regime.MONOTONE)
        self.assertLessEqual(abs(constants.eta - (eta0 + eta1 * a)), 1e-6)
        self.assertLessEqual(abs(constants.gamma - (gamma0 + gamma1 * a)), 1e-6)

    def test_turning_point(self):
        a_minus, _ = critical_as(0.5)
        constants = solve_eta_gamma(a_minus, 0.5)
        self.assertLessEqual(abs(constants.eta + 4.0 * a_minus), 1e-8)

    def test_eta_continuous_through_turning_point(self):
        for b in (0.3, 0.5, 0.8):
            a_minus, _ = critical_as(b)
            deviations = []
            for k in range(2, 8):
                below = solve_eta_gamma(a_minus - 10.0 ** -k, b)
                above = solve_eta_gamma(a_minus + 10.0 ** -k, b)
                self.assertIs(below.regime, Regime.MONOTONE)
                self.assertIs(above.regime, Regime.OSCILLATORY)
                deviations.append(max(abs(below.eta + 4.0 * a_minus),
                                      abs(above.eta + 4.0 * a_minus)))
            self.assertEqual(deviations, sorted(deviations, reverse=True), b)
            self.assertLess(deviations[-1], 1e-5, b)

    def test_monotone(self):
        constants = solve_eta_gamma(0.04, 0.5)
        self.assertIs(constants.regime, Regime.MONOTONE)
        self.assertLess(constants.eta, -0.16)
        lo, hi = constants.bracket
        self.assertTrue(lo <= constants.eta <= hi)
        self.assertLess(constants.residual, 1e-10)
        self.assertLess(system_residual(0.04, 0.5, constants), 1e-9)

    def test_oscillatory(self):
        for a in (0.1, 0.25, 0.4, 0.5):
            constants = solve_eta_gamma(a, 0.5)
            self.assertIs(constants.regime, Regime.OSCILLATORY)
            self.assertTrue(-4.0 * a < constants.eta < 0.0)
            self.assertLess(system_residual(a, 0.5, constants), 1e-9)

    def test_refusals(self):
        with self.assertRaises(ParameterException):
            solve_eta_gamma(-0.1, 0.5)
        with self.assertRaises(RegimeRefusalException):
            solve_eta_gamma(0.6, 0.5)
        with self.assertRaises(ParameterException):
            solve_eta_gamma(0.1, 1.0)


class TestGammaMappings(TestCase):
    def test_negative_a(self):
        constants = gamma_negative_a(-1.0, 0.5)
        self.assertIsNone(constants.eta)
        self.assertIsNone(constants.bracket)
        self.assertIs(constants.regime, Regime.NEGATIVE_A)
        self.assertLess(constants.residual, 1e-12)
        self.assertTrue(math.isfinite(constants.gamma))
        a = -1.0
        data = saddles(ScaledParams(a, 0.5))
        defect = real_phase(a, 0.5, data.t_minus, data.w_minus) - \
            (a * math.log(-a) - a + constants.gamma)
        self.assertEqual(constants.residual, abs(defect))
        with self.assertRaises(ParameterException):
            gamma_negative_a(0.1, 0.5)

    def test_hankel_continuity_at_zero(self):
        gamma0, _ = gamma_limit(0.5)
        self.assertAlmostEqual(gamma_hankel(-1e-7, 0.5), gamma0, places=5)
        self.assertAlmostEqual(gamma_hankel(1e-7, 0.5), gamma0, places=5)

    def test_hankel_domain(self):
        with self.assertRaises(ParameterException):
            gamma_hankel(0.0, 0.5)
        with self.assertRaises(RegimeRefusalException):
            gamma_hankel(0.1, 0.5)
