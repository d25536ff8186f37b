import os
from unittest import TestCase
from unittest.mock import patch

from chebdisc.base.exceptions import ParameterException
from chebdisc.utils.config import (DEFAULT_MAX_NCAP, get_max_ncap, is_developer_mode,
                                   warn_if_over_cap)


class TestConfig(TestCase):
    @patch.dict(os.environ, {}, clear=True)
    def test_defaults(self):
        self.assertFalse(is_developer_mode())
        self.assertEqual(get_max_ncap(), DEFAULT_MAX_NCAP)

    @patch.dict(os.environ, {"CHEBDISC_DEVELOPER_MODE": "1"})
    def test_developer_mode(self):
        self.assertTrue(is_developer_mode())

    @patch.dict(os.environ, {"CHEBDISC_MAX_NCAP": "64"})
    def test_max_ncap_override(self):
        self.assertEqual(get_max_ncap(), 64)
        with self.assertLogs("chebdisc.utils.config", level="WARNING"):
            self.assertTrue(warn_if_over_cap(65))
        self.assertFalse(warn_if_over_cap(64))

    def test_invalid_max_ncap(self):
        for value in ("abc", "0", "-3"):
            with patch.dict(os.environ, {"CHEBDISC_MAX_NCAP": value}):
                with self.assertRaises(ParameterException):
                    get_max_ncap()
