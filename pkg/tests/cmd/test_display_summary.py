"""Test cases for the display_summary function

Test cases:
    * `test_display_summary` tests each display method returns the
       verdict exit code
    * `test_display_summary_invalid_args` tests that the expected exception
       is raised when invalid arguments are provided
"""

import io
import unittest

from typing import Type
from unittest.mock import patch

from parameterized import parameterized

from uavmesh.cmd import display_summary
from uavmesh.cmd import DisplayMethod
from uavmesh.cmd.outputs import ExitCode
from uavmesh.cmd.outputs import Summary

_SUSTAINED = Summary('Simulation', [('sustained', True)], True)
_FAILED = Summary('Simulation', [('sustained', False)], False)


class TestDisplaySummary(unittest.TestCase):
    """Test cases for the display_summary function"""

    @parameterized.expand([
        ('with_table_success', _SUSTAINED, DisplayMethod.TABLE,
         ExitCode.SUCCESS),
        ('with_table_failure', _FAILED, DisplayMethod.TABLE,
         ExitCode.FAILURE),
        ('with_json_success', _SUSTAINED, DisplayMethod.JSON,
         ExitCode.SUCCESS),
        ('with_json_failure', _FAILED, DisplayMethod.JSON, ExitCode.FAILURE),
        ('with_yaml_success', _SUSTAINED, DisplayMethod.YAML,
         ExitCode.SUCCESS),
        ('with_yaml_failure', _FAILED, DisplayMethod.YAML, ExitCode.FAILURE),
    ])
    def test_display_summary(self, name: str, summary: Summary,
                             method: DisplayMethod, expected_exit_code: int):
        del name  # Unused

        with patch('sys.stdout', new=io.StringIO()):
            exit_code = display_summary(summary, method)
        self.assertEqual(expected_exit_code, exit_code)

    @parameterized.expand([
        ('with_none_summary', None, DisplayMethod.TABLE, ValueError),
        ('with_none_method', _SUSTAINED, None, ValueError),
    ])
    def test_display_summary_invalid_args(self, name: str, summary: Summary,
                                          method: DisplayMethod,
                                          expected_exception: Type[Exception]):
        del name  # Unused

        with self.assertRaises(expected_exception):
            display_summary(summary, method)


if __name__ == '__main__':
    unittest.main()
