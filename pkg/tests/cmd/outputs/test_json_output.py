"""Test cases for the JSONOutput static class

Test Cases:
    * `test_json_output` tests that the expected exit code is returned
       and the printed document holds the summary
    * `test_json_output_invalid_args` tests that the expected exception is
       raised when invalid arguments are provided
"""

import io
import json
import unittest

from unittest.mock import patch
from parameterized import parameterized

from uavmesh.cmd.outputs import ExitCode
from uavmesh.cmd.outputs import JSONOutput
from uavmesh.cmd.outputs import Summary
from uavmesh.types import FailureCause
from uavmesh.types import ModelKind


class TestJSONOutput(unittest.TestCase):
    """Test the `JSONOutput` display method"""

    @parameterized.expand([
        ('with_sustained_run', True, ExitCode.SUCCESS),
        ('with_failed_run', False, ExitCode.FAILURE),
    ])
    def test_json_output(self, name: str, ok: bool,
                         expected_exit_code: int):
        del name  # Unused

        summary = Summary('Simulation', [
            ('model', ModelKind.SPT_CH),
            ('failure_cause', FailureCause.UAV_DEPLETED_IN_FLIGHT),
            ('failure_time_s', None),
        ], ok)

        buffer = io.StringIO()
        with patch('sys.stdout', new=buffer):
            exit_code = JSONOutput.display(summary)

        self.assertEqual(expected_exit_code, exit_code)
        document = json.loads(buffer.getvalue())
        self.assertEqual('Simulation', document['title'])
        self.assertEqual(ok, document['ok'])
        self.assertEqual({
            'model': 'SPT-CH',
            'failure_cause': 'uav-depleted-in-flight',
            'failure_time_s': None,
        }, document['summary'])

    def test_json_output_invalid_args(self):
        with self.assertRaises(ValueError):
            JSONOutput.display(None)


if __name__ == '__main__':
    unittest.main()
