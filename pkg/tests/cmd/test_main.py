"""Test the main (entry point) of the command line

Test Cases:
    * `test_main_usage` tests help, missing commands and unknown flags
    * `test_main_config_errors` tests that broken config files end with
       the usage exit code
    * `test_main_run` tests single runs that are and are not sustained
    * `test_main_run_timeline` tests the timeline written next to the
       report file
    * `test_main_feasibility` tests the feasibility exit codes
    * `test_main_battery_curve` tests the exported charge curve
    * `test_main_topology` tests the exported AP positions
    * `test_main_sweep` tests a small sweep from a config file
"""

import io
import json
import os
import tempfile
import unittest

from typing import List
from unittest.mock import patch

from parameterized import parameterized

from uavmesh.cmd import main
from uavmesh.cmd.outputs import ExitCode
from uavmesh.reports import REPORT_HEADER

from tests.cmd import constants


def _data_lines(path: str) -> List[str]:
    with open(path, 'r', encoding='utf-8') as f:
        return [line for line in f.read().splitlines()
                if not line.startswith('#')]


class TestMain(unittest.TestCase):
    """Test cases for the `main` method of the command line"""

    def setUp(self):
        self._directory = tempfile.TemporaryDirectory()
        self.addCleanup(self._directory.cleanup)

    def out_path(self, name: str) -> str:
        return os.path.join(self._directory.name, name)

    def run_main(self, argv: List[str]) -> int:
        with patch('sys.stdout', new=io.StringIO()), \
                patch('sys.stderr', new=io.StringIO()):
            return main(argv)

    @parameterized.expand([
        ('with_help', ['--help'], ExitCode.SUCCESS),
        ('with_command_help', ['run', '--help'], ExitCode.SUCCESS),
        ('with_no_command', [], ExitCode.USAGE),
        ('with_unknown_command', ['simulate'], ExitCode.USAGE),
        ('with_unknown_flag', ['run', '--speed', '10'], ExitCode.USAGE),
        ('with_bad_output', ['topology', '-o', 'xml'], ExitCode.USAGE),
    ])
    def test_main_usage(self, name: str, argv: List[str],
                        expected_exit_code: int):
        del name  # Unused

        self.assertEqual(expected_exit_code, self.run_main(argv))

    @parameterized.expand([
        ('with_missing_value', constants.MISSING_VALUE_CONFIG),
        ('with_bad_key', constants.BAD_KEY_CONFIG),
        ('with_duplicate_key', constants.DUPLICATE_CONFIG),
        ('with_unknown_key', constants.UNKNOWN_KEY_CONFIG),
        ('with_bad_value', constants.BAD_VALUE_CONFIG),
        ('with_config_not_found', constants.NOT_FOUND_CONFIG),
        ('with_invalid_extension', constants.INVALID_CONFIG_EXTENSION),
    ])
    def test_main_config_errors(self, name: str, config_path: str):
        del name  # Unused

        argv = ['topology', '--config', config_path,
                '--out', self.out_path('topology.csv')]
        self.assertEqual(ExitCode.USAGE, self.run_main(argv))

    @parameterized.expand([
        ('with_bad_flag_value', ['--n', 'four']),
        ('with_census_below_installed', ['--batteries', '2']),
        ('with_census_not_a_number', ['--batteries', 'many']),
    ])
    def test_main_run_invalid_values(self, name: str, flags: List[str]):
        del name  # Unused

        argv = ['run', '--model', 'JNT-RP', '--uavs', '3',
                '--out', self.out_path('run.csv')] + flags
        self.assertEqual(ExitCode.USAGE, self.run_main(argv))

    @parameterized.expand([
        ('with_sustained_run', '3', '10000', ExitCode.SUCCESS, 'true'),
        ('with_depleted_ap', '2', '20000', ExitCode.FAILURE, 'false'),
    ])
    def test_main_run(self, name: str, uavs: str, horizon: str,
                      expected_exit_code: int, expected_sustained: str):
        del name  # Unused

        out = self.out_path('run.csv')
        argv = ['run', '--model', 'JNT-RP', '--topology', 'line',
                '--n', '2', '--uavs', uavs, '--horizon-s', horizon,
                '--out', out]
        self.assertEqual(expected_exit_code, self.run_main(argv))

        header, row = _data_lines(out)
        values = dict(zip(header.split(','), row.split(',')))
        self.assertEqual(list(REPORT_HEADER), header.split(','))
        self.assertEqual('JNT-RP', values['model'])
        self.assertEqual(uavs, values['uav_count'])
        self.assertEqual(expected_sustained, values['sustained'])

    def test_main_run_with_census(self):
        out = self.out_path('run.csv')
        argv = ['run', '--model', 'JNT-RP', '--n', '2', '--uavs', '3',
                '--batteries', '9', '--horizon-s', '10000', '--out', out]
        self.assertEqual(ExitCode.SUCCESS, self.run_main(argv))

        header, row = _data_lines(out)
        values = dict(zip(header.split(','), row.split(',')))
        self.assertEqual('9', values['battery_count'])

    def test_main_run_echoes_settings(self):
        out = self.out_path('run.csv')
        argv = ['run', '--config', constants.VALID_RUN_CONFIG,
                '--horizon-s', '60', '--out', out]
        self.run_main(argv)

        with open(out, 'r', encoding='utf-8') as f:
            content = f.read()
        self.assertIn('# horizon_s = 60.0\n', content)
        self.assertIn('# uav_count = 5\n', content)
        self.assertIn('# battery_pool_size = 12\n', content)

    def test_main_run_timeline(self):
        out = self.out_path('run.csv')
        argv = ['run', '--model', 'SPT-CH', '--n', '2', '--uavs', '2',
                '--horizon-s', '600', '--timeline', '--out', out]
        self.assertEqual(ExitCode.SUCCESS, self.run_main(argv))

        lines = _data_lines(self.out_path('run_timeline.csv'))
        self.assertEqual('t_s,device_kind,device_id,soc_pct,phase', lines[0])
        # 11 samples of 2 UAVs and 2 APs
        self.assertEqual(11 * 4, len(lines) - 1)

    def test_main_run_json_summary(self):
        buffer = io.StringIO()
        argv = ['run', '--model', 'JNT-RP', '--n', '2', '--uavs', '2',
                '--horizon-s', '20000', '--out', self.out_path('run.csv'),
                '-o', 'json']
        with patch('sys.stdout', new=buffer):
            exit_code = main(argv)

        self.assertEqual(ExitCode.FAILURE, exit_code)
        summary = json.loads(buffer.getvalue())['summary']
        self.assertEqual('ap-depleted', summary['failure_cause'])
        self.assertAlmostEqual(17982.0, summary['failure_time_s'], delta=0.01)

    @parameterized.expand([
        ('with_all_constraints', ['--model', 'SPT-CH', '--topology', 'grid',
                                  '--n', '2'], ExitCode.SUCCESS),
        ('with_distant_ap', ['--model', 'JNT-RP', '--n', '1',
                             '--spacing-m', '30000'], ExitCode.FAILURE),
    ])
    def test_main_feasibility(self, name: str, flags: List[str],
                              expected_exit_code: int):
        del name  # Unused

        out = self.out_path('feasibility.csv')
        argv = ['feasibility', '--out', out] + flags
        self.assertEqual(expected_exit_code, self.run_main(argv))

        with open(out, 'r', encoding='utf-8') as f:
            last_line = f.read().splitlines()[-1]
        self.assertTrue(last_line.startswith('# summary '))

    def test_main_battery_curve(self):
        out = self.out_path('charge.csv')
        argv = ['battery-curve', '--mode', 'charge', '--step-s', '60',
                '--out', out]
        self.assertEqual(ExitCode.SUCCESS, self.run_main(argv))

        lines = _data_lines(out)
        self.assertEqual('t_s,soc_pct,voltage_V', lines[0])
        self.assertEqual('0,0,', lines[1])
        self.assertEqual(137, len(lines) - 1)

    def test_main_topology(self):
        out = self.out_path('topology.csv')
        argv = ['topology', '--topology', 'grid', '--n', '3', '--out', out]
        self.assertEqual(ExitCode.SUCCESS, self.run_main(argv))

        lines = _data_lines(out)
        self.assertEqual('id,x_m,y_m,z_m,d_m', lines[0])
        self.assertEqual(9, len(lines) - 1)

    def test_main_sweep(self):
        out = self.out_path('sweep.csv')
        argv = ['sweep', '--config', constants.VALID_SWEEP_CONFIG,
                '--out', out, '-o', 'yaml']
        self.assertEqual(ExitCode.SUCCESS, self.run_main(argv))

        # two models over two sizes
        self.assertEqual(4, len(_data_lines(out)) - 1)


if __name__ == '__main__':
    unittest.main()
