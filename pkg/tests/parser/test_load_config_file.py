"""Test cases for the load_config_file function

Test cases:
    * `test_load_config_file` tests loading valid config files
    * `test_load_config_file_invalid` tests invalid paths, extensions,
       duplicate keys and syntax errors
    * `test_syntax_error_message` tests the label and line of a syntax
       error message
"""

import unittest

from typing import Type

from parameterized import parameterized

from uavmesh.exceptions import DuplicateSettingError
from uavmesh.exceptions import InvalidConfigFilenameError
from uavmesh.parser import ConfigSyntaxError
from uavmesh.parser import MalformedKeyError
from uavmesh.parser import MissingValueError
from uavmesh.parser import load_config_file

from tests.cmd import constants


class TestLoadConfigFile(unittest.TestCase):
    """Tests the load_config_file function"""

    @parameterized.expand([
        ('with_run_config', constants.VALID_RUN_CONFIG, {
            'model_kind': 'JNT-RP',
            'topology_kind': 'line',
            'n': '4',
            'spacing_m': '100',
            'uav_count': '5',
            'battery_pool_size': 'auto',
            'horizon_s': '3600',
        }),
        ('with_conf_extension', constants.VALID_SPT_CH_CONFIG, {
            'model_kind': 'SPT-CH',
            'n': '2',
            'horizon_s': '1200',
            'transfer_efficiency_pct': '90',
            'reserve_margin_pct': '10',
        }),
    ])
    def test_load_config_file(self, name: str, path: str, expected: dict):
        del name  # Unused

        self.assertEqual(expected, load_config_file(path))

    @parameterized.expand([
        ('with_none_path', constants.NONE_PATH, ValueError),
        ('with_empty_path', constants.EMPTY_PATH, ValueError),
        ('with_integer_path', 42, ValueError),
        ('with_invalid_extension', constants.INVALID_CONFIG_EXTENSION,
         InvalidConfigFilenameError),
        ('with_missing_file', constants.NOT_FOUND_CONFIG, FileNotFoundError),
        ('with_duplicate_key', constants.DUPLICATE_CONFIG,
         DuplicateSettingError),
        ('with_missing_value', constants.MISSING_VALUE_CONFIG,
         MissingValueError),
        ('with_missing_key', constants.BAD_KEY_CONFIG, MalformedKeyError),
    ])
    def test_load_config_file_invalid(self, name: str, path: str,
                                      expected_exception: Type[Exception]):
        del name  # Unused

        with self.assertRaises(expected_exception):
            load_config_file(path)

    def test_syntax_error_message(self):
        with self.assertRaises(ConfigSyntaxError) as ctx:
            load_config_file(constants.MISSING_VALUE_CONFIG)
        self.assertIn('Missing value at line 2', str(ctx.exception))


if __name__ == '__main__':
    unittest.main()
