"""Test cases for the CSV helpers

Test cases:
    * `test_format_value` tests how each kind of cell is written
    * `test_write_csv` tests the comment lines, header and LF endings
    * `test_write_csv_invalid_args` tests missing streams and headers
    * `test_open_output` tests writing to a file and to standard output
"""

import io
import os
import tempfile
import unittest

from typing import Any
from unittest.mock import patch

from parameterized import parameterized

from uavmesh.types import ModelKind
from uavmesh.utils import format_value
from uavmesh.utils import open_output
from uavmesh.utils import write_csv


def _written(header, rows, comments=()) -> str:
    buffer = io.StringIO()
    write_csv(buffer, header, rows, comments)
    return buffer.getvalue()


class TestWriteCsv(unittest.TestCase):
    """Test the format_value, write_csv and open_output functions"""

    @parameterized.expand([
        ('with_none', None, ''),
        ('with_true', True, 'true'),
        ('with_false', False, 'false'),
        ('with_enum', ModelKind.SPT_RP, 'SPT-RP'),
        ('with_int', 17, '17'),
        ('with_float', 17982.000004, '17982'),
        ('with_small_float', 0.000123456789, '0.000123457'),
        ('with_negative_zero', -0.0, '0'),
        ('with_string', 'infeasible', 'infeasible'),
    ])
    def test_format_value(self, name: str, value: Any, expected: str):
        del name  # Unused

        self.assertEqual(expected, format_value(value))

    def test_write_csv(self):
        text = _written(('model', 'n', 'sustained'),
                        [(ModelKind.JNT_RP, 4, True),
                         (ModelKind.JNT_CH, 2, False)],
                        [('horizon_s', 86400.0), ('seed', 0)])

        self.assertEqual(
            '# horizon_s = 86400\n'
            '# seed = 0\n'
            'model,n,sustained\n'
            'JNT-RP,4,true\n'
            'JNT-CH,2,false\n', text)

    def test_write_csv_quotes_commas(self):
        text = _written(('models',), [('SPT-CH,SPT-RP',)])
        self.assertEqual('models\n"SPT-CH,SPT-RP"\n', text)

    @parameterized.expand([
        ('with_none_stream', None, ('a',)),
        ('with_none_header', io.StringIO(), None),
    ])
    def test_write_csv_invalid_args(self, name: str, stream, header):
        del name  # Unused

        with self.assertRaises(ValueError):
            write_csv(stream, header, [])

    def test_open_output(self):
        with tempfile.TemporaryDirectory() as directory:
            path = os.path.join(directory, 'out.csv')
            with open_output(path) as stream:
                write_csv(stream, ('a', 'b'), [(1, 2.5)])

            with open(path, 'rb') as f:
                self.assertEqual(b'a,b\n1,2.5\n', f.read())

        buffer = io.StringIO()
        with patch('sys.stdout', new=buffer):
            with open_output() as stream:
                stream.write('x\n')
        self.assertEqual('x\n', buffer.getvalue())


if __name__ == '__main__':
    unittest.main()
