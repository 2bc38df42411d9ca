"""Test cases for the export_curve function

Test cases:
    * `test_discharge_curve` tests a discharge curve from full to empty
    * `test_discharge_curve_voltage` tests the terminal voltage carried by
       discharge points
    * `test_charge_curve` tests a charge curve from empty to the threshold
    * `test_curve_cut_off` tests the optional duration cut-off
    * `test_export_curve_invalid_args` tests invalid modes and steps
"""

import unittest

from typing import Type

from parameterized import parameterized

from uavmesh import battery as bm


class TestExportCurve(unittest.TestCase):
    """Test the export_curve function"""

    def test_discharge_curve(self):
        rows = bm.export_curve(bm.CurveMode.DISCHARGE, 18.0, 60.0)

        self.assertEqual((0.0, 100.0), rows[0][:2])
        self.assertEqual(0.0, rows[-1].soc_pct)
        self.assertGreater(rows[-2].soc_pct, 0.0)
        socs = [row.soc_pct for row in rows]
        self.assertEqual(sorted(socs, reverse=True), socs)

    def test_discharge_curve_voltage(self):
        rows = bm.export_curve(bm.CurveMode.DISCHARGE, 18.0, 60.0)

        self.assertAlmostEqual(bm.terminal_voltage(0.0, 18.0),
                               rows[0].voltage_V, places=5)
        self.assertIsNone(rows[-1].voltage_V)
        voltages = [row.voltage_V for row in rows[:-1]]
        self.assertEqual(sorted(voltages, reverse=True), voltages)
        self.assertTrue(all(0.0 < v < 4.0 for v in voltages))

    def test_charge_curve(self):
        rows = bm.export_curve(bm.CurveMode.CHARGE, None, 60.0)

        self.assertEqual(bm.CurvePoint(0.0, 0.0), rows[0])
        self.assertGreaterEqual(rows[-1].soc_pct, 99.5)
        self.assertLess(rows[-2].soc_pct, 99.5)
        self.assertEqual(137, len(rows))

    def test_curve_cut_off(self):
        rows = bm.export_curve(bm.CurveMode.DISCHARGE, 2.0, 60.0,
                               duration_s=600.0)
        self.assertEqual(11, len(rows))
        self.assertEqual(600.0, rows[-1].t_s)

    @parameterized.expand([
        ('with_none_mode', None, 18.0, 60.0, ValueError),
        ('with_zero_step', bm.CurveMode.CHARGE, 18.0, 0.0, ValueError),
        ('with_zero_discharge_power', bm.CurveMode.DISCHARGE, 0.0, 60.0,
         ValueError),
        ('with_none_discharge_power', bm.CurveMode.DISCHARGE, None, 60.0,
         ValueError),
    ])
    def test_export_curve_invalid_args(self, name: str, mode: bm.CurveMode,
                                       power_W: float, step_s: float,
                                       expected_exception: Type[Exception]):
        del name  # Unused

        with self.assertRaises(expected_exception):
            bm.export_curve(mode, power_W, step_s)


if __name__ == '__main__':
    unittest.main()
