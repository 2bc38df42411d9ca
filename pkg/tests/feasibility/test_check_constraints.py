"""Test cases for the analytic feasibility constraints

Test cases:
    * `test_reference_fleet_sizes` tests the baseline and lower bound
    * `test_replacement_models` tests that RP models replenish instantly
    * `test_joint_charge_model` tests the JNT-CH charging time
    * `test_separate_charge_model` tests the SPT-CH transfer time
    * `test_distant_topology` tests that unreachable positions violate
       the flight constraints
    * `test_single_redundant_holds` tests the single redundant UAV rule
    * `test_check_constraints_invalid_args` tests missing arguments
"""

import unittest

from typing import Type

from parameterized import parameterized

from uavmesh import battery as bm
from uavmesh.feasibility import baseline_uavs
from uavmesh.feasibility import check_constraints
from uavmesh.feasibility import check_single_redundant
from uavmesh.feasibility import lower_bound_uavs
from uavmesh.feasibility import single_redundant_holds
from uavmesh.topology import make_grid
from uavmesh.topology import make_line
from uavmesh.types import ModelKind


class TestCheckConstraints(unittest.TestCase):
    """Test the check_constraints function and the fleet size helpers"""

    @parameterized.expand([
        ('jnt_ch', ModelKind.JNT_CH, 4, 8, 5),
        ('jnt_rp', ModelKind.JNT_RP, 4, 8, 5),
        ('spt_ch', ModelKind.SPT_CH, 9, 9, 1),
        ('spt_rp', ModelKind.SPT_RP, 9, 9, 1),
    ])
    def test_reference_fleet_sizes(self, name: str, kind: ModelKind,
                                   ap_count: int, baseline: int,
                                   lower_bound: int):
        del name  # Unused

        self.assertEqual(baseline, baseline_uavs(kind, ap_count))
        self.assertEqual(lower_bound, lower_bound_uavs(kind, ap_count))

    @parameterized.expand([
        ('joint', ModelKind.JNT_RP),
        ('separate', ModelKind.SPT_RP),
    ])
    def test_replacement_models(self, name: str, kind: ModelKind):
        del name  # Unused

        report = check_constraints(make_line(4), kind)

        self.assertEqual(0.0, report.t_es_s)
        self.assertEqual(0.0, report.t_ua_s)
        self.assertAlmostEqual(17982.0, report.t_ap_s, delta=0.01)
        self.assertTrue(report.all_ok)
        self.assertTrue(report.farthest_ok)
        self.assertTrue(report.single_redundant_ok)
        self.assertEqual([1, 2, 3, 4], [row.ap_id for row in report.rows()])
        self.assertAlmostEqual(400.0 / 15.0, report.rows()[-1].tf_s)

    def test_joint_charge_model(self):
        report = check_constraints(make_line(4), ModelKind.JNT_CH)

        self.assertGreater(report.t_es_s, 8000.0)
        self.assertLessEqual(report.t_es_s, bm.time_to_full(0.0))
        self.assertTrue(report.all_ok)
        self.assertFalse(report.single_redundant_ok)
        self.assertLess(report.t_b_prime_s, report.t_b_s)

    def test_separate_charge_model(self):
        report = check_constraints(make_grid(2), ModelKind.SPT_CH)

        self.assertAlmostEqual(
            bm.BatteryParams().nominal_energy_J / 7.99, report.t_ua_s)
        self.assertGreater(report.t_es_s, report.t_ua_s)
        self.assertTrue(report.all_ok)

    def test_distant_topology(self):
        report = check_constraints(make_line(1, 30000.0), ModelKind.JNT_RP)
        row = report.rows()[0]

        self.assertTrue(row.c2)
        self.assertFalse(row.c3)
        self.assertFalse(row.c4)
        self.assertFalse(report.all_ok)
        self.assertFalse(report.farthest_ok)

    @parameterized.expand([
        ('holds', 4, [10.0, 20.0], 0.0, 17982.0, True),
        ('fails_at_farthest', 4, [10.0, 3000.0], 0.0, 17982.0, False),
        ('fails_with_charging', 4, [10.0], 8130.0, 17982.0, False),
        ('holds_with_charging_alone', 1, [10.0], 8130.0, 17982.0, True),
    ])
    def test_single_redundant_holds(self, name: str, ap_count: int,
                                    flight_times: list, t_es: float,
                                    t_ap: float, expected: bool):
        del name  # Unused

        self.assertEqual(expected, single_redundant_holds(
            ap_count, flight_times, t_es, t_ap))

    def test_check_single_redundant(self):
        self.assertTrue(check_single_redundant(make_line(4),
                                               ModelKind.SPT_RP))
        self.assertFalse(check_single_redundant(make_line(4),
                                                ModelKind.JNT_CH))

    def test_summary_items(self):
        report = check_constraints(make_line(2), ModelKind.JNT_RP)
        items = dict(report.summary_items())

        self.assertEqual(ModelKind.JNT_RP, items['model'])
        self.assertEqual(4, items['baseline'])
        self.assertEqual(3, items['lower_bound'])
        self.assertTrue(items['all_ok'])

    @parameterized.expand([
        ('with_none_topology', None, ModelKind.JNT_RP, ValueError),
        ('with_none_model', make_line(2), None, ValueError),
    ])
    def test_check_constraints_invalid_args(
            self, name: str, topology, kind: ModelKind,
            expected_exception: Type[Exception]):
        del name  # Unused

        with self.assertRaises(expected_exception):
            check_constraints(topology, kind)


if __name__ == '__main__':
    unittest.main()
