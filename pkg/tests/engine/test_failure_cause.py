"""Test cases for the sustained-network predicate

Test cases:
    * `test_failure_cause` tests each failure cause and the healthy case
    * `test_installed_batteries` tests the census of installed batteries
"""

import unittest

from parameterized import parameterized

from uavmesh.engine import failure_cause
from uavmesh.engine import installed_batteries
from uavmesh.engine import is_sustained_at
from uavmesh.types import FailureCause
from uavmesh.types import ModelKind
from uavmesh.types import Phase

from tests.scheduler.base import BaseSchedulerTest


class TestFailureCause(BaseSchedulerTest):
    """Test the failure_cause and installed_batteries functions"""

    @parameterized.expand([
        ('healthy_joint', ModelKind.JNT_RP, 1, 40.0, Phase.FLYING_TO_ES,
         20.0, None),
        ('vacant_joint_position', ModelKind.JNT_CH, None, None, Phase.AT_ES,
         20.0, FailureCause.POSITION_VACANT),
        ('empty_joint_occupant', ModelKind.JNT_RP, 1, 0.0, Phase.AT_ES,
         20.0, FailureCause.AP_DEPLETED),
        ('empty_separate_ap', ModelKind.SPT_RP, None, 0.0, Phase.AT_ES,
         20.0, FailureCause.AP_DEPLETED),
        ('empty_uav_in_flight', ModelKind.SPT_CH, None, 50.0,
         Phase.FLYING_TO_AP, 0.0, FailureCause.UAV_DEPLETED_IN_FLIGHT),
        ('empty_uav_at_the_es', ModelKind.SPT_CH, None, 50.0, Phase.AT_ES,
         0.0, None),
    ])
    def test_failure_cause(self, name: str, kind: ModelKind,
                           occupied_by, ap_soc, uav_phase: Phase,
                           uav_soc: float, expected):
        del name  # Unused

        self.model_kind = kind
        snapshot = self.snapshot(
            [self.uav(2, uav_phase, None, uav_soc)],
            [self.ap(1, 0, ap_soc, occupied_by)])

        self.assertEqual(expected, failure_cause(snapshot))
        self.assertEqual(expected is None, is_sustained_at(snapshot))

    @parameterized.expand([
        ('joint', ModelKind.JNT_RP, 5, 4, 5),
        ('separate', ModelKind.SPT_RP, 1, 4, 5),
        ('separate_charge', ModelKind.SPT_CH, 4, 4, 8),
    ])
    def test_installed_batteries(self, name: str, kind: ModelKind,
                                 uav_count: int, ap_count: int,
                                 expected: int):
        del name  # Unused

        self.assertEqual(expected,
                         installed_batteries(kind, uav_count, ap_count))


if __name__ == '__main__':
    unittest.main()
