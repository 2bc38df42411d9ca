"""Contains the base test case class for testing the scheduling policies"""

import unittest

from typing import Dict, Optional

from uavmesh.scheduler import ApState
from uavmesh.scheduler import SystemSnapshot
from uavmesh.scheduler import UavState
from uavmesh.types import ModelKind
from uavmesh.types import Phase
from uavmesh.types import Position


class BaseSchedulerTest(unittest.TestCase):
    """Base test case with builders for snapshot records"""

    def setUp(self):
        self.model_kind = ModelKind.JNT_RP
        self.position = Position(0.0, 0.0, 0.0)

    def uav(self, uav_id: int, phase: Phase = Phase.AT_AP,
            ap_id: Optional[int] = 1, soc: float = 100.0,
            stamps: Dict[int, tuple] = None) -> UavState:
        return UavState(uav_id, phase, self.position, ap_id, soc, uav_id,
                        stamps or {})

    def snapshot(self, uavs: list, aps: list) -> SystemSnapshot:
        return SystemSnapshot(0.0, self.model_kind,
                              {u.uav_id: u for u in uavs},
                              {a.ap_id: a for a in aps})

    @staticmethod
    def ap(ap_id: int, count: int, soc: Optional[float] = 50.0,
           occupied_by: Optional[int] = None) -> ApState:
        battery_id = None if soc is None else 100 + ap_id
        return ApState(ap_id, occupied_by, soc, battery_id, count)
