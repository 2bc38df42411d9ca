"""Test cases for the replenishment of a UAV at the ES

Test cases:
    * `test_charge_replenish` tests that CH models charge to the threshold
    * `test_swap_replenish` tests the RP swap with the fullest pool battery
    * `test_swap_takes_pool_maximum` tests that the swap always takes the
       fullest spare, even one below the installed battery
    * `test_swap_with_empty_pool` tests that an empty pool is reported
"""

import unittest

from parameterized import parameterized

from uavmesh import battery as bm
from uavmesh.exceptions import PoolExhaustedError
from uavmesh.scheduler import PoolBattery
from uavmesh.scheduler import es_replenish
from uavmesh.types import ModelKind
from uavmesh.types import Phase

from tests.scheduler.base import BaseSchedulerTest


class TestEsReplenish(BaseSchedulerTest):
    """Test the es_replenish function"""

    @parameterized.expand([
        ('joint', ModelKind.JNT_CH, 20.0),
        ('separate', ModelKind.SPT_CH, 62.0),
    ])
    def test_charge_replenish(self, name: str, kind: ModelKind, soc: float):
        del name  # Unused

        uav = self.uav(1, Phase.AT_ES, None, soc)
        result = es_replenish(uav, (), kind)

        self.assertAlmostEqual(bm.time_to_full(soc), result.duration_s)
        self.assertGreaterEqual(result.uav.soc_pct, 99.5)
        self.assertEqual(uav.battery_id, result.uav.battery_id)
        self.assertEqual((), result.pool)

    def test_swap_replenish(self):
        uav = self.uav(1, Phase.AT_ES, None, 20.0)
        pool = (PoolBattery(10, 80.0), PoolBattery(11, 100.0),
                PoolBattery(12, 100.0))
        result = es_replenish(uav, pool, ModelKind.JNT_RP)

        self.assertEqual(0.0, result.duration_s)
        self.assertEqual(11, result.uav.battery_id)
        self.assertEqual(100.0, result.uav.soc_pct)
        self.assertEqual((PoolBattery(1, 20.0), PoolBattery(10, 80.0),
                          PoolBattery(12, 100.0)), result.pool)

    def test_swap_takes_pool_maximum(self):
        uav = self.uav(1, Phase.AT_ES, None, 20.0)
        pool = (PoolBattery(10, 5.0), PoolBattery(11, 3.0))
        result = es_replenish(uav, pool, ModelKind.SPT_RP)

        self.assertEqual(10, result.uav.battery_id)
        self.assertEqual(5.0, result.uav.soc_pct)
        self.assertEqual(2, len(result.pool))

    def test_swap_with_empty_pool(self):
        uav = self.uav(7, Phase.AT_ES, None, 20.0)
        with self.assertRaises(PoolExhaustedError) as ctx:
            es_replenish(uav, (), ModelKind.JNT_RP)
        self.assertEqual(7, ctx.exception.uav_id)


if __name__ == '__main__':
    unittest.main()
