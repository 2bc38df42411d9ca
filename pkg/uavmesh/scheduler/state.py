"""Immutable records describing the state of the fleet at one instant.

The scheduling policies read these records and return new ones; the
engine owns the mutable state and builds a `SystemSnapshot` whenever a
decision has to be taken.
"""

from typing import Dict, Mapping, NamedTuple, Optional, Tuple

from uavmesh.battery import BatteryParams
from uavmesh.types import ArrivalStamp
from uavmesh.types import ModelKind
from uavmesh.types import Phase
from uavmesh.types import Position
from uavmesh.types import StateOfCharge


class TransferParams(NamedTuple):
    """UAV to AP energy transfer parameters for the SPT-CH model.

    `power_W` defaults to a 1C rate, the nominal energy delivered in
    one hour
    """

    power_W: Optional[float] = None
    efficiency_pct: float = 100.0
    reserve_margin_pct: float = 5.0

    def effective_power_W(self, battery: BatteryParams) -> float:
        if self.power_W is not None:
            return self.power_W
        return battery.nominal_energy_J / 3600.0


def validate_transfer_params(transfer: TransferParams) -> None:
    if transfer is None:
        raise ValueError('transfer should not be None')

    if transfer.power_W is not None and transfer.power_W <= 0:
        raise ValueError('transfer power_W should be greater than 0')

    if not 0 < transfer.efficiency_pct <= 100:
        raise ValueError('efficiency_pct should be in (0, 100]')

    if not 0 <= transfer.reserve_margin_pct <= 100:
        raise ValueError('reserve_margin_pct should be in [0, 100]')


class UavState(NamedTuple):
    """A UAV at one instant. `arrival_times` maps an AP id to the stamp
    of the latest arrival of this UAV at that AP position
    """

    uav_id: int
    phase: Phase
    position: Position
    associated_ap: Optional[int]
    soc_pct: StateOfCharge
    battery_id: int
    arrival_times: Mapping[int, ArrivalStamp] = {}


class ApState(NamedTuple):
    """An AP position at one instant.

    In the joint models `occupied_by` is the UAV playing the AP role and
    the battery fields mirror its battery; a vacant position has all three
    set to `None`. In the separate models the battery fields describe the
    pre-placed AP device and `occupied_by` is always `None`
    """

    ap_id: int
    occupied_by: Optional[int]
    soc_pct: Optional[StateOfCharge]
    battery_id: Optional[int]
    associated_uav_count: int


class PoolBattery(NamedTuple):
    battery_id: int
    soc_pct: StateOfCharge


class SystemSnapshot(NamedTuple):
    time_s: float
    model_kind: ModelKind
    uavs: Dict[int, UavState]
    aps: Dict[int, ApState]
    pool: Tuple[PoolBattery, ...] = ()


class Replenishment(NamedTuple):
    """Outcome of a visit to the ES"""

    uav: UavState
    pool: Tuple[PoolBattery, ...]
    duration_s: float


class Service(NamedTuple):
    """Outcome of a UAV servicing a separate AP"""

    uav: UavState
    ap: ApState
    duration_s: float
