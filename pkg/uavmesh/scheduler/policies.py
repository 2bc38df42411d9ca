"""The per-UAV scheduling decisions of the four operation models.

Each function is pure: it reads a snapshot or state records and returns
a decision or updated records. The engine applies them in event order.
"""

from typing import Optional, Sequence

from uavmesh import battery as bm
from uavmesh.battery import BatteryParams
from uavmesh.exceptions import PoolExhaustedError
from uavmesh.scheduler.state import ApState
from uavmesh.scheduler.state import PoolBattery
from uavmesh.scheduler.state import Replenishment
from uavmesh.scheduler.state import Service
from uavmesh.scheduler.state import SystemSnapshot
from uavmesh.scheduler.state import TransferParams
from uavmesh.scheduler.state import UavState
from uavmesh.topology import FlightParams
from uavmesh.topology import flight_time
from uavmesh.types import ModelKind
from uavmesh.types import Phase
from uavmesh.types import StateOfCharge


def initial_association(uav_id: int, ap_count: int) -> int:
    """Round-robin assignment of UAV ids to AP positions at t = 0

    Raises:
        ValueError: If `uav_id` or `ap_count` is less than 1
    """
    if uav_id < 1 or ap_count < 1:
        raise ValueError('uav_id and ap_count should be at least 1')
    return (uav_id - 1) % ap_count + 1


def occupant(snapshot: SystemSnapshot, ap_id: int) -> Optional[UavState]:
    """The UAV holding the AP role at a joint-model position: among the
    UAVs at the position, the one that arrived last
    """
    present = [u for u in snapshot.uavs.values()
               if u.phase == Phase.AT_AP and u.associated_ap == ap_id]
    if not present:
        return None
    return max(present, key=lambda u: u.arrival_times[ap_id])


def select_ap_position(snapshot: SystemSnapshot, uav_id: int,
                       model_kind: ModelKind) -> int:
    """Choose the AP position a replenished UAV flies to.

    J is the set of positions with the fewest associated UAVs, K the set of
    positions in J with the least remaining battery. Ties in K break by
    the lowest AP id. A vacant joint-model position counts as empty

    Args:
        snapshot (uavmesh.scheduler.SystemSnapshot): The system state
        uav_id (int): The UAV taking the decision
        model_kind (uavmesh.types.ModelKind): The operation model

    Returns:
        The chosen AP id

    Raises:
        ValueError: If the snapshot has no AP positions
    """
    del uav_id, model_kind  # Every UAV applies the same rule
    if not snapshot.aps:
        raise ValueError('the snapshot should have at least one AP position')

    def remaining(ap: ApState) -> float:
        if ap.soc_pct is None:
            return 0.0
        return ap.soc_pct

    fewest = min(ap.associated_uav_count for ap in snapshot.aps.values())
    j_set = [ap for ap in snapshot.aps.values()
             if ap.associated_uav_count == fewest]

    least = min(remaining(ap) for ap in j_set)
    k_set = [ap for ap in j_set if remaining(ap) == least]
    return min(ap.ap_id for ap in k_set)


def joint_departure_check(snapshot: SystemSnapshot, uav_id: int,
                          ap_id: int) -> bool:
    """Whether another UAV has arrived at the position after `uav_id`

    Args:
        snapshot (uavmesh.scheduler.SystemSnapshot): The system state
        uav_id (int): The UAV at the position
        ap_id (int): The position

    Returns:
        True if the UAV should depart for the ES
    """
    uav = snapshot.uavs[uav_id]
    own = uav.arrival_times.get(ap_id)
    if own is None:
        return False

    for other in snapshot.uavs.values():
        if other.uav_id == uav_id or other.associated_ap != ap_id:
            continue
        if other.phase != Phase.AT_AP:
            continue
        stamp = other.arrival_times.get(ap_id)
        if stamp is not None and stamp > own:
            return True
    return False


def es_replenish(uav: UavState, pool: Sequence[PoolBattery],
                 model_kind: ModelKind,
                 battery: BatteryParams = BatteryParams()) -> Replenishment:
    """Replenish a UAV at the ES.

    CH models charge the installed battery up to the full threshold. RP
    models swap it with the pool battery of maximal state of charge (ties
    break by the lowest battery id) in no time; the removed battery joins
    the pool

    Args:
        uav (uavmesh.scheduler.UavState): The UAV at the ES
        pool (Sequence[PoolBattery]): The spare batteries at the ES
        model_kind (uavmesh.types.ModelKind): The operation model
        battery (uavmesh.battery.BatteryParams): The battery parameters

    Returns:
        A `Replenishment` with the updated UAV and pool

    Raises:
        uavmesh.exceptions.PoolExhaustedError: If an RP model finds the
            pool empty
    """
    pool = tuple(pool)
    if not model_kind.uses_replacement:
        duration = bm.time_to_full(uav.soc_pct, battery)
        soc = bm.charge(uav.soc_pct, duration, battery)
        return Replenishment(uav._replace(soc_pct=soc), pool, duration)

    if not pool:
        raise PoolExhaustedError(uav.uav_id)

    best = max(pool, key=lambda b: (b.soc_pct, -b.battery_id))
    remaining = [b for b in pool if b.battery_id != best.battery_id]
    remaining.append(PoolBattery(uav.battery_id, uav.soc_pct))
    remaining.sort(key=lambda b: b.battery_id)

    replenished = uav._replace(soc_pct=best.soc_pct,
                               battery_id=best.battery_id)
    return Replenishment(replenished, tuple(remaining), 0.0)


def transfer_net_power(battery: BatteryParams, flight: FlightParams,
                       transfer: TransferParams) -> float:
    """Net power gained by an AP while a UAV transfers energy to it,
    after the AP's own communication draw

    Raises:
        ValueError: If the transfer cannot outpace the AP's draw
    """
    supplied = transfer.effective_power_W(battery) * \
        transfer.efficiency_pct / 100.0
    net = supplied - flight.comm_power_W
    if net <= 0:
        raise ValueError(
            'the transfer power should exceed the AP communication power')
    return net


def full_transfer_time(battery: BatteryParams, flight: FlightParams,
                       transfer: TransferParams) -> float:
    """Time to transfer a full battery's worth of energy to an AP"""
    return battery.nominal_energy_J / \
        transfer_net_power(battery, flight, transfer)


def return_reserve(distance_m: float, battery: BatteryParams,
                   flight: FlightParams,
                   transfer: TransferParams) -> StateOfCharge:
    """State of charge a UAV keeps to fly back to the ES plus the margin"""
    needed = bm.soc_for_endurance(flight_time(distance_m, flight),
                                  flight.fly_power_W, battery)
    return min(needed + transfer.reserve_margin_pct, 100.0)


def separate_service(uav: UavState, ap: ApState, model_kind: ModelKind,
                     distance_m: float,
                     battery: BatteryParams = BatteryParams(),
                     flight: FlightParams = FlightParams(),
                     transfer: TransferParams = TransferParams()) -> Service:
    """Service a pre-placed AP.

    SPT-RP swaps the UAV and AP batteries in no time. SPT-CH transfers
    energy only when the AP holds no more than the UAV, and stops when the
    AP is full or the UAV reaches its return reserve

    Args:
        uav (uavmesh.scheduler.UavState): The UAV at the AP
        ap (uavmesh.scheduler.ApState): The serviced AP
        model_kind (uavmesh.types.ModelKind): A separate operation model
        distance_m (float): The distance from the AP to the ES
        battery (uavmesh.battery.BatteryParams): The battery parameters
        flight (uavmesh.topology.FlightParams): The flight parameters
        transfer (uavmesh.scheduler.TransferParams): The transfer parameters

    Returns:
        A `Service` with the updated UAV and AP

    Raises:
        ValueError: If `model_kind` is a joint model
    """
    if model_kind.is_joint:
        raise ValueError(f'{model_kind} has no separate APs to service')

    if model_kind.uses_replacement:
        swapped_uav = uav._replace(soc_pct=ap.soc_pct,
                                   battery_id=ap.battery_id)
        swapped_ap = ap._replace(soc_pct=uav.soc_pct,
                                 battery_id=uav.battery_id)
        return Service(swapped_uav, swapped_ap, 0.0)

    if ap.soc_pct > uav.soc_pct:
        return Service(uav, ap, 0.0)

    duration = transfer_duration(uav.soc_pct, ap.soc_pct, distance_m,
                                 battery, flight, transfer)
    if duration <= 0:
        return Service(uav, ap, 0.0)

    power = transfer.effective_power_W(battery)
    net = transfer_net_power(battery, flight, transfer)
    uav_soc = bm.discharge(uav.soc_pct, power, duration, battery)
    ap_soc = bm.receive_energy(ap.soc_pct, net * duration, battery)
    return Service(uav._replace(soc_pct=uav_soc),
                   ap._replace(soc_pct=ap_soc), duration)


def transfer_duration(uav_soc: StateOfCharge, ap_soc: StateOfCharge,
                      distance_m: float, battery: BatteryParams,
                      flight: FlightParams,
                      transfer: TransferParams) -> float:
    """How long an SPT-CH transfer lasts: until the AP is full or the UAV
    reaches its return reserve, whichever comes first
    """
    net = transfer_net_power(battery, flight, transfer)
    until_full = (100.0 - ap_soc) / 100.0 * battery.nominal_energy_J / net

    reserve = return_reserve(distance_m, battery, flight, transfer)
    if uav_soc <= reserve:
        return 0.0

    power = transfer.effective_power_W(battery)
    until_reserve = bm.time_to_empty(uav_soc, power, battery) - \
        bm.time_to_empty(reserve, power, battery)
    return max(min(until_full, until_reserve), 0.0)
