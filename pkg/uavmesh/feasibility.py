"""Analytic feasibility constraints and reference fleet sizes.

For every AP position i with one-way flight time T_f(d_i) a sustained
network needs

    2·T_f(d_i) + T_ES < T_AP     (relief round trip within an AP lifetime)
    T_f(d_i) < T_b               (replenished UAV reaches the position)
    T_f(d_i) < T'_b              (relieved UAV makes it back to the ES)

and a single redundant UAV suffices when N·(2·T_f(d_i) + T_ES) < T_AP
holds for every i.
"""

import logging

from typing import List, NamedTuple, Sequence, Tuple

from uavmesh import battery as bm
from uavmesh.battery import BatteryParams
from uavmesh.scheduler import policies
from uavmesh.scheduler.state import TransferParams
from uavmesh.topology import FlightParams
from uavmesh.topology import Topology
from uavmesh.topology import flight_time
from uavmesh.types import ModelKind

logger = logging.getLogger(__name__)

CSV_HEADER = ('i', 'd_m', 'Tf_s', 'c2', 'c3', 'c4')


class ApConstraints(NamedTuple):
    ap_id: int
    d_m: float
    tf_s: float
    c2: bool
    c3: bool
    c4: bool

    @property
    def ok(self) -> bool:
        return self.c2 and self.c3 and self.c4


class FeasibilityReport(NamedTuple):
    """The analytic evaluation of the constraints for one model kind.
    `per_ap` is ordered by AP id
    """

    model_kind: ModelKind
    per_ap: Tuple[ApConstraints, ...]
    single_redundant_ok: bool
    t_ap_s: float
    t_es_s: float
    t_b_s: float
    t_b_prime_s: float
    t_ua_s: float
    baseline_uavs: int
    lower_bound_uavs: int

    @property
    def all_ok(self) -> bool:
        return all(row.ok for row in self.per_ap)

    @property
    def farthest_ok(self) -> bool:
        """Whether the constraints hold at the farthest AP position"""
        farthest = max(self.per_ap, key=lambda row: (row.d_m, -row.ap_id))
        return farthest.ok

    def rows(self) -> List[ApConstraints]:
        return list(self.per_ap)

    def summary_items(self) -> List[Tuple[str, object]]:
        return [
            ('model', self.model_kind),
            ('T_AP_s', self.t_ap_s),
            ('T_ES_s', self.t_es_s),
            ('T_b_s', self.t_b_s),
            ('T_b_prime_s', self.t_b_prime_s),
            ('T_UA_s', self.t_ua_s),
            ('baseline', self.baseline_uavs),
            ('lower_bound', self.lower_bound_uavs),
            ('single_redundant', self.single_redundant_ok),
            ('all_ok', self.all_ok),
        ]


def baseline_uavs(model_kind: ModelKind, ap_count: int) -> int:
    """Reference fleet size: 2N for joint models, N for separate ones"""
    return 2 * ap_count if model_kind.is_joint else ap_count


def lower_bound_uavs(model_kind: ModelKind, ap_count: int) -> int:
    """Smallest conceivable fleet: N + 1 for joint models, 1 otherwise"""
    return ap_count + 1 if model_kind.is_joint else 1


def single_redundant_holds(ap_count: int, flight_times: Sequence[float],
                           t_es: float, t_ap: float) -> bool:
    """Whether N·(2·T_f + T_ES) < T_AP holds for every flight time

    Args:
        ap_count (int): The number of AP positions N
        flight_times (Sequence[float]): T_f of every AP position
        t_es (float): The replenishment time T_ES
        t_ap (float): The AP battery lifetime T_AP

    Returns:
        True if the inequality holds at every position
    """
    return all(ap_count * (2 * tf + t_es) < t_ap for tf in flight_times)


def _joint_ch_arrival_soc(t_f: float, t_ap: float, battery: BatteryParams,
                          flight: FlightParams) -> float:
    # fly out full, serve a whole AP lifetime, fly back
    soc = bm.discharge(battery.full_threshold_pct, flight.fly_power_W,
                       t_f, battery)
    soc = bm.discharge(soc, flight.comm_power_W, t_ap, battery)
    return bm.discharge(soc, flight.fly_power_W, t_f, battery)


def check_constraints(topology: Topology, model_kind: ModelKind,
                      battery: BatteryParams = BatteryParams(),
                      flight: FlightParams = FlightParams(),
                      transfer: TransferParams = TransferParams()
                      ) -> FeasibilityReport:
    """Evaluate the feasibility constraints for every AP position

    Args:
        topology (uavmesh.topology.Topology): The AP layout
        model_kind (uavmesh.types.ModelKind): The operation model
        battery (uavmesh.battery.BatteryParams): The battery parameters
        flight (uavmesh.topology.FlightParams): The flight parameters
        transfer (uavmesh.scheduler.TransferParams): The SPT-CH transfer
            parameters, unused by the other models

    Returns:
        A `FeasibilityReport`. Violated constraints are reported, not raised

    Raises:
        ValueError: If `topology` or `model_kind` is `None`
    """
    if topology is None:
        raise ValueError('topology should not be None')

    if model_kind is None:
        raise ValueError('model_kind should not be None')

    full = battery.full_threshold_pct
    t_ap = bm.time_to_empty(100.0, flight.comm_power_W, battery)
    t_b = bm.time_to_empty(full, flight.fly_power_W, battery)
    d_max = topology.farthest_distance
    t_f_max = flight_time(d_max, flight)
    t_ua = 0.0

    if model_kind.uses_replacement:
        t_es = 0.0
    elif model_kind.is_joint:
        arrival = _joint_ch_arrival_soc(t_f_max, t_ap, battery, flight)
        t_es = bm.time_to_full(arrival, battery)
    else:
        reserve = policies.return_reserve(d_max, battery, flight, transfer)
        arrival = bm.discharge(reserve, flight.fly_power_W, t_f_max, battery)
        t_ua = policies.full_transfer_time(battery, flight, transfer)
        t_es = bm.time_to_full(arrival, battery) + t_ua

    if model_kind == ModelKind.SPT_CH:
        reserve = policies.return_reserve(d_max, battery, flight, transfer)
        t_b_prime = bm.time_to_empty(reserve, flight.fly_power_W, battery)
    else:
        relief_interval = 2 * t_f_max + t_es
        soc = full
        if model_kind.is_joint:
            soc = bm.discharge(soc, flight.fly_power_W, t_f_max, battery)
        soc = bm.discharge(soc, flight.comm_power_W, relief_interval, battery)
        t_b_prime = bm.time_to_empty(soc, flight.fly_power_W, battery)

    per_ap = []
    for ap_id in topology.ap_ids:
        d = topology.distance(ap_id)
        t_f = flight_time(d, flight)
        per_ap.append(ApConstraints(ap_id=ap_id, d_m=d, tf_s=t_f,
                                    c2=2 * t_f + t_es < t_ap,
                                    c3=t_f < t_b,
                                    c4=t_f < t_b_prime))

    ap_count = topology.ap_count
    single = single_redundant_holds(ap_count,
                                    [row.tf_s for row in per_ap],
                                    t_es, t_ap)

    report = FeasibilityReport(
        model_kind=model_kind,
        per_ap=tuple(per_ap),
        single_redundant_ok=single,
        t_ap_s=t_ap,
        t_es_s=t_es,
        t_b_s=t_b,
        t_b_prime_s=t_b_prime,
        t_ua_s=t_ua,
        baseline_uavs=baseline_uavs(model_kind, ap_count),
        lower_bound_uavs=lower_bound_uavs(model_kind, ap_count))

    logger.debug('%s on %r: T_AP=%.1f T_ES=%.1f all_ok=%s', model_kind,
                 topology, t_ap, t_es, report.all_ok)
    return report


def check_single_redundant(topology: Topology, model_kind: ModelKind,
                           battery: BatteryParams = BatteryParams(),
                           flight: FlightParams = FlightParams(),
                           transfer: TransferParams = TransferParams()
                           ) -> bool:
    """Whether one redundant UAV can serve every position in the worst
    case where all APs start draining at the same time
    """
    report = check_constraints(topology, model_kind, battery, flight,
                               transfer)
    return report.single_redundant_ok
