"""Deterministic discrete-event simulation of a UAV-maintained mesh.

Battery state is kept lazily: every physical battery is a cell holding its
state of charge at the time of its last mode change, so its charge at any
later instant follows from the battery model in closed form. A discharging
cell schedules its own depletion event; a mode change bumps the cell
version, which turns earlier depletion events stale.
"""

import logging

from typing import Dict, List, NamedTuple, Optional, Set

from uavmesh import battery as bm
from uavmesh.battery import BatteryParams
from uavmesh.engine.events import Event
from uavmesh.engine.events import EventKind
from uavmesh.engine.events import EventQueue
from uavmesh.exceptions import PoolExhaustedError
from uavmesh.exceptions import SimulationInvariantError
from uavmesh.reports import ActivityRow
from uavmesh.reports import Failure
from uavmesh.reports import SimReport
from uavmesh.reports import TimelineRow
from uavmesh.scheduler import policies
from uavmesh.scheduler.state import ApState
from uavmesh.scheduler.state import PoolBattery
from uavmesh.scheduler.state import SystemSnapshot
from uavmesh.scheduler.state import TransferParams
from uavmesh.scheduler.state import UavState
from uavmesh.scheduler.state import validate_transfer_params
from uavmesh.topology import FlightParams
from uavmesh.topology import Topology
from uavmesh.topology import flight_time
from uavmesh.topology import validate_flight_params
from uavmesh.types import ArrivalStamp
from uavmesh.types import CellMode
from uavmesh.types import DeviceKind
from uavmesh.types import FailureCause
from uavmesh.types import ModelKind
from uavmesh.types import Phase
from uavmesh.types import Position

logger = logging.getLogger(__name__)

DEFAULT_HORIZON_S = 86400.0


class SimConfig(NamedTuple):
    """The full input of one simulation run.

    `battery_pool_size` is the number of spare batteries at the ES (RP
    models only). `sample_interval_s` enables the timeline, `trace`
    records every battery mode change
    """

    model_kind: ModelKind
    topology: Topology
    uav_count: int
    battery_pool_size: int = 0
    horizon_s: float = DEFAULT_HORIZON_S
    battery: BatteryParams = BatteryParams()
    flight: FlightParams = FlightParams()
    transfer: TransferParams = TransferParams()
    sample_interval_s: Optional[float] = None
    trace: bool = False


def validate_config(config: SimConfig) -> None:
    """Check a `SimConfig` before running it

    Raises:
        ValueError: If the configuration is invalid
    """
    if config is None:
        raise ValueError('config should not be None')

    if config.model_kind is None or config.topology is None:
        raise ValueError('model_kind and topology should not be None')

    if config.uav_count is None or config.uav_count < 1:
        raise ValueError('uav_count should be at least 1')

    if config.horizon_s is None or config.horizon_s < 0:
        raise ValueError('horizon_s should not be negative')

    if config.battery_pool_size < 0:
        raise ValueError('battery_pool_size should not be negative')

    if not config.model_kind.uses_replacement and config.battery_pool_size:
        raise ValueError(
            f'{config.model_kind} does not use a battery pool')

    interval = config.sample_interval_s
    if interval is not None and interval <= 0:
        raise ValueError('sample_interval_s should be greater than 0')

    bm.validate_params(config.battery)
    validate_flight_params(config.flight)
    validate_transfer_params(config.transfer)
    if config.model_kind == ModelKind.SPT_CH:
        policies.transfer_net_power(config.battery, config.flight,
                                    config.transfer)


def installed_batteries(model_kind: ModelKind, uav_count: int,
                        ap_count: int) -> int:
    """Batteries installed in devices at t = 0: one per UAV plus one per
    pre-placed AP in the separate models
    """
    if model_kind.is_joint:
        return uav_count
    return uav_count + ap_count


def failure_cause(snapshot: SystemSnapshot) -> Optional[FailureCause]:
    """Why the network is not sustained at a snapshot, `None` when it is.

    A position fails when its AP device is empty or, in the joint models,
    when no UAV plays the AP role. A UAV fails when it is empty while away
    from the ES
    """
    for ap in snapshot.aps.values():
        if snapshot.model_kind.is_joint and ap.occupied_by is None:
            return FailureCause.POSITION_VACANT
        if ap.soc_pct is None or ap.soc_pct <= 0:
            return FailureCause.AP_DEPLETED

    for uav in snapshot.uavs.values():
        if uav.phase != Phase.AT_ES and uav.soc_pct <= 0:
            return FailureCause.UAV_DEPLETED_IN_FLIGHT
    return None


def is_sustained_at(snapshot: SystemSnapshot) -> bool:
    return failure_cause(snapshot) is None


class _Cell:
    """Lazily evaluated physical battery"""

    __slots__ = ('battery_id', 'soc0', 't0', 'mode', 'power', 'version',
                 'ap_role')

    def __init__(self, battery_id: int):
        self.battery_id = battery_id
        self.soc0 = 100.0
        self.t0 = 0.0
        self.mode = CellMode.IDLE
        self.power = 0.0
        self.version = 0
        self.ap_role = False

    def soc(self, now: float, params: BatteryParams) -> float:
        elapsed = now - self.t0
        if self.mode == CellMode.DISCHARGE:
            return bm.discharge(self.soc0, self.power, elapsed, params)
        if self.mode == CellMode.CHARGE:
            return bm.charge(self.soc0, elapsed, params)
        if self.mode == CellMode.RECEIVE:
            return bm.receive_energy(self.soc0, self.power * elapsed, params)
        return self.soc0


class _Uav:
    __slots__ = ('uav_id', 'phase', 'associated_ap', 'battery_id',
                 'arrival_times', 'origin', 'destination', 'departed_s',
                 'arrives_s')

    def __init__(self, uav_id: int, battery_id: int):
        self.uav_id = uav_id
        self.phase = Phase.AT_AP
        self.associated_ap: Optional[int] = None
        self.battery_id = battery_id
        self.arrival_times: Dict[int, ArrivalStamp] = {}
        self.origin: Position = None
        self.destination: Position = None
        self.departed_s = 0.0
        self.arrives_s = 0.0


class Simulation:
    """One run of the event-driven simulator. Use `run` for the
    functional entry point
    """

    def __init__(self, config: SimConfig):
        """Simulation init

        Args:
            config (uavmesh.engine.SimConfig): The run configuration

        Raises:
            ValueError: If the configuration is invalid
        """
        validate_config(config)
        self._config = config
        self._kind = config.model_kind
        self._topology = config.topology
        self._battery = config.battery
        self._flight = config.flight
        self._queue = EventQueue()
        self._now = 0.0
        self._stamp_sequence = 0
        self._cells: Dict[int, _Cell] = {}
        self._uavs: Dict[int, _Uav] = {}
        self._ap_battery: Dict[int, int] = {}
        self._association = {i: 0 for i in self._topology.ap_ids}
        self._pool: Set[int] = set()
        self._census: Set[int] = set()
        self._used: Set[int] = set()
        self._servicing: Dict[int, int] = {}
        self._min_ap_soc = 100.0
        self._failure: Optional[Failure] = None
        self._timeline: List[TimelineRow] = []
        self._activity: List[ActivityRow] = []
        self._event_count = 0
        self._sample_index = 0

    def run(self) -> SimReport:
        """Execute the run up to the horizon or the first failure

        Returns:
            The `uavmesh.reports.SimReport` of the run

        Raises:
            uavmesh.exceptions.SimulationInvariantError: If a consistency
                check fails at an event boundary
        """
        horizon = self._config.horizon_s
        logger.debug('Running %s with %d UAVs on %r for %.0f s', self._kind,
                     self._config.uav_count, self._topology, horizon)

        if horizon == 0:
            return self._report_without_fleet()

        self._initialise()
        self._check_invariants()
        if self._failure is None and self._config.sample_interval_s:
            self._queue.schedule(0.0, EventKind.SAMPLE, 0)

        while self._failure is None and not self._queue.is_empty():
            if self._queue.peek().time_s > horizon:
                break
            event = self._queue.pop()
            if self._handle(event):
                self._event_count += 1
                self._check_invariants()

        end = horizon if self._failure is None else self._failure.time_s
        self._now = end
        for cell in self._cells.values():
            if cell.ap_role:
                self._observe_ap(cell.soc(end, self._battery))

        report = SimReport(
            sustained=self._failure is None,
            failure=self._failure,
            min_ap_soc_pct=self._min_ap_soc,
            batteries_used=len(self._used),
            battery_count=len(self._census),
            timeline=tuple(self._timeline),
            event_count=self._event_count,
            horizon_s=horizon,
            activity=tuple(self._activity))
        logger.debug('Run finished: sustained=%s failure=%s events=%d',
                     report.sustained, report.failure, report.event_count)
        return report

    def snapshot(self) -> SystemSnapshot:
        """The system state at the current simulated time, the end of the
        run once `run` has returned
        """
        return self._snapshot()

    def _report_without_fleet(self) -> SimReport:
        count = installed_batteries(self._kind, self._config.uav_count,
                                    self._topology.ap_count)
        return SimReport(sustained=True, failure=None, min_ap_soc_pct=100.0,
                         batteries_used=0,
                         battery_count=count + self._config.battery_pool_size,
                         timeline=(), event_count=0, horizon_s=0.0)

    def _initialise(self) -> None:
        uav_count = self._config.uav_count
        ap_count = self._topology.ap_count

        for uav_id in range(1, uav_count + 1):
            self._new_cell(uav_id)
            self._uavs[uav_id] = _Uav(uav_id, uav_id)
            self._used.add(uav_id)

        next_id = uav_count + 1
        if not self._kind.is_joint:
            for ap_id in self._topology.ap_ids:
                cell = self._new_cell(next_id)
                self._ap_battery[ap_id] = next_id
                self._used.add(next_id)
                cell.ap_role = True
                self._set_mode(cell, CellMode.DISCHARGE,
                               self._flight.comm_power_W)
                next_id += 1

        for _ in range(self._config.battery_pool_size):
            self._new_cell(next_id)
            self._pool.add(next_id)
            next_id += 1

        for uav in self._uavs.values():
            ap_id = policies.initial_association(uav.uav_id, ap_count)
            self._associate(uav, ap_id)
            self._land_at_ap(uav)

        if self._kind.is_joint:
            for ap_id in self._topology.ap_ids:
                self._rotate_joint_position(ap_id)
            cause = failure_cause(self._snapshot())
            if cause is not None:
                self._fail(cause)
        else:
            for uav in list(self._uavs.values()):
                self._service_separate(uav)

    def _new_cell(self, battery_id: int) -> _Cell:
        cell = _Cell(battery_id)
        self._cells[battery_id] = cell
        self._census.add(battery_id)
        self._trace(cell)
        return cell

    def _trace(self, cell: _Cell) -> None:
        if self._config.trace:
            self._activity.append(ActivityRow(self._now, cell.battery_id,
                                              cell.mode, cell.power))

    def _observe_ap(self, soc: float) -> None:
        self._min_ap_soc = min(self._min_ap_soc, soc)

    def _settle(self, cell: _Cell) -> float:
        cell.soc0 = cell.soc(self._now, self._battery)
        cell.t0 = self._now
        if cell.ap_role:
            self._observe_ap(cell.soc0)
        return cell.soc0

    def _set_mode(self, cell: _Cell, mode: CellMode,
                  power: float = 0.0, ap_role: bool = None) -> None:
        self._settle(cell)
        cell.mode = mode
        cell.power = power
        cell.version += 1
        if ap_role is not None:
            cell.ap_role = ap_role
        self._trace(cell)

        if mode == CellMode.DISCHARGE:
            lifetime = bm.time_to_empty(cell.soc0, power, self._battery)
            self._queue.schedule(self._now + lifetime, EventKind.DEPLETION,
                                 cell.battery_id, cell.version)

    def _soc(self, battery_id: int) -> float:
        return self._cells[battery_id].soc(self._now, self._battery)

    def _associate(self, uav: _Uav, ap_id: int) -> None:
        uav.associated_ap = ap_id
        self._association[ap_id] += 1

    def _land_at_ap(self, uav: _Uav) -> None:
        ap_id = uav.associated_ap
        uav.phase = Phase.AT_AP
        uav.arrival_times[ap_id] = (self._now, self._stamp_sequence)
        self._stamp_sequence += 1

        cell = self._cells[uav.battery_id]
        if self._kind.is_joint:
            self._set_mode(cell, CellMode.DISCHARGE,
                           self._flight.comm_power_W, ap_role=True)
        else:
            self._set_mode(cell, CellMode.IDLE, ap_role=False)

    def _depart(self, uav: _Uav) -> None:
        ap_id = uav.associated_ap
        self._association[ap_id] -= 1
        uav.associated_ap = None
        uav.phase = Phase.FLYING_TO_ES
        self._fly(uav, self._topology.position(ap_id),
                  self._topology.closest_es(ap_id), ap_id,
                  EventKind.ARRIVE_ES)

    def _dispatch(self, uav: _Uav) -> None:
        ap_id = policies.select_ap_position(self._snapshot(), uav.uav_id,
                                            self._kind)
        self._associate(uav, ap_id)
        uav.phase = Phase.FLYING_TO_AP
        self._fly(uav, self._topology.closest_es(ap_id),
                  self._topology.position(ap_id), ap_id, EventKind.ARRIVE_AP)

    def _fly(self, uav: _Uav, origin: Position, destination: Position,
             ap_id: int, arrival: EventKind) -> None:
        duration = flight_time(self._topology.distance(ap_id), self._flight)
        uav.origin = origin
        uav.destination = destination
        uav.departed_s = self._now
        uav.arrives_s = self._now + duration
        self._set_mode(self._cells[uav.battery_id], CellMode.DISCHARGE,
                       self._flight.fly_power_W, ap_role=False)
        self._queue.schedule(uav.arrives_s, arrival, uav.uav_id)

    def _rotate_joint_position(self, ap_id: int) -> None:
        snapshot = self._snapshot()
        for uav in list(self._uavs.values()):
            if uav.phase != Phase.AT_AP or uav.associated_ap != ap_id:
                continue
            if policies.joint_departure_check(snapshot, uav.uav_id, ap_id):
                self._depart(uav)

    def _service_separate(self, uav: _Uav) -> None:
        ap_id = uav.associated_ap
        if ap_id in self._servicing:
            self._depart(uav)
            return

        snapshot = self._snapshot()
        service = policies.separate_service(
            snapshot.uavs[uav.uav_id], snapshot.aps[ap_id], self._kind,
            self._topology.distance(ap_id), self._battery, self._flight,
            self._config.transfer)

        if self._kind.uses_replacement:
            ap_cell = self._cells[self._ap_battery[ap_id]]
            uav_cell = self._cells[uav.battery_id]
            uav.battery_id = service.uav.battery_id
            self._ap_battery[ap_id] = service.ap.battery_id
            self._set_mode(ap_cell, CellMode.IDLE, ap_role=False)
            self._set_mode(uav_cell, CellMode.DISCHARGE,
                           self._flight.comm_power_W, ap_role=True)
            self._depart(uav)
            return

        if service.duration_s <= 0:
            self._depart(uav)
            return

        transfer = self._config.transfer
        net = policies.transfer_net_power(self._battery, self._flight,
                                          transfer)
        self._servicing[ap_id] = uav.uav_id
        self._set_mode(self._cells[uav.battery_id], CellMode.DISCHARGE,
                       transfer.effective_power_W(self._battery))
        self._set_mode(self._cells[self._ap_battery[ap_id]],
                       CellMode.RECEIVE, net)
        self._queue.schedule(self._now + service.duration_s,
                             EventKind.SERVICE_DONE, uav.uav_id)

    def _handle(self, event: Event) -> bool:
        self._now = event.time_s
        handlers = {
            EventKind.DEPLETION: self._on_depletion,
            EventKind.ARRIVE_AP: self._on_arrive_ap,
            EventKind.ARRIVE_ES: self._on_arrive_es,
            EventKind.REPLENISHED: self._on_replenished,
            EventKind.SERVICE_DONE: self._on_service_done,
            EventKind.SAMPLE: self._on_sample,
        }
        return handlers[event.kind](event)

    def _on_depletion(self, event: Event) -> bool:
        cell = self._cells[event.subject]
        if cell.version != event.version:
            return False

        cell.soc0 = 0.0
        cell.t0 = self._now
        if cell.ap_role:
            self._observe_ap(0.0)

        cause = failure_cause(self._snapshot())
        if cause is None:
            raise SimulationInvariantError(
                f'battery {cell.battery_id} is empty at {self._now} s '
                'without failing the network')
        self._fail(cause)
        return True

    def _on_arrive_ap(self, event: Event) -> bool:
        uav = self._uavs[event.subject]
        self._land_at_ap(uav)
        if self._kind.is_joint:
            self._rotate_joint_position(uav.associated_ap)
        else:
            self._service_separate(uav)
        return True

    def _on_arrive_es(self, event: Event) -> bool:
        uav = self._uavs[event.subject]
        uav.phase = Phase.AT_ES
        cell = self._cells[uav.battery_id]
        snapshot = self._snapshot()

        try:
            replenishment = policies.es_replenish(
                snapshot.uavs[uav.uav_id], snapshot.pool, self._kind,
                self._battery)
        except PoolExhaustedError:
            self._set_mode(cell, CellMode.IDLE)
            self._fail(FailureCause.POOL_EXHAUSTED)
            return True

        if not self._kind.uses_replacement:
            self._set_mode(cell, CellMode.CHARGE)
            self._queue.schedule(self._now + replenishment.duration_s,
                                 EventKind.REPLENISHED, uav.uav_id)
            return True

        new_id = replenishment.uav.battery_id
        self._pool.discard(new_id)
        self._pool.add(uav.battery_id)
        self._used.add(new_id)
        self._set_mode(cell, CellMode.CHARGE)
        uav.battery_id = new_id
        self._dispatch(uav)
        return True

    def _on_replenished(self, event: Event) -> bool:
        uav = self._uavs[event.subject]
        self._set_mode(self._cells[uav.battery_id], CellMode.IDLE)
        self._dispatch(uav)
        return True

    def _on_service_done(self, event: Event) -> bool:
        uav = self._uavs[event.subject]
        ap_id = uav.associated_ap
        del self._servicing[ap_id]
        self._set_mode(self._cells[self._ap_battery[ap_id]],
                       CellMode.DISCHARGE, self._flight.comm_power_W)
        self._depart(uav)
        return True

    def _on_sample(self, event: Event) -> bool:
        del event  # Unused
        self._record_sample()
        interval = self._config.sample_interval_s
        self._sample_index += 1
        next_time = self._sample_index * interval
        if next_time <= self._config.horizon_s:
            self._queue.schedule(next_time, EventKind.SAMPLE, 0)
        return False

    def _record_sample(self) -> None:
        snapshot = self._snapshot()
        for uav in snapshot.uavs.values():
            self._timeline.append(TimelineRow(
                self._now, DeviceKind.UAV, uav.uav_id, uav.soc_pct,
                uav.phase.value, uav.battery_id))
        for ap in snapshot.aps.values():
            self._timeline.append(TimelineRow(
                self._now, DeviceKind.AP, ap.ap_id, ap.soc_pct, '',
                ap.battery_id))

    def _fail(self, cause: FailureCause) -> None:
        self._failure = Failure(self._now, cause)
        logger.debug('Network failed at %.3f s: %s', self._now, cause.value)

    def _uav_position(self, uav: _Uav) -> Position:
        if uav.phase == Phase.AT_AP:
            return self._topology.position(uav.associated_ap)
        if not uav.phase.is_flying:
            # the ES it landed at
            return uav.destination

        span = uav.arrives_s - uav.departed_s
        fraction = 1.0 if span <= 0 else (self._now - uav.departed_s) / span
        fraction = min(max(fraction, 0.0), 1.0)
        return Position(*(a + (b - a) * fraction
                          for a, b in zip(uav.origin, uav.destination)))

    def _snapshot(self) -> SystemSnapshot:
        uavs = {}
        for uav in self._uavs.values():
            uavs[uav.uav_id] = UavState(
                uav_id=uav.uav_id,
                phase=uav.phase,
                position=self._uav_position(uav),
                associated_ap=uav.associated_ap,
                soc_pct=self._soc(uav.battery_id),
                battery_id=uav.battery_id,
                arrival_times=dict(uav.arrival_times))

        partial = SystemSnapshot(self._now, self._kind, uavs, {})
        aps = {}
        for ap_id in self._topology.ap_ids:
            count = self._association[ap_id]
            if self._kind.is_joint:
                holder = policies.occupant(partial, ap_id)
                if holder is None:
                    aps[ap_id] = ApState(ap_id, None, None, None, count)
                else:
                    aps[ap_id] = ApState(ap_id, holder.uav_id,
                                         holder.soc_pct, holder.battery_id,
                                         count)
            else:
                battery_id = self._ap_battery[ap_id]
                aps[ap_id] = ApState(ap_id, None, self._soc(battery_id),
                                     battery_id, count)

        pool = tuple(PoolBattery(b, self._soc(b)) for b in sorted(self._pool))
        return SystemSnapshot(self._now, self._kind, uavs, aps, pool)

    def _check_invariants(self) -> None:
        counts = {i: 0 for i in self._topology.ap_ids}
        for uav in self._uavs.values():
            if uav.associated_ap is not None:
                counts[uav.associated_ap] += 1
        if counts != self._association:
            raise SimulationInvariantError(
                f'association counts {self._association} do not match '
                f'the fleet {counts} at {self._now} s')

        held = [uav.battery_id for uav in self._uavs.values()]
        held.extend(self._ap_battery.values())
        held.extend(self._pool)
        if len(held) != len(set(held)) or set(held) != self._census:
            raise SimulationInvariantError(
                f'battery census broken at {self._now} s: {sorted(held)}')

        if self._kind.is_joint and self._failure is None:
            for ap_id in self._topology.ap_ids:
                present = [u for u in self._uavs.values()
                           if u.phase == Phase.AT_AP
                           and u.associated_ap == ap_id]
                if len(present) > 1:
                    raise SimulationInvariantError(
                        f'{len(present)} UAVs hold AP position {ap_id} '
                        f'at {self._now} s')


def run(config: SimConfig) -> SimReport:
    """Simulate a configuration up to its horizon

    Args:
        config (uavmesh.engine.SimConfig): The run configuration

    Returns:
        The `uavmesh.reports.SimReport` of the run

    Raises:
        ValueError: If the configuration is invalid
    """
    return Simulation(config).run()
