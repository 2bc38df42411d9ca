"""Result records produced by a simulation run and their table layouts"""

import enum
import json

from typing import Any, List, NamedTuple, Optional, Tuple

import numpy as np

from uavmesh.types import CellMode
from uavmesh.types import DeviceKind
from uavmesh.types import FailureCause

REPORT_HEADER = (
    'model', 'topology', 'n', 'N', 'uav_count', 'battery_count',
    'sustained', 'failure_time_s', 'failure_cause', 'min_ap_soc_pct',
    'batteries_used', 'event_count', 'horizon_s',
)

TIMELINE_HEADER = ('t_s', 'device_kind', 'device_id', 'soc_pct', 'phase')


class Failure(NamedTuple):
    time_s: float
    cause: FailureCause


class TimelineRow(NamedTuple):
    """A sampled state of charge. `soc_pct` is `None` for a vacant
    joint-model AP position, `phase` is empty for APs
    """

    t_s: float
    device_kind: DeviceKind
    device_id: int
    soc_pct: Optional[float]
    phase: str
    battery_id: Optional[int] = None

    def csv_row(self) -> Tuple[Any, ...]:
        return (self.t_s, self.device_kind, self.device_id, self.soc_pct,
                self.phase)


class ActivityRow(NamedTuple):
    """A battery mode change. `rate_W` is the draw while discharging and
    the net intake while receiving energy from a UAV
    """

    time_s: float
    battery_id: int
    mode: CellMode
    rate_W: float


class SimReport(NamedTuple):
    """The verdict of one simulation run.

    Attributes:
        sustained (bool): True if no failure happened within the horizon
        failure (Failure): The first failure, `None` when sustained
        min_ap_soc_pct (float): The lowest AP state of charge observed
        batteries_used (int): Battery ids ever installed in a device
        battery_count (int): Battery ids in the census, spares included
        timeline (tuple): Sampled `TimelineRow` values
        event_count (int): Events handled
        horizon_s (float): The simulated horizon
        activity (tuple): `ActivityRow` trace when tracing was requested
    """

    sustained: bool
    failure: Optional[Failure]
    min_ap_soc_pct: float
    batteries_used: int
    battery_count: int
    timeline: Tuple[TimelineRow, ...]
    event_count: int
    horizon_s: float
    activity: Tuple[ActivityRow, ...] = ()

    def summary_items(self) -> List[Tuple[str, Any]]:
        failure = self.failure
        return [
            ('sustained', self.sustained),
            ('failure_time_s', None if failure is None else failure.time_s),
            ('failure_cause', None if failure is None else failure.cause),
            ('min_ap_soc_pct', self.min_ap_soc_pct),
            ('batteries_used', self.batteries_used),
            ('battery_count', self.battery_count),
            ('event_count', self.event_count),
            ('horizon_s', self.horizon_s),
        ]


def report_row(config: Any, report: SimReport) -> Tuple[Any, ...]:
    """One `REPORT_HEADER` row describing a run

    Args:
        config (uavmesh.engine.SimConfig): The configuration that was run
        report (uavmesh.reports.SimReport): Its report

    Returns:
        The row values in header order
    """
    if report is None:
        raise ValueError('report should not be None')

    failure = report.failure
    topology = config.topology
    return (
        config.model_kind, topology.kind, topology.n, topology.ap_count,
        config.uav_count, report.battery_count, report.sustained,
        None if failure is None else failure.time_s,
        None if failure is None else failure.cause,
        report.min_ap_soc_pct, report.batteries_used, report.event_count,
        report.horizon_s,
    )


def to_plain(value: Any) -> Any:
    """Convert report values into JSON and YAML friendly builtins"""
    if isinstance(value, enum.Enum):
        return value.value
    if isinstance(value, np.generic):
        return value.item()
    if hasattr(value, '_asdict'):
        return {k: to_plain(v) for k, v in value._asdict().items()}
    if isinstance(value, dict):
        return {str(k): to_plain(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [to_plain(v) for v in value]
    return value


class ReportJSONEncoder(json.JSONEncoder):
    """Custom JSON encoder to handle enums and numpy scalars"""

    def default(self, o: Any) -> Any:
        """Encodes an enum or numpy scalar into a JSON serializable object.
        If the object cannot be serialized, then the `TypeError`
        exception is raised
        """
        if isinstance(o, (enum.Enum, np.generic)):
            return to_plain(o)
        return json.JSONEncoder.default(self, o)
