"""Search drivers for the minimum fleet and battery census, and the
sweeps that tabulate them over topology sizes.

Sustainability is not known to be monotone in the fleet size under the
heuristic policies, so the drivers scan upwards instead of bisecting and
record whether the neighbouring sizes also sustain the network.

A fleet counts as sustaining only when it keeps the network alive for
`STEADY_HORIZONS` consecutive horizons. Fleets whose supply falls slightly
short of the demand live on the charge stored at t = 0 for about a day,
so a single horizon would report them.
"""

import concurrent.futures
import logging

from typing import Any, Dict, Iterable, List, NamedTuple, Optional, Sequence
from typing import Tuple

import numpy as np

from uavmesh import engine
from uavmesh import feasibility
from uavmesh.battery import BatteryParams
from uavmesh.exceptions import InfeasibleError
from uavmesh.scheduler.state import TransferParams
from uavmesh.topology import FlightParams
from uavmesh.topology import Topology
from uavmesh.topology import make_topology
from uavmesh.types import ModelKind
from uavmesh.types import TopologyKind

logger = logging.getLogger(__name__)

STEADY_HORIZONS = 3

SWEEP_HEADER = (
    'model', 'topology', 'n', 'N', 'min_uavs', 'baseline', 'lower_bound',
    'min_batteries', 'horizon_s', 'monotone_flag', 'below_flag',
    'census_flag',
)

INFEASIBLE = 'infeasible'


class UavSearch(NamedTuple):
    """Outcome of a fleet-size scan. `below_sustained` is `None` when
    one UAV fewer is not a valid fleet
    """

    min_uavs: int
    below_sustained: Optional[bool]
    above_sustained: bool

    @property
    def monotone(self) -> bool:
        return self.above_sustained


class SweepRow(NamedTuple):
    """One cell of a sweep. `min_uavs` is `None` for an infeasible cell
    and `min_batteries` is `None` for CH models.

    `below_flag` is whether one UAV fewer also sustains the network, which
    can only happen below the lower bound where the scan does not look.
    `census_flag` is `False` when one UAV fewer sustains the network with
    the minimal census, `None` when there was nothing to check
    """

    model: ModelKind
    topology: TopologyKind
    n: int
    ap_count: int
    min_uavs: Optional[int]
    baseline: int
    lower_bound: int
    min_batteries: Optional[int]
    horizon_s: float
    monotone_flag: Optional[bool]
    below_flag: Optional[bool] = None
    census_flag: Optional[bool] = None

    @property
    def feasible(self) -> bool:
        return self.min_uavs is not None

    def csv_row(self) -> Tuple[Any, ...]:
        min_uavs = INFEASIBLE if self.min_uavs is None else self.min_uavs
        return (self.model, self.topology, self.n, self.ap_count, min_uavs,
                self.baseline, self.lower_bound, self.min_batteries,
                self.horizon_s, self.monotone_flag, self.below_flag,
                self.census_flag)


class SweepResult(NamedTuple):
    rows: Tuple[SweepRow, ...]

    def csv_rows(self) -> List[Tuple[Any, ...]]:
        return [row.csv_row() for row in self.rows]


class QuadraticFit(NamedTuple):
    coefficients: Tuple[float, float, float]
    r_squared: float


def ample_pool(model_kind: ModelKind, ap_count: int) -> int:
    """Spare batteries used while searching the fleet size, large enough
    that battery scarcity never masks UAV scarcity
    """
    return 3 * ap_count if model_kind.uses_replacement else 0


def _sustained(model_kind: ModelKind, topology: Topology, uav_count: int,
               pool: int, battery: BatteryParams, flight: FlightParams,
               transfer: TransferParams, horizon_s: float) -> bool:
    config = engine.SimConfig(model_kind=model_kind, topology=topology,
                              uav_count=uav_count, battery_pool_size=pool,
                              horizon_s=horizon_s, battery=battery,
                              flight=flight, transfer=transfer)
    report = engine.run(config)
    logger.debug('%s N=%d M=%d pool=%d: sustained=%s', model_kind,
                 topology.ap_count, uav_count, pool, report.sustained)
    return report.sustained


def _steady_span(horizon_s: float, horizons: int) -> float:
    if horizons < 1:
        raise ValueError('horizons should be at least 1')
    # a run over the whole span repeats the shorter runs as its prefix
    return horizon_s * horizons


def search_min_uavs(model_kind: ModelKind, topology: Topology,
                    battery: BatteryParams = BatteryParams(),
                    flight: FlightParams = FlightParams(),
                    transfer: TransferParams = TransferParams(),
                    horizon_s: float = engine.DEFAULT_HORIZON_S,
                    horizons: int = STEADY_HORIZONS) -> UavSearch:
    """Scan fleet sizes from the lower bound up to twice the baseline and
    audit the neighbours of the first sustaining size

    Args:
        model_kind (uavmesh.types.ModelKind): The operation model
        topology (uavmesh.topology.Topology): The AP layout
        battery (uavmesh.battery.BatteryParams): The battery parameters
        flight (uavmesh.topology.FlightParams): The flight parameters
        transfer (uavmesh.scheduler.TransferParams): The transfer parameters
        horizon_s (float): The horizon of a single run
        horizons (int): How many consecutive horizons a fleet must keep
            the network alive for

    Returns:
        A `UavSearch` audit record

    Raises:
        ValueError: If `horizons` is less than 1
        uavmesh.exceptions.InfeasibleError: If the constraints fail at the
            farthest AP or no fleet size in the window sustains the network
    """
    span = _steady_span(horizon_s, horizons)
    report = feasibility.check_constraints(topology, model_kind, battery,
                                           flight, transfer)
    if not report.farthest_ok:
        raise InfeasibleError(
            f'{model_kind} violates the feasibility constraints at the '
            f'farthest AP of {topology!r}')

    pool = ample_pool(model_kind, topology.ap_count)
    results: Dict[int, bool] = {}

    def sustains(uav_count: int) -> bool:
        if uav_count not in results:
            results[uav_count] = _sustained(model_kind, topology, uav_count,
                                            pool, battery, flight, transfer,
                                            span)
        return results[uav_count]

    lower = report.lower_bound_uavs
    upper = 2 * report.baseline_uavs
    found = next((m for m in range(lower, upper + 1) if sustains(m)), None)
    if found is None:
        raise InfeasibleError(
            f'no fleet of {lower} to {upper} UAVs sustains {model_kind} '
            f'on {topology!r}')

    below = sustains(found - 1) if found > 1 else None
    above = sustains(found + 1)
    if below:
        logger.warning('%s on %r: %d UAVs sustain below the lower bound',
                       model_kind, topology, found - 1)
    if not above:
        logger.warning('%s on %r: %d UAVs sustain but %d do not',
                       model_kind, topology, found, found + 1)
    logger.info('%s on %r: minimum fleet %d', model_kind, topology, found)
    return UavSearch(found, below, above)


def find_min_uavs(model_kind: ModelKind, topology: Topology,
                  battery: BatteryParams = BatteryParams(),
                  flight: FlightParams = FlightParams(),
                  transfer: TransferParams = TransferParams(),
                  horizon_s: float = engine.DEFAULT_HORIZON_S,
                  horizons: int = STEADY_HORIZONS) -> int:
    """The smallest fleet that sustains the network, see `search_min_uavs`

    Raises:
        uavmesh.exceptions.InfeasibleError: If no fleet in the search
            window sustains the network
    """
    return search_min_uavs(model_kind, topology, battery, flight, transfer,
                           horizon_s, horizons).min_uavs


def find_min_batteries(model_kind: ModelKind, topology: Topology,
                       uav_count: int,
                       battery: BatteryParams = BatteryParams(),
                       flight: FlightParams = FlightParams(),
                       transfer: TransferParams = TransferParams(),
                       horizon_s: float = engine.DEFAULT_HORIZON_S,
                       horizons: int = STEADY_HORIZONS) -> int:
    """The smallest battery census (installed plus ES spares) that
    sustains a replacement-model network with a given fleet

    Args:
        model_kind (uavmesh.types.ModelKind): JNT-RP or SPT-RP
        topology (uavmesh.topology.Topology): The AP layout
        uav_count (int): The fleet size
        battery (uavmesh.battery.BatteryParams): The battery parameters
        flight (uavmesh.topology.FlightParams): The flight parameters
        transfer (uavmesh.scheduler.TransferParams): The transfer parameters
        horizon_s (float): The horizon of a single run
        horizons (int): How many consecutive horizons a census must keep
            the network alive for

    Returns:
        The total number of batteries

    Raises:
        ValueError: If `model_kind` does not replace batteries or
            `horizons` is less than 1
        uavmesh.exceptions.InfeasibleError: If no pool of up to 3·N
            spares sustains the network
    """
    if not model_kind.uses_replacement:
        raise ValueError(f'{model_kind} does not replace batteries')

    span = _steady_span(horizon_s, horizons)
    installed = engine.installed_batteries(model_kind, uav_count,
                                           topology.ap_count)
    for pool in range(ample_pool(model_kind, topology.ap_count) + 1):
        if _sustained(model_kind, topology, uav_count, pool, battery,
                      flight, transfer, span):
            logger.info('%s on %r with %d UAVs: %d batteries', model_kind,
                        topology, uav_count, installed + pool)
            return installed + pool

    raise InfeasibleError(
        f'no battery pool sustains {model_kind} with {uav_count} UAVs '
        f'on {topology!r}')


def census_confirms_fleet(model_kind: ModelKind, topology: Topology,
                          uav_count: int, census: int,
                          battery: BatteryParams = BatteryParams(),
                          flight: FlightParams = FlightParams(),
                          transfer: TransferParams = TransferParams(),
                          horizon_s: float = engine.DEFAULT_HORIZON_S,
                          horizons: int = STEADY_HORIZONS
                          ) -> Optional[bool]:
    """Whether the minimum fleet found with the ample pool is still the
    minimum when only `census` batteries exist. `uav_count` sustains the
    network with that census by construction, so only one UAV fewer is
    run, with the spare the missing UAV leaves behind

    Returns:
        `True` when one UAV fewer fails, `False` when it sustains the
        network and `None` for a single UAV fleet
    """
    if uav_count <= 1:
        return None

    fewer = uav_count - 1
    pool = census - engine.installed_batteries(model_kind, fewer,
                                               topology.ap_count)
    sustained = _sustained(model_kind, topology, fewer, pool, battery,
                           flight, transfer,
                           _steady_span(horizon_s, horizons))
    if sustained:
        logger.warning('%s on %r: %d UAVs sustain the network with %d '
                       'batteries, the minimum fleet is smaller', model_kind,
                       topology, fewer, census)
    return not sustained


class _SweepCell(NamedTuple):
    model_kind: ModelKind
    topology_kind: TopologyKind
    n: int
    spacing_m: float
    battery: BatteryParams
    flight: FlightParams
    transfer: TransferParams
    horizon_s: float
    horizons: int


def _run_cell(cell: _SweepCell) -> SweepRow:
    topology = make_topology(cell.topology_kind, cell.n, cell.spacing_m)
    kind = cell.model_kind
    ap_count = topology.ap_count
    baseline = feasibility.baseline_uavs(kind, ap_count)
    lower = feasibility.lower_bound_uavs(kind, ap_count)

    try:
        search = search_min_uavs(kind, topology, cell.battery, cell.flight,
                                 cell.transfer, cell.horizon_s,
                                 cell.horizons)
    except InfeasibleError as ex:
        logger.warning('%s', ex)
        return SweepRow(kind, cell.topology_kind, cell.n, ap_count, None,
                        baseline, lower, None, cell.horizon_s, None)

    min_batteries = None
    census_flag = None
    if kind.uses_replacement:
        try:
            min_batteries = find_min_batteries(
                kind, topology, search.min_uavs, cell.battery, cell.flight,
                cell.transfer, cell.horizon_s, cell.horizons)
        except InfeasibleError as ex:
            logger.warning('%s', ex)
        else:
            census_flag = census_confirms_fleet(
                kind, topology, search.min_uavs, min_batteries,
                cell.battery, cell.flight, cell.transfer, cell.horizon_s,
                cell.horizons)

    return SweepRow(kind, cell.topology_kind, cell.n, ap_count,
                    search.min_uavs, baseline, lower, min_batteries,
                    cell.horizon_s, search.monotone, search.below_sustained,
                    census_flag)


def sweep(models: Sequence[ModelKind], topology_kind: TopologyKind,
          n_values: Iterable[int], spacing_m: float = 100.0,
          battery: BatteryParams = BatteryParams(),
          flight: FlightParams = FlightParams(),
          transfer: TransferParams = TransferParams(),
          horizon_s: float = engine.DEFAULT_HORIZON_S,
          workers: int = 1,
          horizons: int = STEADY_HORIZONS) -> SweepResult:
    """Tabulate the minimum fleet (and battery census for RP models)
    for every model and topology size. Rows are ordered by model, then n

    Args:
        models (Sequence[ModelKind]): The operation models
        topology_kind (uavmesh.types.TopologyKind): The layout family
        n_values (Iterable[int]): The generator sizes
        spacing_m (float): The AP spacing
        battery (uavmesh.battery.BatteryParams): The battery parameters
        flight (uavmesh.topology.FlightParams): The flight parameters
        transfer (uavmesh.scheduler.TransferParams): The transfer parameters
        horizon_s (float): The horizon of a single run
        workers (int): Worker processes, 1 runs the cells in-process
        horizons (int): How many consecutive horizons a fleet must keep
            the network alive for

    Returns:
        A `SweepResult`. Infeasible cells are marked, never raised

    Raises:
        ValueError: If `models` or `n_values` is empty, or `workers` or
            `horizons` is less than 1
    """
    n_values = list(n_values)
    if not models:
        raise ValueError('models should not be empty')

    if not n_values:
        raise ValueError('n_values should not be empty')

    if workers < 1:
        raise ValueError('workers should be at least 1')

    if horizons < 1:
        raise ValueError('horizons should be at least 1')

    cells = [_SweepCell(kind, topology_kind, n, spacing_m, battery, flight,
                        transfer, horizon_s, horizons)
             for kind in models for n in n_values]

    if workers == 1:
        rows = [_run_cell(cell) for cell in cells]
    else:
        with concurrent.futures.ProcessPoolExecutor(workers) as executor:
            rows = list(executor.map(_run_cell, cells))
    return SweepResult(tuple(rows))


def fit_quadratic(ns: Sequence[float],
                  values: Sequence[float]) -> QuadraticFit:
    """Least-squares fit of a degree 2 polynomial with its coefficient
    of determination

    Raises:
        ValueError: If fewer than three points are given
    """
    x = np.asarray(ns, dtype=float)
    y = np.asarray(values, dtype=float)
    if len(x) < 3 or len(x) != len(y):
        raise ValueError('at least three (n, value) points are needed')

    coefficients = np.polyfit(x, y, 2)
    residual = float(np.sum((y - np.polyval(coefficients, x)) ** 2))
    total = float(np.sum((y - y.mean()) ** 2))
    if total == 0:
        r_squared = 1.0 if residual == 0 else 0.0
    else:
        r_squared = 1.0 - residual / total
    a, b, c = (float(v) for v in coefficients)
    return QuadraticFit((a, b, c), r_squared)
