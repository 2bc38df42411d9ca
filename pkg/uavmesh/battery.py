"""Parametric nonlinear lithium-ion battery model.

Discharge follows the unique-curve method: a single curve g(D) = V·I^n of
the discharged capacity D collapses the discharge behaviour at every
constant power draw. Charging follows a constant-current phase up to a
breakpoint and an exponential constant-voltage saturation afterwards.

Every operation is a pure function of a state of charge (in percent of the
nominal capacity) and an immutable `BatteryParams` record.
"""

import enum
import functools
import logging
import math

from collections import namedtuple
from typing import List, NamedTuple, Optional, Tuple

import numpy as np

from scipy import integrate
from scipy import optimize

from uavmesh.types import StateOfCharge

logger = logging.getLogger(__name__)

# Constant term of the discharge curve, g(0)
G_AT_FULL_CHARGE = 3.643

# Default discharge shape: depth of discharge (mAh, for a 2700 mAh pack)
# against the drop of g below g(0). The scale of the drop is calibrated so
# the pack delivers capacity x nominal voltage at the reference power
_SHAPE_DEPTH_MAH = np.array([
    0.0, 100.0, 200.0, 400.0, 800.0, 1200.0, 1600.0,
    2000.0, 2300.0, 2500.0, 2600.0, 2650.0, 2700.0,
])
_SHAPE_DROP = np.array([
    0.0, 0.08, 0.12, 0.16, 0.22, 0.28, 0.34,
    0.42, 0.52, 0.68, 0.85, 1.0, 1.3,
])
_SHAPE_CAPACITY_MAH = 2700.0

# Relative slack on the discharge work below which a battery counts as empty
_EMPTY_TOLERANCE = 1e-10

# Added to the time-to-full so charging for that long reaches the threshold
_FULL_NUDGE_S = 1e-6

_VOLTAGE_XTOL = 1e-6

# mAh <-> coulomb-like conversions: 1 mAh = 3.6 C
_SECONDS_PER_HOUR_MILLI = 3.6

CurvePoint = namedtuple('CurvePoint', ['t_s', 'soc_pct', 'voltage_V'],
                        defaults=(None,))

DischargeTable = namedtuple('DischargeTable', ['depth_mAh', 'g', 'work'])


class CurveMode(enum.Enum):
    CHARGE = 'charge'
    DISCHARGE = 'discharge'


class BatteryParams(NamedTuple):
    """Battery parameters. All quantities use fixed units: mAh, V, s, W

    `discharge_curve` is an optional tuple of `(depth_mAh, g)` pairs
    starting at depth 0 and reaching at least the capacity. When it is
    `None` the calibrated default curve is used
    """

    capacity_mAh: float = 2700.0
    nominal_voltage_V: float = 3.7
    exponent_n: float = 0.081
    cc_cv_breakpoint_s: float = 2238.0
    cc_rate_mAh_per_s: float = 2700.0 / 3600.0
    full_threshold_pct: float = 99.5
    reference_power_W: float = 2.0
    discharge_curve: Optional[Tuple[Tuple[float, float], ...]] = None

    @property
    def nominal_energy_J(self) -> float:
        return self.capacity_mAh * self.nominal_voltage_V * 3.6

    @property
    def cc_breakpoint_mAh(self) -> float:
        return self.cc_rate_mAh_per_s * self.cc_cv_breakpoint_s


def validate_params(params: BatteryParams) -> None:
    """Check the invariants of a `BatteryParams` record

    Args:
        params (uavmesh.battery.BatteryParams): The parameters to check

    Raises:
        ValueError: If `params` is `None` or violates an invariant
    """
    if params is None:
        raise ValueError('params should not be None')

    if params.capacity_mAh <= 0:
        raise ValueError('capacity_mAh should be greater than 0')

    if params.nominal_voltage_V <= 0:
        raise ValueError('nominal_voltage_V should be greater than 0')

    if not 0 <= params.exponent_n < 1:
        raise ValueError('exponent_n should be in [0, 1)')

    if not 0 < params.full_threshold_pct <= 100:
        raise ValueError('full_threshold_pct should be in (0, 100]')

    if params.cc_rate_mAh_per_s <= 0:
        raise ValueError('cc_rate_mAh_per_s should be greater than 0')

    if params.cc_cv_breakpoint_s < 0:
        raise ValueError('cc_cv_breakpoint_s should not be negative')

    if params.cc_breakpoint_mAh >= params.capacity_mAh:
        raise ValueError('the CC phase should end below the capacity')

    if params.reference_power_W <= 0:
        raise ValueError('reference_power_W should be greater than 0')


@functools.lru_cache(maxsize=32)
def discharge_table(params: BatteryParams) -> DischargeTable:
    """Build the tabulated discharge curve on a 1 mAh grid together with
    the cumulative discharge work W(D) = integral of g(D)^(1/(1-n)) dD,
    which turns every constant-power discharge into a table lookup

    Args:
        params (uavmesh.battery.BatteryParams): The battery parameters

    Returns:
        A `DischargeTable` of read-only numpy arrays

    Raises:
        ValueError: If the parameters or the custom curve are invalid
    """
    validate_params(params)
    points = max(int(round(params.capacity_mAh)), 1) + 1
    depth = np.linspace(0.0, params.capacity_mAh, points)

    if params.discharge_curve is None:
        g = _calibrated_default_curve(depth, params)
    else:
        g = _custom_curve(depth, params)

    work = integrate.cumulative_trapezoid(
        _unit_power_voltage(g, params), depth, initial=0)

    for array in (depth, g, work):
        array.setflags(write=False)
    return DischargeTable(depth, g, work)


def _unit_power_voltage(g: np.ndarray, params: BatteryParams) -> np.ndarray:
    # terminal voltage at a 1 W draw
    return np.power(g, 1.0 / (1.0 - params.exponent_n))


def _custom_curve(depth: np.ndarray, params: BatteryParams) -> np.ndarray:
    curve = np.asarray(params.discharge_curve, dtype=float)
    if curve.ndim != 2 or curve.shape[1] != 2 or len(curve) < 2:
        raise ValueError('discharge_curve should be (depth_mAh, g) pairs')

    curve_depth, curve_g = curve[:, 0], curve[:, 1]
    if curve_depth[0] != 0 or np.any(np.diff(curve_depth) <= 0):
        raise ValueError(
            'discharge_curve depths should start at 0 and increase')

    if curve_depth[-1] < params.capacity_mAh:
        raise ValueError('discharge_curve should reach the capacity')

    if np.any(curve_g <= 0):
        raise ValueError('discharge_curve values should be positive')
    return np.interp(depth, curve_depth, curve_g)


def _calibrated_default_curve(depth: np.ndarray,
                              params: BatteryParams) -> np.ndarray:
    scaled = _SHAPE_DEPTH_MAH * (params.capacity_mAh / _SHAPE_CAPACITY_MAH)
    drop = np.interp(depth, scaled, _SHAPE_DROP)
    target_mWh = params.capacity_mAh * params.nominal_voltage_V
    power_factor = params.reference_power_W ** (
        -params.exponent_n / (1.0 - params.exponent_n))

    def energy_error(scale: float) -> float:
        g = G_AT_FULL_CHARGE - scale * drop
        voltage = _unit_power_voltage(g, params) * power_factor
        return float(integrate.trapezoid(voltage, depth)) - target_mWh

    upper = G_AT_FULL_CHARGE / _SHAPE_DROP.max() * (1 - 1e-9)
    try:
        scale = optimize.brentq(energy_error, 0.0, upper, xtol=1e-12)
    except ValueError as ex:
        raise ValueError(
            'the default discharge curve cannot deliver the nominal '
            'energy at the reference power') from ex

    logger.debug('Calibrated discharge curve drop scale to %.6f', scale)
    return G_AT_FULL_CHARGE - scale * drop


def _depth(soc: StateOfCharge, params: BatteryParams) -> float:
    return (1.0 - soc / 100.0) * params.capacity_mAh


def _soc(depth_mAh: float, params: BatteryParams) -> StateOfCharge:
    soc = 100.0 * (1.0 - depth_mAh / params.capacity_mAh)
    return min(max(soc, 0.0), 100.0)


def _work_rate(power_W: float, params: BatteryParams) -> float:
    return power_W ** (1.0 / (1.0 - params.exponent_n)) / \
        _SECONDS_PER_HOUR_MILLI


def terminal_voltage(depth_mAh: float, power_W: float,
                     params: BatteryParams = BatteryParams()) -> float:
    """Recover the terminal voltage V from g(D) = V·I^n with I = P/V

    Args:
        depth_mAh (float): The discharged capacity D
        power_W (float): The constant power draw
        params (uavmesh.battery.BatteryParams): The battery parameters

    Returns:
        The terminal voltage in volts, accurate to 1e-6 V

    Raises:
        ValueError: If `power_W` is not positive
    """
    if power_W <= 0:
        raise ValueError('power_W should be greater than 0')

    table = discharge_table(params)
    g = float(np.interp(depth_mAh, table.depth_mAh, table.g))

    def residual(voltage: float) -> float:
        return voltage * (power_W / voltage) ** params.exponent_n - g

    upper = 1.0
    while residual(upper) < 0:
        upper *= 2.0
    return optimize.brentq(residual, 1e-9, upper, xtol=_VOLTAGE_XTOL)


def discharge(soc: StateOfCharge, power_W: float, dt_s: float,
              params: BatteryParams = BatteryParams()) -> StateOfCharge:
    """Draw a constant power from the battery for a duration

    Args:
        soc (uavmesh.types.StateOfCharge): The state of charge before
        power_W (float): The power draw, zero or more
        dt_s (float): The duration, zero or more
        params (uavmesh.battery.BatteryParams): The battery parameters

    Returns:
        The state of charge after the draw, saturating at 0

    Raises:
        ValueError: If `power_W` or `dt_s` is negative
    """
    if power_W < 0:
        raise ValueError('power_W should not be negative')

    if dt_s < 0:
        raise ValueError('dt_s should not be negative')

    soc = min(max(soc, 0.0), 100.0)
    if soc == 0 or power_W == 0 or dt_s == 0:
        return soc

    table = discharge_table(params)
    total_work = table.work[-1]
    start = np.interp(_depth(soc, params), table.depth_mAh, table.work)
    end = start + dt_s * _work_rate(power_W, params)
    if end >= total_work * (1.0 - _EMPTY_TOLERANCE):
        return 0.0

    depth = float(np.interp(end, table.work, table.depth_mAh))
    return min(_soc(depth, params), soc)


def time_to_empty(soc: StateOfCharge, power_W: float,
                  params: BatteryParams = BatteryParams()) -> float:
    """Find how long the battery lasts at a constant power draw

    Args:
        soc (uavmesh.types.StateOfCharge): The current state of charge
        power_W (float): The power draw
        params (uavmesh.battery.BatteryParams): The battery parameters

    Returns:
        The smallest duration after which `discharge` returns 0

    Raises:
        ValueError: If `power_W` is not positive
    """
    if power_W <= 0:
        raise ValueError('power_W should be greater than 0')

    if soc <= 0:
        return 0.0

    table = discharge_table(params)
    start = np.interp(_depth(min(soc, 100.0), params),
                      table.depth_mAh, table.work)
    return float((table.work[-1] - start) / _work_rate(power_W, params))


def soc_for_endurance(duration_s: float, power_W: float,
                      params: BatteryParams = BatteryParams()
                      ) -> StateOfCharge:
    """Find the smallest state of charge that sustains a constant power
    draw for a duration. Durations longer than a full battery allows
    return 100

    Raises:
        ValueError: If `power_W` is not positive or `duration_s` is negative
    """
    if power_W <= 0:
        raise ValueError('power_W should be greater than 0')

    if duration_s < 0:
        raise ValueError('duration_s should not be negative')

    table = discharge_table(params)
    start = table.work[-1] - duration_s * _work_rate(power_W, params)
    if start <= 0:
        return 100.0

    depth = float(np.interp(start, table.work, table.depth_mAh))
    return _soc(depth, params)


def _charged_capacity(t_s: float, params: BatteryParams) -> float:
    # capacity reached after charging an empty battery for t_s seconds
    breakpoint_s = params.cc_cv_breakpoint_s
    if t_s <= breakpoint_s:
        return params.cc_rate_mAh_per_s * t_s

    remaining = params.capacity_mAh - params.cc_breakpoint_mAh
    rate = params.cc_rate_mAh_per_s / remaining
    return params.cc_breakpoint_mAh + \
        remaining * (1.0 - math.exp(-rate * (t_s - breakpoint_s)))


def _charge_position(capacity: float, params: BatteryParams) -> float:
    # inverse of _charged_capacity
    if capacity <= params.cc_breakpoint_mAh:
        return capacity / params.cc_rate_mAh_per_s

    if capacity >= params.capacity_mAh:
        return math.inf

    remaining = params.capacity_mAh - params.cc_breakpoint_mAh
    rate = params.cc_rate_mAh_per_s / remaining
    fraction = (capacity - params.cc_breakpoint_mAh) / remaining
    return params.cc_cv_breakpoint_s - math.log1p(-fraction) / rate


def charge(soc: StateOfCharge, dt_s: float,
           params: BatteryParams = BatteryParams()) -> StateOfCharge:
    """Charge the battery at an ES port for a duration. A partially
    charged battery resumes at the curve position with the same capacity

    Args:
        soc (uavmesh.types.StateOfCharge): The state of charge before
        dt_s (float): The charging duration, zero or more
        params (uavmesh.battery.BatteryParams): The battery parameters

    Returns:
        The state of charge after charging, never above 100

    Raises:
        ValueError: If `dt_s` is negative
    """
    if dt_s < 0:
        raise ValueError('dt_s should not be negative')

    validate_params(params)
    soc = min(max(soc, 0.0), 100.0)
    if dt_s == 0 or soc == 100:
        return soc

    position = _charge_position(soc / 100.0 * params.capacity_mAh, params)
    capacity = _charged_capacity(position + dt_s, params)
    return min(max(100.0 * capacity / params.capacity_mAh, soc), 100.0)


def time_to_full(soc: StateOfCharge,
                 params: BatteryParams = BatteryParams()) -> float:
    """Find how long an ES port needs to charge the battery up to the
    full threshold. A threshold of 100 is never reached and gives
    `math.inf`

    Args:
        soc (uavmesh.types.StateOfCharge): The current state of charge
        params (uavmesh.battery.BatteryParams): The battery parameters

    Returns:
        The charging duration, 0 if the battery is already full
    """
    validate_params(params)
    if soc >= params.full_threshold_pct:
        return 0.0

    to_capacity = params.capacity_mAh / 100.0
    target = _charge_position(params.full_threshold_pct * to_capacity, params)
    start = _charge_position(max(soc, 0.0) * to_capacity, params)
    return target - start + _FULL_NUDGE_S


def receive_energy(soc: StateOfCharge, energy_J: float,
                   params: BatteryParams = BatteryParams()) -> StateOfCharge:
    """Store energy delivered by another device. The intake is linear
    at the nominal voltage

    Raises:
        ValueError: If `energy_J` is negative
    """
    if energy_J < 0:
        raise ValueError('energy_J should not be negative')

    gained = 100.0 * energy_J / params.nominal_energy_J
    return min(max(soc, 0.0) + gained, 100.0)


def export_curve(mode: CurveMode, power_W: float, step_s: float,
                 params: BatteryParams = BatteryParams(),
                 duration_s: float = None) -> List[CurvePoint]:
    """Sample a charge or discharge curve for plotting. A discharge curve
    starts full and ends at the first empty sample, a charge curve starts
    empty and ends at the first sample at or above the full threshold.
    Discharge points carry the terminal voltage while the cell is not
    empty

    Args:
        mode (uavmesh.battery.CurveMode): Which curve to sample
        power_W (float): The discharge power, ignored for charge curves
        step_s (float): The sampling interval
        params (uavmesh.battery.BatteryParams): The battery parameters
        duration_s (float): Optional cut-off for the sampled time span

    Returns:
        A list of `CurvePoint` rows starting at t = 0

    Raises:
        ValueError: If `step_s` is not positive or a discharge curve
            has no positive power
    """
    if mode is None:
        raise ValueError('mode should not be None')

    if step_s <= 0:
        raise ValueError('step_s should be greater than 0')

    if mode == CurveMode.DISCHARGE:
        if power_W is None or power_W <= 0:
            raise ValueError('power_W should be greater than 0')
        start = 100.0

        def sample(t_s):
            soc = discharge(start, power_W, t_s, params)
            if soc <= 0:
                return CurvePoint(t_s, soc)
            voltage = terminal_voltage(_depth(soc, params), power_W, params)
            return CurvePoint(t_s, soc, voltage)

        def finished(soc):
            return soc <= 0
    else:
        start = 0.0

        def sample(t_s):
            return CurvePoint(t_s, charge(start, t_s, params))

        def finished(soc):
            return soc >= params.full_threshold_pct

    rows = [sample(0.0)]
    step = 1
    while not finished(rows[-1].soc_pct):
        t_s = step * step_s
        if duration_s is not None and t_s > duration_s:
            break
        rows.append(sample(t_s))
        step += 1
    return rows
