"""Effective run settings: defaults, overridden by a config file,
overridden by explicit command-line flags.

Every source supplies raw strings which go through the same converters, so
a typo or a bad value is reported the same way wherever it comes from.
"""

from typing import Any, Callable, Dict, List, Mapping, NamedTuple, Optional
from typing import Tuple

from uavmesh import engine
from uavmesh.battery import BatteryParams
from uavmesh.battery import CurveMode
from uavmesh.exceptions import SettingValueError
from uavmesh.exceptions import UnknownSettingError
from uavmesh.feasibility import baseline_uavs
from uavmesh.scheduler.state import TransferParams
from uavmesh.topology import FlightParams
from uavmesh.topology import Topology
from uavmesh.topology import make_topology
from uavmesh.types import ModelKind
from uavmesh.types import TopologyKind

_BATTERY = BatteryParams()
_FLIGHT = FlightParams()
_TRANSFER = TransferParams()

# values accepted for optional settings to fall back to the derived default
_AUTO_VALUES = ('auto', 'none')


class Settings(NamedTuple):
    """Every setting uavmesh understands. `None` means the value is
    derived from the others (see `effective_settings`)
    """

    model_kind: ModelKind = ModelKind.JNT_RP
    topology_kind: TopologyKind = TopologyKind.LINE
    n: int = 4
    spacing_m: float = 100.0
    uav_count: Optional[int] = None
    battery_pool_size: Optional[int] = None
    horizon_s: float = engine.DEFAULT_HORIZON_S
    sample_interval_s: Optional[float] = None
    seed: int = 0
    capacity_mAh: float = _BATTERY.capacity_mAh
    nominal_voltage_V: float = _BATTERY.nominal_voltage_V
    exponent_n: float = _BATTERY.exponent_n
    cc_cv_breakpoint_s: float = _BATTERY.cc_cv_breakpoint_s
    cc_rate_mAh_per_s: float = _BATTERY.cc_rate_mAh_per_s
    full_threshold_pct: float = _BATTERY.full_threshold_pct
    reference_power_W: float = _BATTERY.reference_power_W
    speed_m_s: float = _FLIGHT.speed_m_s
    fly_power_W: float = _FLIGHT.fly_power_W
    comm_power_W: float = _FLIGHT.comm_power_W
    transfer_power_W: Optional[float] = _TRANSFER.power_W
    transfer_efficiency_pct: float = _TRANSFER.efficiency_pct
    reserve_margin_pct: float = _TRANSFER.reserve_margin_pct
    models: Tuple[ModelKind, ...] = tuple(ModelKind)
    n_min: int = 1
    n_max: int = 8
    workers: int = 1
    curve_mode: CurveMode = CurveMode.DISCHARGE
    curve_power_W: float = 18.0
    curve_step_s: float = 60.0


DEFAULT_SETTINGS = Settings()


def _number(kind: Callable[[str], Any], minimum: float = None,
            strict: bool = False, maximum: float = None) -> Callable:
    def convert(raw: str) -> Any:
        try:
            value = kind(raw)
        except ValueError as ex:
            raise ValueError(f'expected {kind.__name__}') from ex

        if minimum is not None:
            if strict and value <= minimum:
                raise ValueError(f'should be greater than {minimum}')
            if not strict and value < minimum:
                raise ValueError(f'should be at least {minimum}')

        if maximum is not None and value > maximum:
            raise ValueError(f'should be at most {maximum}')
        return value
    return convert


def _optional(convert: Callable[[str], Any]) -> Callable:
    def optional(raw: str) -> Any:
        if raw.strip().lower() in _AUTO_VALUES:
            return None
        return convert(raw)
    return optional


def _models(raw: str) -> Tuple[ModelKind, ...]:
    if raw.strip().lower() == 'all':
        return tuple(ModelKind)

    names = [name for name in raw.split(',') if name.strip()]
    if not names:
        raise ValueError('expected `all` or a comma separated list')
    return tuple(ModelKind.parse(name) for name in names)


def _curve_mode(raw: str) -> CurveMode:
    try:
        return CurveMode(raw.strip().lower())
    except ValueError as ex:
        raise ValueError('expected charge or discharge') from ex


_positive_float = _number(float, 0, strict=True)
_non_negative_float = _number(float, 0)
_percent = _number(float, 0, strict=True, maximum=100)

_CONVERTERS: Dict[str, Callable[[str], Any]] = {
    'model_kind': ModelKind.parse,
    'topology_kind': TopologyKind.parse,
    'n': _number(int, 1),
    'spacing_m': _positive_float,
    'uav_count': _optional(_number(int, 1)),
    'battery_pool_size': _optional(_number(int, 0)),
    'horizon_s': _non_negative_float,
    'sample_interval_s': _optional(_positive_float),
    'seed': _number(int),
    'capacity_mAh': _positive_float,
    'nominal_voltage_V': _positive_float,
    'exponent_n': _number(float, 0),
    'cc_cv_breakpoint_s': _non_negative_float,
    'cc_rate_mAh_per_s': _positive_float,
    'full_threshold_pct': _percent,
    'reference_power_W': _positive_float,
    'speed_m_s': _positive_float,
    'fly_power_W': _positive_float,
    'comm_power_W': _positive_float,
    'transfer_power_W': _optional(_positive_float),
    'transfer_efficiency_pct': _percent,
    'reserve_margin_pct': _number(float, 0, maximum=100),
    'models': _models,
    'n_min': _number(int, 1),
    'n_max': _number(int, 1),
    'workers': _number(int, 1),
    'curve_mode': _curve_mode,
    'curve_power_W': _positive_float,
    'curve_step_s': _positive_float,
}


def resolve_settings(file_values: Mapping[str, str] = None,
                     overrides: Mapping[str, str] = None) -> Settings:
    """Merge defaults, config file values and flag overrides

    Args:
        file_values (Mapping[str, str]): Raw values from a config file
        overrides (Mapping[str, str]): Raw values from explicit flags

    Returns:
        The resolved `Settings`

    Raises:
        uavmesh.exceptions.UnknownSettingError: If a key is not a setting
        uavmesh.exceptions.SettingValueError: If a value cannot be
            converted or is out of range
    """
    merged = DEFAULT_SETTINGS._asdict()
    for source in (file_values or {}, overrides or {}):
        for key, raw in source.items():
            if key not in _CONVERTERS:
                raise UnknownSettingError(key)
            try:
                merged[key] = _CONVERTERS[key](str(raw))
            except ValueError as ex:
                raise SettingValueError(key, raw, str(ex)) from ex

    settings = Settings(**merged)
    if settings.n_max < settings.n_min:
        raise SettingValueError('n_max', settings.n_max,
                                'should not be less than n_min')
    return settings


def battery_params(settings: Settings) -> BatteryParams:
    return BatteryParams(
        capacity_mAh=settings.capacity_mAh,
        nominal_voltage_V=settings.nominal_voltage_V,
        exponent_n=settings.exponent_n,
        cc_cv_breakpoint_s=settings.cc_cv_breakpoint_s,
        cc_rate_mAh_per_s=settings.cc_rate_mAh_per_s,
        full_threshold_pct=settings.full_threshold_pct,
        reference_power_W=settings.reference_power_W)


def flight_params(settings: Settings) -> FlightParams:
    return FlightParams(speed_m_s=settings.speed_m_s,
                        fly_power_W=settings.fly_power_W,
                        comm_power_W=settings.comm_power_W)


def transfer_params(settings: Settings) -> TransferParams:
    return TransferParams(power_W=settings.transfer_power_W,
                          efficiency_pct=settings.transfer_efficiency_pct,
                          reserve_margin_pct=settings.reserve_margin_pct)


def topology(settings: Settings) -> Topology:
    return make_topology(settings.topology_kind, settings.n,
                         settings.spacing_m)


def effective_settings(settings: Settings) -> Settings:
    """Fill the derived settings: the fleet defaults to the baseline, the
    ES pool to three spares per AP for RP models and the transfer power
    to a 1C rate
    """
    ap_count = topology(settings).ap_count
    kind = settings.model_kind
    uav_count = settings.uav_count
    if uav_count is None:
        uav_count = baseline_uavs(kind, ap_count)

    pool = settings.battery_pool_size
    if pool is None:
        pool = 3 * ap_count if kind.uses_replacement else 0

    power = transfer_params(settings).effective_power_W(
        battery_params(settings))
    return settings._replace(uav_count=uav_count, battery_pool_size=pool,
                             transfer_power_W=power)


def sim_config(settings: Settings) -> engine.SimConfig:
    """Build the `SimConfig` of a single run from effective settings

    Raises:
        ValueError: If the settings describe an invalid run
    """
    settings = effective_settings(settings)
    return engine.SimConfig(
        model_kind=settings.model_kind,
        topology=topology(settings),
        uav_count=settings.uav_count,
        battery_pool_size=settings.battery_pool_size,
        horizon_s=settings.horizon_s,
        battery=battery_params(settings),
        flight=flight_params(settings),
        transfer=transfer_params(settings),
        sample_interval_s=settings.sample_interval_s)


def _echo_value(value: Any) -> str:
    if value is None:
        return 'auto'
    if isinstance(value, tuple):
        return ','.join(_echo_value(v) for v in value)
    if hasattr(value, 'value'):
        return str(value.value)
    if isinstance(value, float):
        return repr(value)
    return str(value)


def echo_items(settings: Settings) -> List[Tuple[str, str]]:
    """Sorted `(key, value)` pairs of every setting, written as comment
    lines atop CSV outputs so a run can be reproduced from its artefact
    """
    return sorted((key, _echo_value(value))
                  for key, value in settings._asdict().items())
