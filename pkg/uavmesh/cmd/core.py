"""Handles the command line utility functions and entry point"""

import argparse
import enum
import logging
import os
import sys

from typing import Dict, List, Optional, Sequence

from uavmesh import battery as bm
from uavmesh import engine
from uavmesh import experiments
from uavmesh import feasibility
from uavmesh import settings as config
from uavmesh.exceptions import DuplicateSettingError
from uavmesh.exceptions import InvalidConfigFilenameError
from uavmesh.exceptions import SettingValueError
from uavmesh.exceptions import UnknownSettingError
from uavmesh.parser import ConfigSyntaxError
from uavmesh.parser import load_config_file
from uavmesh.reports import REPORT_HEADER
from uavmesh.reports import TIMELINE_HEADER
from uavmesh.reports import report_row
from uavmesh.utils import format_value
from uavmesh.utils import open_output
from uavmesh.utils import write_csv

from uavmesh.cmd.outputs import ExitCode
from uavmesh.cmd.outputs import JSONOutput
from uavmesh.cmd.outputs import Summary
from uavmesh.cmd.outputs import TableOutput
from uavmesh.cmd.outputs import YAMLOutput

# argparse destinations that override the setting of the same name
_SETTING_FLAGS = (
    'model_kind', 'topology_kind', 'n', 'spacing_m', 'horizon_s', 'seed',
    'uav_count', 'models', 'n_min', 'n_max', 'workers', 'curve_mode',
    'curve_power_W', 'curve_step_s',
)

_TIMELINE_INTERVAL_S = 60.0

_CONFIG_ERRORS = (
    InvalidConfigFilenameError,
    UnknownSettingError,
    DuplicateSettingError,
    SettingValueError,
    ConfigSyntaxError,
    FileNotFoundError,
    ValueError,
)


class DisplayMethod(enum.Enum):
    """Represents the supported summary display methods"""
    TABLE = 'table'
    JSON = 'json'
    YAML = 'yaml'


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Entry point into the uavmesh CLI

    Args:
        argv (Sequence[str]): The arguments, `sys.argv[1:]` when `None`

    Returns:
        0 on success, 1 when the network is not sustained or infeasible
        and 2 on usage or config errors
    """
    parser = _create_args_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as ex:
        return ExitCode.SUCCESS if ex.code == 0 else ExitCode.USAGE

    _configure_logging(args.verbose)

    commands = {
        'run': run_command,
        'sweep': sweep_command,
        'feasibility': feasibility_command,
        'battery-curve': battery_curve_command,
        'topology': topology_command,
    }

    try:
        settings = load_settings(args)
        summary = commands[args.command](settings, args)
    except ConfigSyntaxError as ex:
        print(ex, file=sys.stderr)
        return ExitCode.USAGE
    except _CONFIG_ERRORS as ex:
        print(f'Error: {ex}', file=sys.stderr)
        return ExitCode.USAGE

    display_method = DisplayMethod(args.output)
    return display_summary(summary, display_method)


def _configure_logging(verbosity: int) -> None:
    levels = {0: logging.WARNING, 1: logging.INFO}
    logging.basicConfig(format='%(levelname)s - %(message)s',
                        level=levels.get(verbosity, logging.DEBUG))


def _create_args_parser() -> argparse.ArgumentParser:
    description = 'uavmesh simulates wireless mesh networks whose access \
                  points are kept alive by UAVs and searches the smallest \
                  fleet and battery census that sustain them'

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--config', type=str,
                        help='A `key = value` config file (.cfg or .conf)')
    common.add_argument('--out', type=str,
                        help='The CSV output file, standard output if unset')
    common.add_argument('-o', '--output', type=str, default='table',
                        choices=['table', 'json', 'yaml'],
                        help='Defines the format of the summary')
    common.add_argument('-v', '--verbose', action='count', default=0,
                        help='Log progress, repeat for debug output')
    common.add_argument('--model', dest='model_kind', type=str,
                        metavar='{JNT-CH,JNT-RP,SPT-CH,SPT-RP}')
    common.add_argument('--topology', dest='topology_kind', type=str,
                        metavar='{line,grid}')
    common.add_argument('--n', type=str,
                        help='Topology size: N = n (line) or n² (grid)')
    common.add_argument('--spacing-m', dest='spacing_m', type=str)
    common.add_argument('--horizon-s', dest='horizon_s', type=str)
    common.add_argument('--seed', type=str,
                        help='Recorded with the outputs, the model is '
                        'deterministic')

    parser = argparse.ArgumentParser(prog='uavmesh', description=description)
    subparsers = parser.add_subparsers(dest='command', required=True)

    run = subparsers.add_parser('run', parents=[common],
                                help='Simulate a single configuration')
    run.add_argument('--uavs', dest='uav_count', type=str)
    run.add_argument('--batteries', type=str,
                     help='Total battery census, spares at the ES included')
    run.add_argument('--timeline', action='store_true',
                     help='Sample every device state of charge each 60 s')

    sweep = subparsers.add_parser('sweep', parents=[common],
                                  help='Search minimum fleets over sizes')
    sweep.add_argument('--models', type=str,
                       help='`all` or a comma separated list of models')
    sweep.add_argument('--n-min', dest='n_min', type=str)
    sweep.add_argument('--n-max', dest='n_max', type=str)
    sweep.add_argument('--workers', type=str)

    subparsers.add_parser('feasibility', parents=[common],
                          help='Evaluate the analytic constraints')

    curve = subparsers.add_parser('battery-curve', parents=[common],
                                  help='Export a charge or discharge curve')
    curve.add_argument('--mode', dest='curve_mode', type=str,
                       metavar='{charge,discharge}')
    curve.add_argument('--power-w', dest='curve_power_W', type=str)
    curve.add_argument('--step-s', dest='curve_step_s', type=str)

    subparsers.add_parser('topology', parents=[common],
                          help='Export the AP positions and distances')
    return parser


def load_settings(args: argparse.Namespace) -> config.Settings:
    """Resolve the settings of a command: defaults < config file < flags

    Args:
        args (argparse.Namespace): The parsed arguments

    Returns:
        The resolved `uavmesh.settings.Settings`

    Raises:
        uavmesh.exceptions.UnknownSettingError: If a config key is unknown
        uavmesh.exceptions.SettingValueError: If a value is invalid
    """
    file_values: Dict[str, str] = {}
    if args.config is not None:
        file_values = load_config_file(args.config)

    overrides = {key: getattr(args, key) for key in _SETTING_FLAGS
                 if getattr(args, key, None) is not None}
    return config.resolve_settings(file_values, overrides)


def _timeline_path(out: str) -> str:
    stem, _ = os.path.splitext(out)
    return f'{stem}_timeline.csv'


def run_command(settings: config.Settings,
                args: argparse.Namespace) -> Summary:
    """Simulate one configuration and write its report row"""
    if args.timeline and settings.sample_interval_s is None:
        settings = settings._replace(sample_interval_s=_TIMELINE_INTERVAL_S)

    settings = config.effective_settings(settings)
    if args.batteries is not None:
        settings = _with_census(settings, args.batteries)

    sim_config = config.sim_config(settings)
    report = engine.run(sim_config)
    comments = config.echo_items(settings)

    with open_output(args.out) as stream:
        write_csv(stream, REPORT_HEADER, [report_row(sim_config, report)],
                  comments)

    if settings.sample_interval_s is not None:
        timeline_file = None if args.out is None else _timeline_path(args.out)
        with open_output(timeline_file) as stream:
            write_csv(stream, TIMELINE_HEADER,
                      [row.csv_row() for row in report.timeline], comments)

    items = [
        ('model', sim_config.model_kind),
        ('topology', sim_config.topology.kind),
        ('N', sim_config.topology.ap_count),
        ('uav_count', sim_config.uav_count),
    ]
    items.extend(report.summary_items())
    return Summary('Simulation', items, report.sustained)


def _with_census(settings: config.Settings,
                 batteries: str) -> config.Settings:
    try:
        census = int(batteries)
    except ValueError as ex:
        raise SettingValueError('batteries', batteries,
                                'expected int') from ex

    installed = engine.installed_batteries(
        settings.model_kind, settings.uav_count,
        config.topology(settings).ap_count)
    pool = census - installed
    if pool < 0:
        raise SettingValueError('batteries', batteries,
                                f'at least {installed} are installed')
    return settings._replace(battery_pool_size=pool)


def sweep_command(settings: config.Settings,
                  args: argparse.Namespace) -> Summary:
    """Tabulate the minimum fleets of several models over sizes"""
    result = experiments.sweep(
        settings.models, settings.topology_kind,
        range(settings.n_min, settings.n_max + 1),
        spacing_m=settings.spacing_m,
        battery=config.battery_params(settings),
        flight=config.flight_params(settings),
        transfer=config.transfer_params(settings),
        horizon_s=settings.horizon_s,
        workers=settings.workers)

    with open_output(args.out) as stream:
        write_csv(stream, experiments.SWEEP_HEADER, result.csv_rows(),
                  config.echo_items(settings))

    infeasible = sum(1 for row in result.rows if not row.feasible)
    non_monotone = sum(1 for row in result.rows
                       if row.monotone_flag is False)
    census_mismatch = sum(1 for row in result.rows
                          if row.census_flag is False)
    items = [
        ('models', ','.join(kind.value for kind in settings.models)),
        ('topology', settings.topology_kind),
        ('n_range', f'{settings.n_min}..{settings.n_max}'),
        ('rows', len(result.rows)),
        ('infeasible', infeasible),
        ('non_monotone', non_monotone),
        ('census_mismatch', census_mismatch),
    ]
    return Summary('Sweep', items, infeasible == 0)


def feasibility_command(settings: config.Settings,
                        args: argparse.Namespace) -> Summary:
    """Evaluate the analytic constraints of one model and topology"""
    report = feasibility.check_constraints(
        config.topology(settings), settings.model_kind,
        config.battery_params(settings), config.flight_params(settings),
        config.transfer_params(settings))

    summary_line = ' '.join(f'{key}={format_value(value)}'
                            for key, value in report.summary_items())
    with open_output(args.out) as stream:
        write_csv(stream, feasibility.CSV_HEADER, report.rows(),
                  config.echo_items(settings))
        stream.write(f'# summary {summary_line}\n')

    return Summary('Feasibility', report.summary_items(), report.all_ok)


def battery_curve_command(settings: config.Settings,
                          args: argparse.Namespace) -> Summary:
    """Export a sampled charge or discharge curve"""
    rows = bm.export_curve(settings.curve_mode, settings.curve_power_W,
                           settings.curve_step_s,
                           config.battery_params(settings))

    with open_output(args.out) as stream:
        write_csv(stream, ('t_s', 'soc_pct', 'voltage_V'), rows,
                  config.echo_items(settings))

    last = rows[-1]
    items: List = [
        ('mode', settings.curve_mode),
        ('rows', len(rows)),
        ('final_t_s', last.t_s),
        ('final_soc_pct', last.soc_pct),
    ]
    return Summary('Battery curve', items, True)


def topology_command(settings: config.Settings,
                     args: argparse.Namespace) -> Summary:
    """Export the AP positions of a topology"""
    topology = config.topology(settings)
    with open_output(args.out) as stream:
        write_csv(stream, ('id', 'x_m', 'y_m', 'z_m', 'd_m'),
                  topology.rows(), config.echo_items(settings))

    items = [
        ('topology', topology.kind),
        ('n', topology.n),
        ('N', topology.ap_count),
        ('farthest_m', topology.farthest_distance),
    ]
    return Summary('Topology', items, True)


def display_summary(summary: Summary,
                    method: DisplayMethod = DisplayMethod.TABLE) -> int:
    """Displays a command summary to standard output

    Args:
        summary (uavmesh.cmd.outputs.Summary): The command summary

        method (uavmesh.cmd.DisplayMethod, optional): Defines how the
            summary will be displayed. By default `DisplayMethod.TABLE`
            will be used

    Returns:
        The exit code of the verdict: 0 = success, 1 = not sustained,
        infeasible or a violated constraint

    Raises:
        ValueError: If `summary` or `method` is None
    """
    if summary is None:
        raise ValueError('summary should not be None')

    if method is None:
        raise ValueError('method should not be None')

    strategies = {
        DisplayMethod.JSON: JSONOutput,
        DisplayMethod.TABLE: TableOutput,
        DisplayMethod.YAML: YAMLOutput,
    }

    display_option = strategies.get(method, TableOutput)
    return display_option.display(summary)
