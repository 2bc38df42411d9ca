"""Shortcuts for accessing display options"""

from uavmesh.cmd.outputs.base import ExitCode
from uavmesh.cmd.outputs.base import Summary
from uavmesh.cmd.outputs.json_output import JSONOutput
from uavmesh.cmd.outputs.table_output import TableOutput
from uavmesh.cmd.outputs.yaml_output import YAMLOutput


__all__ = [
    'ExitCode',
    'Summary',
    'JSONOutput',
    'TableOutput',
    'YAMLOutput',
]
