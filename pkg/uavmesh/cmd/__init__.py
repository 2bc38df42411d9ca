"""Shortcuts for accessing cmd functions and classes"""

from uavmesh.cmd.core import main
from uavmesh.cmd.core import load_settings
from uavmesh.cmd.core import display_summary
from uavmesh.cmd.core import DisplayMethod


__all__ = [
    'main',
    'load_settings',
    'display_summary',
    'DisplayMethod'
]
