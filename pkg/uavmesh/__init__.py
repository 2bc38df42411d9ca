"""Shortcuts for accessing common uavmesh functions"""

from uavmesh.engine import SimConfig
from uavmesh.engine import run
from uavmesh.experiments import find_min_batteries
from uavmesh.experiments import find_min_uavs
from uavmesh.experiments import sweep
from uavmesh.feasibility import check_constraints

__all__ = [
    'SimConfig',
    'run',
    'find_min_batteries',
    'find_min_uavs',
    'sweep',
    'check_constraints',
]
