"""Shortcuts for running simulations"""

from .core import DEFAULT_HORIZON_S
from .core import SimConfig
from .core import Simulation
from .core import failure_cause
from .core import installed_batteries
from .core import is_sustained_at
from .core import run
from .core import validate_config
from .events import Event
from .events import EventKind
from .events import EventQueue

__all__ = [
    'DEFAULT_HORIZON_S',
    'SimConfig',
    'Simulation',
    'failure_cause',
    'installed_batteries',
    'is_sustained_at',
    'run',
    'validate_config',
    'Event',
    'EventKind',
    'EventQueue'
]
