"""Scheduling policies of the four UAV-AP operation models and the
state records they decide on
"""

from .state import ApState
from .state import PoolBattery
from .state import Replenishment
from .state import Service
from .state import SystemSnapshot
from .state import TransferParams
from .state import UavState
from .state import validate_transfer_params
from .policies import es_replenish
from .policies import full_transfer_time
from .policies import initial_association
from .policies import joint_departure_check
from .policies import occupant
from .policies import return_reserve
from .policies import select_ap_position
from .policies import separate_service
from .policies import transfer_duration
from .policies import transfer_net_power

__all__ = [
    'ApState',
    'PoolBattery',
    'Replenishment',
    'Service',
    'SystemSnapshot',
    'TransferParams',
    'UavState',
    'validate_transfer_params',
    'es_replenish',
    'full_transfer_time',
    'initial_association',
    'joint_departure_check',
    'occupant',
    'return_reserve',
    'select_ap_position',
    'separate_service',
    'transfer_duration',
    'transfer_net_power'
]
