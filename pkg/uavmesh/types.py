"""This module maintains the enums and small records shared across uavmesh"""

import enum

from collections import namedtuple
from typing import Tuple

# Remaining charge as a percentage of the nominal capacity, in [0, 100]
StateOfCharge = float

Position = namedtuple('Position', ['x_m', 'y_m', 'z_m'])

# Total order for arrivals at the same instant: (time, sequence)
ArrivalStamp = Tuple[float, int]


class ModelKind(enum.Enum):
    """Represents the four UAV-AP operation models.

    JNT models use the UAV itself as the AP, SPT models place separate APs.
    CH models replenish by charging at the ES, RP models by swapping batteries.
    """

    JNT_CH = 'JNT-CH'
    JNT_RP = 'JNT-RP'
    SPT_CH = 'SPT-CH'
    SPT_RP = 'SPT-RP'

    @property
    def is_joint(self) -> bool:
        return self in (ModelKind.JNT_CH, ModelKind.JNT_RP)

    @property
    def uses_replacement(self) -> bool:
        return self in (ModelKind.JNT_RP, ModelKind.SPT_RP)

    @classmethod
    def parse(cls, value: str) -> 'ModelKind':
        """Parse a model name such as `JNT-RP`, `jnt_rp` or `SPT-CH`

        Args:
            value (str): The model name

        Returns:
            The matching `uavmesh.types.ModelKind`

        Raises:
            ValueError: If the name does not match any model
        """
        if value is None:
            raise ValueError('value should not be None')

        normalised = value.strip().upper().replace('_', '-')
        for kind in cls:
            if kind.value == normalised:
                return kind
        raise ValueError(f'{value} is not a known model kind')

    def __str__(self) -> str:
        return self.value


class TopologyKind(enum.Enum):
    """Represents the supported AP layouts"""

    LINE = 'line'
    GRID = 'grid'
    CUSTOM = 'custom'

    @classmethod
    def parse(cls, value: str) -> 'TopologyKind':
        if value is None:
            raise ValueError('value should not be None')
        try:
            return cls(value.strip().lower())
        except ValueError as ex:
            raise ValueError(f'{value} is not a known topology kind') from ex

    def __str__(self) -> str:
        return self.value


class Phase(enum.Enum):
    """Where a UAV is in its duty cycle"""

    AT_AP = 'AtAp'
    FLYING_TO_ES = 'FlyingToEs'
    AT_ES = 'AtEs'
    FLYING_TO_AP = 'FlyingToAp'

    @property
    def is_flying(self) -> bool:
        return self in (Phase.FLYING_TO_ES, Phase.FLYING_TO_AP)


class FailureCause(enum.Enum):
    """Reasons a run stops being sustained"""

    AP_DEPLETED = 'ap-depleted'
    UAV_DEPLETED_IN_FLIGHT = 'uav-depleted-in-flight'
    POSITION_VACANT = 'position-vacant'
    POOL_EXHAUSTED = 'pool-exhausted'


class CellMode(enum.Enum):
    """What a physical battery is doing between two events"""

    IDLE = 'idle'
    DISCHARGE = 'discharge'
    CHARGE = 'charge'
    RECEIVE = 'receive'


class DeviceKind(enum.Enum):
    """The kinds of devices that appear in a timeline"""

    UAV = 'uav'
    AP = 'ap'


Assignment = namedtuple('Assignment', ['key', 'value', 'line'])
