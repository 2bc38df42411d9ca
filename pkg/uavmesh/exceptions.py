"""uavmesh exceptions"""


class InvalidConfigFilenameError(RuntimeError):
    """When the config filename does not have a supported extension"""

    def __init__(self, filename: str):
        """InvalidConfigFilenameError init

        Args:
            filename (str): The filename that was invalid
        """
        message = f'{filename} is not a valid uavmesh config filename'
        super().__init__(message)


class UnknownSettingError(RuntimeError):
    """Represents a key in a config file or override that uavmesh
    does not recognise
    """

    def __init__(self, key: str):
        """UnknownSettingError init

        Args:
            key (str): The unrecognised setting name
        """
        message = f'{key} is not a known setting'
        super().__init__(message)


class DuplicateSettingError(RuntimeError):
    """When a config file assigns the same key twice"""

    def __init__(self, key: str, line: int):
        """DuplicateSettingError init

        Args:
            key  (str): The repeated setting name
            line (int): The line of the second assignment
        """
        message = f'{key} is assigned more than once (line {line})'
        super().__init__(message)


class SettingValueError(RuntimeError):
    """When a setting value cannot be converted or is out of range"""

    def __init__(self, key: str, value: str, reason: str):
        """SettingValueError init

        Args:
            key    (str): The setting name
            value  (str): The raw value
            reason (str): Why the value was rejected
        """
        message = f'Invalid value {value!r} for {key}: {reason}'
        super().__init__(message)


class PoolExhaustedError(RuntimeError):
    """Raised when a UAV asks for a battery swap and the ES pool is empty"""

    def __init__(self, uav_id: int):
        """PoolExhaustedError init

        Args:
            uav_id (int): The UAV that could not swap
        """
        message = f'UAV {uav_id} found no battery to swap at the ES'
        super().__init__(message)
        self.uav_id = uav_id


class InfeasibleError(RuntimeError):
    """Raised by the search drivers when no candidate in the
    search window sustains the network
    """
    pass


class SimulationInvariantError(RuntimeError):
    """Raised when an event-boundary cross-check fails. This
    always indicates a defect in the engine
    """
    pass
