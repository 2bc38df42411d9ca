"""Maintains the function that loads a uavmesh config file from disk"""

from typing import Dict

from uavmesh.exceptions import DuplicateSettingError
from uavmesh.parser.core import parse_config
from uavmesh.utils import load_config_text


def load_config_file(config_path: str) -> Dict[str, str]:
    """Parses a uavmesh config file from a given path on the file system

    Args:
        config_path (str): The file path to the config file

    Returns:
        A `dict` of raw setting values keyed by setting name, in file order

    Raises:
        ValueError: If the config path is `None`, not a string
            or is an empty string

        uavmesh.exceptions.InvalidConfigFilenameError: If the filename
            does not end with `.cfg` or `.conf`

        uavmesh.exceptions.DuplicateSettingError: If a key is assigned
            more than once

        uavmesh.parser.ConfigSyntaxError: Raised when a syntax error
            is detected in the config
    """
    if (config_path is None) or (not isinstance(config_path, str)):
        raise ValueError('Expected parameter config_path to be a string')

    content = load_config_text(config_path)
    values = {}
    for assignment in parse_config(content):
        if assignment.key in values:
            raise DuplicateSettingError(assignment.key, assignment.line)
        values[assignment.key] = assignment.value
    return values
