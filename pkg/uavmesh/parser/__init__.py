"""Module that contains the parser and syntax errors of uavmesh
config files
"""

from .core import parse_config
from .core import ConfigTransformer
from .core import ConfigSyntaxError
from .core import MissingValueError
from .core import MalformedKeyError
from .loaders import load_config_file

__all__ = [
    'parse_config',
    'ConfigTransformer',
    'ConfigSyntaxError',
    'MissingValueError',
    'MalformedKeyError',
    'load_config_file'
]
