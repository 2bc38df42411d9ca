"""Maintains the config file parser and its syntax errors"""

import os

from pathlib import Path
from typing import Iterator, List

from lark import Lark
from lark import Token
from lark import Transformer
from lark import UnexpectedInput

from uavmesh.types import Assignment


_package_dir = Path(__file__).parent.parent.absolute()
_GRAMMAR_FILE = os.path.join(_package_dir, 'grammar/config.lark')


def parse_config(config_content: str) -> List[Assignment]:
    """Parses the content of a config file into its assignments

    Args:
        config_content (str): The content of a config file

    Returns:
        A list of `uavmesh.types.Assignment` in file order. Values are
        raw strings with surrounding whitespace removed

    Raises:
        ValueError: Raised when `config_content` is `None`

        uavmesh.parser.ConfigSyntaxError: Raised when a syntax error
            is detected in the config
    """
    if config_content is None:
        raise ValueError('config_content should not be None')

    lark_parser = Lark.open(_GRAMMAR_FILE, parser='lalr')
    transformer = ConfigTransformer()

    # the grammar terminates every line, including the last one
    content = config_content + '\n'
    try:
        tree = lark_parser.parse(content)
        return transformer.transform(tree)
    except UnexpectedInput as u:
        _handle_syntax_errors(u, lark_parser, content)


class ConfigTransformer(Transformer):
    """Transforms the parse tree of a config file into assignments.

    Each method matches to a rule in the grammar (.lark) file
    """

    def assignment(self, tokens: Iterator[Token]) -> Assignment:
        """Transforms `KEY = VALUE` into an Assignment"""
        key, value = tokens
        return Assignment(key.value, value.value.strip(), key.line)

    def start(self, assignments: Iterator[Assignment]) -> List[Assignment]:
        return list(assignments)


class ConfigSyntaxError(SyntaxError):
    """A generic syntax error in the config content"""

    label = None

    def __str__(self) -> str:
        context, line, column, *_ = self.args
        if self.label is None:
            return f'Error on line {line}, column {column}.\n\n{context}'
        return f'{self.label} at line {line}, column {column}.\n\n{context}'


class MissingValueError(ConfigSyntaxError):
    """Indicates a key without a value"""
    label = 'Missing value'


class MalformedKeyError(ConfigSyntaxError):
    """Indicates a line that does not start with a valid key"""
    label = 'Invalid setting name'


def _handle_syntax_errors(u: UnexpectedInput, parser: Lark,
                          content: str) -> None:
    exc_class = u.match_examples(parser.parse, {
        MissingValueError: [
            'n =\n',
            'model_kind = # JNT-RP\n',
        ],
        MalformedKeyError: [
            '= 4\n',
            '4n = 3\n',
            'n = 4\n= 4\n',
            'n = 4\n4n = 3\n',
        ]
    }, use_accepts=True)
    if not exc_class:
        raise ConfigSyntaxError(u.get_context(content), u.line, u.column)
    raise exc_class(u.get_context(content), u.line, u.column)
