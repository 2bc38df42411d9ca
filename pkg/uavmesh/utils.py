"""Utility functions to load config files and write CSV artefacts"""

import csv
import enum
import re
import sys
import contextlib

from typing import Any, Iterable, Iterator, Sequence, TextIO, Tuple

from uavmesh.exceptions import InvalidConfigFilenameError

_CONFIG_FILENAME_REGEX = re.compile(r'\.(cfg|conf)$')
_BACKSLASH_REGEX = re.compile(r'[\\]{1,2}')


def format_value(value: Any) -> str:
    """Format a single CSV cell. Floats are written with 6 significant
    digits, booleans as `true`/`false`, enums by their value and `None`
    as an empty cell

    Args:
        value (Any): The value to format

    Returns:
        The text written to the CSV cell
    """
    if value is None:
        return ''
    if isinstance(value, bool):
        return 'true' if value else 'false'
    if isinstance(value, enum.Enum):
        return str(value.value)
    if isinstance(value, float):
        text = f'{value:.6g}'
        return '0' if text == '-0' else text
    return str(value)


def write_csv(stream: TextIO, header: Sequence[str],
              rows: Iterable[Sequence[Any]],
              comments: Iterable[Tuple[str, Any]] = ()) -> None:
    """Write a table as CSV with LF line endings. Each comment pair is
    written above the header as a `# key = value` line

    Args:
        stream (TextIO): Where the CSV is written
        header (Sequence[str]): The column names
        rows (Iterable[Sequence[Any]]): The table rows
        comments (Iterable[Tuple[str, Any]]): Key/value pairs echoed as
            comment lines before the header

    Raises:
        ValueError: If `stream` or `header` is `None`
    """
    if stream is None:
        raise ValueError('stream should not be None')

    if header is None:
        raise ValueError('header should not be None')

    for key, value in comments:
        stream.write(f'# {key} = {format_value(value)}\n')

    writer = csv.writer(stream, lineterminator='\n')
    writer.writerow(header)
    for row in rows:
        writer.writerow([format_value(cell) for cell in row])


@contextlib.contextmanager
def open_output(filename: str = None) -> Iterator[TextIO]:
    """Open a text destination for CSV output. When no filename is
    given standard output is used and left open

    Args:
        filename (str): The path to write to or `None` for stdout

    Yields:
        A writable text stream
    """
    if filename is None:
        yield sys.stdout
        return

    with open(filename, 'w', encoding='utf-8', newline='') as f:
        yield f


def load_config_text(filename: str) -> str:
    """Load the contents of a uavmesh config file

    Args:
        filename (str): The path to the config file

    Returns:
        The content of the file as a string

    Raises:
        ValueError: If `filename` is None or an empty string

        uavmesh.exceptions.InvalidConfigFilenameError: If the filename
            does not end with a `.cfg` or `.conf` extension
    """
    if filename is None:
        raise ValueError('filename cannot be None')

    if len(filename) == 0:
        raise ValueError('filename cannot be an empty string')

    if not _CONFIG_FILENAME_REGEX.search(filename):
        raise InvalidConfigFilenameError(filename)

    filename = _BACKSLASH_REGEX.sub('/', filename)

    with open(filename, 'r', encoding='utf-8') as f:
        return f.read()
