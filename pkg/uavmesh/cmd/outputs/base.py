"""Maintains the basic building blocks used by the output classes"""

import abc
import enum

from collections import namedtuple

# A human-readable command result: a title, ordered (key, value) pairs
# and whether the verdict was positive
Summary = namedtuple('Summary', ['title', 'items', 'ok'])


class ExitCode(enum.IntEnum):
    SUCCESS = 0
    FAILURE = 1
    USAGE = 2


def verdict_code(summary: Summary) -> ExitCode:
    return ExitCode.SUCCESS if summary.ok else ExitCode.FAILURE


class SummaryOutput(abc.ABC):
    """Base class for displaying command summaries"""

    @staticmethod
    def display(summary: Summary) -> int:
        """Display the summary to the user

        Args:
            summary (uavmesh.cmd.outputs.Summary): The command summary

        Returns:
            The exit code of the verdict. 0 = the run, sweep or check
            succeeded and 1 = the network was not sustained or infeasible
        """
        pass
