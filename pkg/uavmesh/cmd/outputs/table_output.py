"""Display output class for generating a table"""

from uavmesh.utils import format_value
from uavmesh.cmd.outputs.base import Summary
from uavmesh.cmd.outputs.base import SummaryOutput
from uavmesh.cmd.outputs.base import verdict_code


class TableOutput(SummaryOutput):
    """Displays a summary as a two column table"""

    @staticmethod
    def display(summary: Summary) -> int:
        """Display the summary to the user as a table

        Args:
            summary (uavmesh.cmd.outputs.Summary): The command summary

        Returns:
            0 if the verdict is positive otherwise 1

        Raises:
            ValueError: If the summary is `None`
        """
        if summary is None:
            raise ValueError('summary should not be None')

        print(f'\n{summary.title}')
        print('----------------------------------------')
        for key, value in summary.items:
            print(f'{key:<20} {format_value(value):<20}')
        print('----------------------------------------')
        return verdict_code(summary)
