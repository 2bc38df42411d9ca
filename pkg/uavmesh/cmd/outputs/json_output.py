"""Display output class for generating JSON"""

import json

from uavmesh.reports import ReportJSONEncoder
from uavmesh.reports import to_plain
from uavmesh.cmd.outputs.base import Summary
from uavmesh.cmd.outputs.base import SummaryOutput
from uavmesh.cmd.outputs.base import verdict_code


class JSONOutput(SummaryOutput):
    """Displays a summary as JSON"""

    @staticmethod
    def display(summary: Summary) -> int:
        """Display the summary to the user as JSON

        Args:
            summary (uavmesh.cmd.outputs.Summary): The command summary

        Returns:
            0 if the verdict is positive otherwise 1

        Raises:
            ValueError: If the summary is `None`
        """
        if summary is None:
            raise ValueError('summary should not be None')

        pre_json_data = {
            'title': summary.title,
            'ok': summary.ok,
            'summary': {key: to_plain(value) for key, value in summary.items}
        }

        json_data = json.dumps(pre_json_data, cls=ReportJSONEncoder,
                               indent=4)
        print(json_data)
        return verdict_code(summary)
