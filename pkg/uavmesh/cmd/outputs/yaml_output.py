"""Display output class for generating YAML"""

import yaml

from uavmesh.reports import to_plain
from uavmesh.cmd.outputs.base import Summary
from uavmesh.cmd.outputs.base import SummaryOutput
from uavmesh.cmd.outputs.base import verdict_code


class YAMLOutput(SummaryOutput):
    """Display a summary as YAML"""

    @staticmethod
    def display(summary: Summary) -> int:
        """Display the summary to the user as YAML

        Args:
            summary (uavmesh.cmd.outputs.Summary): The command summary

        Returns:
            0 if the verdict is positive otherwise 1

        Raises:
            ValueError: If the summary is `None`
        """
        if summary is None:
            raise ValueError('summary should not be None')

        data = {
            'title': summary.title,
            'ok': summary.ok,
            'summary': {key: to_plain(value) for key, value in summary.items}
        }

        yaml_str = yaml.safe_dump(data, sort_keys=False)
        print(yaml_str)
        return verdict_code(summary)
