# pylint: disable=C0115
