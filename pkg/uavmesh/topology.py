"""AP layouts and ES distance/flight-time queries.

The ES sits at the origin and UAVs fly straight ES <-> AP legs only, all at
the same altitude. The line layout places AP i at x = i·spacing, the grid
layout is an n x n block whose corner nearest the ES is (spacing, spacing).
"""

import itertools
import math

from typing import Dict, List, NamedTuple, Sequence, Tuple

from uavmesh.types import Position
from uavmesh.types import TopologyKind

ORIGIN = Position(0.0, 0.0, 0.0)


class FlightParams(NamedTuple):
    """UAV flight and power draw parameters"""

    speed_m_s: float = 15.0
    fly_power_W: float = 18.0
    comm_power_W: float = 2.0


def validate_flight_params(flight: FlightParams) -> None:
    if flight is None:
        raise ValueError('flight should not be None')

    for name, value in zip(flight._fields, flight):
        if value <= 0:
            raise ValueError(f'{name} should be greater than 0')


def distance(a: Position, b: Position) -> float:
    return math.hypot(a.x_m - b.x_m, a.y_m - b.y_m, a.z_m - b.z_m)


class Topology:
    """An immutable set of AP positions with the ES positions they are
    served from. AP ids are contiguous from 1
    """

    def __init__(self, kind: TopologyKind, n: int, spacing_m: float,
                 ap_positions: Dict[int, Position],
                 es_positions: Sequence[Position] = (ORIGIN,)):
        """Topology init

        Args:
            kind        (uavmesh.types.TopologyKind): The layout family
            n           (int): The generator parameter
            spacing_m   (float): The minimum distance between APs
            ap_positions (dict): AP id to `uavmesh.types.Position`
            es_positions (Sequence[Position]): The ES positions, at least one

        Raises:
            ValueError: If the layout breaks a topology invariant
        """
        if not ap_positions:
            raise ValueError('a topology needs at least one AP position')

        if not es_positions:
            raise ValueError('a topology needs at least one ES position')

        if sorted(ap_positions) != list(range(1, len(ap_positions) + 1)):
            raise ValueError('AP ids should be contiguous from 1')

        self._kind = kind
        self._n = n
        self._spacing_m = spacing_m
        self._ap_positions = {i: Position(*ap_positions[i])
                              for i in sorted(ap_positions)}
        self._es_positions = tuple(Position(*p) for p in es_positions)
        self._check_spacing()
        # ties go to the ES listed first
        self._closest_es = {
            i: min(self._es_positions, key=lambda es, p=p: distance(p, es))
            for i, p in self._ap_positions.items()
        }
        self._distances = {i: distance(p, self._closest_es[i])
                           for i, p in self._ap_positions.items()}

    def _check_spacing(self) -> None:
        pairs = itertools.combinations(self._ap_positions.values(), 2)
        for a, b in pairs:
            if distance(a, b) < self._spacing_m * (1 - 1e-9):
                raise ValueError(
                    f'APs at {tuple(a)} and {tuple(b)} are closer '
                    f'than {self._spacing_m} m')

    @property
    def kind(self) -> TopologyKind:
        return self._kind

    @property
    def n(self) -> int:
        return self._n

    @property
    def spacing_m(self) -> float:
        return self._spacing_m

    @property
    def ap_count(self) -> int:
        """The number of AP positions N"""
        return len(self._ap_positions)

    @property
    def ap_ids(self) -> List[int]:
        return list(self._ap_positions)

    @property
    def es_positions(self) -> Tuple[Position, ...]:
        return self._es_positions

    @property
    def farthest_distance(self) -> float:
        return max(self._distances.values())

    def position(self, ap_id: int) -> Position:
        return self._ap_positions[ap_id]

    def closest_es(self, ap_id: int) -> Position:
        """The ES that serves AP `ap_id`"""
        return self._closest_es[ap_id]

    def distance(self, ap_id: int) -> float:
        """Distance d_i from AP `ap_id` to its closest ES"""
        return self._distances[ap_id]

    def distances(self) -> Dict[int, float]:
        return dict(self._distances)

    def rows(self) -> List[Tuple[int, float, float, float, float]]:
        """The `id,x_m,y_m,z_m,d_m` table of the topology"""
        return [(i, p.x_m, p.y_m, p.z_m, self._distances[i])
                for i, p in self._ap_positions.items()]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Topology):
            return False
        return (self._kind, self._n, self._spacing_m, self._ap_positions,
                self._es_positions) == (other._kind, other._n,
                                        other._spacing_m, other._ap_positions,
                                        other._es_positions)

    def __hash__(self) -> int:
        return hash((self._kind, self._n, self._spacing_m,
                     tuple(self._ap_positions.items()), self._es_positions))

    def __repr__(self) -> str:
        return f'Topology({self._kind.value}, n={self._n}, N={self.ap_count})'


def _validate_generator_args(n: int, spacing_m: float) -> None:
    if n is None or n < 1:
        raise ValueError('n should be at least 1')

    if spacing_m is None or spacing_m <= 0:
        raise ValueError('spacing_m should be greater than 0')


def make_line(n: int, spacing_m: float = 100.0,
              es_position: Position = ORIGIN) -> Topology:
    """Create the line layout: N = n APs at x = i·spacing

    Args:
        n (int): The number of APs, at least 1
        spacing_m (float): The distance between neighbouring APs
        es_position (uavmesh.types.Position): The ES position

    Returns:
        The line `Topology`

    Raises:
        ValueError: If `n` is less than 1 or `spacing_m` is not positive
    """
    _validate_generator_args(n, spacing_m)
    positions = {i: Position(i * spacing_m, 0.0, 0.0)
                 for i in range(1, n + 1)}
    return Topology(TopologyKind.LINE, n, spacing_m, positions,
                    (es_position,))


def make_grid(n: int, spacing_m: float = 100.0,
              es_position: Position = ORIGIN) -> Topology:
    """Create the n x n grid layout, N = n². AP ids run row by row
    starting from the corner at (spacing, spacing)

    Raises:
        ValueError: If `n` is less than 1 or `spacing_m` is not positive
    """
    _validate_generator_args(n, spacing_m)
    positions = {}
    for row in range(n):
        for column in range(n):
            ap_id = row * n + column + 1
            positions[ap_id] = Position((row + 1) * spacing_m,
                                        (column + 1) * spacing_m, 0.0)
    return Topology(TopologyKind.GRID, n, spacing_m, positions,
                    (es_position,))


def make_topology(kind: TopologyKind, n: int,
                  spacing_m: float = 100.0) -> Topology:
    """Dispatch to the generator of a topology kind

    Raises:
        ValueError: If the kind has no generator
    """
    generators = {
        TopologyKind.LINE: make_line,
        TopologyKind.GRID: make_grid,
    }

    generator = generators.get(kind)
    if generator is None:
        raise ValueError(f'{kind} topologies have no generator')
    return generator(n, spacing_m)


def flight_time(d_m: float, flight: FlightParams = FlightParams()) -> float:
    """One-way straight-line flight time T_f = d / speed

    Raises:
        ValueError: If `d_m` is negative
    """
    if d_m < 0:
        raise ValueError('d_m should not be negative')
    return d_m / flight.speed_m_s
