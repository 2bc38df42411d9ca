"""Future event list of the simulator.

Events are totally ordered by (time, priority, sequence): at equal times a
battery depletion is handled before any arrival, arrivals before the end of
a replenishment or service, and timeline samples last.
"""

import enum
import heapq

from typing import List, NamedTuple, Optional


class EventKind(enum.Enum):
    DEPLETION = 'depletion'
    ARRIVE_AP = 'arrive-ap'
    ARRIVE_ES = 'arrive-es'
    REPLENISHED = 'replenished'
    SERVICE_DONE = 'service-done'
    SAMPLE = 'sample'


PRIORITIES = {
    EventKind.DEPLETION: 0,
    EventKind.ARRIVE_AP: 1,
    EventKind.ARRIVE_ES: 1,
    EventKind.REPLENISHED: 2,
    EventKind.SERVICE_DONE: 2,
    EventKind.SAMPLE: 3,
}


class Event(NamedTuple):
    """A scheduled event. `subject` is a UAV id or, for depletions, a
    battery id. `version` lets the engine drop events made stale by a
    later change of the subject's battery mode
    """

    time_s: float
    priority: int
    sequence: int
    kind: EventKind
    subject: int
    version: int = 0


class EventQueue:
    """A heap of events with a monotone sequence counter"""

    def __init__(self):
        self._events: List[Event] = []
        self._sequence = 0

    def schedule(self, time_s: float, kind: EventKind, subject: int,
                 version: int = 0) -> Event:
        """Add an event to the queue

        Args:
            time_s (float): When the event fires
            kind (uavmesh.engine.events.EventKind): The event kind
            subject (int): The UAV or battery the event is about
            version (int): The subject version the event was computed for

        Returns:
            The scheduled `Event`

        Raises:
            ValueError: If `kind` is `None`
        """
        if kind is None:
            raise ValueError('kind should not be None')

        event = Event(time_s, PRIORITIES[kind], self._sequence, kind,
                      subject, version)
        self._sequence += 1
        heapq.heappush(self._events, event)
        return event

    def pop(self) -> Optional[Event]:
        """Remove and return the earliest event, `None` when empty"""
        if self._events:
            return heapq.heappop(self._events)
        return None

    def peek(self) -> Optional[Event]:
        return self._events[0] if self._events else None

    def is_empty(self) -> bool:
        return len(self._events) == 0

    def __len__(self) -> int:
        return len(self._events)
