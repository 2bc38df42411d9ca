"""Test cases for the future event list

Test cases:
    * `test_event_order` tests the (time, priority, sequence) order
    * `test_empty_queue` tests popping and peeking an empty queue
    * `test_schedule_invalid_kind` tests that a missing kind is rejected
"""

import unittest

from uavmesh.engine import EventKind
from uavmesh.engine import EventQueue


class TestEventQueue(unittest.TestCase):
    """Test the EventQueue class"""

    def test_event_order(self):
        queue = EventQueue()
        queue.schedule(10.0, EventKind.SAMPLE, 0)
        queue.schedule(10.0, EventKind.REPLENISHED, 2)
        queue.schedule(10.0, EventKind.ARRIVE_AP, 3)
        queue.schedule(10.0, EventKind.DEPLETION, 4, version=2)
        queue.schedule(5.0, EventKind.SAMPLE, 0)
        queue.schedule(10.0, EventKind.ARRIVE_ES, 5)

        self.assertEqual(6, len(queue))
        self.assertEqual(5.0, queue.peek().time_s)
        order = [queue.pop() for _ in range(6)]

        self.assertEqual([EventKind.SAMPLE, EventKind.DEPLETION,
                          EventKind.ARRIVE_AP, EventKind.ARRIVE_ES,
                          EventKind.REPLENISHED, EventKind.SAMPLE],
                         [event.kind for event in order])
        self.assertEqual(2, order[1].version)
        self.assertTrue(queue.is_empty())

    def test_empty_queue(self):
        queue = EventQueue()
        self.assertIsNone(queue.pop())
        self.assertIsNone(queue.peek())

    def test_schedule_invalid_kind(self):
        with self.assertRaises(ValueError):
            EventQueue().schedule(1.0, None, 1)


if __name__ == '__main__':
    unittest.main()
