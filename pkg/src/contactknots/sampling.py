"""Seeded random braids and fronts for property checks."""

from __future__ import annotations

import random

from .braid import BraidWord
from .front import Birth, Crossing, Death, FrontDiagram, orient


def random_braid(rng: random.Random, max_strands: int = 5, max_letters: int = 12,
                 min_strands: int = 1) -> BraidWord:
    n = rng.randint(min_strands, max_strands)
    if n == 1:
        return BraidWord(1)
    length = rng.randint(0, max_letters)
    return BraidWord(n, tuple(rng.choice((1, -1)) * rng.randint(1, n - 1) for _ in range(length)))


def random_front(rng: random.Random, max_events: int = 14, knot: bool = True,
                 legendrian: bool = True, attempts: int = 1000) -> FrontDiagram:
    """A random valid front; with ``knot`` set, retried until it has one component."""
    for _ in range(attempts):
        events = []
        m = 0
        for _ in range(rng.randint(1, max_events)):
            roll = rng.random()
            if m < 2 or roll < 0.35:
                events.append(Birth(rng.randint(1, m + 1)))
                m += 2
            elif roll < 0.75:
                over = "upper" if legendrian else rng.choice(("upper", "lower"))
                events.append(Crossing(rng.randint(1, m - 1), over))
            else:
                events.append(Death(rng.randint(1, m - 1)))
                m -= 2
        while m:
            if rng.random() < 0.3 and m >= 2:
                over = "upper" if legendrian else rng.choice(("upper", "lower"))
                events.append(Crossing(rng.randint(1, m - 1), over))
            else:
                events.append(Death(rng.randint(1, m - 1)))
                m -= 2
        front = FrontDiagram(tuple(events))
        if not knot or len(orient(front).components) == 1:
            return front
    raise RuntimeError("no single-component front found")
