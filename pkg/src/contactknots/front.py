"""Legendrian front diagrams as sequences of Morse events.

A front is read left to right. The strands present at any moment form a
stack numbered from the top, level 1 being the highest z. Events:

* ``Birth(l)``: a left cusp; two new strands appear at levels l, l+1.
* ``Death(l)``: a right cusp joining the strands at levels l, l+1.
* ``Crossing(l, over)``: the strands at l and l+1 swap.

Strand arcs are labelled in order of birth and keep their label through
crossings. At a crossing the strand coming from level l heads down and so
has the smaller slope; in a genuine Legendrian front that strand is in
front, which is ``over="upper"``.

Conventions fixed here:

* canonical orientation: each component leaves its earliest left cusp
  along the upper branch;
* a cusp is *down* when the traversal passes through it from the upper
  branch to the lower one, *up* otherwise;
* crossing signs use the right-hand rule in the (x, z) plane, which makes
  a Legendrian crossing positive exactly when both strands run the same
  horizontal direction.

With these, ``rotation_number = (D - U) / 2`` gives 0 on the minimal
unknot, and positive stabilization raises it by one.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property
from typing import Union


class FrontError(ValueError):
    def __init__(self, message: str, event: int | None = None):
        if event is not None:
            message = f"event {event}: {message}"
        super().__init__(message)
        self.event = event


@dataclass(frozen=True)
class Birth:
    level: int


@dataclass(frozen=True)
class Death:
    level: int


@dataclass(frozen=True)
class Crossing:
    level: int
    over: str = "upper"

    def __post_init__(self):
        if self.over not in ("upper", "lower"):
            raise FrontError(f"over must be 'upper' or 'lower', got {self.over!r}")


Event = Union[Birth, Death, Crossing]


@dataclass(frozen=True)
class Cusp:
    event: int
    side: str     # "left" (birth) or "right" (death)
    upper: int    # strand label on the upper branch
    lower: int


@dataclass(frozen=True)
class CrossingSite:
    event: int
    upper: int    # label arriving from level l, the one heading down
    lower: int
    over: str


@dataclass(frozen=True)
class _Trace:
    strand_count: int
    cusps: tuple[Cusp, ...]
    crossings: tuple[CrossingSite, ...]
    stacks: tuple[tuple[int, ...], ...]   # stacks[i] = labels after event i


def _walk(events: tuple[Event, ...]) -> _Trace:
    stack: list[int] = []
    cusps, crossings, stacks = [], [], []
    fresh = 0
    for i, ev in enumerate(events):
        m = len(stack)
        lvl = ev.level
        if isinstance(ev, Birth):
            if not 1 <= lvl <= m + 1:
                raise FrontError(f"birth at level {lvl} with {m} strands", i)
            stack[lvl - 1:lvl - 1] = [fresh, fresh + 1]
            cusps.append(Cusp(i, "left", fresh, fresh + 1))
            fresh += 2
        elif isinstance(ev, Death):
            if not 1 <= lvl <= m - 1:
                raise FrontError(f"death at level {lvl} with {m} strands", i)
            cusps.append(Cusp(i, "right", stack[lvl - 1], stack[lvl]))
            del stack[lvl - 1:lvl + 1]
        elif isinstance(ev, Crossing):
            if not 1 <= lvl <= m - 1:
                raise FrontError(f"crossing at level {lvl} with {m} strands", i)
            crossings.append(CrossingSite(i, stack[lvl - 1], stack[lvl], ev.over))
            stack[lvl - 1], stack[lvl] = stack[lvl], stack[lvl - 1]
        else:
            raise FrontError(f"unknown event {ev!r}", i)
        stacks.append(tuple(stack))
    if stack:
        raise FrontError(f"{len(stack)} strands left open at the end")
    return _Trace(fresh, tuple(cusps), tuple(crossings), tuple(stacks))


@dataclass(frozen=True)
class FrontDiagram:
    events: tuple[Event, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "events", tuple(self.events))
        _walk(self.events)

    @cached_property
    def trace(self) -> _Trace:
        return _walk(self.events)

    @property
    def cusp_count(self) -> int:
        return len(self.trace.cusps)

    @property
    def crossing_count(self) -> int:
        return len(self.trace.crossings)

    def is_legendrian(self) -> bool:
        """True when every crossing puts the smaller-slope strand in front."""
        return all(c.over == "upper" for c in self.trace.crossings)

    def __str__(self) -> str:
        return format_front(self)


def validate_events(events) -> None:
    """Raise ``FrontError`` unless the events close up into circles."""
    _walk(tuple(events))


# -- text format -------------------------------------------------------------

_EVENT = re.compile(r"^([bdx])\s+(-?\d+)(?:\s+over=(upper|lower))?$")


def parse_front(text: str) -> FrontDiagram:
    events: list[Event] = []
    chunks = []
    for line in text.splitlines():
        chunks.extend(line.split("#", 1)[0].split(";"))
    for chunk in chunks:
        chunk = " ".join(chunk.split())
        if not chunk:
            continue
        m = _EVENT.match(chunk)
        if not m:
            raise FrontError(f"cannot parse {chunk!r}", len(events))
        kind, lvl, over = m.group(1), int(m.group(2)), m.group(3)
        if kind != "x" and over:
            raise FrontError(f"'over=' only applies to crossings: {chunk!r}", len(events))
        if kind == "b":
            events.append(Birth(lvl))
        elif kind == "d":
            events.append(Death(lvl))
        else:
            events.append(Crossing(lvl, over or "upper"))
    return FrontDiagram(tuple(events))


def format_front(front: FrontDiagram) -> str:
    parts = []
    for ev in front.events:
        if isinstance(ev, Birth):
            parts.append(f"b {ev.level}")
        elif isinstance(ev, Death):
            parts.append(f"d {ev.level}")
        else:
            parts.append(f"x {ev.level} over={ev.over}")
    return "; ".join(parts)


# -- orientation and invariants ---------------------------------------------

@dataclass(frozen=True)
class OrientedFront:
    diagram: FrontDiagram
    directions: tuple[int, ...]             # per strand label: +1 rightward, -1 leftward
    components: tuple[tuple[int, ...], ...]  # labels in traversal order

    def component_of(self, label: int) -> int:
        for c, labels in enumerate(self.components):
            if label in labels:
                return c
        raise KeyError(label)

    def cusp_is_down(self, cusp: Cusp) -> bool:
        d = self.directions[cusp.upper]
        return d == 1 if cusp.side == "right" else d == -1

    def crossing_sign(self, site: CrossingSite) -> int:
        same = self.directions[site.upper] == self.directions[site.lower]
        sign = 1 if same else -1
        return sign if site.over == "upper" else -sign

    @property
    def crossing_signs(self) -> tuple[int, ...]:
        return tuple(self.crossing_sign(s) for s in self.diagram.trace.crossings)

    def cusp_counts(self, component: int | None = None) -> tuple[int, int]:
        """Return ``(U, D)``, optionally restricted to one component."""
        up = down = 0
        for cusp in self.diagram.trace.cusps:
            if component is not None and self.component_of(cusp.upper) != component:
                continue
            if self.cusp_is_down(cusp):
                down += 1
            else:
                up += 1
        return up, down


def orient(front: FrontDiagram) -> OrientedFront:
    trace = front.trace
    birth_of: dict[int, Cusp] = {}
    death_of: dict[int, Cusp] = {}
    for c in trace.cusps:
        table = birth_of if c.side == "left" else death_of
        table[c.upper] = table[c.lower] = c

    def partner(c: Cusp, label: int) -> int:
        return c.lower if label == c.upper else c.upper

    directions = [0] * trace.strand_count
    components = []
    for c in trace.cusps:
        if c.side != "left" or directions[c.upper]:
            continue
        order = []
        label, d = c.upper, 1
        while not directions[label]:
            directions[label] = d
            order.append(label)
            end = death_of[label] if d == 1 else birth_of[label]
            label, d = partner(end, label), -d
        components.append(tuple(order))
    return OrientedFront(front, tuple(directions), tuple(components))


def reverse(of: OrientedFront, component: int | None = None) -> OrientedFront:
    """Reverse one component's orientation, or all of them."""
    flip = set(range(len(of.components))) if component is None else {component}
    dirs = list(of.directions)
    comps = list(of.components)
    for c in flip:
        for label in of.components[c]:
            dirs[label] = -dirs[label]
        comps[c] = tuple(reversed(of.components[c]))
    return OrientedFront(of.diagram, tuple(dirs), tuple(comps))


def writhe(of: OrientedFront) -> int:
    return sum(of.crossing_signs)


def _require_knot(of: OrientedFront, what: str) -> None:
    if len(of.components) != 1:
        raise FrontError(f"{what} is defined here for knots; front has {len(of.components)} components")
    if not of.diagram.is_legendrian():
        raise FrontError(f"{what} needs a Legendrian front (a crossing has over=lower)")


def thurston_bennequin(of: OrientedFront) -> int:
    _require_knot(of, "tb")
    return writhe(of) - of.diagram.cusp_count // 2


def rotation_number(of: OrientedFront) -> int:
    _require_knot(of, "rotation number")
    up, down = of.cusp_counts()
    return (down - up) // 2


def self_linking_of_pushoff(of: OrientedFront) -> int:
    """Self-linking number of the transverse pushoff, tb - r."""
    return thurston_bennequin(of) - rotation_number(of)


# -- stabilization ------------------------------------------------------------

def stabilize(front: FrontDiagram, sign: str, location: tuple[int, int]) -> FrontDiagram:
    """Add a zigzag to the segment at ``location = (event index, level)``.

    The segment is the one at ``level`` just after event ``event index``.
    ``sign`` is ``"+"`` or ``"-"`` (``"plus"``/``"minus"`` also accepted);
    the zigzag is chosen so its two cusps are down for ``+`` and up for
    ``-`` under the canonical orientation.
    """
    positive = {"+": True, "plus": True, "-": False, "minus": False}.get(sign)
    if positive is None:
        raise FrontError(f"stabilization sign must be + or -, got {sign!r}")
    index, level = location
    stacks = front.trace.stacks
    if not 0 <= index < len(stacks) or not 1 <= level <= len(stacks[index]):
        raise FrontError(f"no segment at level {level} after event {index}")
    label = stacks[index][level - 1]
    rightward = orient(front).directions[label] == 1
    if positive == rightward:
        zigzag = (Birth(level + 1), Death(level))   # dip below the strand
    else:
        zigzag = (Birth(level), Death(level + 1))   # rise above the strand
    events = front.events
    return FrontDiagram(events[:index + 1] + zigzag + events[index + 1:])


def segments(front: FrontDiagram) -> list[tuple[int, int]]:
    """All valid stabilization locations."""
    return [(i, lvl) for i, st in enumerate(front.trace.stacks) for lvl in range(1, len(st) + 1)]


# -- fixtures -----------------------------------------------------------------

UNKNOT = parse_front("b 1; d 1")
# unknot with one zigzag: 4 cusps, no crossings, tb = -2
GAMMA = parse_front("b 1; b 2; d 1; d 1")
# Legendrian right-handed trefoil with maximal tb = 1
TREFOIL = parse_front("b 1; b 2; x 3; x 3; x 3; d 2; d 1")
