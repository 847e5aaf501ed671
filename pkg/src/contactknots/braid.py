"""Braid words in the Artin generators and the moves that act on them.

A letter ``k > 0`` is the generator sigma_k, and ``k < 0`` is its inverse.
Words act left to right, so the strand starting at position ``i`` of a
word ``w`` ends at ``permutation(w)(i)``, and
``permutation(a * b) == permutation(a).then(permutation(b))``.

The destabilization search is bounded and incomplete: it only ever
answers "here is a witness" or "nothing found within budget".
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, NamedTuple, Sequence

MAX_LETTERS = 10**6


class BraidError(ValueError):
    """Malformed braid text or an out-of-range letter."""

    def __init__(self, message: str, position: int | None = None):
        if position is not None:
            message = f"{message} (at column {position + 1})"
        super().__init__(message)
        self.position = position


@dataclass(frozen=True)
class BraidWord:
    strands: int
    letters: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple(int(k) for k in self.letters))
        if self.strands < 1:
            raise BraidError(f"strand count must be positive, got {self.strands}")
        if len(self.letters) > MAX_LETTERS:
            raise BraidError(f"word has {len(self.letters)} letters, cap is {MAX_LETTERS}")
        for k in self.letters:
            if k == 0 or abs(k) > self.strands - 1:
                raise BraidError(f"letter {k} out of range for {self.strands} strands")

    @classmethod
    def identity(cls, strands: int = 1) -> BraidWord:
        return cls(strands, ())

    def __len__(self) -> int:
        return len(self.letters)

    def __mul__(self, other: BraidWord) -> BraidWord:
        return compose(self, other)

    def __str__(self) -> str:
        return format_braid(self)


@dataclass(frozen=True)
class Permutation:
    """A bijection of {1..n}, stored as ``images[i-1] = image of i``."""

    images: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "images", tuple(self.images))
        if sorted(self.images) != list(range(1, len(self.images) + 1)):
            raise ValueError(f"not a permutation: {self.images}")

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(tuple(range(1, n + 1)))

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def then(self, other: Permutation) -> Permutation:
        """Apply ``self`` first, then ``other``."""
        return Permutation(tuple(other(self(i)) for i in range(1, len(self.images) + 1)))

    def inverse(self) -> Permutation:
        inv = [0] * len(self.images)
        for i, j in enumerate(self.images, start=1):
            inv[j - 1] = i
        return Permutation(tuple(inv))

    def cycles(self) -> list[tuple[int, ...]]:
        seen: set[int] = set()
        out = []
        for start in range(1, len(self.images) + 1):
            if start in seen:
                continue
            cycle = []
            i = start
            while i not in seen:
                seen.add(i)
                cycle.append(i)
                i = self(i)
            out.append(tuple(cycle))
        return out


# -- text format -------------------------------------------------------------

_HEADER = re.compile(r"\s*B(\d+)\s*:")
_TOKEN = re.compile(r"\S+")


def parse_braid(text: str) -> BraidWord:
    """Parse one braid word, e.g. ``"B3: 1 -2"`` or ``"1 1 1"``."""
    lines = [ln.split("#", 1)[0] for ln in text.splitlines()]
    lines = [ln for ln in lines if ln.strip()]
    if len(lines) > 1:
        raise BraidError("expected a single braid word; use parse_braids for several")
    line = lines[0] if lines else ""
    declared = None
    offset = 0
    m = _HEADER.match(line)
    if m:
        declared = int(m.group(1))
        offset = m.end()
    elif line.lstrip().startswith("B"):
        raise BraidError("malformed header, expected B<n>:", line.index("B"))
    letters = []
    for tok in _TOKEN.finditer(line, offset):
        try:
            k = int(tok.group())
        except ValueError:
            raise BraidError(f"unexpected token {tok.group()!r}", tok.start()) from None
        if k == 0:
            raise BraidError("letter 0 is not a generator", tok.start())
        letters.append(k)
    if declared is None:
        declared = 1 + max((abs(k) for k in letters), default=0)
    return BraidWord(declared, tuple(letters))


def parse_braids(text: str) -> list[BraidWord]:
    """Parse every non-blank, non-comment line as a braid word."""
    words = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        body = line.split("#", 1)[0]
        if not body.strip():
            continue
        try:
            words.append(parse_braid(body))
        except BraidError as exc:
            raise BraidError(f"line {lineno}: {exc}") from None
    return words


def format_braid(a: BraidWord) -> str:
    body = " ".join(str(k) for k in a.letters)
    return f"B{a.strands}: {body}".rstrip()


# -- group operations --------------------------------------------------------

def _check_letter(g: int, strands: int) -> None:
    if g == 0 or abs(g) > strands - 1:
        raise BraidError(f"letter {g} out of range for {strands} strands")


def compose(a: BraidWord, b: BraidWord) -> BraidWord:
    if a.strands != b.strands:
        raise BraidError(f"strand mismatch: {a.strands} vs {b.strands}")
    return BraidWord(a.strands, a.letters + b.letters)


def inverse(a: BraidWord) -> BraidWord:
    return BraidWord(a.strands, tuple(-k for k in reversed(a.letters)))


def conjugate(a: BraidWord, g: int) -> BraidWord:
    """Return ``g a g^-1``."""
    _check_letter(g, a.strands)
    return BraidWord(a.strands, (g,) + a.letters + (-g,))


def _reduce_letters(letters: Sequence[int]) -> tuple[tuple[int, ...], list[int]]:
    # Single stack pass; each cancellation is logged at its position in the
    # word as it stood at that moment.
    stack: list[int] = []
    positions: list[int] = []
    for k in letters:
        if stack and stack[-1] == -k:
            positions.append(len(stack) - 1)
            stack.pop()
        else:
            stack.append(k)
    return tuple(stack), positions


def free_reduce(a: BraidWord) -> BraidWord:
    return BraidWord(a.strands, _reduce_letters(a.letters)[0])


def cyclic_shift(a: BraidWord) -> BraidWord:
    if not a.letters:
        return a
    return BraidWord(a.strands, a.letters[1:] + a.letters[:1])


def exponent_sum(a: BraidWord) -> int:
    return sum(1 if k > 0 else -1 for k in a.letters)


def permutation(a: BraidWord) -> Permutation:
    where = list(range(a.strands))  # where[p] = strand currently at position p
    for k in a.letters:
        i = abs(k) - 1
        where[i], where[i + 1] = where[i + 1], where[i]
    images = [0] * a.strands
    for p, s in enumerate(where):
        images[s] = p + 1
    return Permutation(tuple(images))


def closure_components(a: BraidWord) -> int:
    return len(permutation(a).cycles())


def positive_markov_stabilize(a: BraidWord) -> BraidWord:
    return BraidWord(a.strands + 1, a.letters + (a.strands,))


def negative_braid_stabilize(a: BraidWord) -> BraidWord:
    """Add a strand and a negative kink; the closure is the transverse stabilization."""
    return BraidWord(a.strands + 1, a.letters + (-a.strands,))


# -- witnesses and search ----------------------------------------------------

class MoveStep(NamedTuple):
    """One replayable move.

    Kinds: ``conjugate`` (arg = letter g, word becomes g w g^-1),
    ``cyclic-shift``, ``free-reduce`` (arg = position p of a cancelling pair
    p, p+1), ``positive-stabilize``, ``positive-destabilize`` (arg = position
    of the single letter n-1), and, only when braid relations are enabled,
    ``commute`` and ``braid-relation`` (arg = position of the first letter).
    """

    kind: str
    arg: int | None = None

    def __str__(self) -> str:
        return self.kind if self.arg is None else f"{self.kind} {self.arg}"


STEP_KINDS = frozenset({
    "conjugate", "cyclic-shift", "free-reduce", "positive-stabilize",
    "positive-destabilize", "commute", "braid-relation",
})


def parse_step(text: str) -> MoveStep:
    parts = text.split()
    if not parts or parts[0] not in STEP_KINDS or len(parts) > 2:
        raise BraidError(f"bad move step {text!r}")
    return MoveStep(parts[0], int(parts[1]) if len(parts) == 2 else None)


@dataclass(frozen=True)
class MoveWitness:
    """Moves taking a source word to its final form.

    For destabilization witnesses ``terminal`` is the index, in the final
    word, of the unique letter ``-(n-1)``; equivalence witnesses leave it
    ``None``.
    """

    steps: tuple[MoveStep, ...] = ()
    terminal: int | None = None


@dataclass(frozen=True)
class SearchBudget:
    max_depth: int = 6
    max_states: int = 50_000
    braid_relations: bool = False
    # strand headroom for positive stabilization in equivalence searches
    extra_strands: int = 3

    def __post_init__(self):
        if self.max_depth < 0 or self.max_states < 1 or self.extra_strands < 0:
            raise ValueError(f"invalid search budget {self}")

    def describe(self) -> str:
        rel = "on" if self.braid_relations else "off"
        return (f"depth={self.max_depth} states={self.max_states} "
                f"braid-relations={rel} extra-strands={self.extra_strands}")


DEFAULT_BUDGET = SearchBudget()


def negative_destabilization_site(a: BraidWord) -> int | None:
    """Index of the unique ``-(n-1)`` if it is the only letter touching strand n."""
    n = a.strands
    if n < 2:
        return None
    hits = [i for i, k in enumerate(a.letters) if abs(k) == n - 1]
    if len(hits) == 1 and a.letters[hits[0]] == -(n - 1):
        return hits[0]
    return None


def _relation_moves(letters: tuple[int, ...]):
    for p in range(len(letters) - 1):
        x, y = letters[p], letters[p + 1]
        if abs(abs(x) - abs(y)) >= 2:
            yield MoveStep("commute", p), letters[:p] + (y, x) + letters[p + 2:]
        if p + 2 < len(letters):
            z = letters[p + 2]
            if x == z and abs(abs(x) - abs(y)) == 1 and (x > 0) == (y > 0):
                yield MoveStep("braid-relation", p), letters[:p] + (y, x, y) + letters[p + 3:]


def _moves(strands: int, letters: tuple[int, ...], budget: SearchBudget):
    """Yield (step, new letters) for the single moves out of a reduced state."""
    if letters:
        yield MoveStep("cyclic-shift"), letters[1:] + letters[:1]
    for j in range(1, strands):
        for g in (j, -j):
            yield MoveStep("conjugate", g), (g,) + letters + (-g,)
    if budget.braid_relations:
        yield from _relation_moves(letters)


def _with_reduction(step: MoveStep, letters: tuple[int, ...]):
    reduced, positions = _reduce_letters(letters)
    return (step,) + tuple(MoveStep("free-reduce", p) for p in positions), reduced


def _unwind(parents: dict, state) -> list[MoveStep]:
    steps: list[MoveStep] = []
    while parents[state] is not None:
        prev, chunk = parents[state]
        steps[:0] = chunk
        state = prev
    return steps


def find_destabilization(a: BraidWord, budget: SearchBudget = DEFAULT_BUDGET) -> MoveWitness | None:
    """Search for moves exhibiting ``a`` as a negative braid stabilization.

    Breadth-first over cyclic shifts and conjugations by every generator,
    each followed by full free reduction; states are deduplicated by their
    reduced word. Returns ``None`` once depth or state budget runs out,
    which says nothing about whether ``a`` is a stabilization.
    """
    n = a.strands
    site = negative_destabilization_site(a)
    if site is not None:
        return MoveWitness((), site)
    if n < 2:
        return None

    start, positions = _reduce_letters(a.letters)
    prefix = tuple(MoveStep("free-reduce", p) for p in positions)
    site = negative_destabilization_site(BraidWord(n, start))
    if site is not None:
        return MoveWitness(prefix, site)

    parents: dict[tuple[int, ...], tuple | None] = {start: None}
    level = [start]
    for _ in range(budget.max_depth):
        nxt = []
        for state in level:
            for step, letters in _moves(n, state, budget):
                chunk, reduced = _with_reduction(step, letters)
                if reduced in parents:
                    continue
                parents[reduced] = (state, chunk)
                site = negative_destabilization_site(BraidWord(n, reduced))
                if site is not None:
                    return MoveWitness(prefix + tuple(_unwind(parents, reduced)), site)
                if len(parents) >= budget.max_states:
                    return None
                nxt.append(reduced)
        if not nxt:
            break
        level = nxt
    return None


def destabilize(a: BraidWord, witness: MoveWitness) -> BraidWord:
    """Replay ``witness`` with this module's own moves and drop the terminal letter."""
    word = apply_steps(a, witness.steps)
    if witness.terminal is None or negative_destabilization_site(word) != witness.terminal:
        raise BraidError("witness does not end in a negative destabilization")
    letters = word.letters[:witness.terminal] + word.letters[witness.terminal + 1:]
    return BraidWord(word.strands - 1, letters)


def apply_step(a: BraidWord, step: MoveStep) -> BraidWord:
    kind, arg = step
    letters = a.letters
    if kind == "conjugate":
        return conjugate(a, arg)
    if kind == "cyclic-shift":
        return cyclic_shift(a)
    if kind == "free-reduce":
        if not (0 <= arg < len(letters) - 1 and letters[arg] == -letters[arg + 1]):
            raise BraidError(f"no cancelling pair at {arg}")
        return BraidWord(a.strands, letters[:arg] + letters[arg + 2:])
    if kind == "positive-stabilize":
        return positive_markov_stabilize(a)
    if kind == "positive-destabilize":
        hits = [i for i, k in enumerate(letters) if abs(k) == a.strands - 1]
        if a.strands < 2 or hits != [arg] or letters[arg] != a.strands - 1:
            raise BraidError(f"cannot destabilize at {arg}")
        return BraidWord(a.strands - 1, letters[:arg] + letters[arg + 1:])
    for s, new in _relation_moves(letters):
        if s == step:
            return BraidWord(a.strands, new)
    raise BraidError(f"move {step} does not apply")


def apply_steps(a: BraidWord, steps: Iterable[MoveStep]) -> BraidWord:
    for step in steps:
        a = apply_step(a, step)
    return a
