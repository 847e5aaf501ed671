"""Stand-alone replay of move witnesses.

Nothing here imports the braid module: witnesses are checked on plain
``(strands, letters)`` data, with every move re-implemented and its
precondition tested, so a bug in the search cannot vouch for itself.
"""

from __future__ import annotations

from typing import Iterable, Sequence


class ReplayError(ValueError):
    pass


def _check_word(strands: int, letters: Sequence[int]) -> None:
    if strands < 1:
        raise ReplayError(f"bad strand count {strands}")
    for k in letters:
        if not 1 <= abs(k) <= strands - 1:
            raise ReplayError(f"letter {k} invalid on {strands} strands")


def _one(strands: int, w: list[int], kind: str, arg, i: int) -> int:
    where = f"step {i} ({kind}{'' if arg is None else ' ' + str(arg)})"
    if kind == "conjugate":
        if arg is None or not 1 <= abs(arg) <= strands - 1:
            raise ReplayError(f"{where}: conjugating letter out of range")
        w.insert(0, arg)
        w.append(-arg)
    elif kind == "cyclic-shift":
        if not w:
            raise ReplayError(f"{where}: empty word")
        w.append(w.pop(0))
    elif kind == "free-reduce":
        if arg is None or not 0 <= arg < len(w) - 1 or w[arg] + w[arg + 1] != 0:
            raise ReplayError(f"{where}: no cancelling pair")
        del w[arg:arg + 2]
    elif kind == "positive-stabilize":
        if arg is not None:
            raise ReplayError(f"{where}: takes no argument")
        w.append(strands)
        strands += 1
    elif kind == "positive-destabilize":
        top = strands - 1
        uses = [j for j, k in enumerate(w) if k == top or k == -top]
        if strands < 2 or uses != [arg] or w[arg] != top:
            raise ReplayError(f"{where}: letter {top} is not isolated and positive there")
        del w[arg]
        strands -= 1
    elif kind == "commute":
        if arg is None or not 0 <= arg < len(w) - 1 or abs(abs(w[arg]) - abs(w[arg + 1])) < 2:
            raise ReplayError(f"{where}: letters are not distant")
        w[arg], w[arg + 1] = w[arg + 1], w[arg]
    elif kind == "braid-relation":
        if arg is None or not 0 <= arg < len(w) - 2:
            raise ReplayError(f"{where}: position out of range")
        x, y, z = w[arg:arg + 3]
        if x != z or abs(abs(x) - abs(y)) != 1 or (x > 0) != (y > 0):
            raise ReplayError(f"{where}: not of the form a b a with adjacent same-sign letters")
        w[arg:arg + 3] = [y, x, y]
    else:
        raise ReplayError(f"{where}: unknown move")
    return strands


def replay(strands: int, letters: Sequence[int], steps: Iterable) -> tuple[int, tuple[int, ...]]:
    """Apply ``steps`` (pairs ``(kind, arg)``) and return the final word."""
    _check_word(strands, letters)
    w = list(letters)
    for i, (kind, arg) in enumerate(steps):
        strands = _one(strands, w, kind, arg, i)
    return strands, tuple(w)


def _reduced(letters: Sequence[int]) -> tuple[int, ...]:
    out: list[int] = []
    for k in letters:
        if out and out[-1] + k == 0:
            out.pop()
        else:
            out.append(k)
    return tuple(out)


def check_destabilization(strands: int, letters: Sequence[int], steps: Iterable,
                          terminal: int | None) -> tuple[int, tuple[int, ...]]:
    """Verify a destabilization witness; return the destabilized word.

    After replay the last generator ``n-1`` must occur exactly once, as an
    inverse, at index ``terminal``.
    """
    n, w = replay(strands, letters, steps)
    if n < 2:
        raise ReplayError("final word has fewer than 2 strands")
    uses = [j for j, k in enumerate(w) if abs(k) == n - 1]
    if terminal is None or uses != [terminal] or w[terminal] != -(n - 1):
        raise ReplayError(f"final word {w} does not isolate letter {-(n - 1)} at {terminal}")
    return n - 1, w[:terminal] + w[terminal + 1:]


def check_equivalence(a: tuple[int, Sequence[int]], b: tuple[int, Sequence[int]],
                      steps_a: Iterable, steps_b: Iterable) -> tuple[int, tuple[int, ...]]:
    """Verify that both step lists end on the same freely reduced word."""
    na, wa = replay(a[0], a[1], steps_a)
    nb, wb = replay(b[0], b[1], steps_b)
    if na != nb or _reduced(wa) != _reduced(wb):
        raise ReplayError(f"witnesses end on different words: B{na} {wa} vs B{nb} {wb}")
    return na, _reduced(wa)
