"""Transverse links in (S^3, xi_std) presented as closed braids."""

from __future__ import annotations

import warnings
from dataclasses import dataclass

from .braid import (
    DEFAULT_BUDGET,
    BraidWord,
    MoveStep,
    MoveWitness,
    SearchBudget,
    _reduce_letters,
    _unwind,
    closure_components,
    exponent_sum,
)


@dataclass(frozen=True)
class TransverseBraid:
    braid: BraidWord
    label: str | None = None

    @property
    def strands(self) -> int:
        return self.braid.strands


def _braid(k) -> BraidWord:
    return k.braid if isinstance(k, TransverseBraid) else k


def self_linking(k: TransverseBraid | BraidWord) -> int:
    """Exponent sum minus braid index (summed over all components for links)."""
    b = _braid(k)
    return exponent_sum(b) - b.strands


@dataclass(frozen=True)
class EquivalenceResult:
    witnesses: tuple[MoveWitness, MoveWitness] | None
    reason: str
    common: BraidWord | None = None

    @property
    def found(self) -> bool:
        return self.witnesses is not None


def _neighbours(strands: int, letters: tuple[int, ...], cap: int):
    if letters:
        yield MoveStep("cyclic-shift"), strands, letters[1:] + letters[:1]
    for j in range(1, strands):
        for g in (j, -j):
            yield MoveStep("conjugate", g), strands, (g,) + letters + (-g,)
    if strands < cap:
        yield MoveStep("positive-stabilize"), strands + 1, letters + (strands,)
    if strands >= 2:
        hits = [i for i, k in enumerate(letters) if abs(k) == strands - 1]
        if len(hits) == 1 and letters[hits[0]] == strands - 1:
            p = hits[0]
            yield MoveStep("positive-destabilize", p), strands - 1, letters[:p] + letters[p + 1:]


def equivalence_search(a: TransverseBraid | BraidWord, b: TransverseBraid | BraidWord,
                       budget: SearchBudget = DEFAULT_BUDGET) -> EquivalenceResult:
    """Look for transverse Markov moves bringing ``a`` and ``b`` to a common word.

    Invariant gate first: different self-linking numbers or component
    counts prove the closures are not transversely isotopic. Otherwise
    both sides grow breadth-first trees under conjugation, cyclic shift and
    positive Markov (de)stabilization, each move followed by free
    reduction, until the trees meet or the budget runs out.
    """
    a, b = _braid(a), _braid(b)
    sa, sb = self_linking(a), self_linking(b)
    if sa != sb:
        return EquivalenceResult(None, f"not equivalent: self-linking {sa} != {sb}")
    ca, cb = closure_components(a), closure_components(b)
    if ca != cb:
        return EquivalenceResult(None, f"not equivalent: components {ca} != {cb}")
    if ca > 1:
        warnings.warn("self-linking of a multi-component link is compared as a total",
                      stacklevel=2)

    cap = max(a.strands, b.strands) + budget.extra_strands
    trees = []
    for word in (a, b):
        reduced, positions = _reduce_letters(word.letters)
        root = (word.strands, reduced)
        prefix = tuple(MoveStep("free-reduce", p) for p in positions)
        trees.append({"parents": {root: None}, "level": [root], "prefix": prefix})

    def result(meet):
        pair = tuple(MoveWitness(t["prefix"] + tuple(_unwind(t["parents"], meet)))
                     for t in trees)
        return EquivalenceResult(pair, "equivalent", BraidWord(meet[0], meet[1]))

    meet = next((s for s in trees[0]["parents"] if s in trees[1]["parents"]), None)
    if meet is not None:
        return result(meet)

    for _ in range(budget.max_depth):
        grew = False
        for side, tree in enumerate(trees):
            other = trees[1 - side]["parents"]
            parents = tree["parents"]
            nxt = []
            for state in tree["level"]:
                for step, n, letters in _neighbours(state[0], state[1], cap):
                    reduced, positions = _reduce_letters(letters)
                    new = (n, reduced)
                    if new in parents:
                        continue
                    chunk = (step,) + tuple(MoveStep("free-reduce", p) for p in positions)
                    parents[new] = (state, chunk)
                    if new in other:
                        return result(new)
                    if len(trees[0]["parents"]) + len(trees[1]["parents"]) >= budget.max_states:
                        return EquivalenceResult(None, "none (budget exhausted)")
                    nxt.append(new)
            tree["level"] = nxt
            grew = grew or bool(nxt)
        if not grew:
            break
    return EquivalenceResult(None, "none (budget exhausted)")


def transversely_equivalent(a: TransverseBraid | BraidWord, b: TransverseBraid | BraidWord,
                            budget: SearchBudget = DEFAULT_BUDGET) -> tuple[MoveWitness, MoveWitness] | None:
    return equivalence_search(a, b, budget).witnesses
