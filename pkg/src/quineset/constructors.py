"""Set constructors: pairing, union, powerset, and criterion-based selection.

These grow the interning table on demand, so they need exclusive access to
the universe; quantified scans that should not see mid-check additions pin
their domain size first (see :func:`quineset.formula.evaluate`).
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .core import SetId, Universe
from .errors import CapExceeded, WrongArity
from .formula import Classification, Formula, classify, evaluate, free_vars


def pair(universe: Universe, s: SetId, t: SetId) -> SetId:
    """The pair {s, t}; {s, s} is the singleton of s."""
    return universe.intern((s, t))


def singleton(universe: Universe, s: SetId) -> SetId:
    """The singleton {s}; for an atom this is the atom itself."""
    return universe.intern((s,))


def union_all(universe: Universe, s: SetId) -> SetId:
    """The union of the members of ``s``; never empty, since every member has a member."""
    merged: set[SetId] = set()
    for m in universe.members(s):
        merged.update(universe.members(m))
    return universe.intern(merged)


def binary_union(universe: Universe, s: SetId, t: SetId) -> SetId:
    return union_all(universe, pair(universe, s, t))


def powerset(universe: Universe, s: SetId) -> SetId:
    """The set of all nonempty subsets of ``s``; always contains ``s`` itself.

    A set of n members has 2**n - 1 nonempty subsets, so this honours the
    universe's ``max_sets`` cap the same way the stage builder does.
    """
    base = universe.members(s)
    count = (1 << len(base)) - 1
    if universe.max_sets is not None and count > universe.max_sets:
        raise CapExceeded(required=count, max_sets=universe.max_sets)
    subsets = []
    for mask in range(1, 1 << len(base)):
        subsets.append(
            universe.intern([m for i, m in enumerate(base) if mask >> i & 1])
        )
    return universe.intern(subsets)


class NoSetReason(Enum):
    NO_WITNESS = "no-witness"
    CONTRADICTORY_CRITERION = "contradictory-criterion"


@dataclass(frozen=True)
class Specified:
    set_id: SetId


@dataclass(frozen=True)
class NoSet:
    reason: NoSetReason


SpecifyOutcome = Specified | NoSet


def specify(universe: Universe, s: SetId, criterion: Formula, var: str) -> SpecifyOutcome:
    """Select the members of ``s`` satisfying a one-variable criterion.

    Returns ``Specified(v)`` where v's members are exactly the qualifying
    members of ``s``, provided at least one member qualifies. Otherwise no
    set exists: the reason is ``CONTRADICTORY_CRITERION`` when the criterion
    holds of nothing in the whole universe (mutually exclusive properties
    specify no set), and ``NO_WITNESS`` when it merely misses every member
    of ``s``.
    """
    fv = free_vars(criterion)
    if fv != {var}:
        raise WrongArity(
            f"criterion must have exactly the free variable {var!r}, got {sorted(fv)}"
        )
    chosen = [m for m in universe.members(s) if evaluate(universe, criterion, {var: m})]
    if chosen:
        return Specified(universe.intern(chosen))
    if classify(universe, criterion, var) is Classification.CONTRADICTORY:
        return NoSet(NoSetReason.CONTRADICTORY_CRITERION)
    return NoSet(NoSetReason.NO_WITNESS)
