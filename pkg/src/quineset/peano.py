"""Successor chains grown from a two-atom base, checked as number sequences.

The successor of s is s together with {s}. Atoms are fixed points of it,
which is exactly why a usable first number has to be a pair of two distinct
atoms: from there the chain climbs forever without repeating.
"""

from __future__ import annotations

from dataclasses import dataclass

from .constructors import binary_union, pair, singleton, union_all
from .core import SetId, Universe, ensure_distinct_atoms
from .errors import MalformedSequence, UnknownId
from .verifier import CheckResult, Report, Status, Witness, _report


@dataclass(frozen=True)
class NumberSequence:
    base: SetId
    elements: tuple[SetId, ...]


def successor(universe: Universe, s: SetId) -> SetId:
    """s together with its singleton; preserves transitivity."""
    return binary_union(universe, s, singleton(universe, s))


def sequence(universe: Universe, a1: SetId, a2: SetId, n: int) -> NumberSequence:
    """The chain base, succ(base), ..., of length ``n`` with base {a1, a2}."""
    ensure_distinct_atoms(universe, a1, a2)
    if n < 1:
        raise ValueError("sequence length must be at least 1")
    base = pair(universe, a1, a2)
    elements = [base]
    while len(elements) < n:
        elements.append(successor(universe, elements[-1]))
    return NumberSequence(base, tuple(elements))


def _fails(name: str, scanned: int, domain: int, formula: str, **bindings) -> CheckResult:
    return CheckResult(
        name, Status.FAILS, scanned, Witness(tuple(sorted(bindings.items())), formula, domain)
    )


def check_peano(universe: Universe, seq: NumberSequence) -> Report:
    """Verify the number-sequence laws for one chain.

    Covers the five counting laws (base present, successor steps, successor
    injectivity, base not a successor, pairwise distinctness) plus the chain
    structure: every element is transitive with transitive members, and the
    union of each element is the previous one.
    """
    if not seq.elements:
        raise MalformedSequence("a sequence needs at least one element")
    try:
        for sid in (seq.base, *seq.elements):
            universe.node(sid)
    except UnknownId as exc:
        raise MalformedSequence(str(exc)) from exc
    n = len(universe)
    elements = seq.elements
    length = len(elements)
    results: list[CheckResult] = []

    if seq.base == elements[0]:
        results.append(CheckResult("base-in-sequence", Status.HOLDS, 1))
    else:
        results.append(
            _fails("base-in-sequence", 1, n, "b = e", b=seq.base, e=elements[0])
        )

    succs = [successor(universe, e) for e in elements]

    step_result = CheckResult("successor-chain", Status.HOLDS, length - 1)
    for k in range(length - 1):
        if succs[k] != elements[k + 1]:
            step_result = _fails(
                "successor-chain", length - 1, n,
                "forall w. ((w in y) <-> ((w in e) | (w = e)))",
                e=elements[k], y=elements[k + 1],
            )
            break
    results.append(step_result)

    inj_pairs = length * (length - 1) // 2
    inj_result = CheckResult("successor-injective", Status.HOLDS, inj_pairs)
    for i in range(length):
        for j in range(i + 1, length):
            if succs[i] == succs[j] and elements[i] != elements[j]:
                inj_result = _fails(
                    "successor-injective", inj_pairs, n,
                    "(sx = sy) -> (x = y)",
                    x=elements[i], y=elements[j], sx=succs[i], sy=succs[j],
                )
                break
        if inj_result.status is Status.FAILS:
            break
    results.append(inj_result)

    base_result = CheckResult("base-not-successor", Status.HOLDS, length)
    for se in succs:
        if se == seq.base:
            base_result = _fails(
                "base-not-successor", length, n, "y != b", y=se, b=seq.base
            )
            break
    results.append(base_result)

    distinct_pairs = length * (length - 1) // 2
    distinct_result = CheckResult("elements-distinct", Status.HOLDS, distinct_pairs)
    for i in range(length):
        for j in range(i + 1, length):
            if elements[i] == elements[j]:
                distinct_result = _fails(
                    "elements-distinct", distinct_pairs, n,
                    "x != y", x=elements[i], y=elements[j],
                )
                break
        if distinct_result.status is Status.FAILS:
            break
    results.append(distinct_result)

    structure_result = CheckResult("transitive-chain", Status.HOLDS, length)
    for e in elements:
        if not universe.is_transitive(e) or not all(
            universe.is_transitive(m) for m in universe.members(e)
        ):
            structure_result = _fails(
                "transitive-chain", length, n,
                "(forall u. ((u in s) -> (forall w. ((w in u) -> (w in s))))) & "
                "(forall u. ((u in s) -> (forall w. ((w in u) -> "
                "(forall z. ((z in w) -> (z in u)))))))",
                s=e,
            )
            break
    results.append(structure_result)

    union_result = CheckResult("union-inverse", Status.HOLDS, length - 1)
    for k in range(length - 1):
        if union_all(universe, elements[k + 1]) != elements[k]:
            union_result = _fails(
                "union-inverse", length - 1, n,
                "forall x. ((exists m. ((m in s) & (x in m))) <-> (x in t))",
                s=elements[k + 1], t=elements[k],
            )
            break
    results.append(union_result)

    return _report(universe, results, n)


def check_sequences_distinct(
    universe: Universe, first: NumberSequence, second: NumberSequence
) -> CheckResult:
    """No element of one chain appears in the other (bases included)."""
    scanned = len(first.elements) * len(second.elements)
    for x in first.elements:
        for y in second.elements:
            if x == y:
                return _fails(
                    "sequences-distinct", scanned, len(universe), "x != y", x=x, y=y
                )
    return CheckResult("sequences-distinct", Status.HOLDS, scanned)
