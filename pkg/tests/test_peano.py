import pytest

from quineset import (
    BuildConfig,
    NumberSequence,
    Status,
    Universe,
    build,
    check_peano,
    check_sequences_distinct,
    check_trichotomy,
    pair,
    sequence,
    successor,
    union_all,
    witness_reproduces,
)
from quineset.errors import AtomsEqual, MalformedSequence, NotAtom


@pytest.fixture
def trio():
    return build(BuildConfig(("o", "a", "e"), depth=1))[0]


def test_successor_of_pair(trio):
    base = pair(trio, 0, 1)
    succ = successor(trio, base)
    assert trio.members(succ) == (0, 1, base)


def test_successor_fixed_point_on_atoms(trio):
    for atom in trio.atoms:
        assert successor(trio, atom) == atom


def test_successor_twice(trio):
    base = pair(trio, 0, 1)
    second = successor(trio, successor(trio, base))
    assert trio.cardinality(second) == 4
    assert trio.is_member(base, second)
    assert trio.is_member(successor(trio, base), second)


def test_successor_cardinality_grows(trio):
    chain = sequence(trio, 0, 1, 6)
    for k, element in enumerate(chain.elements):
        assert trio.cardinality(element) == 2 + k


def test_sequence_first_elements(trio):
    chain = sequence(trio, 0, 1, 3)
    base = pair(trio, 0, 1)
    assert chain.elements[0] == base
    assert chain.elements[1] == successor(trio, base)
    assert chain.elements[2] == successor(trio, chain.elements[1])
    assert len(set(chain.elements)) == 3


def test_sequence_validates_arguments(trio):
    with pytest.raises(AtomsEqual):
        sequence(trio, 0, 0, 3)
    with pytest.raises(NotAtom):
        sequence(trio, 0, pair(trio, 0, 1), 3)
    with pytest.raises(ValueError):
        sequence(trio, 0, 1, 0)


def test_check_peano_passes(trio):
    for pair_ids in ((0, 1), (0, 2)):
        chain = sequence(trio, *pair_ids, 10)
        report = check_peano(trio, chain)
        assert all(r.status is Status.HOLDS for r in report.results), report


def test_check_peano_single_element(trio):
    chain = sequence(trio, 0, 1, 1)
    report = check_peano(trio, chain)
    assert all(r.status is Status.HOLDS for r in report.results)


def test_check_peano_duplicate_detected(trio):
    chain = sequence(trio, 0, 1, 4)
    tampered = NumberSequence(
        chain.base, chain.elements[:2] + (chain.elements[1],) + chain.elements[2:]
    )
    report = check_peano(trio, tampered)
    by_name = {r.name: r for r in report.results}
    failing = by_name["elements-distinct"]
    assert failing.status is Status.FAILS
    assert witness_reproduces(trio, failing.witness)


def test_check_peano_malformed(trio):
    with pytest.raises(MalformedSequence):
        check_peano(trio, NumberSequence(0, ()))
    with pytest.raises(MalformedSequence):
        check_peano(trio, NumberSequence(0, (99999,)))


def test_union_inverse_property(trio):
    chain = sequence(trio, 0, 2, 8)
    for prev, cur in zip(chain.elements, chain.elements[1:]):
        assert union_all(trio, cur) == prev


def test_trichotomy_on_chain(trio):
    chain = sequence(trio, 0, 1, 6)
    for i, x in enumerate(chain.elements):
        for j, y in enumerate(chain.elements):
            holds = [trio.is_member(x, y), x == y, trio.is_member(y, x)]
            assert sum(holds) == 1
            if i < j:
                assert trio.is_member(x, y)


def test_chain_counts_as_trichotomy_instances(trio):
    chain = sequence(trio, 0, 1, 4)
    result = check_trichotomy(trio, 0, 1)
    assert result.status is Status.HOLDS
    assert result.scanned >= len(chain.elements)


def test_sequences_with_shared_atom_are_disjoint(trio):
    first = sequence(trio, 0, 1, 10)
    second = sequence(trio, 0, 2, 10)
    result = check_sequences_distinct(trio, first, second)
    assert result.status is Status.HOLDS
    assert result.scanned == 100


def test_sequences_distinct_detects_overlap(trio):
    first = sequence(trio, 0, 1, 3)
    assert check_sequences_distinct(trio, first, first).status is Status.FAILS


def test_elements_transitive_non_individual(trio):
    chain = sequence(trio, 1, 2, 6)
    for element in chain.elements:
        assert trio.is_transitive(element)
        assert not trio.is_individual(element)


def test_peano_on_plain_universe():
    universe = Universe(["o", "a"])
    chain = sequence(universe, 0, 1, 5)
    report = check_peano(universe, chain)
    assert all(r.status is Status.HOLDS for r in report.results)
