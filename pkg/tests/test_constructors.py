import pytest

from quineset import (
    NoSet,
    NoSetReason,
    Specified,
    Universe,
    binary_union,
    pair,
    parse,
    powerset,
    singleton,
    specify,
    union_all,
)
from quineset.errors import CapExceeded, WrongArity

from support import model_powerset, model_union, rep_of


def test_pair_of_distinct_atoms_is_not_individual():
    u = Universe(["u", "v"])
    p = pair(u, 0, 1)
    assert not u.is_individual(p)
    assert u.members(p) == (0, 1)


def test_pair_same_argument_is_singleton():
    u = Universe(["u", "v"])
    p = pair(u, 0, 1)
    assert pair(u, p, p) == singleton(u, p)


def test_pair_of_atom_with_itself_is_the_atom():
    u = Universe(["a"])
    assert pair(u, 0, 0) == 0


def test_pair_commutes(shallow_universe):
    u = shallow_universe
    for s in u.ids():
        for t in u.ids():
            assert pair(u, s, t) == pair(u, t, s)


def test_singleton_of_atom_is_atom():
    u = Universe(["a"])
    assert singleton(u, 0) == 0


def test_singleton_of_composite_is_new():
    u = Universe(["u", "v"])
    p = pair(u, 0, 1)
    box = singleton(u, p)
    assert box != p
    assert not u.is_member(box, box)


def test_singleton_collapse_idempotent():
    u = Universe(["a"])
    assert singleton(u, singleton(u, 0)) == 0


def test_singleton_law(default_universe):
    u = default_universe
    for s in list(u.ids()):
        box = singleton(u, s)
        assert u.is_member(s, box)
        assert (box == s) == u.is_individual(s)


def test_union_of_pair_of_atoms():
    u = Universe(["u", "v"])
    p = pair(u, 0, 1)
    assert union_all(u, p) == p  # each atom contributes itself


def test_union_of_successor_returns_base():
    u = Universe(["u", "v"])
    p = pair(u, 0, 1)
    s = u.intern([0, 1, p])
    assert union_all(u, s) == p


def test_union_of_atom():
    u = Universe(["a"])
    assert union_all(u, 0) == 0


def test_union_matches_model(shallow_universe):
    u = shallow_universe
    for sid in list(u.ids()):
        assert rep_of(u, union_all(u, sid)) == model_union(rep_of(u, sid))


def test_binary_union_idempotent():
    u = Universe(["u", "v"])
    p = pair(u, 0, 1)
    assert binary_union(u, p, p) == p


def test_binary_union_of_atoms():
    u = Universe(["u", "v"])
    assert binary_union(u, 0, 1) == pair(u, 0, 1)


def test_binary_union_successor():
    u = Universe(["u", "v"])
    p = pair(u, 0, 1)
    s = binary_union(u, p, singleton(u, p))
    assert u.members(s) == (0, 1, p)


def test_powerset_of_atom_is_atom():
    u = Universe(["a"])
    assert powerset(u, 0) == 0


def test_powerset_of_singleton():
    u = Universe(["u", "v"])
    p = pair(u, 0, 1)
    box = singleton(u, p)
    assert powerset(u, box) == singleton(u, box)


def test_powerset_of_pair_has_three_members():
    u = Universe(["u", "v"])
    p = pair(u, 0, 1)
    ps = powerset(u, p)
    assert u.cardinality(ps) == 3
    assert set(u.members(ps)) == {0, 1, p}


def test_powerset_matches_model(shallow_universe):
    u = shallow_universe
    for sid in list(u.ids()):
        assert rep_of(u, powerset(u, sid)) == model_powerset(rep_of(u, sid))


def test_powerset_contains_the_set(shallow_universe):
    u = shallow_universe
    for sid in list(u.ids()):
        assert u.is_member(sid, powerset(u, sid))


def test_powerset_monotone(shallow_universe):
    u = shallow_universe
    ids = list(u.ids())
    ps = {sid: powerset(u, sid) for sid in ids}
    for s in ids:
        for t in ids:
            if u.is_subset(s, t):
                assert u.is_subset(ps[s], ps[t])


def test_powerset_cap():
    u = Universe(["a", "b", "c"], max_sets=10)
    s = u.intern([0, 1, 2])
    top = u.intern([0, 1, 2, s])
    with pytest.raises(CapExceeded):
        powerset(u, top)


def test_cantor_failure_for_atoms_and_singletons(default_universe):
    u = default_universe
    for sid in list(u.ids()):
        if u.is_individual(sid):
            assert u.cardinality(powerset(u, sid)) == u.cardinality(sid) == 1
        else:
            box = singleton(u, sid)
            assert u.cardinality(powerset(u, box)) == u.cardinality(box) == 1


def test_union_preserves_transitivity(default_universe):
    u = default_universe
    for sid in list(u.ids()):
        if u.is_transitive(sid):
            assert u.is_transitive(union_all(u, sid))
            assert u.is_transitive(binary_union(u, sid, singleton(u, sid)))


# --- specify -----------------------------------------------------------------

def test_specify_selects_non_individuals():
    u = Universe(["u", "v"])
    p = pair(u, 0, 1)
    s = u.intern([0, 1, p])
    out = specify(u, s, parse("x notin x"), "x")
    assert isinstance(out, Specified)
    v = out.set_id
    assert u.members(v) == (p,)
    assert u.is_subset(v, s)
    assert not u.is_member(v, s)


def test_specify_no_witness_on_set_of_atoms():
    u = Universe(["u", "v"])
    p = pair(u, 0, 1)
    out = specify(u, p, parse("x notin x"), "x")
    assert out == NoSet(NoSetReason.NO_WITNESS)


def test_specify_contradictory_criterion(default_universe):
    u = default_universe
    crit = parse("x in x & x notin x")
    for sid in (0, 1, 6):
        assert specify(u, sid, crit, "x") == NoSet(NoSetReason.CONTRADICTORY_CRITERION)


def test_specify_wrong_arity(default_universe):
    with pytest.raises(WrongArity):
        specify(default_universe, 0, parse("x in y"), "x")


def test_specify_soundness_exhaustive(shallow_universe):
    u = shallow_universe
    crit = parse("x notin x")
    for sid in list(u.ids()):
        expected = [m for m in u.members(sid) if not u.is_member(m, m)]
        out = specify(u, sid, crit, "x")
        if expected:
            assert isinstance(out, Specified)
            assert list(u.members(out.set_id)) == expected
        else:
            assert out == NoSet(NoSetReason.NO_WITNESS)
