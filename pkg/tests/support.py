"""Independent reference models used as test oracles.

Nothing here touches the interning machinery under test: sets are modelled
as frozensets over atom-name strings (an atom's sole member is itself, and a
singleton of an atom collapses onto the atom), and formulas are evaluated by
a plain recursive walk with copied environments.
"""

from itertools import combinations
from random import Random

from quineset import (
    And,
    Equal,
    Exists,
    Forall,
    Iff,
    Implies,
    Member,
    Not,
    Or,
)

# --- frozenset model of the set theory ------------------------------------

def collapse(members):
    items = frozenset(members)
    if len(items) == 1:
        (only,) = items
        if isinstance(only, str):
            return only
    return items


def model_members(rep):
    if isinstance(rep, str):
        return frozenset([rep])
    return rep


def nonempty_subsets(domain):
    elems = list(domain)
    for size in range(1, len(elems) + 1):
        for combo in combinations(elems, size):
            yield collapse(combo)


def close_once(domain):
    out = set(domain)
    out.update(nonempty_subsets(domain))
    return out


def model_counts(atom_names, depth):
    """Cumulative universe sizes per stage, computed in the frozenset model."""
    domain = set(atom_names)
    counts = [len(domain)]
    for _ in range(depth):
        domain = close_once(domain)
        counts.append(len(domain))
    return counts


def model_powerset(rep):
    return collapse(nonempty_subsets(model_members(rep)))


def model_union(rep):
    merged = set()
    for m in model_members(rep):
        merged.update(model_members(m))
    return collapse(merged)


def rep_of(universe, sid):
    """Translate a universe id into the frozenset model."""
    node = universe.node(sid)
    if node.is_atom:
        return node.atom_name
    return frozenset(rep_of(universe, m) for m in node.members)


# --- reference formula evaluator -------------------------------------------

def reference_eval(universe, f, env, domain=None):
    """Naive recursive evaluator; the production one must agree with this."""
    n = len(universe) if domain is None else domain

    def ev(node, scope):
        if isinstance(node, Member):
            return scope[node.lhs] in universe.member_set(scope[node.rhs])
        if isinstance(node, Equal):
            return scope[node.lhs] == scope[node.rhs]
        if isinstance(node, Not):
            return not ev(node.body, scope)
        if isinstance(node, And):
            return ev(node.lhs, scope) and ev(node.rhs, scope)
        if isinstance(node, Or):
            return ev(node.lhs, scope) or ev(node.rhs, scope)
        if isinstance(node, Implies):
            return (not ev(node.lhs, scope)) or ev(node.rhs, scope)
        if isinstance(node, Iff):
            return ev(node.lhs, scope) == ev(node.rhs, scope)
        if isinstance(node, Forall):
            return all(ev(node.body, {**scope, node.var: i}) for i in range(n))
        if isinstance(node, Exists):
            return any(ev(node.body, {**scope, node.var: i}) for i in range(n))
        raise TypeError(node)

    return ev(f, dict(env))


# --- random formula generation ----------------------------------------------

VARIABLES = ("s", "t", "u", "v", "w")


def random_formula(rng: Random, depth: int = 4):
    leaf_kind = rng.randrange(2)
    if depth <= 0 or rng.random() < 0.3:
        a, b = rng.choice(VARIABLES), rng.choice(VARIABLES)
        return Member(a, b) if leaf_kind == 0 else Equal(a, b)
    kind = rng.randrange(7)
    if kind == 0:
        return Not(random_formula(rng, depth - 1))
    if kind == 1:
        return And(random_formula(rng, depth - 1), random_formula(rng, depth - 1))
    if kind == 2:
        return Or(random_formula(rng, depth - 1), random_formula(rng, depth - 1))
    if kind == 3:
        return Implies(random_formula(rng, depth - 1), random_formula(rng, depth - 1))
    if kind == 4:
        return Iff(random_formula(rng, depth - 1), random_formula(rng, depth - 1))
    if kind == 5:
        return Forall(rng.choice(VARIABLES), random_formula(rng, depth - 1))
    return Exists(rng.choice(VARIABLES), random_formula(rng, depth - 1))


# --- fixture helpers ----------------------------------------------------------

def inject_self_membered(universe, extra_member):
    """Backdoor: install an illegal composite that contains itself."""
    new_id = len(universe)
    return universe._force_node(tuple(sorted((extra_member, new_id))))
