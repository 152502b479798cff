"""Exhaustive checking of structural laws over a built universe.

Every check here is a direct Python scan that returns data instead of
raising; failures carry a witness whose formula re-evaluates to false under
the witness bindings, so a reported failure can always be reproduced in
isolation. Each scan also has a matching closed formula (the oracle table
below), and :func:`check_dual_paths` cross-checks the two routes.

Scans pin the universe size up front: sets interned mid-check (by specify,
pair or union constructors) stay out of that check's quantifier range.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .constructors import Specified, binary_union, pair, singleton, specify, union_all
from .core import SetId, Universe, ensure_distinct_atoms
from .formula import Member, Not, evaluate, parse


class Status(Enum):
    HOLDS = "holds"
    FAILS = "fails"
    NOT_APPLICABLE = "not-applicable"


@dataclass(frozen=True)
class Witness:
    """Bindings plus a formula that evaluates false at them (domain pinned)."""

    bindings: tuple[tuple[str, SetId], ...]
    formula: str
    domain: int


@dataclass(frozen=True)
class CheckResult:
    name: str
    status: Status
    scanned: int
    witness: Witness | None = None


@dataclass(frozen=True)
class Report:
    atoms: tuple[str, ...]
    size: int
    depth: int | None
    results: tuple[CheckResult, ...]

    @property
    def passed(self) -> bool:
        return all(r.status is not Status.FAILS for r in self.results)

    def to_dict(self) -> dict:
        results = []
        for r in self.results:
            entry: dict = {
                "name": r.name,
                "status": r.status.value,
                "scanned": r.scanned,
            }
            if r.witness is not None:
                entry["witness"] = {
                    "bindings": dict(r.witness.bindings),
                    "formula": r.witness.formula,
                    "domain": r.witness.domain,
                }
            results.append(entry)
        return {
            "universe": {"atoms": list(self.atoms), "size": self.size},
            "results": results,
        }


def witness_reproduces(universe: Universe, witness: Witness) -> bool:
    """True when re-evaluating the witness still exhibits the failure."""
    value = evaluate(
        universe,
        parse(witness.formula),
        dict(witness.bindings),
        domain_size=witness.domain,
    )
    return value is False


def _report(universe: Universe, results, size: int) -> Report:
    return Report(universe.atom_names, size, universe.build_depth, tuple(results))


def _fails(name: str, scanned: int, domain: int, formula: str, **bindings) -> CheckResult:
    witness = Witness(tuple(sorted(bindings.items())), formula, domain)
    return CheckResult(name, Status.FAILS, scanned, witness)


def _domain(universe: Universe, snapshot: int | None) -> int:
    return len(universe) if snapshot is None else snapshot


# ---------------------------------------------------------------------------
# Formula oracles: the closed formulas each scan must agree with.

def _transitive(v: str) -> str:
    return f"(forall m. ((m in {v}) -> (forall x. ((x in m) -> (x in {v})))))"


def _members_transitive(v: str) -> str:
    return (
        f"(forall m. ((m in {v}) -> "
        f"(forall y. ((y in m) -> (forall z. ((z in y) -> (z in m)))))))"
    )


EQUALITY_FORMULA = "forall s. forall t. ((s = t) -> (forall u. ((s in u) <-> (t in u))))"

INDIVIDUALS_FORMULA = "forall s. ((s in s) -> (forall u. ((u in s) -> (u = s))))"

NO_EMPTY_FORMULA = "forall s. (exists u. (((u in s) & (u in u)) | ((u in s) & (u notin u))))"

REGULARITY_FORMULA = (
    "forall s. ((exists u. ((u in s) & (u notin u))) -> "
    "(exists v. ((v in s) & ((v notin v) & "
    "(forall u. (((u in v) & (u in s)) -> (u in u)))))))"
)

RUSSELL_FORMULA = "!(exists s. (forall u. ((u in s) <-> (u notin u))))"

RUSSELL_EQUIVALENCE_FORMULA = (
    "(forall s. (exists u. (((u in s) & (u in u)) | ((u notin s) & (u notin u)))))"
    f" <-> ({RUSSELL_FORMULA})"
)

_DERIVATION_A = (
    "(forall s. ((exists u. ((u in s) & (u notin u))) -> "
    "(exists v. ((forall u. ((u in v) <-> ((u in s) & (u notin u)))) & "
    "((v notin v) & (v notin s))))))"
)
_DERIVATION_B = (
    "(forall s. ((exists u. ((u in s) & (u in u))) -> "
    "(exists v. ((forall u. ((u in v) <-> ((u in s) & (u in u)))) & "
    "((v notin v) | ((v in v) & (v in s)))))))"
)
_DERIVATION_C = "((exists w. (w notin w)) -> (!(exists s. (forall u. (u in s)))))"

DERIVATIONS_FORMULA = f"({_DERIVATION_A} & ({_DERIVATION_B} & {_DERIVATION_C}))"

THEOREM1_FORMULA = (
    "forall s. ((exists u. ((u in s) & (u notin u))) -> "
    f"({_transitive('s')} -> "
    "(exists v. ((v in s) & ((v notin v) & (forall u. ((u in v) -> (u in u))))))))"
)

# Free variables A, B name the two distinguished atoms, P their pair.
PAIR_CLAIM_FORMULA = (
    "forall s. (((A in s) & ((B in s) & "
    f"({_transitive('s')} & "
    "(forall w. (((w in s) & (w in w)) -> ((w = A) | (w = B))))))) -> "
    "((forall m. (((m in s) & ((m notin m) & (forall x. ((x in m) -> (x in x))))) "
    "-> (m = P))) & ((P in s) | (P = s))))"
)

TRICHOTOMY_FORMULA = (
    "forall s. ((s notin s) -> "
    f"(({_transitive('s')} & {_members_transitive('s')}) -> "
    "(forall t. ((t notin t) -> "
    f"(({_transitive('t')} & {_members_transitive('t')}) -> "
    "((forall w. ((((w in s) | (w in t)) & (w in w)) -> ((w = A) | (w = B)))) -> "
    "((s in t) | ((s = t) | (t in s)))))))))"
)


def _in_union(x: str) -> str:
    return f"(exists t. ((t in s) & ({x} in t)))"


UNION_LEMMA_FORMULA = (
    "forall s. (((s notin s) & "
    f"({_transitive('s')} & {_members_transitive('s')})) -> "
    f"((forall x. ({_in_union('x')} -> (forall y. ((y in x) -> {_in_union('y')})))) & "
    f"((forall x. ({_in_union('x')} -> (forall y. ((y in x) -> "
    "(forall z. ((z in y) -> (z in x))))))) & "
    "((!(exists t. ((t in s) & (s in t)))) & "
    f"((forall x. ({_in_union('x')} <-> (x in s))) | "
    f"(forall x. ((x in s) <-> ({_in_union('x')} | "
    f"(forall y. ((y in x) <-> {_in_union('y')}))))))))))"
)


# ---------------------------------------------------------------------------
# Axiom scans.

def _check_equality_substitution(universe: Universe, n: int) -> CheckResult:
    # Canonical interning makes equal ids interchangeable by construction;
    # the scan verifies the model side: no two ids share an extension.
    name = "equality-substitution"
    seen: dict[frozenset[SetId], SetId] = {}
    for s in range(n):
        extension = universe.member_sets[s]
        other = seen.get(extension)
        if other is not None:
            return _fails(
                name, n, n,
                "(forall u. ((u in s) <-> (u in t))) -> (s = t)",
                s=other, t=s,
            )
        seen[extension] = s
    return CheckResult(name, Status.HOLDS, n)


def _check_individuals(universe: Universe, n: int) -> CheckResult:
    name = "individuals-axiom"
    sets = universe.member_sets
    for s in range(n):
        if s in sets[s]:
            for u in sets[s]:
                if u != s:
                    return _fails(
                        name, n, n,
                        "((s in s) & (u in s)) -> (u = s)",
                        s=s, u=u,
                    )
    return CheckResult(name, Status.HOLDS, n)


def _check_no_empty(universe: Universe, n: int) -> CheckResult:
    name = "no-empty-set"
    for s in range(n):
        if not universe.member_sets[s]:
            return _fails(name, n, n, "exists u. (u in s)", s=s)
    return CheckResult(name, Status.HOLDS, n)


def _check_regularity(universe: Universe, n: int) -> CheckResult:
    name = "regularity"
    sets = universe.member_sets
    for s in range(n):
        if not any(u not in sets[u] for u in sets[s]):
            continue
        found = any(
            v not in sets[v] and all(u in sets[u] for u in sets[v] & sets[s])
            for v in sets[s]
        )
        if not found:
            return _fails(
                name, n, n,
                "(exists u. ((u in s) & (u notin u))) -> "
                "(exists v. ((v in s) & ((v notin v) & "
                "(forall u. (((u in v) & (u in s)) -> (u in u))))))",
                s=s,
            )
    return CheckResult(name, Status.HOLDS, n)


def check_axioms(universe: Universe, *, snapshot: int | None = None) -> Report:
    """Scan the equality, individuals, no-empty-set and regularity laws."""
    n = _domain(universe, snapshot)
    results = (
        _check_equality_substitution(universe, n),
        _check_individuals(universe, n),
        _check_no_empty(universe, n),
        _check_regularity(universe, n),
    )
    return _report(universe, results, n)


# ---------------------------------------------------------------------------
# Named checks.

def check_russell(universe: Universe, *, snapshot: int | None = None) -> CheckResult:
    """No set collects exactly the non-self-membered sets."""
    n = _domain(universe, snapshot)
    sets = universe.member_sets
    non_individuals = frozenset(i for i in range(n) if i not in sets[i])
    for s in range(n):
        if sets[s] == non_individuals:
            return _fails(
                "russell", n, n,
                "!(forall u. ((u in s) <-> (u notin u)))",
                s=s,
            )
    return CheckResult("russell", Status.HOLDS, n)


def check_russell_equivalence(
    universe: Universe, *, snapshot: int | None = None
) -> CheckResult:
    """Both sides of the paradox-elimination biconditional, computed separately."""
    n = _domain(universe, snapshot)
    sets = universe.member_sets
    lhs = all(
        any((u in sets[s]) == (u in sets[u]) for u in range(n)) for s in range(n)
    )
    non_individuals = frozenset(i for i in range(n) if i not in sets[i])
    rhs = not any(sets[s] == non_individuals for s in range(n))
    if lhs != rhs:
        return _fails("russell-equivalence", n, n, RUSSELL_EQUIVALENCE_FORMULA)
    return CheckResult("russell-equivalence", Status.HOLDS, n)


def check_subset_derivations(
    universe: Universe, *, snapshot: int | None = None
) -> CheckResult:
    """Selected-subset facts: the non-individual part of any set is a subset
    but never a member; the individual part is an individual member or not an
    individual; and (wherever a non-individual exists) no set is universal."""
    name = "subset-derivations"
    n = _domain(universe, snapshot)
    sets = universe.member_sets
    has_non_individual = any(i not in sets[i] for i in range(n))
    not_self = Not(Member("x", "x"))
    in_self = Member("x", "x")
    for s in range(n):
        mem = sets[s]
        if any(u not in sets[u] for u in mem):
            out = specify(universe, s, not_self, "x")
            if not isinstance(out, Specified):
                return _fails(
                    name, n, n,
                    "exists v. (forall u. ((u in v) <-> ((u in s) & (u notin u))))",
                    s=s,
                )
            v = out.set_id
            if not universe.is_subset(v, s):
                return _fails(name, n, n, "forall u. ((u in v) -> (u in s))", v=v, s=s)
            if universe.is_member(v, v):
                return _fails(name, n, n, "v notin v", v=v)
            if universe.is_member(v, s):
                return _fails(name, n, n, "v notin s", v=v, s=s)
        if any(u in sets[u] for u in mem):
            out = specify(universe, s, in_self, "x")
            if not isinstance(out, Specified):
                return _fails(
                    name, n, n,
                    "exists v. (forall u. ((u in v) <-> ((u in s) & (u in u))))",
                    s=s,
                )
            w = out.set_id
            if universe.is_member(w, w) and not universe.is_member(w, s):
                return _fails(
                    name, n, n,
                    "(w notin w) | ((w in w) & (w in s))",
                    w=w, s=s,
                )
        if has_non_individual and len(mem) >= n and all(i in mem for i in range(n)):
            return _fails(name, n, n, "exists u. (u notin s)", s=s)
    return CheckResult(name, Status.HOLDS, n)


def check_theorem1(universe: Universe, *, snapshot: int | None = None) -> CheckResult:
    """Every transitive set with a non-individual member also has a member
    that is a non-individual set of individuals."""
    n = _domain(universe, snapshot)
    sets = universe.member_sets
    qualifying = 0
    for s in range(n):
        if not universe.is_transitive(s):
            continue
        if not any(u not in sets[u] for u in sets[s]):
            continue
        qualifying += 1
        found = any(
            v not in sets[v] and all(x in sets[x] for x in sets[v]) for v in sets[s]
        )
        if not found:
            return _fails(
                "theorem1", qualifying, n,
                "(exists u. ((u in s) & (u notin u))) -> "
                "(exists v. ((v in s) & ((v notin v) & "
                "(forall u. ((u in v) -> (u in u))))))",
                s=s,
            )
    if qualifying == 0:
        return CheckResult("theorem1", Status.NOT_APPLICABLE, 0)
    return CheckResult("theorem1", Status.HOLDS, qualifying)


def check_pair_membership_claim(
    universe: Universe, a1: SetId, a2: SetId, *, snapshot: int | None = None
) -> CheckResult:
    """For transitive sets whose individuals are exactly the two given atoms:
    the atoms' pair is the only possible non-individual set of individuals in
    the set, and the pair belongs to the set's successor."""
    ensure_distinct_atoms(universe, a1, a2)
    n = _domain(universe, snapshot)
    sets = universe.member_sets
    p = pair(universe, a1, a2)
    qualifying = 0
    for s in range(n):
        if not universe.is_transitive(s):
            continue
        individuals = {w for w in sets[s] if w in sets[w]}
        if individuals != {a1, a2}:
            continue
        qualifying += 1
        for m in sets[s]:
            if m not in sets[m] and all(x in sets[x] for x in sets[m]) and m != p:
                return _fails("pair-membership", qualifying, n, "m = P", m=m, P=p)
        succ = binary_union(universe, s, singleton(universe, s))
        if not universe.is_member(p, succ):
            return _fails(
                "pair-membership", qualifying, n, "(P in s) | (P = s)", P=p, s=s
            )
    if qualifying == 0:
        return CheckResult("pair-membership", Status.NOT_APPLICABLE, 0)
    return CheckResult("pair-membership", Status.HOLDS, qualifying)


def check_trichotomy(
    universe: Universe, a1: SetId, a2: SetId, *, snapshot: int | None = None
) -> CheckResult:
    """Membership trichotomy for pairs of transitive sets with transitive
    members whose individual members all lie in the given atom pair."""
    ensure_distinct_atoms(universe, a1, a2)
    n = _domain(universe, snapshot)
    sets = universe.member_sets
    transitive = [universe.is_transitive(i) for i in range(n)]
    qualifying = [
        i
        for i in range(n)
        if transitive[i]
        and all(transitive[m] for m in sets[i])
        and all(w in (a1, a2) for w in sets[i] if w in sets[w])
    ]
    pairs = 0
    for idx, s in enumerate(qualifying):
        for t in qualifying[idx:]:
            pairs += 1
            if s in sets[s] or t in sets[t]:
                continue
            if not (s in sets[t] or s == t or t in sets[s]):
                return _fails(
                    "trichotomy", pairs, n,
                    "(s in t) | ((s = t) | (t in s))",
                    s=s, t=t,
                )
    if pairs == 0:
        return CheckResult("trichotomy", Status.NOT_APPLICABLE, 0)
    return CheckResult("trichotomy", Status.HOLDS, pairs)


def check_union_lemma(universe: Universe, *, snapshot: int | None = None) -> CheckResult:
    """For every non-individual transitive set with transitive members, its
    union is again transitive with transitive members, does not contain the
    set, and the set is either its own union or the union's successor."""
    n = _domain(universe, snapshot)
    sets = universe.member_sets
    qualifying = 0
    for s in range(n):
        if s in sets[s]:
            continue
        if not universe.is_transitive(s):
            continue
        if not all(universe.is_transitive(m) for m in sets[s]):
            continue
        qualifying += 1
        merged = union_all(universe, s)
        if not universe.is_transitive(merged):
            return _fails(
                "union-lemma", qualifying, n,
                "forall x. ((x in U) -> (forall y. ((y in x) -> (y in U))))",
                s=s, U=merged,
            )
        if not all(universe.is_transitive(m) for m in universe.members(merged)):
            return _fails(
                "union-lemma", qualifying, n,
                "forall x. ((x in U) -> (forall y. ((y in x) -> "
                "(forall z. ((z in y) -> (z in x))))))",
                s=s, U=merged,
            )
        if universe.is_member(s, merged):
            return _fails("union-lemma", qualifying, n, "s notin U", s=s, U=merged)
        if merged != s and s != binary_union(
            universe, merged, singleton(universe, merged)
        ):
            return _fails(
                "union-lemma", qualifying, n,
                "(U = s) | (forall x. ((x in s) <-> ((x in U) | (x = U))))",
                s=s, U=merged,
            )
    if qualifying == 0:
        return CheckResult("union-lemma", Status.NOT_APPLICABLE, 0)
    return CheckResult("union-lemma", Status.HOLDS, qualifying)


# ---------------------------------------------------------------------------
# Dual-path agreement and suite assembly.

def check_dual_paths(
    universe: Universe,
    a1: SetId | None = None,
    a2: SetId | None = None,
    *,
    snapshot: int | None = None,
) -> Report:
    """Cross-check every scan against evaluating its formula oracle.

    A scan agrees with its formula when the formula is true exactly when the
    scan does not fail (a vacuous scan matches a vacuously true formula).
    The pair-dependent checks run only when two atoms are supplied.
    """
    n = _domain(universe, snapshot)
    entries: list[tuple[str, object, str, dict[str, SetId]]] = [
        ("equality-substitution",
         lambda: _check_equality_substitution(universe, n), EQUALITY_FORMULA, {}),
        ("individuals-axiom",
         lambda: _check_individuals(universe, n), INDIVIDUALS_FORMULA, {}),
        ("no-empty-set",
         lambda: _check_no_empty(universe, n), NO_EMPTY_FORMULA, {}),
        ("regularity",
         lambda: _check_regularity(universe, n), REGULARITY_FORMULA, {}),
        ("russell",
         lambda: check_russell(universe, snapshot=n), RUSSELL_FORMULA, {}),
        ("russell-equivalence",
         lambda: check_russell_equivalence(universe, snapshot=n),
         RUSSELL_EQUIVALENCE_FORMULA, {}),
        ("subset-derivations",
         lambda: check_subset_derivations(universe, snapshot=n),
         DERIVATIONS_FORMULA, {}),
        ("theorem1",
         lambda: check_theorem1(universe, snapshot=n), THEOREM1_FORMULA, {}),
        ("union-lemma",
         lambda: check_union_lemma(universe, snapshot=n), UNION_LEMMA_FORMULA, {}),
    ]
    if a1 is not None and a2 is not None:
        ensure_distinct_atoms(universe, a1, a2)
        p = pair(universe, a1, a2)
        entries.append(
            ("pair-membership",
             lambda: check_pair_membership_claim(universe, a1, a2, snapshot=n),
             PAIR_CLAIM_FORMULA, {"A": a1, "B": a2, "P": p})
        )
        entries.append(
            ("trichotomy",
             lambda: check_trichotomy(universe, a1, a2, snapshot=n),
             TRICHOTOMY_FORMULA, {"A": a1, "B": a2})
        )
    results = []
    for name, scan, text, env in entries:
        formula_true = evaluate(universe, parse(text), env, domain_size=n)
        scan_true = scan().status is not Status.FAILS
        if formula_true == scan_true:
            results.append(CheckResult(f"dualpath-{name}", Status.HOLDS, n))
        else:
            reproducer = text if not formula_true else f"(!({text}))"
            results.append(
                CheckResult(
                    f"dualpath-{name}",
                    Status.FAILS,
                    n,
                    Witness(tuple(sorted(env.items())), reproducer, n),
                )
            )
    return _report(universe, results, n)


SUITES = ("axioms", "russell", "derivations", "theorem1", "trichotomy", "union-lemma", "all")


def run_suite(
    universe: Universe,
    suite: str,
    pair_atoms: tuple[SetId, SetId] | None = None,
) -> Report:
    """Assemble the named suite of checks into one report.

    The trichotomy suite (and the pair checks inside ``all``) need two
    distinct atoms; ``all`` silently skips them when none are supplied.
    """
    if suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}")
    n = len(universe)
    results: list[CheckResult] = []
    if suite in ("axioms", "all"):
        results.extend(check_axioms(universe, snapshot=n).results)
    if suite in ("russell", "all"):
        results.append(check_russell(universe, snapshot=n))
        results.append(check_russell_equivalence(universe, snapshot=n))
    if suite in ("derivations", "all"):
        results.append(check_subset_derivations(universe, snapshot=n))
    if suite in ("theorem1", "all"):
        results.append(check_theorem1(universe, snapshot=n))
    if suite == "trichotomy" and pair_atoms is None:
        raise ValueError("the trichotomy suite needs an atom pair")
    if suite in ("trichotomy", "all") and pair_atoms is not None:
        a1, a2 = pair_atoms
        results.append(check_trichotomy(universe, a1, a2, snapshot=n))
        results.append(check_pair_membership_claim(universe, a1, a2, snapshot=n))
    if suite in ("union-lemma", "all"):
        results.append(check_union_lemma(universe, snapshot=n))
    return _report(universe, results, n)
