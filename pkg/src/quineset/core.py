"""Canonical finite sets over self-membered atoms.

A :class:`Universe` interns every set exactly once, so two ids are equal
exactly when their member lists are equal. Atoms are the only self-membered
objects: each atom's sole member is itself, and the singleton of an atom
collapses back to the atom at interning time. There is no empty set.

Construction is single-writer; once a universe stops growing, every query
here is pure and safe to call from any number of threads.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable

from .errors import (
    AtomsEqual,
    CapExceeded,
    DuplicateAtomName,
    EmptyAtomName,
    EmptySetForbidden,
    InvalidAtomName,
    NotAtom,
    UnknownAtom,
    UnknownId,
)

SetId = int

_NAME_RE = re.compile(r"[A-Za-z][A-Za-z0-9_]*\Z")
_RESERVED_NAMES = frozenset({"forall", "exists", "in", "notin"})


@dataclass(frozen=True)
class SetNode:
    """One interned set: a sorted tuple of member ids, plus a name for atoms."""

    members: tuple[SetId, ...]
    atom_name: str | None = None

    @property
    def is_atom(self) -> bool:
        return self.atom_name is not None


class Universe:
    """Append-only interning table of finite sets over a fixed atom list.

    Ids are dense indexes into the table. Atoms occupy ids ``0..k-1`` in the
    order their names were given; every composite is registered after all of
    its members, so a member's id is always smaller than its set's id.
    """

    def __init__(self, atom_names: Iterable[str], *, max_sets: int | None = None):
        names = list(atom_names)
        if not names:
            raise ValueError("a universe needs at least one atom")
        seen: set[str] = set()
        for name in names:
            if name == "":
                raise EmptyAtomName("atom names must be nonempty")
            if not _NAME_RE.match(name) or name in _RESERVED_NAMES:
                raise InvalidAtomName(f"{name!r} is not a usable atom name")
            if name in seen:
                raise DuplicateAtomName(f"atom name {name!r} given twice")
            seen.add(name)
        self.max_sets = max_sets
        self.build_depth: int | None = None
        self._nodes: list[SetNode] = []
        self._index: dict[tuple[SetId, ...], SetId] = {}
        # member_sets[i] is the frozenset form of node i's members; read-only.
        self.member_sets: list[frozenset[SetId]] = []
        self._atom_ids: dict[str, SetId] = {}
        for name in names:
            sid = len(self._nodes)
            self._nodes.append(SetNode((sid,), name))
            self._index[(sid,)] = sid
            self.member_sets.append(frozenset((sid,)))
            self._atom_ids[name] = sid

    def __len__(self) -> int:
        return len(self._nodes)

    def ids(self) -> range:
        return range(len(self._nodes))

    @property
    def atoms(self) -> tuple[SetId, ...]:
        return tuple(self._atom_ids.values())

    @property
    def atom_names(self) -> tuple[str, ...]:
        return tuple(self._atom_ids)

    def atom_id(self, name: str) -> SetId:
        try:
            return self._atom_ids[name]
        except KeyError:
            raise UnknownAtom(f"no atom named {name!r}") from None

    def _check_id(self, sid: SetId) -> None:
        if not isinstance(sid, int) or not 0 <= sid < len(self._nodes):
            raise UnknownId(f"{sid!r} is not a set id of this universe")

    def node(self, sid: SetId) -> SetNode:
        self._check_id(sid)
        return self._nodes[sid]

    def intern(self, members: Iterable[SetId]) -> SetId:
        """Return the canonical id for the given member collection.

        Members are deduplicated and sorted; a singleton of an atom is the
        atom itself. An empty collection raises, since a memberless set does
        not exist here.
        """
        ms = tuple(sorted(set(members)))
        if not ms:
            raise EmptySetForbidden("a set needs at least one member")
        for m in ms:
            self._check_id(m)
        found = self._index.get(ms)
        if found is not None:
            return found
        if self.max_sets is not None and len(self._nodes) >= self.max_sets:
            raise CapExceeded(required=len(self._nodes) + 1, max_sets=self.max_sets)
        sid = len(self._nodes)
        self._nodes.append(SetNode(ms))
        self._index[ms] = sid
        self.member_sets.append(frozenset(ms))
        return sid

    def members(self, sid: SetId) -> tuple[SetId, ...]:
        """Sorted, duplicate-free member ids; an atom's members are itself."""
        return self.node(sid).members

    def member_set(self, sid: SetId) -> frozenset[SetId]:
        self._check_id(sid)
        return self.member_sets[sid]

    def is_member(self, x: SetId, s: SetId) -> bool:
        self._check_id(x)
        return x in self.member_set(s)

    def is_individual(self, s: SetId) -> bool:
        """True when ``s`` is a member of itself, i.e. ``s`` is an atom."""
        return s in self.member_set(s)

    def is_subset(self, s: SetId, t: SetId) -> bool:
        return self.member_set(s) <= self.member_set(t)

    def is_transitive(self, s: SetId) -> bool:
        """True when every member of ``s`` is also a subset of ``s``."""
        ms = self.member_set(s)
        return all(self.member_sets[m] <= ms for m in ms)

    def cardinality(self, s: SetId) -> int:
        return len(self.members(s))

    def _force_node(self, members: tuple[SetId, ...]) -> SetId:
        """Install a node without any invariant checks. Test fixtures only."""
        sid = len(self._nodes)
        ms = tuple(members)
        self._nodes.append(SetNode(ms))
        self._index[ms] = sid
        self.member_sets.append(frozenset(ms))
        return sid


def ensure_distinct_atoms(universe: Universe, a1: SetId, a2: SetId) -> None:
    """Validate that ``a1`` and ``a2`` are two different atoms."""
    for x in (a1, a2):
        if not universe.node(x).is_atom:
            raise NotAtom(f"set {x} is not an atom")
    if a1 == a2:
        raise AtomsEqual("two distinct atoms are required")
