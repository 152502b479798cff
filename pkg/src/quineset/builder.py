"""Staged enumeration of every hereditarily finite set over a given atom list."""

from __future__ import annotations

from dataclasses import dataclass

from .core import Universe
from .errors import CapExceeded

DEFAULT_MAX_SETS = 100_000


@dataclass(frozen=True)
class BuildConfig:
    atom_names: tuple[str, ...]
    depth: int
    max_sets: int = DEFAULT_MAX_SETS

    def __post_init__(self):
        object.__setattr__(self, "atom_names", tuple(self.atom_names))
        if self.depth < 0:
            raise ValueError("depth must be nonnegative")
        if self.max_sets < len(self.atom_names):
            raise ValueError("max_sets must be at least the number of atoms")


@dataclass(frozen=True)
class StageReport:
    """Cumulative universe size after each stage; entry 0 is the atom count."""

    counts: tuple[int, ...]
    fixed_point_stage: int | None = None

    def stage_counts(self) -> list[int]:
        return list(self.counts)


def build(config: BuildConfig) -> tuple[Universe, StageReport]:
    """Close the atoms under nonempty-subset formation, one stage at a time.

    Stage 0 is the atoms; stage k+1 interns every nonempty subset of the
    stage-k domain (singletons of atoms collapse back onto the atoms, so a
    domain of n sets closes to exactly 2**n - 1). The enumeration order is
    fixed, so ids are deterministic for a given config. A stage whose closure
    would outgrow ``max_sets`` raises before anything is interned; a
    partially enumerated stage would silently break every "for all subsets"
    check downstream, so the cap aborts rather than truncates.
    """
    universe = Universe(config.atom_names, max_sets=config.max_sets)
    counts = [len(universe)]
    fixed_point = None
    for stage in range(1, config.depth + 1):
        n = len(universe)
        closure = (1 << n) - 1
        if closure > config.max_sets:
            raise CapExceeded(required=closure, max_sets=config.max_sets, stage=stage)
        for mask in range(1, 1 << n):
            universe.intern([i for i in range(n) if mask >> i & 1])
        counts.append(len(universe))
        if len(universe) == n:
            # Nothing new can appear later either; stop enumerating.
            fixed_point = stage
            counts.extend([n] * (config.depth - stage))
            break
    universe.build_depth = config.depth
    return universe, StageReport(tuple(counts), fixed_point)
