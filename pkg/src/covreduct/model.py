"""Core model: universe, blocks, coverings, decision partition, system.

Objects are referenced by 0-based index; blocks are int bit masks (see
``bitset``).  All types are immutable after construction and validated on
the way in, so downstream code can assume the structural invariants:

* every block is a non-empty subset of [0, universe_size)
* each covering's blocks are pairwise distinct and union to the universe
* decision classes are non-empty, pairwise disjoint, and union to the universe
* covering names are unique and there is at least one covering
"""

import hashlib
from dataclasses import dataclass
from typing import Iterable, Sequence

from .bitset import full_mask, to_indices
from .errors import (
    CoverageGap,
    DecisionNotPartition,
    DuplicateBlock,
    DuplicateCoveringName,
    EmptyBlock,
    IndexOutOfRange,
    LastCovering,
    UnknownCovering,
    ValidationError,
)

BlockInput = Iterable[int]


@dataclass(frozen=True)
class Covering:
    """A named family of blocks whose union is the universe."""

    name: str
    blocks: tuple[int, ...]

    def union(self) -> int:
        u = 0
        for b in self.blocks:
            u |= b
        return u


@dataclass(frozen=True)
class DecisionPartition:
    classes: tuple[int, ...]

    def class_of(self) -> dict[int, int]:
        """Map each object to the index of its decision class."""
        owner: dict[int, int] = {}
        for j, cls in enumerate(self.classes):
            for x in to_indices(cls):
                owner[x] = j
        return owner


@dataclass(frozen=True)
class CoveringDecisionSystem:
    universe_size: int
    coverings: tuple[Covering, ...]
    decision: DecisionPartition

    @property
    def full(self) -> int:
        return full_mask(self.universe_size)

    def names(self) -> tuple[str, ...]:
        return tuple(c.name for c in self.coverings)

    def covering(self, name: str) -> Covering:
        for c in self.coverings:
            if c.name == name:
                return c
        raise UnknownCovering(f"no covering named {name!r}")

    def covering_index(self, name: str) -> int:
        for i, c in enumerate(self.coverings):
            if c.name == name:
                return i
        raise UnknownCovering(f"no covering named {name!r}")

    def with_covering(self, covering: Covering) -> "CoveringDecisionSystem":
        """Return a copy with ``covering`` appended (validated)."""
        if covering.name in self.names():
            raise DuplicateCoveringName(f"covering name {covering.name!r} already present")
        _check_covering(covering.name, covering.blocks, self.universe_size)
        return CoveringDecisionSystem(
            self.universe_size, self.coverings + (covering,), self.decision
        )

    def without_covering(self, name: str) -> "CoveringDecisionSystem":
        idx = self.covering_index(name)
        if len(self.coverings) == 1:
            raise LastCovering("cannot delete the only covering of a system")
        remaining = self.coverings[:idx] + self.coverings[idx + 1 :]
        return CoveringDecisionSystem(self.universe_size, remaining, self.decision)


def _block_mask(block: BlockInput, n: int, where: str) -> int:
    m = 0
    for i in block:
        if not isinstance(i, int) or isinstance(i, bool) or not 0 <= i < n:
            raise IndexOutOfRange(f"{where}: object index {i!r} outside [0, {n})")
        m |= 1 << i
    return m


def _check_covering(name: str, blocks: Sequence[int], n: int) -> None:
    if not blocks:
        raise CoverageGap(f"covering {name!r} has no blocks")
    seen: set[int] = set()
    union = 0
    for k, b in enumerate(blocks):
        if b == 0:
            raise EmptyBlock(f"covering {name!r}: block {k} is empty")
        if b >> n:
            raise IndexOutOfRange(f"covering {name!r}: block {k} exceeds universe size {n}")
        if b in seen:
            raise DuplicateBlock(f"covering {name!r}: block {k} duplicates an earlier block")
        seen.add(b)
        union |= b
    if union != full_mask(n):
        missing = to_indices(full_mask(n) & ~union)
        raise CoverageGap(f"covering {name!r} does not cover objects {missing}")


def make_covering(name: str, blocks: Iterable[BlockInput], universe_size: int) -> Covering:
    """Build and validate a single covering from index lists."""
    masks = tuple(
        _block_mask(b, universe_size, f"covering {name!r}, block {k}")
        for k, b in enumerate(blocks)
    )
    _check_covering(name, masks, universe_size)
    return Covering(name, masks)


def make_decision(classes: Iterable[BlockInput], universe_size: int) -> DecisionPartition:
    """Build and validate a decision partition from index lists."""
    masks = tuple(
        _block_mask(c, universe_size, f"decision class {j}") for j, c in enumerate(classes)
    )
    union = 0
    for j, cls in enumerate(masks):
        if cls == 0:
            raise DecisionNotPartition(f"decision class {j} is empty")
        if cls & union:
            raise DecisionNotPartition(f"decision class {j} overlaps an earlier class")
        union |= cls
    if union != full_mask(universe_size):
        missing = to_indices(full_mask(universe_size) & ~union)
        raise DecisionNotPartition(f"decision classes do not cover objects {missing}")
    return DecisionPartition(masks)


def build_system(
    universe_size: int,
    coverings: Iterable[tuple[str, Iterable[BlockInput]]],
    decision: Iterable[BlockInput],
) -> CoveringDecisionSystem:
    """Validate and assemble a covering decision system.

    ``coverings`` is an ordered sequence of (name, blocks) pairs, each block
    an iterable of 0-based object indices; ``decision`` is the list of
    decision classes in the same index convention.
    """
    if universe_size <= 0:
        raise ValidationError(f"universe_size must be positive, got {universe_size}")
    covs = tuple(make_covering(name, blocks, universe_size) for name, blocks in coverings)
    if not covs:
        raise ValidationError("a system needs at least one covering")
    names = [c.name for c in covs]
    dupes = {n for n in names if names.count(n) > 1}
    if dupes:
        raise DuplicateCoveringName(f"duplicate covering names: {sorted(dupes)}")
    part = make_decision(decision, universe_size)
    return CoveringDecisionSystem(universe_size, covs, part)


def union_of_coverings(system: CoveringDecisionSystem) -> list[tuple[int, tuple[str, ...]]]:
    """Deduplicated blocks of all coverings, with contributing covering names.

    Blocks appear in first-encounter order (coverings in declaration order,
    blocks in covering order); equal blocks from several coverings are merged
    into one entry whose contributor tuple follows declaration order.
    """
    order: list[int] = []
    contributors: dict[int, list[str]] = {}
    for cov in system.coverings:
        for b in cov.blocks:
            if b not in contributors:
                contributors[b] = []
                order.append(b)
            if cov.name not in contributors[b]:
                contributors[b].append(cov.name)
    return [(b, tuple(contributors[b])) for b in order]


def _hash_masks(h: "hashlib._Hash", masks: Iterable[int]) -> None:
    for m in masks:
        raw = m.to_bytes((m.bit_length() + 7) // 8 or 1, "little")
        h.update(len(raw).to_bytes(4, "little"))
        h.update(raw)


def fingerprint(system: CoveringDecisionSystem) -> str:
    """Stable hash of a system's content, used to stamp caches.

    Invariant under reordering of blocks within a covering and of coverings
    within the family (names are unique, so sorting by name is canonical).
    Memoized on the (immutable) instance.
    """
    cached = system.__dict__.get("_fingerprint")
    if cached is not None:
        return cached
    h = hashlib.sha256()
    h.update(system.universe_size.to_bytes(8, "little"))
    for cov in sorted(system.coverings, key=lambda c: c.name):
        raw = cov.name.encode("utf-8")
        h.update(len(raw).to_bytes(4, "little"))
        h.update(raw)
        _hash_masks(h, sorted(cov.blocks))
    _hash_masks(h, sorted(system.decision.classes))
    digest = h.hexdigest()[:16]
    object.__setattr__(system, "_fingerprint", digest)
    return digest


def same_system(a: CoveringDecisionSystem, b: CoveringDecisionSystem) -> bool:
    """Semantic equality: ignores block order inside coverings and class order."""
    if a.universe_size != b.universe_size:
        return False
    if sorted(a.decision.classes) != sorted(b.decision.classes):
        return False
    by_name_a = {c.name: sorted(c.blocks) for c in a.coverings}
    by_name_b = {c.name: sorted(c.blocks) for c in b.coverings}
    return by_name_a == by_name_b
