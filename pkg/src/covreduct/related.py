"""Related families: admissible blocks, related sets, related function.

A block is admissible when it fits inside a single decision class.  The
related set r(x) collects the coverings that own an admissible block
containing x; pooled over all objects (empty sets dropped, duplicates
collapsed) the related sets form a monotone CNF over covering names whose
minimal DNF is exactly the reduct set.
"""

from dataclasses import dataclass

from .bitset import bits
from .boolformula import MonotoneFormula
from .model import CoveringDecisionSystem, union_of_coverings


@dataclass(frozen=True)
class AdmissibleBlocks:
    """Blocks of the pooled coverings contained in some decision class."""

    blocks: tuple[tuple[int, tuple[str, ...]], ...]
    union: int


@dataclass(frozen=True)
class RelatedFamily:
    """Per-object related sets, as bit masks over the covering index space."""

    universe_size: int
    covering_names: tuple[str, ...]
    r: tuple[int, ...]

    @property
    def nonempty_objects(self) -> int:
        acc = 0
        for x, mask in enumerate(self.r):
            if mask:
                acc |= 1 << x
        return acc

    def related_names(self, x: int) -> frozenset[str]:
        return frozenset(self.covering_names[i] for i in bits(self.r[x]))

    def objects_related_to(self, covering_index: int) -> int:
        """Mask of objects whose related set contains the given covering."""
        bit = 1 << covering_index
        acc = 0
        for x, mask in enumerate(self.r):
            if mask & bit:
                acc |= 1 << x
        return acc


def admissible_blocks(system: CoveringDecisionSystem) -> AdmissibleBlocks:
    """Pooled blocks contained in some decision class, with contributors."""
    classes = system.decision.classes
    owner: list[int] = [0] * system.universe_size
    for j, cls in enumerate(classes):
        for x in bits(cls):
            owner[x] = j
    kept: list[tuple[int, tuple[str, ...]]] = []
    union = 0
    for block, names in union_of_coverings(system):
        j = owner[(block & -block).bit_length() - 1]
        if block & ~classes[j] == 0:
            kept.append((block, names))
            union |= block
    return AdmissibleBlocks(tuple(kept), union)


def related_sets(system: CoveringDecisionSystem) -> RelatedFamily:
    """r(x) = coverings owning an admissible block that contains x."""
    classes = system.decision.classes
    owner: list[int] = [0] * system.universe_size
    for j, cls in enumerate(classes):
        for x in bits(cls):
            owner[x] = j
    r = [0] * system.universe_size
    for i, cov in enumerate(system.coverings):
        covered = 0
        for block in cov.blocks:
            j = owner[(block & -block).bit_length() - 1]
            if block & ~classes[j] == 0:
                covered |= block
        bit = 1 << i
        for x in bits(covered):
            r[x] |= bit
    return RelatedFamily(system.universe_size, system.names(), tuple(r))


def related_function(rf: RelatedFamily) -> MonotoneFormula:
    """The conjunction of the distinct non-empty related sets, as a CNF."""
    clauses = frozenset(mask for mask in rf.r if mask)
    return MonotoneFormula("cnf", clauses, rf.covering_names)


def clause_provenance(rf: RelatedFamily) -> dict[int, int]:
    """Which objects produced each distinct clause (clause mask -> object mask)."""
    prov: dict[int, int] = {}
    for x, mask in enumerate(rf.r):
        if mask:
            prov[mask] = prov.get(mask, 0) | (1 << x)
    return prov
