"""Reduct computation: batch pipeline, incremental updates, brute oracle.

Batch: positive region -> related sets -> related function -> minimal DNF;
the DNF terms are exactly the attribute reducts.

Incremental updates reuse a ReductionCache built for the pre-update system:

* add, positive region unchanged (always the case on a consistent base):
  expand  new AND (AND over x in POS outside the new covering's admissible
  union of OR r(x)),  then keep the expansion terms no existing reduct is a
  strict subset of, and union them with the old reducts.
* add, positive region grew: the same expansion IS the new reduct set (the
  handful of objects only the new covering resolves force it into every
  reduct, so no old reduct survives and no filtering applies).
* delete, positive region unchanged: keep the reducts that avoid the
  deleted covering.
* delete, positive region shrank: drop the deleted covering from every
  reduct, normalize to an antichain, verify every survivor (positive-region
  preservation and per-element indispensability); if any check fails, fall
  back to re-minimizing the CNF of the updated related family.  When all
  survivors verify, the result provably equals the batch answer.

Every returned ReductSet is an antichain of sub-families that preserve the
positive region and contain no superfluous covering.
"""

from dataclasses import dataclass
from typing import Union

from .bitset import bits, full_mask
from .boolformula import (
    DEFAULT_TERM_LIMIT,
    MonotoneFormula,
    absorb,
    mask_to_names,
    minimal_dnf,
    filter_non_extensions,
)
from .errors import StaleCache, TooManyCoverings, UniverseMismatch
from .model import Covering, CoveringDecisionSystem, fingerprint
from .related import RelatedFamily, related_function, related_sets
from .approximation import positive_region


@dataclass(frozen=True)
class ReductSet:
    """An antichain of reducts, each a mask over the covering name tuple."""

    covering_names: tuple[str, ...]
    reducts: frozenset[int]

    def as_name_sets(self) -> frozenset[frozenset[str]]:
        return frozenset(
            frozenset(self.covering_names[i] for i in bits(r)) for r in self.reducts
        )

    def sorted_name_lists(self) -> list[tuple[str, ...]]:
        """Canonical display order: names by covering index, lines sorted."""
        return sorted(mask_to_names(self.covering_names, r) for r in self.reducts)


@dataclass(frozen=True)
class ReductionCache:
    """State the incremental algorithms reuse, stamped with the system hash."""

    fingerprint: str
    consistent: bool
    related: RelatedFamily
    positive: int
    reducts: ReductSet


@dataclass(frozen=True)
class AddCovering:
    """An add delta: the new covering plus its admissible blocks."""

    covering: Covering
    admissible: tuple[int, ...]
    union: int


@dataclass(frozen=True)
class DeleteCovering:
    """A delete delta: the doomed covering plus its admissible blocks."""

    name: str
    index: int
    admissible: tuple[int, ...]
    union: int


UpdateDelta = Union[AddCovering, DeleteCovering]


def _admissible_of(covering: Covering, system: CoveringDecisionSystem) -> tuple[tuple[int, ...], int]:
    classes = system.decision.classes
    kept = []
    union = 0
    for block in covering.blocks:
        if any(block & ~cls == 0 for cls in classes):
            kept.append(block)
            union |= block
    return tuple(kept), union


def add_delta(system: CoveringDecisionSystem, covering: Covering) -> AddCovering:
    """Validate a new covering against the system and derive its delta."""
    if covering.union() != system.full:
        raise UniverseMismatch(
            f"covering {covering.name!r} does not cover the {system.universe_size}-object universe"
        )
    # Raises DuplicateCoveringName / block validation errors as appropriate.
    system.with_covering(covering)
    admissible, union = _admissible_of(covering, system)
    return AddCovering(covering, admissible, union)


def delete_delta(system: CoveringDecisionSystem, name: str) -> DeleteCovering:
    """Locate the covering to delete and derive its delta."""
    idx = system.covering_index(name)
    system.without_covering(name)  # raises LastCovering when it would empty the family
    admissible, union = _admissible_of(system.coverings[idx], system)
    return DeleteCovering(name, idx, admissible, union)


def _check_cache(system: CoveringDecisionSystem, cache: ReductionCache) -> None:
    fp = fingerprint(system)
    if fp != cache.fingerprint:
        raise StaleCache(
            f"cache was built for system {cache.fingerprint}, got {fp}"
        )


def _pos_of_subset(related: RelatedFamily, subset: int) -> int:
    """Positive region of the sub-family given by ``subset`` of covering bits.

    An object is positive for a sub-family exactly when its related set
    meets the sub-family.
    """
    acc = 0
    for x, mask in enumerate(related.r):
        if mask & subset:
            acc |= 1 << x
    return acc


def _verified(related: RelatedFamily, reducts: frozenset[int]) -> bool:
    """Check preservation and indispensability of every candidate reduct.

    A sub-family preserves the positive region of the full family iff it
    meets every non-empty related set, so both checks reduce to hitting-set
    tests against the distinct clauses.
    """
    clauses = {mask for mask in related.r if mask}
    for p in reducts:
        if any(not clause & p for clause in clauses):
            return False
        for i in bits(p):
            q = p & ~(1 << i)
            if all(clause & q for clause in clauses):
                return False
    return True


def batch_reducts(
    system: CoveringDecisionSystem, max_terms: int = DEFAULT_TERM_LIMIT
) -> tuple[ReductSet, ReductionCache]:
    """Compute all reducts from scratch and a fresh cache for later updates."""
    _, pos = positive_region(system)
    related = related_sets(system)
    dnf = minimal_dnf(related_function(related), max_terms)
    reducts = ReductSet(system.names(), dnf.terms)
    cache = ReductionCache(
        fingerprint=fingerprint(system),
        consistent=pos == system.full,
        related=related,
        positive=pos,
        reducts=reducts,
    )
    return reducts, cache


def update_related_add(cache: ReductionCache, delta: AddCovering) -> RelatedFamily:
    """Extend the related sets with the added covering.

    Only objects inside the new covering's admissible union gain it; nothing
    else changes, and no old block is re-tested.
    """
    old = cache.related
    if delta.covering.union() != full_mask(old.universe_size):
        raise UniverseMismatch(
            f"covering {delta.covering.name!r} is not over a {old.universe_size}-object universe"
        )
    bit = 1 << len(old.covering_names)
    r = list(old.r)
    for x in bits(delta.union):
        r[x] |= bit
    return RelatedFamily(
        old.universe_size, old.covering_names + (delta.covering.name,), tuple(r)
    )


def _drop_index(mask: int, idx: int) -> int:
    low = mask & ((1 << idx) - 1)
    return low | ((mask >> (idx + 1)) << idx)


def update_related_delete(cache: ReductionCache, delta: DeleteCovering) -> RelatedFamily:
    """Remove the deleted covering from every related set (and reindex)."""
    old = cache.related
    names = old.covering_names[: delta.index] + old.covering_names[delta.index + 1 :]
    r = tuple(_drop_index(mask, delta.index) for mask in old.r)
    return RelatedFamily(old.universe_size, names, r)


def add_covering(
    system: CoveringDecisionSystem,
    cache: ReductionCache,
    new_covering: Covering,
    max_terms: int = DEFAULT_TERM_LIMIT,
) -> tuple[ReductSet, ReductionCache]:
    """Incrementally recompute the reduct set after appending a covering."""
    _check_cache(system, cache)
    delta = add_delta(system, new_covering)
    related_plus = update_related_add(cache, delta)
    names_plus = related_plus.covering_names
    pos_plus = cache.positive | delta.union
    new_bit = 1 << (len(names_plus) - 1)

    if delta.union == 0:
        # No admissible blocks: related sets and reducts are untouched.
        reducts_plus = cache.reducts.reducts
    else:
        restricted = cache.positive & ~delta.union
        clauses = {new_bit}
        for x in bits(restricted):
            clauses.add(cache.related.r[x])
        expansion = minimal_dnf(
            MonotoneFormula("cnf", frozenset(clauses), names_plus), max_terms
        )
        if pos_plus == cache.positive:
            added = filter_non_extensions(expansion.terms, cache.reducts.reducts)
            reducts_plus = cache.reducts.reducts | added
        else:
            # The positive region grew, so some object is resolved only by
            # the new covering: every reduct must contain it and the old
            # reducts all lapse.  The expansion alone is the exact answer.
            reducts_plus = expansion.terms

    reduct_set = ReductSet(names_plus, frozenset(reducts_plus))
    system_plus = system.with_covering(new_covering)
    new_cache = ReductionCache(
        fingerprint=fingerprint(system_plus),
        consistent=pos_plus == system.full,
        related=related_plus,
        positive=pos_plus,
        reducts=reduct_set,
    )
    return reduct_set, new_cache


def delete_covering(
    system: CoveringDecisionSystem,
    cache: ReductionCache,
    name: str,
    max_terms: int = DEFAULT_TERM_LIMIT,
) -> tuple[ReductSet, ReductionCache]:
    """Incrementally recompute the reduct set after deleting a covering."""
    _check_cache(system, cache)
    delta = delete_delta(system, name)
    system_minus = system.without_covering(name)
    _, pos_minus = positive_region(system_minus)  # no shortcut: recomputed
    related_minus = update_related_delete(cache, delta)
    names_minus = related_minus.covering_names
    bit = 1 << delta.index

    if pos_minus == cache.positive:
        kept = [r for r in cache.reducts.reducts if not r & bit]
        reducts_minus = frozenset(_drop_index(r, delta.index) for r in kept)
    else:
        stripped = (
            _drop_index(r & ~bit, delta.index) for r in cache.reducts.reducts
        )
        survivors = absorb(stripped, "minimal")
        # Guard the clause-based verification with the recomputed region:
        # the updated related sets must account for exactly pos_minus.
        sound = related_minus.nonempty_objects == pos_minus
        if sound and _verified(related_minus, survivors):
            reducts_minus = survivors
        else:
            dnf = minimal_dnf(related_function(related_minus), max_terms)
            reducts_minus = dnf.terms

    reduct_set = ReductSet(names_minus, reducts_minus)
    new_cache = ReductionCache(
        fingerprint=fingerprint(system_minus),
        consistent=pos_minus == system.full,
        related=related_minus,
        positive=pos_minus,
        reducts=reduct_set,
    )
    return reduct_set, new_cache


def oracle_reducts(system: CoveringDecisionSystem, limit: int = 16) -> ReductSet:
    """Definition-level brute force, independent of the related-family route.

    Enumerates every sub-family of the coverings (the empty one included:
    when the positive region is empty it is the unique minimal preserving
    sub-family), recomputes the positive region of each directly from its
    blocks, and keeps the inclusion-minimal preserving sub-families.
    """
    m = len(system.coverings)
    if m > limit:
        raise TooManyCoverings(f"{m} coverings exceeds the oracle limit of {limit}")
    classes = system.decision.classes

    def pos_of(subset: int) -> int:
        acc = 0
        for i in bits(subset):
            for block in system.coverings[i].blocks:
                if any(block & ~cls == 0 for cls in classes):
                    acc |= block
        return acc

    target = pos_of(full_mask(m))
    survivors = [p for p in range(1 << m) if pos_of(p) == target]
    minimal = [
        p
        for p in survivors
        if not any(q != p and q & ~p == 0 for q in survivors)
    ]
    return ReductSet(system.names(), frozenset(minimal))
