"""Monotone Boolean algebra over covering-name sets.

Formulas are positive (no negations); a term is a bit mask over a variable
index space shared with a name tuple.  A CNF is a conjunction of clauses
(each a disjunction of variables), a DNF a disjunction of implicants (each
a conjunction).  Normal form for both is an antichain: no term contains
another.  The minimal DNF of a monotone CNF is the set of minimal hitting
sets of its clauses, computed by clause-by-clause distribution with
absorption after every product step.

The product step is quadratic in the implicant count, so it runs on numpy
uint64 vectors whenever the formula has at most 64 variables (implicant
sets in the thousands are routine for dense systems); wider formulas fall
back to the same algorithm over Python ints.
"""

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .bitset import bits
from .errors import TermBlowup

DEFAULT_TERM_LIMIT = 1_000_000


@dataclass(frozen=True)
class MonotoneFormula:
    mode: str  # "cnf" or "dnf"
    terms: frozenset[int]
    names: tuple[str, ...]

    def term_name_sets(self) -> frozenset[frozenset[str]]:
        return frozenset(
            frozenset(self.names[i] for i in bits(t)) for t in self.terms
        )


def names_to_mask(names: Sequence[str], members: Iterable[str]) -> int:
    index = {n: i for i, n in enumerate(names)}
    m = 0
    for name in members:
        m |= 1 << index[name]
    return m


def mask_to_names(names: Sequence[str], mask: int) -> tuple[str, ...]:
    return tuple(names[i] for i in bits(mask))


def absorb(terms: Iterable[int], keep: str = "minimal") -> frozenset[int]:
    """Reduce a term collection to an antichain.

    keep="minimal" drops every strict superset of another term (absorption
    as used for CNF clauses and DNF implicants); keep="maximal" drops strict
    subsets instead.
    """
    if keep not in ("minimal", "maximal"):
        raise ValueError(f"keep must be 'minimal' or 'maximal', got {keep!r}")
    ordered = sorted(set(terms), key=lambda t: t.bit_count(), reverse=keep == "maximal")
    kept: list[int] = []
    for t in ordered:
        if keep == "minimal":
            if any(s & ~t == 0 for s in kept):
                continue
        else:
            if any(t & ~s == 0 for s in kept):
                continue
        kept.append(t)
    return frozenset(kept)


def minimal_dnf(cnf: MonotoneFormula, max_terms: int = DEFAULT_TERM_LIMIT) -> MonotoneFormula:
    """Expand a monotone CNF into its minimal DNF (all prime implicants).

    Clauses are absorbed first and multiplied in ascending size order; after
    each product step the implicant set is absorbed again, which keeps the
    intermediate sets antichains and bounds the blowup on typical inputs.
    A growth past ``max_terms`` raises TermBlowup instead of exhausting
    memory.  The empty CNF yields the single empty implicant (true).
    """
    if cnf.mode != "cnf":
        raise ValueError("minimal_dnf expects a CNF input")
    clauses = sorted(absorb(cnf.terms, "minimal"), key=lambda c: (c.bit_count(), c))
    if any(c == 0 for c in clauses):
        raise ValueError("monotone CNF must not contain an empty clause")
    if len(cnf.names) <= 64:
        terms = _expand_u64(clauses, max_terms)
    else:
        terms = _expand_wide(clauses, max_terms)
    return MonotoneFormula("dnf", terms, cnf.names)


def _subset_survivors(kept: np.ndarray, cand: np.ndarray, chunk: int = 256) -> np.ndarray:
    """Candidates no kept term is a subset of (chunked to bound memory)."""
    keep_flags = np.ones(cand.size, dtype=bool)
    for lo in range(0, cand.size, chunk):
        part = cand[lo : lo + chunk]
        absorbed = ((kept[None, :] & ~part[:, None]) == 0).any(axis=1)
        keep_flags[lo : lo + part.size] = ~absorbed
    return cand[keep_flags]


def _expand_u64(clauses: list[int], max_terms: int) -> frozenset[int]:
    """Product-with-absorption over uint64 vectors (up to 64 variables)."""
    implicants = np.zeros(1, dtype=np.uint64)
    for clause in clauses:
        c = np.uint64(clause)
        hit_mask = (implicants & c) != 0
        hit = implicants[hit_mask]
        missed = implicants[~hit_mask]
        if missed.size == 0:
            continue
        var_bits = np.uint64(1) << np.array(list(bits(clause)), dtype=np.uint64)
        if hit.size + missed.size * var_bits.size > max_terms:
            raise TermBlowup(f"DNF expansion exceeded {max_terms} intermediate terms")
        expanded = np.unique(missed[:, None] | var_bits[None, :])
        # Absorption: drop expanded terms some kept term sits inside.  Hit
        # terms are untouched (an expanded term extends an implicant
        # incomparable with every hit term, so it can never absorb one),
        # and only strictly smaller terms can absorb, so working through
        # the deduplicated candidates by ascending popcount level keeps
        # each level's checks independent of its peers.
        kept = hit
        counts = np.bitwise_count(expanded)
        for level in np.unique(counts):
            cand = expanded[counts == level]
            if kept.size:
                cand = _subset_survivors(kept, cand)
            if cand.size:
                kept = np.concatenate((kept, cand))
        implicants = kept
    return frozenset(int(t) for t in implicants)


def _expand_wide(clauses: list[int], max_terms: int) -> frozenset[int]:
    """Product-with-absorption over plain ints (any variable count)."""
    implicants: list[int] = [0]
    for clause in clauses:
        hit = [t for t in implicants if t & clause]
        missed = [t for t in implicants if not t & clause]
        if not missed:
            continue
        expanded = [t | (1 << v) for t in missed for v in bits(clause)]
        if len(hit) + len(expanded) > max_terms:
            raise TermBlowup(f"DNF expansion exceeded {max_terms} intermediate terms")
        implicants = list(absorb(hit + expanded, "minimal"))
    return frozenset(implicants)


def filter_non_extensions(candidates: Iterable[int], existing: Iterable[int]) -> frozenset[int]:
    """Drop candidates that strictly contain an existing term.

    Candidates equal to an existing term survive: only strict inclusion of
    an existing term disqualifies an extension.
    """
    existing = list(existing)
    return frozenset(
        c
        for c in candidates
        if not any(e != c and e & ~c == 0 for e in existing)
    )


def evaluate(formula: MonotoneFormula, true_vars: int) -> bool:
    """Evaluate under the assignment whose true variables are ``true_vars``."""
    if formula.mode == "cnf":
        return all(clause & true_vars for clause in formula.terms)
    return any(term & ~true_vars == 0 for term in formula.terms)
