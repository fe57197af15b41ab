import random

import pytest
from hypothesis import given, settings, strategies as st

import covreduct as cr
from covreduct.bitset import to_indices
from covreduct.boolformula import MonotoneFormula
from covreduct.errors import TermBlowup

from bruteforce import minimal_hitting_sets, truth_table_equal

NAMES6 = ("C1", "C2", "C3", "C4", "C5", "C6")


def terms(*groups):
    return frozenset(cr.names_to_mask(NAMES6, g) for g in groups)


def named(formula: MonotoneFormula) -> frozenset[frozenset[str]]:
    return formula.term_name_sets()


def test_absorb_keeps_minimal_clauses():
    got = cr.absorb(
        terms(
            ("C1", "C3", "C5"),
            ("C1", "C2", "C3", "C4", "C5"),
            ("C1", "C2", "C4", "C5"),
            ("C2", "C4"),
        )
    )
    assert got == terms(("C1", "C3", "C5"), ("C2", "C4"))


def test_absorb_singleton_fixed_point():
    assert cr.absorb(terms(("C1",))) == terms(("C1",))


def test_absorb_drops_supersets():
    got = cr.absorb(terms(("C1", "C2"), ("C1",), ("C2",)))
    assert got == terms(("C1",), ("C2",))


def test_absorb_keep_maximal():
    got = cr.absorb(terms(("C1", "C2"), ("C1",), ("C2",), ("C3",)), keep="maximal")
    assert got == terms(("C1", "C2"), ("C3",))


def test_absorb_rejects_bad_keep():
    with pytest.raises(ValueError):
        cr.absorb(terms(("C1",)), keep="median")


def test_minimal_dnf_two_clause_product():
    cnf = MonotoneFormula("cnf", terms(("C1", "C3", "C5"), ("C2", "C4")), NAMES6)
    got = cr.minimal_dnf(cnf)
    assert got.mode == "dnf"
    assert named(got) == frozenset(
        frozenset(s)
        for s in [
            {"C1", "C2"},
            {"C1", "C4"},
            {"C2", "C3"},
            {"C3", "C4"},
            {"C2", "C5"},
            {"C4", "C5"},
        ]
    )


def test_minimal_dnf_empty_cnf_is_true():
    got = cr.minimal_dnf(MonotoneFormula("cnf", frozenset(), NAMES6))
    assert got.terms == frozenset({0})


def test_minimal_dnf_with_unit_clause():
    cnf = MonotoneFormula("cnf", terms(("C2", "C3"), ("C1",)), NAMES6)
    assert named(cr.minimal_dnf(cnf)) == frozenset(
        frozenset(s) for s in [{"C1", "C2"}, {"C1", "C3"}]
    )


def test_minimal_dnf_rejects_dnf_input():
    with pytest.raises(ValueError):
        cr.minimal_dnf(MonotoneFormula("dnf", terms(("C1",)), NAMES6))


def test_minimal_dnf_rejects_empty_clause():
    with pytest.raises(ValueError):
        cr.minimal_dnf(MonotoneFormula("cnf", frozenset({0}), NAMES6))


def test_filter_non_extensions_drops_strict_supersets():
    candidates = terms(("C1", "C6"), ("C5", "C6"), ("C1", "C2", "C6"))
    existing = terms(("C1", "C2"))
    got = cr.filter_non_extensions(candidates, existing)
    assert got == terms(("C1", "C6"), ("C5", "C6"))


def test_filter_non_extensions_empty_existing():
    candidates = terms(("C1",), ("C2", "C3"))
    assert cr.filter_non_extensions(candidates, frozenset()) == candidates


def test_filter_non_extensions_keeps_equal_terms():
    candidates = terms(("C1", "C2"))
    existing = terms(("C1", "C2"))
    assert cr.filter_non_extensions(candidates, existing) == candidates


def test_evaluate_modes():
    cnf = MonotoneFormula("cnf", terms(("C1", "C2"), ("C3",)), NAMES6)
    dnf = MonotoneFormula("dnf", terms(("C1", "C3"), ("C2", "C3")), NAMES6)
    for assignment in range(1 << 3):
        a = assignment  # over C1..C3
        expected = bool(a & 0b011) and bool(a & 0b100)
        assert cr.evaluate(cnf, a) == expected
        assert cr.evaluate(dnf, a) == expected


def test_term_blowup_guard():
    # Clauses {a_i, b_i} over disjoint pairs: the product has 2^k implicants.
    names = tuple(f"V{i}" for i in range(16))
    clauses = frozenset((1 << (2 * i)) | (1 << (2 * i + 1)) for i in range(8))
    cnf = MonotoneFormula("cnf", clauses, names)
    with pytest.raises(TermBlowup):
        cr.minimal_dnf(cnf, max_terms=100)
    assert len(cr.minimal_dnf(cnf).terms) == 256


def clause_strategy(n_vars: int):
    return st.integers(min_value=1, max_value=(1 << n_vars) - 1)


@settings(max_examples=150, deadline=None)
@given(st.data())
def test_minimal_dnf_matches_brute_force(data):
    n_vars = data.draw(st.integers(min_value=1, max_value=6))
    names = tuple(f"V{i}" for i in range(n_vars))
    clause_masks = data.draw(
        st.lists(clause_strategy(n_vars), min_size=0, max_size=6)
    )
    cnf = MonotoneFormula("cnf", frozenset(clause_masks), names)
    dnf = cr.minimal_dnf(cnf)

    clause_sets = [frozenset(to_indices(c)) for c in clause_masks]
    term_sets = [frozenset(to_indices(t)) for t in dnf.terms]
    assert set(term_sets) == minimal_hitting_sets(clause_sets, list(range(n_vars)))
    assert truth_table_equal(clause_sets, term_sets, list(range(n_vars)))
    # Antichain.
    for a in dnf.terms:
        for b in dnf.terms:
            assert a == b or a & ~b != 0


def test_minimal_dnf_invariant_under_presentation():
    rng = random.Random(5)
    names = tuple(f"V{i}" for i in range(8))
    for _ in range(40):
        clause_list = [rng.randint(1, 255) for _ in range(rng.randint(1, 6))]
        base = cr.minimal_dnf(MonotoneFormula("cnf", frozenset(clause_list), names))
        shuffled = list(clause_list)
        rng.shuffle(shuffled)
        duplicated = shuffled + shuffled
        assert (
            cr.minimal_dnf(MonotoneFormula("cnf", frozenset(duplicated), names)).terms
            == base.terms
        )
        pre_absorbed = cr.absorb(clause_list)
        assert (
            cr.minimal_dnf(MonotoneFormula("cnf", pre_absorbed, names)).terms
            == base.terms
        )


def test_names_mask_roundtrip():
    mask = cr.names_to_mask(NAMES6, ["C2", "C5"])
    assert mask == 0b10010
    assert cr.mask_to_names(NAMES6, mask) == ("C2", "C5")
