"""Maintain the reduct set incrementally while coverings come and go.

Starting from the consistent 8-object system, we add a sixth covering and
delete the fifth, each time reusing the cached related family instead of
recomputing from scratch, and confirm the result matches a full batch run.
"""

import covreduct as cr


def obj(*labels):
    return [x - 1 for x in labels]


system = cr.build_system(
    8,
    [
        ("C1", [obj(1, 2), obj(2, 3, 4), obj(3), obj(4), obj(5, 6), obj(6, 7, 8)]),
        ("C2", [obj(1, 3, 4), obj(2, 3), obj(4, 5), obj(5, 6), obj(6), obj(7, 8)]),
        ("C3", [obj(1), obj(1, 2, 3), obj(2, 3), obj(3, 4, 5, 6), obj(5, 7, 8)]),
        ("C4", [obj(1, 2, 4), obj(2, 3), obj(4, 5, 6), obj(6), obj(7, 8)]),
        ("C5", [obj(1, 2, 3), obj(4), obj(5, 6), obj(5, 6, 8), obj(4, 7, 8)]),
    ],
    [obj(1, 2, 3), obj(4, 5, 6), obj(7, 8)],
)

reducts, cache = cr.batch_reducts(system)
print("base reducts: ", [",".join(r) for r in reducts.sorted_name_lists()])

# --- add a covering ---------------------------------------------------------
c6 = cr.make_covering(
    "C6", [obj(1, 4, 5), obj(2), obj(3, 4, 6), obj(3, 5, 7), obj(7, 8)], 8
)
plus, cache_plus = cr.add_covering(system, cache, c6)
print("after add C6: ", [",".join(r) for r in plus.sorted_name_lists()])
print("  new reducts:", [",".join(sorted(r)) for r in sorted(map(sorted, plus.as_name_sets() - reducts.as_name_sets()))])

batch_plus, _ = cr.batch_reducts(system.with_covering(c6))
print("  matches batch recomputation:", plus.as_name_sets() == batch_plus.as_name_sets())

# --- delete a covering ------------------------------------------------------
minus, cache_minus = cr.delete_covering(system, cache, "C5")
print("after del C5: ", [",".join(r) for r in minus.sorted_name_lists()])
batch_minus, _ = cr.batch_reducts(system.without_covering("C5"))
print("  matches batch recomputation:", minus.as_name_sets() == batch_minus.as_name_sets())

# --- add then delete returns to the start -----------------------------------
grown = system.with_covering(c6)
back, cache_back = cr.delete_covering(grown, cache_plus, "C6")
print("add C6 then del C6 restores the base reduct set:",
      back.as_name_sets() == reducts.as_name_sets())

# The cache is stamped with a system fingerprint, so using it against the
# wrong system fails loudly rather than silently recomputing.
try:
    cr.delete_covering(grown, cache, "C1")
except cr.StaleCache as exc:
    print("stale cache rejected:", exc)
