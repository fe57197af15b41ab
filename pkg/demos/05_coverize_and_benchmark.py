"""From a plain table to coverings, and incremental-vs-batch timings.

Coverization turns table columns into coverings (categorical columns
partition the rows; numeric columns get tolerance blocks).  The benchmark
harness then compares a full batch recomputation against the incremental
update on seeded synthetic systems.
"""

import io
import sys

import covreduct as cr
from covreduct.bench import BenchConfig, run_bench
from covreduct.bitset import to_indices

columns = {
    "temperature": ["36.5", "37.1", "38.4", "39.0", "36.8", "38.2"],
    "pressure": ["low", "low", "high", "high", "normal", "high"],
    "outcome": ["ok", "ok", "ill", "ill", "ok", "ill"],
}
spec = cr.CoverizationSpec(
    decision_column="outcome",
    rules={"temperature": cr.Tolerance(0.3)},
)
system = cr.coverize(columns, spec)
print("coverized system:", system.universe_size, "objects,",
      [c.name for c in system.coverings], "coverings")
for cov in system.coverings:
    print(f"  {cov.name}: blocks {[to_indices(b) for b in cov.blocks]}")
reducts, _ = cr.batch_reducts(system)
print("reducts:", [",".join(r) for r in reducts.sorted_name_lists()])
print()

# A small benchmark grid (the acceptance suite runs the full-size one).
config = BenchConfig(
    universe_sizes=(200, 400),
    covering_counts=(10, 20),
    blocks_per_covering=20,
    decision_classes=4,
    seed=7,
    trials=3,
)
print("benchmark (median seconds per update):")
buffer = io.StringIO()
rows = run_bench(config, buffer)
sys.stdout.write(buffer.getvalue())
best = max(rows, key=lambda r: r.speedup)
print(f"\nbest speedup: {best.speedup:.1f}x at n={best.n}, m={best.m} ({best.update})")
