"""Incremental-versus-batch benchmark harness.

For every grid point (universe size x covering count x update kind) the
harness generates a seeded system plus an update, then times the full batch
recomputation on the updated system against the incremental path from a
prebuilt cache.  One warmup pass is discarded and the median of the timed
trials is reported.  Every row carries a result-equality flag; a mismatch
aborts the run with the offending system serialized, so an emitted table
never contains an unequal row.
"""

import json
import logging
import random
import statistics
import time
from dataclasses import dataclass
from typing import Callable, TextIO

from .engine import add_covering, batch_reducts, delete_covering
from .errors import EngineError, ParseError, ValidationError
from .io import serialize_system
from .model import CoveringDecisionSystem, fingerprint
from .synth import random_covering, random_system

log = logging.getLogger(__name__)

CSV_HEADER = "n,m,update,batch_s,incremental_s,speedup,equal"


@dataclass(frozen=True)
class BenchConfig:
    universe_sizes: tuple[int, ...] = (500, 1000, 2000)
    covering_counts: tuple[int, ...] = (20, 40)
    blocks_per_covering: int = 60
    decision_classes: int = 8
    seed: int = 2024
    trials: int = 3
    updates: tuple[str, ...] = ("add", "delete")

    @classmethod
    def from_json(cls, text: str) -> "BenchConfig":
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError(f"invalid JSON: {exc.msg}") from exc
        if not isinstance(data, dict):
            raise ParseError("bench config root must be an object")
        known = {
            "universe_sizes": tuple,
            "covering_counts": tuple,
            "blocks_per_covering": int,
            "decision_classes": int,
            "seed": int,
            "trials": int,
            "updates": tuple,
        }
        kwargs = {}
        for key, value in data.items():
            if key not in known:
                raise ParseError(f"unknown bench config field {key!r}")
            kwargs[key] = known[key](value) if known[key] is tuple else value
        cfg = cls(**kwargs)
        if cfg.trials < 1:
            raise ValidationError("trials must be at least 1")
        bad = set(cfg.updates) - {"add", "delete"}
        if bad:
            raise ValidationError(f"unknown update kinds: {sorted(bad)}")
        return cfg


@dataclass(frozen=True)
class BenchRow:
    n: int
    m: int
    update: str
    batch_s: float
    incremental_s: float
    speedup: float
    equal: bool

    def csv(self) -> str:
        return (
            f"{self.n},{self.m},{self.update},{self.batch_s:.6f},"
            f"{self.incremental_s:.6f},{self.speedup:.2f},{str(self.equal).lower()}"
        )


class BenchMismatch(EngineError):
    """Incremental and batch reduct sets diverged (should never happen)."""


def _generate(config: BenchConfig, n: int, m: int) -> CoveringDecisionSystem:
    rng = random.Random(f"{config.seed}:{n}:{m}")
    for attempt in range(3):
        try:
            return random_system(
                rng,
                n,
                m,
                config.blocks_per_covering,
                config.decision_classes,
                block_style="interval",
                contiguous_decision=True,
            )
        except ValidationError as exc:  # pragma: no cover - generator guards coverage
            log.warning("generation attempt %d failed: %s", attempt + 1, exc)
    raise EngineError(f"could not generate a valid system for n={n}, m={m}")


def _median_time(fn: Callable[[], object], trials: int) -> float:
    fn()  # warmup, discarded
    times = []
    for _ in range(trials):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return statistics.median(times)


def _measure_point(
    config: BenchConfig, n: int, m: int, update: str
) -> BenchRow:
    system = _generate(config, n, m)
    rng = random.Random(f"{config.seed}:{n}:{m}:{update}")
    _, cache = batch_reducts(system)

    if update == "add":
        extra = random_covering(rng, n, f"C{m + 1}", config.blocks_per_covering)
        updated = system.with_covering(extra)
        incremental = lambda: add_covering(system, cache, extra)
    else:
        victim = system.coverings[rng.randrange(m)].name
        updated = system.without_covering(victim)
        incremental = lambda: delete_covering(system, cache, victim)

    inc_set, _ = incremental()
    batch_set, _ = batch_reducts(updated)
    equal = inc_set.as_name_sets() == batch_set.as_name_sets()
    if not equal:
        raise BenchMismatch(
            "incremental and batch reducts differ for the system below "
            f"(update={update}):\n{serialize_system(system)}"
        )

    batch_s = _median_time(lambda: batch_reducts(updated), config.trials)
    incremental_s = _median_time(incremental, config.trials)
    speedup = batch_s / incremental_s if incremental_s > 0 else float("inf")
    return BenchRow(n, m, update, batch_s, incremental_s, speedup, equal)


def run_bench(config: BenchConfig, out: TextIO | None = None) -> list[BenchRow]:
    """Run the whole grid; write CSV rows to ``out`` as they complete."""
    rows = []
    if out is not None:
        print(CSV_HEADER, file=out, flush=True)
    for n in config.universe_sizes:
        for m in config.covering_counts:
            for update in config.updates:
                row = _measure_point(config, n, m, update)
                rows.append(row)
                if out is not None:
                    print(row.csv(), file=out, flush=True)
    return rows


def grid_fingerprints(config: BenchConfig) -> dict[tuple[int, int], str]:
    """Fingerprints of the generated base systems, keyed by (n, m)."""
    return {
        (n, m): fingerprint(_generate(config, n, m))
        for n in config.universe_sizes
        for m in config.covering_counts
    }
