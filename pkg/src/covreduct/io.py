"""Reading and writing systems, caches, and tabular coverization.

System document layout (JSON, extension ``.cds.json``)::

    {
      "universe_size": 8,
      "object_names": ["x1", ...],          # optional
      "coverings": [{"name": "C1", "blocks": [[0, 1], [2], ...]}, ...],
      "decision": [[0, 1, 2], [3, 4, 5], ...]
    }

Indices are 0-based on the wire.  Canonical serialization sorts indices
inside each block, blocks lexicographically within a covering, and keeps
coverings in declaration order, so equal systems produce byte-equal
documents.

Coverization turns a table (columns of strings) into a system: categorical
columns become one block per distinct value, numeric columns a tolerance
covering (per object, the block of rows within epsilon times the column
range), and the decision column a partition by value.
"""

import json
import logging
from dataclasses import dataclass, field
from typing import TYPE_CHECKING, Any, Mapping, Sequence, Union

if TYPE_CHECKING:
    from .engine import ReductionCache

from .bitset import to_indices
from .errors import ParseError, ValidationError
from .model import (
    Covering,
    CoveringDecisionSystem,
    build_system,
    make_covering,
)

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class SystemDocument:
    universe_size: int
    coverings: tuple[tuple[str, tuple[tuple[int, ...], ...]], ...]
    decision: tuple[tuple[int, ...], ...]
    object_names: tuple[str, ...] | None = None


def _expect(cond: bool, msg: str) -> None:
    if not cond:
        raise ParseError(msg)


def _index_list(raw: Any, where: str) -> tuple[int, ...]:
    _expect(isinstance(raw, list), f"{where}: expected a list of indices")
    for v in raw:
        _expect(isinstance(v, int) and not isinstance(v, bool), f"{where}: bad index {v!r}")
    return tuple(raw)


def parse_document(text: str) -> SystemDocument:
    """Parse a system document, reporting the offending field on error."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}") from exc
    _expect(isinstance(data, dict), "document root must be an object")
    _expect(isinstance(data.get("universe_size"), int), "universe_size: expected an integer")
    raw_covs = data.get("coverings")
    _expect(isinstance(raw_covs, list), "coverings: expected a list")
    coverings = []
    for i, entry in enumerate(raw_covs):
        where = f"coverings[{i}]"
        _expect(isinstance(entry, dict), f"{where}: expected an object")
        _expect(isinstance(entry.get("name"), str), f"{where}.name: expected a string")
        raw_blocks = entry.get("blocks")
        _expect(isinstance(raw_blocks, list), f"{where}.blocks: expected a list")
        blocks = tuple(
            _index_list(b, f"{where}.blocks[{k}]") for k, b in enumerate(raw_blocks)
        )
        coverings.append((entry["name"], blocks))
    raw_decision = data.get("decision")
    _expect(isinstance(raw_decision, list), "decision: expected a list")
    decision = tuple(
        _index_list(c, f"decision[{j}]") for j, c in enumerate(raw_decision)
    )
    names = data.get("object_names")
    if names is not None:
        _expect(
            isinstance(names, list) and all(isinstance(s, str) for s in names),
            "object_names: expected a list of strings",
        )
        _expect(
            len(names) == data["universe_size"],
            "object_names: length must equal universe_size",
        )
        names = tuple(names)
    return SystemDocument(data["universe_size"], tuple(coverings), decision, names)


def load_system(text: str) -> CoveringDecisionSystem:
    """Parse and validate a system document."""
    doc = parse_document(text)
    return build_system(doc.universe_size, doc.coverings, doc.decision)


def serialize_system(
    system: CoveringDecisionSystem, object_names: Sequence[str] | None = None
) -> str:
    """Canonical document for a system (stable bytes for equal systems)."""
    doc: dict[str, Any] = {"universe_size": system.universe_size}
    if object_names is not None:
        doc["object_names"] = list(object_names)
    doc["coverings"] = [
        {"name": c.name, "blocks": sorted(to_indices(b) for b in c.blocks)}
        for c in system.coverings
    ]
    doc["decision"] = sorted(to_indices(cls) for cls in system.decision.classes)
    return json.dumps(doc, indent=2) + "\n"


def parse_covering(text: str, universe_size: int) -> Covering:
    """Parse a single-covering document: {"name": ..., "blocks": [[...], ...]}."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}") from exc
    _expect(isinstance(data, dict), "covering document root must be an object")
    _expect(isinstance(data.get("name"), str), "name: expected a string")
    raw_blocks = data.get("blocks")
    _expect(isinstance(raw_blocks, list), "blocks: expected a list")
    blocks = [_index_list(b, f"blocks[{k}]") for k, b in enumerate(raw_blocks)]
    return make_covering(data["name"], blocks, universe_size)


# --- coverization ----------------------------------------------------------


class NonNumericForTolerance(ValidationError):
    pass


@dataclass(frozen=True)
class Categorical:
    pass


@dataclass(frozen=True)
class Tolerance:
    epsilon: float

    def __post_init__(self) -> None:
        if not 0 < self.epsilon <= 1:
            raise ValidationError(f"tolerance epsilon must be in (0, 1], got {self.epsilon}")


Rule = Union[Categorical, Tolerance]


@dataclass(frozen=True)
class CoverizationSpec:
    """Per-column coverization rules; unlisted columns default to categorical."""

    decision_column: str
    rules: Mapping[str, Rule] = field(default_factory=dict)


def _categorical_blocks(values: Sequence[str]) -> list[list[int]]:
    groups: dict[str, list[int]] = {}
    for i, v in enumerate(values):
        groups.setdefault(v, []).append(i)
    return list(groups.values())


def _tolerance_blocks(column: str, values: Sequence[str], epsilon: float) -> list[list[int]]:
    try:
        nums = [float(v) for v in values]
    except ValueError as exc:
        raise NonNumericForTolerance(f"column {column!r}: {exc}") from exc
    if not all(n == n and abs(n) != float("inf") for n in nums):
        raise NonNumericForTolerance(f"column {column!r} contains non-finite values")
    span = max(nums) - min(nums)
    if span == 0:
        log.warning("column %r is constant; tolerance covering collapses to one block", column)
        return [list(range(len(nums)))]
    threshold = epsilon * span
    blocks: list[list[int]] = []
    seen: set[tuple[int, ...]] = set()
    for x, vx in enumerate(nums):
        members = tuple(y for y, vy in enumerate(nums) if abs(vx - vy) <= threshold)
        if members not in seen:
            seen.add(members)
            blocks.append(list(members))
    return blocks


def coverize(
    columns: Mapping[str, Sequence[str]], spec: CoverizationSpec
) -> CoveringDecisionSystem:
    """Turn table columns into a covering decision system.

    One covering per non-decision column, named after it; the decision
    partition groups rows by decision-column value in first-appearance
    order.  Deterministic for a fixed (table, spec).
    """
    if spec.decision_column not in columns:
        raise ValidationError(f"decision column {spec.decision_column!r} not in table")
    n_rows = {len(v) for v in columns.values()}
    if len(n_rows) != 1:
        raise ValidationError("table columns have unequal lengths")
    n = n_rows.pop()
    if n == 0:
        raise ValidationError("table has no rows")
    coverings = []
    for name, values in columns.items():
        if name == spec.decision_column:
            continue
        rule = spec.rules.get(name, Categorical())
        if isinstance(rule, Tolerance):
            blocks = _tolerance_blocks(name, values, rule.epsilon)
        else:
            blocks = _categorical_blocks(values)
        coverings.append((name, blocks))
    decision = _categorical_blocks(columns[spec.decision_column])
    return build_system(n, coverings, decision)


def parse_coverization_spec(text: str) -> CoverizationSpec:
    """Parse a spec document: {"decision": "col", "rules": {"col": "categorical" | {"tolerance": 0.5}}}."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}") from exc
    _expect(isinstance(data, dict), "spec root must be an object")
    _expect(isinstance(data.get("decision"), str), "decision: expected a column name")
    rules: dict[str, Rule] = {}
    for col, raw in data.get("rules", {}).items():
        if raw == "categorical":
            rules[col] = Categorical()
        elif isinstance(raw, dict) and isinstance(raw.get("tolerance"), (int, float)):
            rules[col] = Tolerance(float(raw["tolerance"]))
        else:
            raise ParseError(f"rules[{col!r}]: expected 'categorical' or {{'tolerance': eps}}")
    return CoverizationSpec(decision_column=data["decision"], rules=rules)


# --- reduction caches ------------------------------------------------------


def serialize_cache(cache: "ReductionCache") -> str:
    rel = cache.related
    doc = {
        "fingerprint": cache.fingerprint,
        "consistent": cache.consistent,
        "covering_names": list(rel.covering_names),
        "positive": to_indices(cache.positive),
        "related": [to_indices(mask) for mask in rel.r],
        "reducts": [to_indices(r) for r in sorted(cache.reducts.reducts)],
    }
    return json.dumps(doc, indent=2) + "\n"


def load_cache(text: str) -> "ReductionCache":
    from .engine import ReductSet, ReductionCache
    from .related import RelatedFamily

    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}") from exc
    _expect(isinstance(data, dict), "cache root must be an object")
    for key in ("fingerprint", "consistent", "covering_names", "positive", "related", "reducts"):
        _expect(key in data, f"cache is missing field {key!r}")
    names = tuple(data["covering_names"])
    _expect(all(isinstance(s, str) for s in names), "covering_names: expected strings")
    r = tuple(
        _as_mask(_index_list(row, f"related[{x}]")) for x, row in enumerate(data["related"])
    )
    related = RelatedFamily(len(r), names, r)
    reducts = frozenset(
        _as_mask(_index_list(row, f"reducts[{k}]")) for k, row in enumerate(data["reducts"])
    )
    return ReductionCache(
        fingerprint=data["fingerprint"],
        consistent=bool(data["consistent"]),
        related=related,
        positive=_as_mask(_index_list(data["positive"], "positive")),
        reducts=ReductSet(names, reducts),
    )


def _as_mask(indices: Sequence[int]) -> int:
    m = 0
    for i in indices:
        m |= 1 << i
    return m
