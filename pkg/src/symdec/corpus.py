"""Regression corpus: frozen candidate sets and columns, one JSON object
per line, recomputed and compared exactly on demand.

Schema (versioned by "v"):
  {"v": 1, "p": 3, "core": "3,1,1", "k": 0, "w": 3,
   "members": ["8,4,2", ...],
   "columns": [{"label": "8,4,2", "status": "exact", "ones": [...]}, ...],
   "source": "golden block p=3"}
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path

from .blocks import candidate_set, synthesize_columns
from .partitions import format_partition, parse_partition

SCHEMA_VERSION = 1


@dataclass(frozen=True)
class CorpusEntry:
    p: int
    core: str
    k: int
    w: int
    members: tuple[str, ...]
    columns: tuple[dict, ...]
    source: str
    v: int = SCHEMA_VERSION

    def __post_init__(self):
        if not self.source:
            raise ValueError("source annotation must be nonempty")
        parse_partition(self.core)  # must round-trip

    def as_json(self) -> str:
        return json.dumps(
            {
                "v": self.v,
                "p": self.p,
                "core": self.core,
                "k": self.k,
                "w": self.w,
                "members": list(self.members),
                "columns": [dict(c) for c in self.columns],
                "source": self.source,
            }
        )


def entry_from_obj(obj: dict) -> CorpusEntry:
    return CorpusEntry(
        p=int(obj["p"]),
        core=str(obj["core"]),
        k=int(obj["k"]),
        w=int(obj["w"]),
        members=tuple(obj["members"]),
        columns=tuple(obj["columns"]),
        source=str(obj["source"]),
        v=int(obj.get("v", SCHEMA_VERSION)),
    )


def corpus_load(path: str | Path) -> list[CorpusEntry]:
    """Parse a JSON-lines corpus file; errors name the offending line."""
    entries = []
    with open(path, encoding="utf-8") as handle:
        for lineno, line in enumerate(handle, start=1):
            line = line.strip()
            if not line:
                continue
            try:
                obj = json.loads(line)
                entries.append(entry_from_obj(obj))
            except (json.JSONDecodeError, KeyError, TypeError, ValueError) as exc:
                raise ValueError(f"{path}:{lineno}: bad corpus entry: {exc}") from exc
    return entries


def default_corpus_path() -> Path:
    return Path(str(resources.files("symdec") / "data" / "corpus.jsonl"))


def compute_entry(p: int, core, k: int, source: str) -> CorpusEntry:
    """Recompute the frozen fields for (p, core, k) from scratch."""
    cand = candidate_set(core, k, p)
    cols = synthesize_columns(core, k, p)
    return CorpusEntry(
        p=p,
        core=format_partition(core),
        k=k,
        w=cand.w,
        members=tuple(format_partition(m) for m in cand.members),
        columns=tuple(
            {
                "label": format_partition(c.label),
                "status": c.status,
                "ones": [format_partition(x) for x in c.ones],
            }
            for c in cols
        ),
        source=source,
    )


def corpus_check(entries: list[CorpusEntry]) -> dict:
    """Recompute every entry and compare exactly."""
    failures = []
    for i, entry in enumerate(entries):
        fresh = compute_entry(entry.p, parse_partition(entry.core), entry.k, entry.source)
        diffs = []
        if fresh.w != entry.w:
            diffs.append(f"w: expected {entry.w}, got {fresh.w}")
        if fresh.members != entry.members:
            diffs.append(f"members: expected {list(entry.members)}, got {list(fresh.members)}")
        if fresh.columns != entry.columns:
            diffs.append("columns differ")
        if diffs:
            failures.append(
                {
                    "entry": i,
                    "p": entry.p,
                    "core": entry.core,
                    "k": entry.k,
                    "source": entry.source,
                    "diffs": diffs,
                }
            )
    return {"entries": len(entries), "failures": failures, "ok": not failures}
