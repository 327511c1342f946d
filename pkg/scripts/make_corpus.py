"""Regenerate the shipped regression corpus (src/symdec/data/corpus.jsonl).

Covers the three golden blocks plus the tail-core sweep for p in {3,5,7},
e <= 4, all k; asserts the sweep's size law before freezing anything.
"""

import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from symdec.abacus import tail_core
from symdec.corpus import compute_entry
from symdec.partitions import parse_partition

GOLDEN = [
    (3, "3,1,1", 0, "golden block p=3 core 3,1,1 k=0"),
    (7, "4,4,4", 6, "golden block p=7 core 4,4,4 k=6"),
    (5, "5,4,2,1^4", 6, "golden block p=5 core 5,4,2,1^4 k=6"),
]


def main():
    out = Path(__file__).resolve().parents[1] / "src" / "symdec" / "data" / "corpus.jsonl"
    lines = []
    for p, core_text, k, source in GOLDEN:
        entry = compute_entry(p, parse_partition(core_text), k, source)
        lines.append(entry.as_json())
    for p in (3, 5, 7):
        for e in range(5):
            gamma = tail_core(p, e)
            for k in range(e + 2):
                entry = compute_entry(p, gamma, k, f"sweep p={p} e={e} k={k}")
                assert entry.w == e + 1 - k, (p, e, k, entry.w)
                assert len(entry.members) == e + 2 - k, (p, e, k)
                lines.append(entry.as_json())
    out.write_text("\n".join(lines) + "\n", encoding="utf-8")
    print(f"wrote {len(lines)} entries to {out}")


if __name__ == "__main__":
    main()
