import os

import hypothesis.strategies as st
from hypothesis import settings

# fixed fuzz budget, reproducible runs
settings.register_profile("fixed", max_examples=60, derandomize=True, deadline=None)
settings.load_profile("fixed")

# keep test runs hermetic: never touch the user cache
os.environ.setdefault("SYMDEC_NO_CACHE", "1")


@st.composite
def partitions(draw, max_part=12, max_len=8):
    parts = draw(st.lists(st.integers(1, max_part), max_size=max_len))
    return tuple(sorted(parts, reverse=True))


@st.composite
def partitions_of_size(draw, n):
    """A uniform-ish partition of exactly n (greedy random split)."""
    remaining = n
    parts = []
    while remaining:
        cap = parts[-1] if parts else remaining
        part = draw(st.integers(1, min(cap, remaining)))
        parts.append(part)
        remaining -= part
    return tuple(parts)
