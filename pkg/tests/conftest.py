from itertools import product

from hypothesis import settings, strategies as st

from rigidtab.tableaux_core import staircase

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


@st.composite
def strict_splits(draw, max_m=8, k=None):
    """A k-tuple of strict partitions whose parts merge to staircase(m)."""
    m = draw(st.integers(min_value=0, max_value=max_m))
    k = draw(st.integers(min_value=1, max_value=4)) if k is None else k
    labels = draw(st.lists(st.integers(min_value=0, max_value=k - 1), min_size=m, max_size=m))
    rows = [[] for _ in range(k)]
    for part, r in zip(staircase(m), labels):
        rows[r].append(part)
    return tuple(tuple(r) for r in rows)


@st.composite
def partitions_st(draw, max_size=9):
    n = draw(st.integers(min_value=0, max_value=max_size))
    parts = []
    rest = n
    while rest:
        p = draw(st.integers(min_value=1, max_value=min(rest, parts[-1] if parts else rest)))
        parts.append(p)
        rest -= p
    return tuple(parts)


def all_splits(m, k):
    for labels in product(range(k), repeat=m):
        rows = [[] for _ in range(k)]
        for part, r in zip(staircase(m), labels):
            rows[r].append(part)
        yield tuple(tuple(r) for r in rows)


def pytest_terminal_summary(terminalreporter):
    import sys
    mod = sys.modules.get("test_acceptance")
    results = getattr(mod, "RESULTS", None)
    if results:
        terminalreporter.section("acceptance criteria")
        for num in sorted(results):
            terminalreporter.write_line(results[num])
