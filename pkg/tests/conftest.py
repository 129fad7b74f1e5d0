import random

import pytest
from hypothesis import strategies as st

from concord.model import BucketOrdering, dedupe

ALPHABET = "abcdefghij"


def random_ordering(rng: random.Random, alphabet: str, tie_p: float = 0.0, drop: int = 0) -> BucketOrdering:
    syms = list(alphabet)
    rng.shuffle(syms)
    if drop:
        syms = syms[: len(syms) - rng.randint(0, drop)] or syms[:1]
    buckets: list[list[str]] = []
    for s in syms:
        if buckets and rng.random() < tie_p:
            buckets[-1].append(s)
        else:
            buckets.append([s])
    return BucketOrdering(tuple(tuple(b) for b in buckets))


def random_set(rng, n_max=8, N_max=4, tie_p=0.0, drop=2):
    n = rng.randint(1, n_max)
    N = rng.randint(1, N_max)
    alphabet = ALPHABET[:n]
    return dedupe([random_ordering(rng, alphabet, tie_p, drop) for _ in range(N)])


@st.composite
def bucket_orderings(draw, alphabet=ALPHABET[:7], allow_ties=True, min_size=1):
    syms = draw(st.permutations(list(alphabet)))
    k = draw(st.integers(min_size, len(syms)))
    syms = syms[:k]
    buckets: list[list[str]] = []
    for s in syms:
        if buckets and allow_ties and draw(st.booleans()):
            buckets[-1].append(s)
        else:
            buckets.append([s])
    return BucketOrdering(tuple(tuple(b) for b in buckets))


@st.composite
def ordering_sets(draw, max_N=4, alphabet=ALPHABET[:7], allow_ties=True):
    xs = draw(st.lists(bucket_orderings(alphabet, allow_ties), min_size=1, max_size=max_N))
    return dedupe(xs)


@pytest.fixture
def rng():
    return random.Random(20260419)


_criteria: dict[str, tuple[str, str]] = {}


def pytest_runtest_logreport(report):
    if "test_acceptance.py::test_criterion_" not in report.nodeid:
        return
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        name = report.nodeid.split("::")[-1]
        _criteria[name] = ("PASS" if report.outcome == "passed" else "FAIL", name)


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    from pathlib import Path
    import importlib.util

    spec = importlib.util.spec_from_file_location("_acc", Path(__file__).with_name("test_acceptance.py"))
    mod = importlib.util.module_from_spec(spec)
    spec.loader.exec_module(mod)
    terminalreporter.section("acceptance criteria")
    for name in sorted(_criteria):
        status, _ = _criteria[name]
        number = int(name.split("_")[2])
        doc = (getattr(mod, name).__doc__ or "").strip()
        terminalreporter.write_line(f"criterion {number:2d}: {status}  {doc}")
