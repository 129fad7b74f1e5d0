"""Exit criteria. Each test is one criterion; the summary hook in conftest
prints a PASS/FAIL line for each."""

import gc
import random
import time
import tracemalloc

from concord import oracle
from concord.index import build_position_index, build_truth_table
from concord.kernel import distance, kappa_set, max_common_count
from concord.lcs import all_lcs, psi_lengths
from concord.model import BucketOrdering, dedupe, ordering_set
from concord.scs import smallest_covering_set

from conftest import random_ordering


def words(seqs):
    return {"".join(s) for s in seqs}


def test_criterion_01_table_two():
    """Table II per-symbol counts and kappa, exact, under 1 ms"""
    X = ordering_set("abcde", "abdce", "bdce")
    r = kappa_set(X)
    assert r.per_symbol == (0, 1, 2, 2, 6)
    assert r.kappa == 11
    best = float("inf")
    for _ in range(50):
        t = time.perf_counter()
        kappa_set(X)
        best = min(best, time.perf_counter() - t)
    assert best < 1e-3, f"{best * 1e3:.3f} ms"


def test_criterion_02_example_two():
    """Example 2 psi, llcs and lcs set"""
    X = ordering_set("abcde", "abdce", "bdce")
    T = build_truth_table(build_position_index(X))
    psi = psi_lengths(T)
    assert psi.psi == (0, 1, 2, 2, 3)
    assert psi.llcs == 3
    assert words(all_lcs(X).sequences) == {"bce", "bde"}


def test_criterion_03_example_three():
    """Example 3 psi, lcs, covering set and the 23-element common-subsequence listing"""
    X = ordering_set("abcdef", "acfbde", "abdcfe")
    T = build_truth_table(build_position_index(X))
    assert psi_lengths(T).psi == (1, 2, 2, 3, 4, 3)
    assert words(all_lcs(X).sequences) == {"abde"}
    assert words(smallest_covering_set(X).sequences) == {"abde", "ace", "acf"}
    listing = set("a b c d e f ab ac ad ae af bd be ce cf de abd abe ace acf ade bde abde".split())
    S = oracle.intersect_all(X)
    assert len(S) == 23
    assert words(S) == listing


def test_criterion_04_covering_examples():
    """Covering sets of {abcd, adbc} and {abcde, eadbc, aedbc}"""
    assert words(smallest_covering_set(ordering_set("abcd", "adbc")).sequences) == {"abc", "ad"}
    assert words(smallest_covering_set(ordering_set("abcde", "eadbc", "aedbc")).sequences) == {"abc", "ad", "e"}


def test_criterion_05_table_one():
    """Table I lcs sets and llcs; kappa of the union below both parts"""
    X = ["adbc", "dacb"]
    Y = ["abcd", "cadb"]
    sets = {"X": ordering_set(*X), "Y": ordering_set(*Y), "XuY": ordering_set(*X, *Y)}
    lcs = {k: all_lcs(v) for k, v in sets.items()}
    kappa = {k: kappa_set(v).kappa for k, v in sets.items()}
    for k, v in sets.items():
        assert kappa[k] == len(oracle.intersect_all(v))
        S = oracle.intersect_all(v)
        ell = max(len(s) for s in S)
        assert set(lcs[k].sequences) == {s for s in S if len(s) == ell}
    assert kappa["XuY"] < min(kappa["X"], kappa["Y"])
    assert [lcs[k].llcs for k in ("X", "Y", "XuY")] == [2, 2, 2]
    assert words(lcs["Y"].sequences) == {"ab", "ad", "cd"}
    assert words(lcs["XuY"].sequences) == {"ab"}
    found = words(lcs["X"].sequences)
    assert found == {"ab", "dc", "ac"}, f"lcs set of X is {sorted(found)}"


def test_criterion_06_f_20_7():
    """f(20, 7) = 1458"""
    assert max_common_count(20, 7) == 1458


def test_criterion_07_oracle_equivalence():
    """1200 random instances: kappa, lcs set and covering set equal the oracle; under 60 s"""
    rng = random.Random(7)
    start = time.perf_counter()
    failures = []
    cases = 0
    for tie_p in (0.0, 0.3):
        for _ in range(600):
            n = rng.randint(1, 8)
            N = rng.randint(1, 4)
            X = dedupe([random_ordering(rng, "abcdefgh"[:n], tie_p, 2) for _ in range(N)])
            S = oracle.intersect_all(X)
            ell = max((len(s) for s in S), default=0)
            if kappa_set(X).kappa != len(S):
                failures.append(("kappa", X))
            if set(all_lcs(X).sequences) != {s for s in S if len(s) == ell}:
                failures.append(("lcs", X))
            if set(smallest_covering_set(X).sequences) != oracle.maximal_elements(S):
                failures.append(("scs", X))
            cases += 1
    elapsed = time.perf_counter() - start
    assert cases >= 1000
    assert not failures, [(kind, [x.format() for x in X]) for kind, X in failures[:5]]
    assert elapsed < 60, f"{elapsed:.1f} s"


def test_criterion_08_axiom():
    """300 random (X, Y) pairs: kappa(X) >= kappa(X u Y), equality iff Y is a subset of X"""
    rng = random.Random(8)
    monotone_failures = []
    iff_failures = []
    for _ in range(300):
        n = rng.randint(2, 6)
        alphabet = "abcdef"[:n]
        X = dedupe([random_ordering(rng, alphabet) for _ in range(rng.randint(1, 3))])
        Y = [random_ordering(rng, alphabet) for _ in range(rng.randint(1, 3))]
        union = dedupe(list(X.orderings) + Y)
        kx = len(oracle.intersect_all(X))
        ku = len(oracle.intersect_all(union))
        assert kx == kappa_set(X).kappa and ku == kappa_set(union).kappa
        if kx < ku:
            monotone_failures.append(X)
        if (kx == ku) != all(y in X.orderings for y in Y):
            iff_failures.append(([x.format() for x in X], [y.format() for y in Y], kx))
    assert not monotone_failures
    assert not iff_failures, f"{len(iff_failures)} pairs break the iff, e.g. X, Y, kappa = {iff_failures[0]}"


def test_criterion_09_triangle():
    """600 random permutation triples (n <= 10) satisfy the triangle inequality within 1e-9"""
    rng = random.Random(9)
    for _ in range(600):
        n = rng.randint(1, 10)
        x, y, z = (random_ordering(rng, "abcdefghij"[:n]) for _ in range(3))
        dxy, dyz, dxz = distance(x, y), distance(y, z), distance(x, z)
        assert dxz <= dxy + dyz + 1e-9
        assert dxy <= dxz + dyz + 1e-9
        assert dyz <= dxy + dxz + 1e-9


def _permutation_set(N, n, seed):
    rng = random.Random(seed)
    symbols = [f"s{i}" for i in range(n)]
    out = []
    for _ in range(N):
        rng.shuffle(symbols)
        out.append(BucketOrdering.from_symbols(list(symbols)))
    return dedupe(out)


def _best_time(X, repeats=5):
    best = float("inf")
    for _ in range(repeats):
        gc.collect()
        t = time.perf_counter()
        kappa_set(X)
        best = min(best, time.perf_counter() - t)
    return best


def test_criterion_10_complexity():
    """N=50, n=500 completes; doubling n costs at most 5x time; peak memory within 4x of the tables"""
    N, n = 50, 500
    small = _permutation_set(N, n, 10)
    large = _permutation_set(N, 2 * n, 11)
    t_small = _best_time(small)
    t_large = _best_time(large)
    assert t_large / t_small <= 5.0, f"ratio {t_large / t_small:.2f}"

    # int64 position index plus boolean truth table
    predicted = 8 * N * n + n * n
    gc.collect()
    tracemalloc.start()
    kappa_set(small)
    _, peak = tracemalloc.get_traced_memory()
    tracemalloc.stop()
    assert peak <= 4 * predicted, f"peak {peak} bytes vs predicted {predicted}"
