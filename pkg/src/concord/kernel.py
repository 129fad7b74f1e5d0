"""Common-subsequence counting kernels and the measures derived from them."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .index import (
    TruthTable,
    build_position_index,
    build_truth_table,
    iter_truth_rows,
)
from .model import BucketOrdering, OrderingSet


@dataclass(frozen=True)
class ConcordanceReport:
    kappa: int
    per_symbol: tuple[int, ...]
    normalized: float
    llcs: int
    symbols: tuple[str, ...] = ()
    n: int = 0
    N: int = 0

    def to_dict(self) -> dict:
        return {
            "kappa": str(self.kappa),
            "per_symbol": [str(v) for v in self.per_symbol],
            "normalized": self.normalized,
            "llcs": self.llcs,
            "n": self.n,
            "N": self.N,
        }


def kappa_pair(x: BucketOrdering, y: BucketOrdering) -> int:
    """Number of non-empty common subsequences of two orderings.

    A sequence counts when its symbols occur in both orderings with strictly
    increasing bucket labels, so a tied pair only contributes its singletons.
    Runs in O(|x|^2) after an O(|x| + |y|) lookup build.
    """
    ylab = y.label_map()
    xlab = x.labels
    pos = [ylab.get(s) for s in x.symbols]
    counts = [0] * len(pos)
    for m, pm in enumerate(pos):
        if pm is None:
            continue
        total = 1
        lm = xlab[m]
        for j in range(m):
            pj = pos[j]
            if pj is not None and pj < pm and xlab[j] < lm:
                total += counts[j]
        counts[m] = total
    return sum(counts)


def self_kappa(x: BucketOrdering) -> int:
    """kappa_pair(x, x) in closed form: pick at most one symbol per bucket."""
    return math.prod(1 + len(b) for b in x.buckets) - 1


def _accumulate(rows, m: int) -> list[int]:
    per_symbol = [0] * m
    for j, diag, row in rows:
        if not diag:
            continue
        total = 1
        for k in np.flatnonzero(row):
            total += per_symbol[k]
        per_symbol[j] = total
    return per_symbol


def per_symbol_counts(T: TruthTable) -> list[int]:
    """Common subsequences ending on each reference symbol."""
    E = T.entries
    rows = ((j, bool(E[j, j]), E[j, :j]) for j in range(T.m))
    return _accumulate(rows, T.m)


def kappa_set(X: OrderingSet, low_memory: bool = False) -> ConcordanceReport:
    """Concordance counts for a whole ordering set.

    ``low_memory`` derives each truth-table row from the position index on
    the fly instead of materializing the m x m table.
    """
    from .lcs import psi_lengths

    I = build_position_index(X)
    m = I.shape[1]
    if low_memory:
        per_symbol, psi = _streamed(I, m)
        llcs = max(psi, default=0)
    else:
        T = build_truth_table(I)
        per_symbol = per_symbol_counts(T)
        llcs = psi_lengths(T).llcs
    kappa = sum(per_symbol)
    return ConcordanceReport(
        kappa=kappa,
        per_symbol=tuple(per_symbol),
        normalized=_normalize(kappa, X),
        llcs=llcs,
        symbols=I.symbols,
        n=m,
        N=len(X),
    )


def _streamed(I, m):
    per_symbol = [0] * m
    psi = [0] * m
    for j, diag, row in iter_truth_rows(I):
        if not diag:
            continue
        idx = np.flatnonzero(row)
        per_symbol[j] = 1 + sum(per_symbol[k] for k in idx)
        psi[j] = 1 + max((psi[k] for k in idx), default=0)
    return per_symbol, psi


def _normalize(kappa: int, X: OrderingSet) -> float:
    if kappa == 0:
        return 0.0
    selfs = [self_kappa(x) for x in X]
    # logs keep huge exact counts out of float overflow
    log_val = math.log(kappa) - sum(math.log(s) for s in selfs) / len(selfs)
    return min(1.0, math.exp(log_val))


def normalized_concordance(X: OrderingSet) -> float:
    return kappa_set(X).normalized


def _sqrt_int(v: int) -> float:
    if v <= 0:
        return 0.0
    try:
        return math.sqrt(v)
    except OverflowError:
        return math.exp(0.5 * math.log(v))


def squared_distance(x: BucketOrdering, y: BucketOrdering) -> int:
    return self_kappa(x) + self_kappa(y) - 2 * kappa_pair(x, y)


def distance(x: BucketOrdering, y: BucketOrdering) -> float:
    """Euclidean distance between the subsequence feature vectors of x and y."""
    return _sqrt_int(squared_distance(x, y))


def distance_matrix(X: OrderingSet) -> list[list[float]]:
    selfs = [self_kappa(x) for x in X]
    N = len(X)
    D = [[0.0] * N for _ in range(N)]
    for a in range(N):
        for b in range(a + 1, N):
            d = _sqrt_int(selfs[a] + selfs[b] - 2 * kappa_pair(X[a], X[b]))
            D[a][b] = D[b][a] = d
    return D


def outlier_scores(X: OrderingSet) -> list[tuple[str, float]]:
    """Mean distance of every judge to the others, largest first."""
    N = len(X)
    if N < 2:
        raise ValueError("need at least two judges")
    D = distance_matrix(X)
    scores = [(jid, sum(D[a]) / (N - 1)) for a, jid in enumerate(X.judge_ids())]
    return sorted(scores, key=lambda p: -p[1])


def max_common_count(n: int, k: int) -> int:
    """Upper bound on the number of k-long common subsequences of two n-long orderings."""
    if k < 1 or k > n:
        raise ValueError(f"need 1 <= k <= n, got n={n}, k={k}")
    return math.prod((n + i) // k for i in range(k))
