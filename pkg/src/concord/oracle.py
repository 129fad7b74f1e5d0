"""Brute-force reference: enumerate subsequences and intersect them.

Shares nothing with the counting and covering code on purpose; it exists so
that agreement with the fast path means something.
"""

from __future__ import annotations

from itertools import combinations

from .model import BucketOrdering, OrderingSet

MAX_LENGTH = 20


def enumerate_subsequences(x: BucketOrdering) -> set[tuple[str, ...]]:
    """All non-empty subsequences; tied symbols never appear together."""
    flat = []
    for label, bucket in enumerate(x.buckets):
        for s in bucket:
            flat.append((label, s))
    n = len(flat)
    if n > MAX_LENGTH:
        raise ValueError(f"ordering of length {n} exceeds the enumeration bound {MAX_LENGTH}")
    out = set()
    for mask in range(1, 1 << n):
        picked = [flat[p] for p in range(n) if mask >> p & 1]
        if all(a[0] < b[0] for a, b in zip(picked, picked[1:])):
            out.add(tuple(s for _, s in picked))
    return out


def intersect_all(X: OrderingSet) -> set[tuple[str, ...]]:
    result = None
    for x in X:
        subs = enumerate_subsequences(x)
        result = subs if result is None else result & subs
    return result


def _contains(big: tuple, small: tuple) -> bool:
    """Is ``small`` obtainable from ``big`` by deleting symbols."""
    for idxs in combinations(range(len(big)), len(small)):
        if tuple(big[i] for i in idxs) == small:
            return True
    return False


def maximal_elements(S) -> set[tuple[str, ...]]:
    S = set(S)
    return {u for u in S if not any(len(v) > len(u) and _contains(v, u) for v in S)}
