"""Smallest covering set: the longest common subsequences plus every
as-long-as-possible common subsequence through symbols they miss."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .index import TruthTable, build_position_index, build_truth_table
from .lcs import DEFAULT_CAP, EnumerationCapExceeded, PsiArray, lcs_indices, psi_lengths, theta, to_symbols
from .model import OrderingSet


class NoProgressError(RuntimeError):
    """An uncovered symbol produced no covering sequence."""


@dataclass(frozen=True)
class CoveringSet:
    sequences: tuple[tuple[str, ...], ...]
    lcs: tuple[tuple[str, ...], ...] = ()
    processed: tuple[str, ...] = field(default=())

    def __len__(self):
        return len(self.sequences)

    def __iter__(self):
        return iter(self.sequences)


def common_symbols(T: TruthTable) -> set[int]:
    return {int(i) for i in np.flatnonzero(T.diagonal)}


def upsilon(i: int, u: tuple[int, ...], T: TruthTable, omega=None, cap: int = DEFAULT_CAP) -> set[tuple[int, ...]]:
    """Extend ``u`` (ending at position ``i``) to the right until no symbol fits."""
    E = T.entries
    omega = np.ones(T.m, dtype=bool) if omega is None else np.asarray(omega, dtype=bool)
    out: set[tuple[int, ...]] = set()
    stack = [(i, tuple(u))]
    while stack:
        i, u = stack.pop()
        if not omega[i]:
            continue
        post = np.flatnonzero(E[i + 1 :, i]) + i + 1
        if post.size == 0:
            out.add(u)
            if len(out) > cap:
                raise EnumerationCapExceeded(cap)
            continue
        for j in post:
            stack.append((int(j), u + (int(j),)))
    return out


def build_b_set(i: int, psi: PsiArray, T: TruthTable, omega=None, cap: int = DEFAULT_CAP) -> set[tuple[int, ...]]:
    """Longest prefixes ending at ``i``, each extended by every maximal postfix."""
    out: set[tuple[int, ...]] = set()
    for w in theta(i, (i,), psi, T, omega, cap):
        out |= upsilon(i, w, T, omega, cap)
        if len(out) > cap:
            raise EnumerationCapExceeded(cap)
    return out


def is_subsequence(u, v) -> bool:
    it = iter(v)
    return all(s in it for s in u)


def antichain(seqs) -> set[tuple[int, ...]]:
    """Drop every member that is a subsequence of another member."""
    ordered = sorted(set(seqs), key=len, reverse=True)
    kept: list[tuple[int, ...]] = []
    for s in ordered:
        if not any(len(k) > len(s) and is_subsequence(s, k) for k in kept):
            kept.append(s)
    return set(kept)


def cover_relation(T: TruthTable) -> np.ndarray:
    """``C[j, k]``: ``k`` directly precedes ``j`` with nothing common in between."""
    strict = np.tril(T.entries, -1).astype(np.int32)
    between = strict @ strict
    return (strict > 0) & (between == 0)


def maximal_chains(T: TruthTable, cap: int = DEFAULT_CAP) -> set[tuple[int, ...]]:
    """All common subsequences that cannot be extended anywhere.

    Common subsequences are the chains of the precedence order encoded by
    ``T``; the maximal ones are the cover-graph paths running from a position
    with no common predecessor to one with no common successor.
    """
    E = T.entries
    C = cover_relation(T)
    strict = np.tril(E, -1)
    common = np.flatnonzero(T.diagonal)
    out: set[tuple[int, ...]] = set()
    for start in common:
        if strict[start].any():
            continue
        stack = [(int(start),)]
        while stack:
            u = stack.pop()
            nxt = np.flatnonzero(C[:, u[-1]])
            if nxt.size == 0:
                out.add(u)
                if len(out) > cap:
                    raise EnumerationCapExceeded(cap)
                continue
            for j in nxt[::-1]:
                stack.append(u + (int(j),))
    return out


def covering_indices(T: TruthTable, psi: PsiArray | None = None, cap: int = DEFAULT_CAP, pick=min):
    """Covering set via the symbol-driven loop, plus the positions it processed.

    Starts from the longest common subsequences and, while some common
    symbol appears in none of the collected sequences, adds every longest
    prefix through it extended by every postfix. ``pick`` chooses the next
    uncovered position.

    This loop can miss maximal sequences whose symbols are each covered by
    different members (e.g. ``ba`` for ``bcehgda`` / ``dfbahg``); use
    :func:`maximal_chains` when the exact set is needed.
    """
    psi = psi_lengths(T) if psi is None else psi
    D = common_symbols(T)
    omega = np.ones(T.m, dtype=bool)
    A = set(lcs_indices(T, psi, cap))
    covered = {i for s in A for i in s}
    uncovered = D - covered
    processed = []
    while uncovered:
        lam = pick(uncovered)
        B = build_b_set(lam, psi, T, omega, cap)
        if not B:
            B = build_b_set(lam, psi, T, None, cap)
        omega[lam] = False
        processed.append(lam)
        A |= B
        if len(A) > cap:
            raise EnumerationCapExceeded(cap)
        covered = {i for s in A for i in s}
        remaining = D - covered
        if remaining == uncovered:
            raise NoProgressError(f"no covering sequence found for position {lam}")
        uncovered = remaining
    return antichain(A), processed


def smallest_covering_set(X: OrderingSet, cap: int = DEFAULT_CAP, method: str = "exact") -> CoveringSet:
    """Smallest set of common subsequences covering every common subsequence.

    ``method="exact"`` enumerates the maximal chains directly;
    ``method="symbol-loop"`` runs the lcs-then-uncovered-symbols loop of
    :func:`covering_indices`, which is faster to explain but not always complete.
    """
    I = build_position_index(X)
    T = build_truth_table(I)
    psi = psi_lengths(T)
    lcs = lcs_indices(T, psi, cap)
    if method == "exact":
        cover = maximal_chains(T, cap)
        covered = {i for s in lcs for i in s}
        processed = sorted(common_symbols(T) - covered)
    elif method == "symbol-loop":
        cover, processed = covering_indices(T, psi, cap)
    else:
        raise ValueError(f"unknown method {method!r}")
    return CoveringSet(
        sequences=to_symbols(cover, T.symbols),
        lcs=to_symbols(lcs, T.symbols),
        processed=tuple(T.symbols[i] for i in processed),
    )
