"""Longest common subsequences of an ordering set.

Index sequences are tuples of 0-based reference positions; they map to
symbol sequences through ``TruthTable.symbols``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .index import TruthTable, build_position_index, build_truth_table
from .model import OrderingSet

DEFAULT_CAP = 10**6


class EnumerationCapExceeded(RuntimeError):
    """More sequences than the configured cap."""

    def __init__(self, cap: int):
        self.cap = cap
        super().__init__(f"enumeration exceeded cap of {cap} sequences")


@dataclass(frozen=True)
class PsiArray:
    psi: tuple[int, ...]

    @property
    def llcs(self) -> int:
        return max(self.psi, default=0)

    def __getitem__(self, i):
        return self.psi[i]

    def __len__(self):
        return len(self.psi)


@dataclass(frozen=True)
class LcsSet:
    llcs: int
    sequences: tuple[tuple[str, ...], ...]

    def __len__(self):
        return len(self.sequences)


def psi_lengths(T: TruthTable) -> PsiArray:
    """Length of the longest common subsequence ending on each reference symbol."""
    E = T.entries
    psi = np.zeros(T.m, dtype=np.int64)
    for i in range(T.m):
        if not E[i, i]:
            continue
        prev = psi[:i][E[i, :i]]
        psi[i] = 1 + (int(prev.max()) if prev.size else 0)
    return PsiArray(tuple(int(v) for v in psi))


def _all_ones(m: int) -> np.ndarray:
    return np.ones(m, dtype=bool)


def theta(i: int, u: tuple[int, ...], psi: PsiArray, T: TruthTable, omega=None, cap: int = DEFAULT_CAP) -> set[tuple[int, ...]]:
    """Every longest prefix extension of ``u`` (which starts at position ``i``).

    Prefixes are grown one symbol at a time through positions whose psi is
    exactly one less; a branch that reaches a cleared omega position is
    dropped entirely.
    """
    E = T.entries
    omega = _all_ones(T.m) if omega is None else np.asarray(omega, dtype=bool)
    out: set[tuple[int, ...]] = set()
    stack = [(i, tuple(u))]
    while stack:
        i, u = stack.pop()
        if not omega[i]:
            continue
        target = psi[i] - 1
        prefixes = [j for j in np.flatnonzero(E[i, :i]) if psi[j] == target]
        if not prefixes:
            out.add(u)
            if len(out) > cap:
                raise EnumerationCapExceeded(cap)
            continue
        for j in prefixes:
            stack.append((int(j), (int(j),) + u))
    return out


def lcs_indices(T: TruthTable, psi: PsiArray | None = None, cap: int = DEFAULT_CAP) -> set[tuple[int, ...]]:
    psi = psi_lengths(T) if psi is None else psi
    ell = psi.llcs
    out: set[tuple[int, ...]] = set()
    if ell == 0:
        return out
    for i in range(T.m):
        if psi[i] == ell:
            out |= theta(i, (i,), psi, T, cap=cap)
            if len(out) > cap:
                raise EnumerationCapExceeded(cap)
    return out


def count_lcs(T: TruthTable, psi: PsiArray | None = None) -> int:
    """Number of longest common subsequences without materializing them."""
    psi = psi_lengths(T) if psi is None else psi
    E = T.entries
    ways = [0] * T.m
    for i in range(T.m):
        if psi[i] == 0:
            continue
        if psi[i] == 1:
            ways[i] = 1
            continue
        ways[i] = sum(ways[j] for j in np.flatnonzero(E[i, :i]) if psi[j] == psi[i] - 1)
    ell = psi.llcs
    return sum(w for i, w in enumerate(ways) if ell and psi[i] == ell)


def to_symbols(seqs, symbols) -> tuple[tuple[str, ...], ...]:
    return tuple(sorted(tuple(symbols[i] for i in s) for s in seqs))


def all_lcs(X: OrderingSet, cap: int = DEFAULT_CAP) -> LcsSet:
    I = build_position_index(X)
    T = build_truth_table(I)
    psi = psi_lengths(T)
    return LcsSet(psi.llcs, to_symbols(lcs_indices(T, psi, cap), T.symbols))
