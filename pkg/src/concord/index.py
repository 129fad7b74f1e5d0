"""Position index and pairwise-precedence truth table over the reference ordering.

Indices in this module are 0-based; entry ``(k, j)`` of the position index is
the (1-based) label of reference symbol ``j`` inside ordering ``k``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

import numpy as np

from .model import OrderingSet

ABSENT = np.iinfo(np.int64).max


@dataclass(frozen=True, eq=False)
class PositionIndex:
    entries: np.ndarray  # (N, m) int64, ABSENT where the symbol is missing
    symbols: tuple[str, ...]  # reference symbols, flattened order

    @property
    def shape(self) -> tuple[int, int]:
        return self.entries.shape

    @property
    def present(self) -> np.ndarray:
        return self.entries != ABSENT

    def tolist(self) -> list[list[int | None]]:
        return [[None if v == ABSENT else int(v) for v in row] for row in self.entries]


@dataclass(frozen=True, eq=False)
class TruthTable:
    """``entries[j, k]`` for ``k < j``: is ``symbols[k] symbols[j]`` common to all.

    The diagonal marks symbols common to every ordering; entries above the
    diagonal are always 0.
    """

    entries: np.ndarray  # (m, m) bool
    symbols: tuple[str, ...]

    @property
    def m(self) -> int:
        return self.entries.shape[0]

    @property
    def diagonal(self) -> np.ndarray:
        return np.diagonal(self.entries)

    def tolist(self) -> list[list[int]]:
        return self.entries.astype(int).tolist()


def build_position_index(X: OrderingSet) -> PositionIndex:
    ref = X.reference
    symbols = ref.symbols
    entries = np.full((len(X), len(symbols)), ABSENT, dtype=np.int64)
    for k, ordering in enumerate(X):
        labels = ordering.label_map()
        for j, sym in enumerate(symbols):
            lab = labels.get(sym)
            if lab is not None:
                entries[k, j] = lab
    return PositionIndex(entries, symbols)


def truth_row(I: PositionIndex, j: int) -> tuple[bool, np.ndarray]:
    """Diagonal flag and ``T[j, :j]`` computed straight from the index.

    Costs O(N*j) time and O(N*j) scratch; used by the low-memory path.
    """
    E = I.entries
    col = E[:, j]
    if np.any(col == ABSENT):
        return False, np.zeros(j, dtype=bool)
    left = E[:, :j]
    # ABSENT is the int64 maximum, so an absent earlier symbol never compares smaller
    row = np.all(left < col[:, None], axis=0)
    return True, row


def iter_truth_rows(I: PositionIndex) -> Iterator[tuple[int, bool, np.ndarray]]:
    for j in range(I.shape[1]):
        diag, row = truth_row(I, j)
        yield j, diag, row


def build_truth_table(I: PositionIndex, ref_labels=None) -> TruthTable:
    """Materialize the full m x m truth table.

    ``ref_labels`` is accepted for callers that hold the reference labels
    separately; it must agree with row 0 of the index.
    """
    E = I.entries
    N, m = E.shape
    if ref_labels is not None and m and not np.array_equal(np.asarray(ref_labels, dtype=np.int64), E[0]):
        raise ValueError("reference labels do not match row 0 of the position index")
    present = np.all(E != ABSENT, axis=0)
    T = np.zeros((m, m), dtype=bool)
    if m == 0:
        return TruthTable(T, I.symbols)
    # pairs (later j, earlier k): every row must have E[k] < E[j]
    T[:] = present[:, None] & present[None, :]
    for k in range(N):
        row = E[k]
        T &= row[None, :] < row[:, None]
    T = np.tril(T, -1)
    T[np.arange(m), np.arange(m)] = present
    return TruthTable(T, I.symbols)


def format_matrix(rows, absent: str = "-") -> str:
    """TSV rendering used by ``--dump-index``."""
    lines = []
    for row in rows:
        lines.append("\t".join(absent if v is None else str(int(v)) for v in row))
    return "\n".join(lines)
