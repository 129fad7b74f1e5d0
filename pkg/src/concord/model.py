"""Preference orderings, with and without ties, and their text format."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence


class OrderingParseError(ValueError):
    """Malformed ordering text. Carries line/column context."""

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.line = line
        self.column = column
        where = []
        if line is not None:
            where.append(f"line {line}")
        if column is not None:
            where.append(f"column {column}")
        prefix = f"{', '.join(where)}: " if where else ""
        super().__init__(prefix + message)


@dataclass(frozen=True, eq=False)
class BucketOrdering:
    """A weak ordering: an ordered sequence of disjoint, non-empty buckets.

    A strict ordering is the case where every bucket holds one symbol.
    Two orderings are equal when their buckets hold the same symbol sets in
    the same order; symbol order inside a bucket and the judge id are ignored.
    """

    buckets: tuple[tuple[str, ...], ...]
    judge_id: str | None = field(default=None)

    def __post_init__(self):
        buckets = tuple(tuple(b) for b in self.buckets)
        object.__setattr__(self, "buckets", buckets)
        if not buckets:
            raise ValueError("an ordering needs at least one symbol")
        seen: set[str] = set()
        for bucket in buckets:
            if not bucket:
                raise ValueError("empty bucket")
            for sym in bucket:
                if not isinstance(sym, str) or not sym:
                    raise ValueError(f"invalid symbol {sym!r}")
                if sym in seen:
                    raise ValueError(f"duplicate symbol {sym!r}")
                seen.add(sym)

    @classmethod
    def from_symbols(cls, symbols: Iterable[str], judge_id: str | None = None) -> "BucketOrdering":
        """Strict ordering, one singleton bucket per symbol."""
        return cls(tuple((s,) for s in symbols), judge_id)

    @property
    def symbols(self) -> tuple[str, ...]:
        return tuple(s for b in self.buckets for s in b)

    @property
    def labels(self) -> tuple[int, ...]:
        """1-based bucket index of every symbol, in flattened order."""
        return tuple(k for k, b in enumerate(self.buckets, start=1) for _ in b)

    @property
    def is_strict(self) -> bool:
        return all(len(b) == 1 for b in self.buckets)

    def label_map(self) -> dict[str, int]:
        return {s: k for k, b in enumerate(self.buckets, start=1) for s in b}

    @property
    def key(self) -> tuple[frozenset[str], ...]:
        return tuple(frozenset(b) for b in self.buckets)

    def __eq__(self, other):
        if not isinstance(other, BucketOrdering):
            return NotImplemented
        return self.key == other.key

    def __hash__(self):
        return hash(self.key)

    def __len__(self):
        return sum(len(b) for b in self.buckets)

    def format(self) -> str:
        parts = []
        for b in self.buckets:
            parts.append(b[0] if len(b) == 1 else "{" + " ".join(b) + "}")
        return " ".join(parts)

    def __str__(self):
        return self.format()


@dataclass(frozen=True)
class OrderingSet:
    """Orderings to analyse; the first one is the reference."""

    orderings: tuple[BucketOrdering, ...]
    distinct: bool = True
    dropped: int = 0

    def __post_init__(self):
        object.__setattr__(self, "orderings", tuple(self.orderings))
        if not self.orderings:
            raise ValueError("an ordering set needs at least one ordering")

    @property
    def reference(self) -> BucketOrdering:
        return self.orderings[0]

    def __len__(self):
        return len(self.orderings)

    def __iter__(self):
        return iter(self.orderings)

    def __getitem__(self, k):
        return self.orderings[k]

    def judge_ids(self) -> list[str]:
        return [o.judge_id or f"J{k}" for k, o in enumerate(self.orderings, start=1)]

    def has_ties(self) -> bool:
        return not all(o.is_strict for o in self.orderings)

    def uneven(self) -> bool:
        """True when the orderings do not all rank the same items."""
        first = set(self.reference.symbols)
        return any(set(o.symbols) != first for o in self.orderings[1:])


def _tokenize(line: str):
    """Yield (token, column) pairs, splitting braces off as their own tokens."""
    col = 0
    n = len(line)
    while col < n:
        ch = line[col]
        if ch.isspace():
            col += 1
        elif ch in "{}":
            yield ch, col + 1
            col += 1
        else:
            start = col
            while col < n and not line[col].isspace() and line[col] not in "{}":
                col += 1
            yield line[start:col], start + 1


def parse_ordering(line: str, lineno: int | None = None, judge_id: str | None = None) -> BucketOrdering:
    """Parse ``"{a b} c {d e f}"`` style text into a BucketOrdering.

    A leading token ending in ``:`` (``alice: a b c``) names the judge.
    """
    buckets: list[tuple[str, ...]] = []
    seen: dict[str, int] = {}
    group: list[str] | None = None
    group_col = 0
    first = True
    for tok, col in _tokenize(line):
        if first and tok.endswith(":") and len(tok) > 1 and tok not in "{}":
            judge_id = tok[:-1]
            first = False
            continue
        first = False
        if tok == "{":
            if group is not None:
                raise OrderingParseError("nested '{'", lineno, col)
            group, group_col = [], col
        elif tok == "}":
            if group is None:
                raise OrderingParseError("unbalanced '}'", lineno, col)
            if not group:
                raise OrderingParseError("empty bucket", lineno, col)
            buckets.append(tuple(group))
            group = None
        else:
            if tok in seen:
                raise OrderingParseError(f"duplicate symbol {tok!r}", lineno, col)
            seen[tok] = col
            if group is None:
                buckets.append((tok,))
            else:
                group.append(tok)
    if group is not None:
        raise OrderingParseError("unbalanced '{'", lineno, group_col)
    if not buckets:
        raise OrderingParseError("empty ordering", lineno)
    return BucketOrdering(tuple(buckets), judge_id)


def parse_orderings(text: str) -> list[BucketOrdering]:
    """One ordering per non-blank line; ``#`` lines are comments."""
    out = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        out.append(parse_ordering(stripped, lineno))
    if not out:
        raise OrderingParseError("no orderings in input")
    return out


def dedupe(orderings: Sequence[BucketOrdering], distinct: bool = True) -> OrderingSet:
    """Collapse duplicate orderings, keeping first occurrences in order.

    With ``distinct=False`` the list is kept as given (collection semantics).
    """
    if not orderings:
        raise ValueError("need at least one ordering")
    if not distinct:
        return OrderingSet(tuple(orderings), distinct=False)
    seen: set[BucketOrdering] = set()
    kept = []
    for o in orderings:
        if o not in seen:
            seen.add(o)
            kept.append(o)
    return OrderingSet(tuple(kept), distinct=True, dropped=len(orderings) - len(kept))


def ordering_set(*items: str | Sequence[str] | BucketOrdering, distinct: bool = True) -> OrderingSet:
    """Convenience constructor: ``ordering_set("abcde", "abdce")``.

    Plain strings without whitespace or braces are read one character per
    symbol; anything else goes through :func:`parse_ordering`.
    """
    built = []
    for it in items:
        if isinstance(it, BucketOrdering):
            built.append(it)
        elif isinstance(it, str):
            if any(c.isspace() or c in "{}" for c in it):
                built.append(parse_ordering(it))
            else:
                built.append(BucketOrdering.from_symbols(it))
        else:
            built.append(BucketOrdering.from_symbols(it))
    return dedupe(built, distinct=distinct)
