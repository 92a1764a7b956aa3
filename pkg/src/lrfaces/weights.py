"""Integer-vector types: GL_n dominant weights, partitions, Schubert indices.

Subsets are 1-based throughout, matching ``{1, ..., n}``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import combinations, combinations_with_replacement
from typing import Iterable, Iterator, Sequence

from .errors import ParseError, PreconditionError, RankMismatch

_INT_LIST = re.compile(r"^-?\d+(,-?\d+)*$")


@dataclass(frozen=True)
class Weight:
    """A weakly decreasing integer vector of length ``n``.

    Trailing zeros are significant: ``(1, 0)`` and ``(1, 0, 0)`` are weights
    of different groups.
    """

    entries: tuple[int, ...]

    def __post_init__(self):
        entries = tuple(int(e) for e in self.entries)
        object.__setattr__(self, "entries", entries)
        if not entries:
            raise PreconditionError("a weight needs rank n >= 1")
        if any(a < b for a, b in zip(entries, entries[1:])):
            raise PreconditionError(f"weight {entries} is not weakly decreasing")

    @property
    def n(self) -> int:
        return len(self.entries)

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __getitem__(self, i):
        return self.entries[i]

    def total(self) -> int:
        return sum(self.entries)

    def shift(self, a: int) -> "Weight":
        return Weight(tuple(e + a for e in self.entries))

    def scale(self, m: int) -> "Weight":
        return Weight(tuple(e * m for e in self.entries))

    def dual(self) -> "Weight":
        """Highest weight of the dual representation, ``(-w_n, ..., -w_1)``."""
        return Weight(tuple(-e for e in reversed(self.entries)))

    def to_partition(self) -> "Partition":
        if self.entries[-1] < 0:
            raise PreconditionError(f"weight {self.entries} has negative entries")
        return Partition(self.entries)

    def __str__(self):
        return format_ints(self.entries)


@dataclass(frozen=True)
class Partition:
    """Weakly decreasing positive parts; trailing zeros are dropped on entry."""

    parts: tuple[int, ...] = ()

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        if any(p < 0 for p in parts):
            raise PreconditionError(f"partition {parts} has negative parts")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise PreconditionError(f"partition {parts} is not weakly decreasing")
        object.__setattr__(self, "parts", parts)

    @property
    def size(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    def __len__(self):
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __getitem__(self, i):
        return self.parts[i]

    def part(self, i: int) -> int:
        """0-based part, zero past the end."""
        return self.parts[i] if i < len(self.parts) else 0

    def contains(self, other: "Partition") -> bool:
        return other.length <= self.length and all(
            q <= self.part(i) for i, q in enumerate(other.parts)
        )

    def conjugate(self) -> "Partition":
        if not self.parts:
            return self
        return Partition(
            tuple(sum(1 for p in self.parts if p > j) for j in range(self.parts[0]))
        )

    def strip_first_row(self) -> "Partition":
        return Partition(self.parts[1:])

    def padded(self, n: int) -> tuple[int, ...]:
        if self.length > n:
            raise PreconditionError(f"partition {self.parts} has more than {n} parts")
        return self.parts + (0,) * (n - self.length)

    def __str__(self):
        return format_ints(self.parts)


@dataclass(frozen=True)
class SchubertIndex:
    """An ``r``-element subset of ``{1, ..., n}``, stored sorted."""

    elements: tuple[int, ...]
    n: int

    def __post_init__(self):
        elements = tuple(sorted(int(i) for i in self.elements))
        object.__setattr__(self, "elements", elements)
        r, n = len(elements), self.n
        if not 1 <= r <= n - 1:
            raise PreconditionError(f"need 1 <= r <= n-1, got r={r}, n={n}")
        if len(set(elements)) != r:
            raise PreconditionError(f"repeated elements in {elements}")
        if elements[0] < 1 or elements[-1] > n:
            raise PreconditionError(f"{elements} is not a subset of 1..{n}")

    @property
    def r(self) -> int:
        return len(self.elements)

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __lt__(self, other):
        return (self.n, self.elements) < (other.n, other.elements)

    def __str__(self):
        return format_ints(self.elements)


def as_weight(w, n: int | None = None) -> Weight:
    if not isinstance(w, Weight):
        w = Weight(tuple(w))
    if n is not None and w.n != n:
        raise RankMismatch(f"weight {w.entries} has rank {w.n}, expected {n}")
    return w


def as_partition(p) -> Partition:
    return p if isinstance(p, Partition) else Partition(tuple(p))


def restrict(w, I: SchubertIndex) -> Weight:
    """``(w_{i_1}, ..., w_{i_r})`` for ``I = {i_1 < ... < i_r}``."""
    w = as_weight(w)
    if w.n != I.n:
        raise RankMismatch(f"weight rank {w.n} does not match index ambient {I.n}")
    return Weight(tuple(w.entries[i - 1] for i in I.elements))


def complement(I: SchubertIndex) -> SchubertIndex:
    members = set(I.elements)
    return SchubertIndex(tuple(i for i in range(1, I.n + 1) if i not in members), I.n)


def index_to_partition(I: SchubertIndex) -> Partition:
    """The partition attached to ``I``, with ``lambda_j = i_{r+1-j} - (r+1-j)``.

    This is the single index/partition dictionary of the package:
    ``{1..r}`` maps to the empty partition and ``{n-r+1..n}`` to the full
    ``r x (n-r)`` box.
    """
    r = I.r
    return Partition(tuple(I.elements[r - j] - (r + 1 - j) for j in range(1, r + 1)))


def partition_to_index(p, r: int, n: int) -> SchubertIndex:
    """Inverse of :func:`index_to_partition` on the ``r x (n-r)`` box."""
    p = as_partition(p)
    if p.length > r or p.part(0) > n - r:
        raise PreconditionError(f"partition {p.parts} does not fit the {r}x{n - r} box")
    padded = p.padded(r)
    return SchubertIndex(tuple(padded[r - k] + k for k in range(1, r + 1)), n)


def schubert_indices(r: int, n: int) -> Iterator[SchubertIndex]:
    """All of P(r, n) in lexicographic order."""
    for c in combinations(range(1, n + 1), r):
        yield SchubertIndex(c, n)


def dominant_weights(n: int, low: int, high: int) -> Iterator[Weight]:
    """Weights of rank ``n`` with entries in ``[low, high]``, lexicographic."""
    # indices into a descending range, taken nondecreasingly, give nonincreasing values
    desc = range(high, low - 1, -1)
    combos = list(combinations_with_replacement(desc, n))
    for entries in reversed(combos):
        yield Weight(entries)


def partitions_of(n: int, max_part: int | None = None) -> Iterator[Partition]:
    """Partitions of ``n`` in decreasing lexicographic order, ``(n)`` first."""
    if max_part is None:
        max_part = n
    if n == 0:
        yield Partition(())
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions_of(n - first, first):
            yield Partition((first,) + rest.parts)


def format_ints(values: Iterable[int]) -> str:
    return ",".join(str(v) for v in values)


def parse_ints(text: str) -> tuple[int, ...]:
    """Parse ``"1,1,0,-1"``; the empty string is the empty vector."""
    if text == "":
        return ()
    if not _INT_LIST.match(text):
        raise ParseError(f"expected comma-separated integers without spaces, got {text!r}")
    return tuple(int(tok) for tok in text.split(","))


def parse_weight(text: str, n: int | None = None) -> Weight:
    entries = parse_ints(text)
    try:
        return as_weight(entries, n)
    except RankMismatch:
        raise
    except PreconditionError as exc:
        raise ParseError(str(exc)) from None


def parse_partition(text: str) -> Partition:
    try:
        return Partition(parse_ints(text))
    except PreconditionError as exc:
        raise ParseError(str(exc)) from None


def parse_index(text: str, n: int) -> SchubertIndex:
    values = parse_ints(text)
    if list(values) != sorted(set(values)):
        raise ParseError(f"subset {text!r} must be strictly increasing")
    try:
        return SchubertIndex(values, n)
    except PreconditionError as exc:
        raise ParseError(str(exc)) from None


def check_same_rank(*weights: Sequence[int]) -> int:
    ranks = {len(w) for w in weights}
    if len(ranks) != 1:
        raise RankMismatch(f"weights have differing ranks {sorted(ranks)}")
    return ranks.pop()
