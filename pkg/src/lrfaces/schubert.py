"""Schubert calculus on the Grassmannian Gr(r, n) via LR numbers.

Classes are indexed by :class:`SchubertIndex` and translated to partitions
with :func:`lrfaces.weights.index_to_partition`; the class of ``I`` has
codimension ``|index_to_partition(I)|``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product

from .errors import PreconditionError
from .lrcalc import lr_coefficient
from .weights import (
    Partition,
    SchubertIndex,
    index_to_partition,
    partition_to_index,
    schubert_indices,
)


@dataclass(frozen=True)
class IntersectionDegree:
    """``sigma_I . sigma_J . sigma_K = d [pt]`` in Gr(r, n)."""

    d: int
    triple: tuple[SchubertIndex, SchubertIndex, SchubertIndex]
    grassmannian: tuple[int, int]


def box_complement(p: Partition, r: int, n: int) -> Partition:
    """``(n - r - p_{r+1-j})_j``: the Poincare dual partition in the r x (n-r) box."""
    padded = p.padded(r)
    return Partition(tuple(n - r - padded[r - j] for j in range(1, r + 1)))


def _grassmannian(*indices: SchubertIndex) -> tuple[int, int]:
    params = {(I.r, I.n) for I in indices}
    if len(params) != 1:
        raise PreconditionError(f"indices live on different Grassmannians: {sorted(params)}")
    return params.pop()


def triple_degree(I: SchubertIndex, J: SchubertIndex, K: SchubertIndex) -> IntersectionDegree:
    r, n = _grassmannian(I, J, K)
    return IntersectionDegree(_degree(I, J, K), (I, J, K), (r, n))


@lru_cache(maxsize=None)
def _degree(I, J, K) -> int:
    r, n = I.r, I.n
    a, b, c = index_to_partition(I), index_to_partition(J), index_to_partition(K)
    if a.size + b.size + c.size != r * (n - r):
        return 0
    return lr_coefficient(a, b, box_complement(c, r, n))


def product_expansion(I: SchubertIndex, J: SchubertIndex) -> dict[SchubertIndex, int]:
    """``sigma_I . sigma_J`` in the Schubert basis, zero terms omitted, lex order."""
    r, n = _grassmannian(I, J)
    a, b = index_to_partition(I), index_to_partition(J)
    out = {}
    for K in schubert_indices(r, n):
        coeff = lr_coefficient(a, b, index_to_partition(K))
        if coeff:
            out[K] = coeff
    return out


def enumerate_pt_triples(r: int, n: int, d_filter: int | None = 1):
    """All ``(I, J, K)`` in P(r, n)^3 with degree ``d_filter``, lexicographic.

    ``d_filter=None`` keeps every triple of positive degree.
    """
    if not 1 <= r <= n - 1:
        raise PreconditionError(f"need 1 <= r <= n-1, got r={r}, n={n}")
    return list(_pt_triples(r, n, d_filter))


@lru_cache(maxsize=None)
def _pt_triples(r, n, d_filter):
    top = r * (n - r)
    indices = list(schubert_indices(r, n))
    sizes = {I: index_to_partition(I).size for I in indices}
    out = []
    for I, J in product(indices, indices):
        rest = top - sizes[I] - sizes[J]
        if rest < 0:
            continue
        for K in indices:
            if sizes[K] != rest:
                continue
            d = _degree(I, J, K)
            if (d >= 1) if d_filter is None else (d == d_filter):
                out.append((I, J, K))
    return tuple(out)


def point_index(r: int, n: int) -> SchubertIndex:
    return partition_to_index(Partition((n - r,) * r), r, n)


def fundamental_index(r: int, n: int) -> SchubertIndex:
    return SchubertIndex(tuple(range(1, r + 1)), n)
