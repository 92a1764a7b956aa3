"""Littlewood-Richardson numbers and GL_n triple invariant dimensions.

Two independent routes are provided:

* :func:`lr_coefficient` counts LR skew tableaux (lattice reading words),
  and :func:`triple_coefficient` reduces three dominant weights to it.
* :func:`oracle_triple_coefficient` expands each irreducible into torus
  weights by enumerating semistandard tableaux and extracts the invariant
  dimension with the Weyl denominator.  It never touches the LR rule.
"""

from __future__ import annotations

import os
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations

from .errors import BoundExceeded
from .weights import Partition, Weight, as_partition, as_weight, check_same_rank

ORACLE_RANK_BOUND = 4
ORACLE_SPREAD_BOUND = 8


@dataclass(frozen=True)
class SkewShape:
    outer: Partition
    inner: Partition

    def __post_init__(self):
        if not self.outer.contains(self.inner):
            raise ValueError(f"{self.inner.parts} is not contained in {self.outer.parts}")

    def rows(self):
        """``(row, first_col, stop_col)`` for each nonempty row, top to bottom."""
        return [
            (i, self.inner.part(i), self.outer.part(i))
            for i in range(self.outer.length)
            if self.outer.part(i) > self.inner.part(i)
        ]

    @property
    def size(self) -> int:
        return self.outer.size - self.inner.size


@dataclass(frozen=True)
class TripleCoefficient:
    """``dim (V_lambda (x) V_mu (x) V_nu)^{GL_n}``."""

    value: int
    rank: int
    weights: tuple[Weight, Weight, Weight]

    def __int__(self):
        return self.value


def lr_coefficient(lam, mu, nu) -> int:
    """Multiplicity of ``nu`` in ``lam (x) mu`` (classical ``c^nu_{lam mu}``)."""
    lam, mu, nu = as_partition(lam), as_partition(mu), as_partition(nu)
    if lam.size + mu.size != nu.size or not nu.contains(lam):
        return 0
    return _lr_count(lam.parts, mu.parts, nu.parts)


@lru_cache(maxsize=None)
def _lr_count(lam: tuple, mu: tuple, nu: tuple) -> int:
    if not mu:
        return 1
    shape = SkewShape(Partition(nu), Partition(lam))
    # reading order: rows top to bottom, each row right to left
    cells = [(i, j) for i, lo, hi in shape.rows() for j in range(hi - 1, lo - 1, -1)]
    inner = shape.inner
    filling: dict[tuple[int, int], int] = {}
    used = [0] * (len(mu) + 1)
    letters = len(mu)

    def place(k: int) -> int:
        if k == len(cells):
            return 1
        i, j = cells[k]
        hi = min(letters, i + 1)
        right = filling.get((i, j + 1))
        if right is not None:
            hi = min(hi, right)
        lo = 1
        if i > 0 and j >= inner.part(i - 1):
            lo = filling[(i - 1, j)] + 1
        total = 0
        for v in range(lo, hi + 1):
            if used[v] == mu[v - 1]:
                continue
            if v > 1 and used[v] == used[v - 1]:
                continue
            used[v] += 1
            filling[(i, j)] = v
            total += place(k + 1)
            used[v] -= 1
        filling.pop((i, j), None)
        return total

    return place(0)


def triple_coefficient(lam, mu, nu, n: int | None = None) -> TripleCoefficient:
    """Invariant dimension of ``V_lam (x) V_mu (x) V_nu`` for ``GL_n``.

    Weights may have negative entries.  The determinant character forces
    zero unless the three entry sums add up to zero.
    """
    if n is None:
        n = check_same_rank(lam, mu, nu)
    lam, mu, nu = as_weight(lam, n), as_weight(mu, n), as_weight(nu, n)
    return TripleCoefficient(_triple_value(lam.entries, mu.entries, nu.entries), n, (lam, mu, nu))


def _triple_value(lam: tuple, mu: tuple, nu: tuple) -> int:
    if sum(lam) + sum(mu) + sum(nu) != 0:
        return 0
    a, b = -lam[-1], -mu[-1]
    c = -(a + b)
    lam2 = tuple(x + a for x in lam)
    mu2 = tuple(x + b for x in mu)
    nu2 = tuple(x + c for x in nu)
    target = tuple(-x for x in reversed(nu2))
    # lam2 (x) mu2 is polynomial, so a target with a negative entry never occurs
    if target[-1] < 0:
        return 0
    return lr_coefficient(lam2, mu2, target)


# -- independent oracle -------------------------------------------------------


def oracle_rank_bound() -> int:
    return int(os.environ.get("LR_REDUCE_ORACLE_BOUND", ORACLE_RANK_BOUND))


def oracle_triple_coefficient(lam, mu, nu, n: int | None = None) -> int:
    """Slow independent evaluation of :func:`triple_coefficient`.

    The invariant multiplicity of a module with character ``chi`` is the
    coefficient of ``e^rho`` in ``chi * sum_w sgn(w) e^{w rho}``, i.e.
    ``sum_w sgn(w) mult_chi(rho - w rho)``.  Characters come from counting
    semistandard tableaux by content.  Only intended for small ranks.
    """
    if n is None:
        n = check_same_rank(lam, mu, nu)
    lam, mu, nu = as_weight(lam, n), as_weight(mu, n), as_weight(nu, n)
    if n > oracle_rank_bound():
        raise BoundExceeded(f"oracle rank bound {oracle_rank_bound()} exceeded by n={n}")
    for w in (lam, mu, nu):
        if w[0] - w[-1] > ORACLE_SPREAD_BOUND:
            raise BoundExceeded(f"entry spread of {w.entries} exceeds {ORACLE_SPREAD_BOUND}")

    pair = _pair_character(lam.entries, mu.entries)
    third = _character(nu.entries)
    total = 0
    for sign, target in _denominator_terms(n):
        acc = 0
        for beta, m in third.items():
            rest = tuple(t - x for t, x in zip(target, beta))
            acc += pair.get(rest, 0) * m
        total += sign * acc
    return total


@lru_cache(maxsize=None)
def _denominator_terms(n: int):
    rho = tuple(range(n - 1, -1, -1))
    terms = []
    for perm in permutations(range(n)):
        inversions = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        w_rho = tuple(rho[perm[i]] for i in range(n))
        terms.append((-1 if inversions % 2 else 1, tuple(a - b for a, b in zip(rho, w_rho))))
    return tuple(terms)


@lru_cache(maxsize=4096)
def _pair_character(lam: tuple, mu: tuple) -> dict:
    a, b = _character(lam), _character(mu)
    out: Counter = Counter()
    for x, m in a.items():
        for y, k in b.items():
            out[tuple(p + q for p, q in zip(x, y))] += m * k
    return dict(out)


@lru_cache(maxsize=None)
def _character(weight: tuple) -> dict:
    """Torus weight multiplicities of the irreducible with highest weight ``weight``."""
    n = len(weight)
    shift = weight[-1]
    shape = tuple(x - shift for x in weight)
    counts: Counter = Counter()
    for content in _ssyt_contents(shape, n):
        counts[tuple(c + shift for c in content)] += 1
    return dict(counts)


def _ssyt_contents(shape: tuple, n: int):
    """Yield the content vector of every SSYT of ``shape`` with entries in 1..n."""
    rows = [r for r in shape if r > 0]
    grid = [[0] * r for r in rows]
    cells = [(i, j) for i, r in enumerate(rows) for j in range(r)]
    content = [0] * n

    def fill(k):
        if k == len(cells):
            yield tuple(content)
            return
        i, j = cells[k]
        lo = 1
        if j > 0:
            lo = grid[i][j - 1]
        if i > 0:
            lo = max(lo, grid[i - 1][j] + 1)
        # room below in this column needs strictly larger entries
        below = sum(1 for r in rows[i + 1:] if r > j)
        for v in range(lo, n - below + 1):
            grid[i][j] = v
            content[v - 1] += 1
            yield from fill(k + 1)
            content[v - 1] -= 1

    yield from fill(0)
