"""Symmetric-group characters and Kronecker coefficients.

Character values use the Murnaghan-Nakayama rule on beta-sets: removing a
border strip of length ``k`` moves one bead of the abacus down by ``k``,
with sign given by the parity of the beads jumped over.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import factorial, prod

from .errors import BoundExceeded, PreconditionError, TheoremViolation
from .lrcalc import lr_coefficient
from .weights import Partition, as_partition, partitions_of

CHARACTER_BOUND = 12


@dataclass(frozen=True)
class CharacterTable:
    n: int
    rows: tuple[Partition, ...]
    columns: tuple[Partition, ...]
    values: tuple[tuple[int, ...], ...]
    class_sizes: tuple[int, ...]

    def value(self, alpha, cycle_type) -> int:
        return self.values[self.rows.index(as_partition(alpha))][
            self.columns.index(as_partition(cycle_type))
        ]


@dataclass(frozen=True)
class KroneckerCoefficient:
    value: int
    triple: tuple[Partition, Partition, Partition]

    def __int__(self):
        return self.value


@dataclass(frozen=True)
class MurnaghanLittlewoodReport:
    k: int
    depth_lhs: int
    depth_rhs: int
    equality_case: bool
    lr: int | None


def _check_bound(n, bound=CHARACTER_BOUND):
    if not 1 <= n <= bound:
        raise BoundExceeded(f"n={n} outside the supported range 1..{bound}")


@lru_cache(maxsize=None)
def character(alpha: tuple, rho: tuple) -> int:
    """``chi_alpha`` on the class of cycle type ``rho`` (both as tuples)."""
    if not rho:
        return 1 if not alpha else 0
    k, rest = rho[0], rho[1:]
    length = len(alpha)
    beta = [alpha[i] + length - 1 - i for i in range(length)]
    occupied = set(beta)
    total = 0
    for idx, b in enumerate(beta):
        target = b - k
        if target < 0 or target in occupied:
            continue
        jumped = sum(1 for x in beta if target < x < b)
        moved = sorted(beta[:idx] + [target] + beta[idx + 1:], reverse=True)
        smaller = tuple(
            p for p in (moved[i] - (length - 1 - i) for i in range(length)) if p > 0
        )
        total += (-1) ** jumped * character(smaller, rest)
    return total


def class_size(rho) -> int:
    """Number of permutations of cycle type ``rho``: ``n! / z_rho``."""
    rho = as_partition(rho)
    z = 1
    for part in set(rho.parts):
        m = rho.parts.count(part)
        z *= part**m * factorial(m)
    return factorial(rho.size) // z


@lru_cache(maxsize=None)
def character_table(n: int) -> CharacterTable:
    _check_bound(n)
    parts = tuple(partitions_of(n))
    values = tuple(tuple(character(a.parts, c.parts) for c in parts) for a in parts)
    return CharacterTable(n, parts, parts, values, tuple(class_size(c) for c in parts))


def dimension(alpha) -> int:
    """Dimension of ``[alpha]`` by the hook length formula."""
    alpha = as_partition(alpha)
    conj = alpha.conjugate()
    hooks = prod(
        alpha.parts[i] - j + conj.parts[j] - i - 1
        for i in range(alpha.length)
        for j in range(alpha.parts[i])
    )
    return factorial(alpha.size) // hooks


def _common_size(*partitions: Partition) -> int:
    sizes = {p.size for p in partitions}
    if len(sizes) != 1:
        raise PreconditionError(f"partitions of different sizes {sorted(sizes)}")
    return sizes.pop()


def kronecker_coefficient(alpha, beta, gamma) -> KroneckerCoefficient:
    """Multiplicity of ``[gamma]`` in ``[alpha] (x) [beta]``."""
    alpha, beta, gamma = as_partition(alpha), as_partition(beta), as_partition(gamma)
    n = _common_size(alpha, beta, gamma)
    _check_bound(n)
    return KroneckerCoefficient(_kron(alpha.parts, beta.parts, gamma.parts), (alpha, beta, gamma))


@lru_cache(maxsize=None)
def _kron(a, b, c) -> int:
    table = character_table(sum(a))
    ia, ib, ic = (table.rows.index(Partition(p)) for p in (a, b, c))
    total = sum(
        size * table.values[ia][col] * table.values[ib][col] * table.values[ic][col]
        for col, size in enumerate(table.class_sizes)
    )
    q, rem = divmod(total, factorial(table.n))
    if rem:
        raise TheoremViolation(f"character sum {total} not divisible by {table.n}!", (a, b, c))
    return q


def murnaghan_littlewood_check(alpha, beta, gamma) -> MurnaghanLittlewoodReport:
    """Check the first-row depth inequality and its equality case.

    Nonzero ``k`` requires ``(n - alpha_1) + (n - beta_1) >= n - gamma_1``;
    at equality ``k`` equals the LR coefficient of the partitions with their
    first rows removed.
    """
    alpha, beta, gamma = as_partition(alpha), as_partition(beta), as_partition(gamma)
    n = _common_size(alpha, beta, gamma)
    k = kronecker_coefficient(alpha, beta, gamma).value
    depth_lhs = (n - alpha.part(0)) + (n - beta.part(0))
    depth_rhs = n - gamma.part(0)
    equality = depth_lhs == depth_rhs
    lr = None
    if k and depth_lhs < depth_rhs:
        raise TheoremViolation(
            f"k={k} but depth {depth_lhs} < {depth_rhs}", (alpha, beta, gamma)
        )
    if equality:
        lr = lr_coefficient(alpha.strip_first_row(), beta.strip_first_row(), gamma.strip_first_row())
        if lr != k:
            raise TheoremViolation(f"k={k} but stripped LR coefficient is {lr}", (alpha, beta, gamma))
    return MurnaghanLittlewoodReport(k, depth_lhs, depth_rhs, equality, lr)
