"""Horn/Belkale membership test for nonvanishing GL_n triple coefficients.

A triple ``(lam, mu, nu)`` has ``c^n > 0`` iff the entries sum to zero and

    sum_{i in I} lam_i + sum_{j in J} mu_j + sum_{k in K} nu_k <= 0

for every inequality triple ``(I, J, K)`` in P(r, n)^3, r = 1..n-1.

Inequality triples are labelled so that ``{1..r}`` is the Schubert variety
equal to a single point.  Under the package's partition dictionary (where
``{1..r}`` is the fundamental class) they are exactly the complements of
the degree-``d`` triples of Gr(n-r, n).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import PreconditionError
from .schubert import enumerate_pt_triples
from .weights import SchubertIndex, as_weight, check_same_rank, complement


@dataclass(frozen=True)
class Violation:
    r: int
    I: SchubertIndex
    J: SchubertIndex
    K: SchubertIndex
    lhs: int


@dataclass(frozen=True)
class HornCertificate:
    member: bool
    violated: Violation | None
    trace: int


def horn_inequalities(r: int, n: int, d_filter: int | None = 1):
    """Inequality triples in P(r, n)^3, lexicographic.

    ``d_filter=None`` uses every positive degree instead of degree one.
    """
    return list(_inequalities(r, n, d_filter))


@lru_cache(maxsize=None)
def _inequalities(r, n, d_filter):
    triples = enumerate_pt_triples(n - r, n, d_filter)
    return tuple(sorted(
        ((complement(I), complement(J), complement(K)) for I, J, K in triples),
        key=lambda t: tuple(x.elements for x in t),
    ))


def face_value(lam, mu, nu, I: SchubertIndex, J: SchubertIndex, K: SchubertIndex) -> int:
    n = check_same_rank(lam, mu, nu)
    if {I.n, J.n, K.n} != {n} or len({I.r, J.r, K.r}) != 1:
        raise PreconditionError("indices do not match the weights' rank")
    return (
        sum(lam[i - 1] for i in I)
        + sum(mu[j - 1] for j in J)
        + sum(nu[k - 1] for k in K)
    )


def face_equality_test(lam, mu, nu, I, J, K) -> bool:
    """True iff the weight triple lies on the hyperplane of the face (I, J, K)."""
    return face_value(lam, mu, nu, I, J, K) == 0


def horn_member(lam, mu, nu, n: int | None = None, use_d_variant: bool = False) -> HornCertificate:
    """Decide ``c^n_{lam mu nu} != 0`` through the linear inequality system.

    Scans r = 1..n-1 and inequality triples in lexicographic order and
    returns the first violation.  ``use_d_variant`` takes inequalities from
    every positive degree rather than only degree one.
    """
    if n is None:
        n = check_same_rank(lam, mu, nu)
    lam, mu, nu = as_weight(lam, n), as_weight(mu, n), as_weight(nu, n)
    trace = lam.total() + mu.total() + nu.total()
    if trace != 0:
        return HornCertificate(False, None, trace)
    d_filter = None if use_d_variant else 1
    for r in range(1, n):
        for I, J, K in _inequalities(r, n, d_filter):
            lhs = face_value(lam, mu, nu, I, J, K)
            if lhs > 0:
                return HornCertificate(False, Violation(r, I, J, K, lhs), trace)
    return HornCertificate(True, None, trace)
