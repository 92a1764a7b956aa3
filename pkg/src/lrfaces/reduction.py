"""Face factorization ``c^n = c^r . c^(n-r)`` and sweeps that verify it.

Every report recomputes all three coefficients from scratch through
:mod:`lrfaces.lrcalc`; the factorization is checked, never assumed.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from functools import lru_cache

from .errors import BoundExceeded, PreconditionError, TheoremViolation
from .horncone import face_value
from .lrcalc import triple_coefficient
from .schubert import enumerate_pt_triples, triple_degree
from .weights import SchubertIndex, Weight, as_weight, complement, dominant_weights, restrict

EQUAL = "equal"
LHS_LEQ_PRODUCT = "lhs_leq_product"
NOT_APPLICABLE = "not_applicable"

SWEEP_RANK_BOUND = 5
SWEEP_ENTRY_BOUND = 3


@dataclass(frozen=True)
class FactorizationReport:
    lhs: int
    factor_small: int
    factor_large: int
    degree: int
    on_face: bool
    verdict: str
    weights: tuple[Weight, Weight, Weight] = field(compare=False)
    indices: tuple[SchubertIndex, SchubertIndex, SchubertIndex] = field(compare=False)

    @property
    def product(self) -> int:
        return self.factor_small * self.factor_large

    @property
    def n(self) -> int:
        return self.weights[0].n

    @property
    def r(self) -> int:
        return self.indices[0].r


def factorize(lam, mu, nu, I: SchubertIndex, J: SchubertIndex, K: SchubertIndex) -> FactorizationReport:
    """Compare ``c^n(lam, mu, nu)`` with ``c^r(restrictions) * c^(n-r)(complements)``.

    Raises :class:`TheoremViolation` if a degree-one face gives unequal
    sides, or a positive-degree face gives ``lhs > product``.
    """
    n = I.n
    lam, mu, nu = as_weight(lam, n), as_weight(mu, n), as_weight(nu, n)
    degree = triple_degree(I, J, K).d
    on_face = face_value(lam, mu, nu, I, J, K) == 0
    Ic, Jc, Kc = complement(I), complement(J), complement(K)

    lhs = triple_coefficient(lam, mu, nu).value
    small = triple_coefficient(restrict(lam, I), restrict(mu, J), restrict(nu, K)).value
    large = triple_coefficient(restrict(lam, Ic), restrict(mu, Jc), restrict(nu, Kc)).value

    if degree == 1 and on_face:
        verdict = EQUAL
    elif degree >= 1 and on_face:
        verdict = LHS_LEQ_PRODUCT
    else:
        verdict = NOT_APPLICABLE
    report = FactorizationReport(lhs, small, large, degree, on_face, verdict, (lam, mu, nu), (I, J, K))

    if verdict == EQUAL and lhs != small * large:
        raise TheoremViolation(f"face factorization fails: {lhs} != {small}*{large}", report)
    if verdict == LHS_LEQ_PRODUCT and lhs > small * large:
        raise TheoremViolation(f"face inequality fails: {lhs} > {small}*{large}", report)
    return report


def face_weight_triples(I, J, K, entry_bound: int):
    """Weight triples in the box ``[-b, b]`` with total zero on the face (I, J, K).

    ``nu`` is solved for: weights are bucketed by ``(total, sum over K)``.
    """
    n = I.n
    box = list(dominant_weights(n, -entry_bound, entry_bound))
    buckets = _buckets(n, entry_bound, K)
    for lam in box:
        lam_total, lam_face = lam.total(), sum(lam[i - 1] for i in I)
        for mu in box:
            key = (-lam_total - mu.total(), -lam_face - sum(mu[j - 1] for j in J))
            for nu in buckets.get(key, ()):
                yield lam, mu, nu


@lru_cache(maxsize=None)
def _buckets(n, entry_bound, K):
    out = defaultdict(list)
    for nu in dominant_weights(n, -entry_bound, entry_bound):
        out[(nu.total(), sum(nu[k - 1] for k in K))].append(nu)
    return dict(out)


def sweep_faces(
    n: int,
    entry_bound: int,
    r: int | None = None,
    d_filter: int | None = 1,
    triples=None,
    max_rank: int = SWEEP_RANK_BOUND,
) -> list[FactorizationReport]:
    """Factorize every face-compatible weight triple for every face of rank ``n``.

    Reports come out ordered by (r, I, J, K, lam, mu, nu).  Pass ``triples``
    to restrict to specific index triples; ``d_filter=None`` uses all
    positive degrees.
    """
    if n > max_rank:
        raise BoundExceeded(f"sweep rank bound {max_rank} exceeded by n={n}")
    if not 0 <= entry_bound <= SWEEP_ENTRY_BOUND:
        raise BoundExceeded(f"entry bound must be in [0, {SWEEP_ENTRY_BOUND}]")
    if triples is None:
        ranks = range(1, n) if r is None else [r]
        triples = [t for rr in ranks for t in enumerate_pt_triples(rr, n, d_filter)]
    else:
        triples = sorted(triples, key=lambda t: (t[0].r,) + tuple(x.elements for x in t))
    reports = []
    for I, J, K in triples:
        if I.n != n:
            raise PreconditionError(f"triple {I}, {J}, {K} is not in P(r, {n})")
        for lam, mu, nu in face_weight_triples(I, J, K, entry_bound):
            reports.append(factorize(lam, mu, nu, I, J, K))
    return reports
