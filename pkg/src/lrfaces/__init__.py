"""Exact type-A branching data: LR and Kronecker coefficients, Schubert
intersection numbers, Horn membership, and face factorization checks."""

__version__ = "0.1.0"

from .errors import (
    BoundExceeded,
    LRFacesError,
    ParseError,
    PreconditionError,
    RankMismatch,
    TheoremViolation,
)
from .horncone import HornCertificate, face_equality_test, horn_inequalities, horn_member
from .kronecker import (
    CharacterTable,
    KroneckerCoefficient,
    character_table,
    dimension,
    kronecker_coefficient,
    murnaghan_littlewood_check,
)
from .lrcalc import TripleCoefficient, lr_coefficient, oracle_triple_coefficient, triple_coefficient
from .reduction import FactorizationReport, factorize, sweep_faces
from .schubert import IntersectionDegree, enumerate_pt_triples, product_expansion, triple_degree
from .weights import (
    Partition,
    SchubertIndex,
    Weight,
    complement,
    index_to_partition,
    partition_to_index,
    restrict,
)
