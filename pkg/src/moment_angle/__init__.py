"""Exact bigraded cohomology of moment-angle complexes.

The library computes Tor algebras of Stanley-Reisner rings over Q or F_p two
independent ways (Hochster full-subcomplex cohomology and Koszul strand
homology), decides Gorenstein and Poincare-duality properties, extracts join
decompositions from tensor-product data, and runs the quasitoric quotient
pipeline with indecomposability certificates.
"""

from .complexes import (
    DecompositionReport,
    PolytopeIncidence,
    SimplicialComplex,
    VertexSet,
    dual_of_polytope,
)
from .fields import DEFAULT_FIELDS, F2, F3, QQ, FieldSpec, parse_field
from .linalg import (
    CochainComplex,
    CohomologyResult,
    ExactMatrix,
    cohomology,
    nullspace,
    rank,
    reduced_cochain_complex,
    rref,
)
from .quasitoric import (
    Certificate,
    CharMatrix,
    GradedAlgebra,
    KoszulOfAlgebraResult,
    charmatrix_catalog,
    indecomposability_certificate,
    is_lsop,
    koszul_homology_of_algebra,
    quotient_algebra,
    verify_zp_recovery,
)
from .rings import (
    ComparisonResult,
    Fingerprint,
    GorensteinReport,
    KunnethReport,
    SocleReport,
    SplitWitness,
    compare,
    extract_join_from_tensor,
    fingerprint,
    is_gorenstein,
    search_tensor_split,
    socle,
    verify_kunneth,
)
from .tor import (
    BettiTable,
    TorAlgebra,
    TorClass,
    betti_table_hochster,
    koszul_strand_homology,
    tor1_basis,
    tor_algebra,
)

__all__ = [
    "BettiTable",
    "Certificate",
    "CharMatrix",
    "CochainComplex",
    "CohomologyResult",
    "ComparisonResult",
    "DecompositionReport",
    "DEFAULT_FIELDS",
    "ExactMatrix",
    "F2",
    "F3",
    "FieldSpec",
    "Fingerprint",
    "GorensteinReport",
    "GradedAlgebra",
    "KoszulOfAlgebraResult",
    "KunnethReport",
    "PolytopeIncidence",
    "QQ",
    "SimplicialComplex",
    "SocleReport",
    "SplitWitness",
    "TorAlgebra",
    "TorClass",
    "VertexSet",
    "betti_table_hochster",
    "charmatrix_catalog",
    "cohomology",
    "compare",
    "dual_of_polytope",
    "extract_join_from_tensor",
    "fingerprint",
    "indecomposability_certificate",
    "is_gorenstein",
    "is_lsop",
    "koszul_homology_of_algebra",
    "koszul_strand_homology",
    "nullspace",
    "parse_field",
    "quotient_algebra",
    "rank",
    "reduced_cochain_complex",
    "rref",
    "search_tensor_split",
    "socle",
    "tor1_basis",
    "tor_algebra",
    "verify_kunneth",
    "verify_zp_recovery",
]

__version__ = "0.1.0"
