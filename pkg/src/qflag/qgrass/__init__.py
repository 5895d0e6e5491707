"""Quantum matrices, quantum minors and quantum Grassmannians in type A."""

from qflag.qgrass.qmatrix import (
    ConfluenceError,
    NCPolynomial,
    QMatrixAlgebra,
    QScalar,
    QuantumMinor,
    build_qmatrix_algebra,
    is_central,
    quantum_determinant,
    quantum_minor,
)
from qflag.qgrass.grassmann import (
    MAX_DEGREE,
    MAX_N,
    ASLReport,
    AxiomResult,
    QuantumGrassmannian,
    StraighteningError,
    m_subsets,
    minor_poset,
    orientation_sign,
    parse_subset,
    poset_isomorphism,
    quantum_grassmannian,
    quasi_commutation_exponents,
    schubert_quotient_dimension,
    straighten_product,
    subset_label,
    subset_leq,
    subset_pairing,
    subset_weight,
    verify_asl_axioms,
)

__all__ = [
    "ASLReport", "AxiomResult", "ConfluenceError", "MAX_DEGREE", "MAX_N", "NCPolynomial",
    "QMatrixAlgebra", "QScalar", "QuantumGrassmannian", "QuantumMinor", "StraighteningError",
    "build_qmatrix_algebra", "is_central", "m_subsets", "minor_poset", "orientation_sign",
    "parse_subset", "poset_isomorphism", "quantum_determinant", "quantum_grassmannian",
    "quantum_minor", "quasi_commutation_exponents", "schubert_quotient_dimension",
    "straighten_product", "subset_label", "subset_leq", "subset_pairing", "subset_weight",
    "verify_asl_axioms",
]
