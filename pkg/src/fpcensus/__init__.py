"""Finite-field polynomial statistics toolkit.

Exact F_p[x] arithmetic, irreducibility and factorization-type
machinery, Morse/Geyer certificates, interval censuses with
character-sum verification, and a deterministic irreducible-polynomial
construction with cost instrumentation.
"""

from .ffpoly import (
    MultCounter,
    Poly,
    PrimeModulus,
    count_field_mults,
    discriminant,
    frobenius_power,
    is_prime,
    is_squarefree,
    poly_divrem,
    poly_from_text,
    poly_gcd,
    poly_to_text,
    resultant,
)
from .factor import (
    Factorization,
    FactorizationType,
    divisor_function,
    factorization_type,
    full_factorization,
    moebius,
    rabin_irreducible,
    squarefree_decomposition,
)
from .morse import (
    BadSetReport,
    FamilyShape,
    bad_set,
    critical_value_polynomial,
    decomposition_witness,
    geyer_condition,
    is_morse_polynomial,
    is_morse_rational,
)

__all__ = [
    "MultCounter",
    "Poly",
    "PrimeModulus",
    "count_field_mults",
    "discriminant",
    "frobenius_power",
    "is_prime",
    "is_squarefree",
    "poly_divrem",
    "poly_from_text",
    "poly_gcd",
    "poly_to_text",
    "resultant",
    "Factorization",
    "FactorizationType",
    "divisor_function",
    "factorization_type",
    "full_factorization",
    "moebius",
    "rabin_irreducible",
    "squarefree_decomposition",
    "BadSetReport",
    "FamilyShape",
    "bad_set",
    "critical_value_polynomial",
    "decomposition_witness",
    "geyer_condition",
    "is_morse_polynomial",
    "is_morse_rational",
]
