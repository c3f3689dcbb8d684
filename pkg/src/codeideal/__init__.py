"""Binomial ideals of linear codes over finite fields, their Gröbner bases, and decoding."""

from .code import LinearCode, distance, parity_check, rref, standard_form, weight
from .decode import (
    DecodeOutcome,
    code_degrevlex_gb,
    compare,
    complete_decode,
    coset_transversal,
    generalized_degrevlex_gb,
    heuristic_decode,
    nearest_codewords_bruteforce,
    oracle_decode,
    predict_heuristic_failure,
)
from .errors import (
    CapExceeded,
    CodeIdealError,
    DegenerateCode,
    DivisionByZero,
    FieldError,
    LengthMismatch,
    MathDomainError,
    NotDivisible,
    NotIrreducible,
    NotPrime,
    NotPrimeField,
    NotPrimitive,
    NotStandardForm,
    NotZeroDimensional,
    ParseError,
    RankDeficient,
    TooLarge,
    WrongOrder,
)
from .field import GF, FieldSpec, GaloisField, build_field
from .groebner import (
    GroebnerBasis,
    buchberger,
    dumps,
    eliminate,
    fglm,
    is_groebner,
    is_reduced,
    is_zero_dimensional,
    loads,
    normal_form,
    reduce_basis,
    spoly,
    standard_monomials,
)
from .ideal import (
    Crossing,
    code_ideal_generators,
    code_ideal_lex_gb,
    code_ideal_via_elimination,
    code_ideal_via_toric_elimination,
    code_toric_gb,
    cross_down,
    cross_up,
    generalized_ideal_generators,
    generalized_lex_gb,
    generalized_lex_gb_prime,
    lift_parity,
    m_vectors,
    phi,
    phi_s,
    restrict_generalized,
    substitute_ones,
    toric_ideal_gb,
    toric_mod_matrix,
)
from .monomial import Binomial, MonomialOrder

__version__ = "0.1.0"
