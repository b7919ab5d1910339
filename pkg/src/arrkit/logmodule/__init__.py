"""Logarithmic derivations and forms, graded degree by degree."""

from .derivation import Derivation, LogForm, MembershipError, delta_p, euler, partial
from .graded import (
    GradedDims, Generators, d_dim, d_dims, d_graded_piece, default_cutoff, free_dims,
    minimal_generators, omega_dim, omega_dims, omega_graded_piece,
)
from .saito import (
    NonMemberError, ProperMultipleError, SaitoCertificate, SaitoError, ZeroDeterminantError,
    certificate_from_json, saito_check, verify_certificate,
)
from .freeness import (
    AddDelRecord, AdditionDeletionError, ChainStep, FitError, FreenessVerdict, ZieglerCoker,
    addition_chain, addition_deletion, check_triple, d0_piece, euler_decompose,
    euler_restriction, freeness_test, infer_exponents, low_rank_exponents, m_star,
    rank2_exponents, restrict_derivation, saito_search, ziegler_coker_dim,
)

__all__ = [name for name in dir() if not name.startswith("_")]
