"""Feasibility decisions for quaternionic point constructions.

Given a totally real field F, a quadratic extension K = F(sqrt(delta)), and a
conductor ideal N, decide which of the two point constructions applies and
enumerate every admissible quaternion algebra with its Eichler level data.
"""

from .errors import (
    AmbiguousValuation,
    DarmonselError,
    DegreeUnsupported,
    DiscNotCoprime,
    IndexObstruction,
    InputError,
    IsSquare,
    LocalDataInsufficient,
    NormTooLarge,
    NoRealPlace,
    NotIrreducible,
    NotMonic,
    NotTotallyReal,
    OracleMismatch,
    PrecisionExhausted,
    SearchSpaceTooLarge,
    ZeroDelta,
)
from .feasibility import (
    ConductorProfile,
    FeasibilityReport,
    Kind,
    QuaternionAlgebraSpec,
    Reason,
    ReasonCode,
    build_profile,
    check_optimal_embedding_local,
    feasibility_report,
    select_gartner,
    select_greenberg,
    sign_functional_equation,
)
from .fields import (
    IdealFactorization,
    NumberField,
    PrimeIdeal,
    RealPlace,
    factor_ideal,
    parse_field,
    primes_above,
    real_embeddings,
    refine_place,
)
from .oracle import enumerate_admissible
from .quadratic import (
    PlaceType,
    QuadraticExtension,
    classify_conductor,
    classify_finite_prime,
    classify_real_place,
    disc_coprime_to,
    make_extension,
)
from .serialize import (
    InputConfig,
    Options,
    emit_config,
    emit_report,
    parse_config,
    parse_report,
    realize_config,
)

__all__ = [
    "AmbiguousValuation",
    "ConductorProfile",
    "DarmonselError",
    "DegreeUnsupported",
    "DiscNotCoprime",
    "FeasibilityReport",
    "IdealFactorization",
    "IndexObstruction",
    "InputConfig",
    "InputError",
    "IsSquare",
    "Kind",
    "LocalDataInsufficient",
    "NoRealPlace",
    "NormTooLarge",
    "NotIrreducible",
    "NotMonic",
    "NotTotallyReal",
    "NumberField",
    "Options",
    "OracleMismatch",
    "PlaceType",
    "PrecisionExhausted",
    "PrimeIdeal",
    "QuadraticExtension",
    "QuaternionAlgebraSpec",
    "RealPlace",
    "Reason",
    "ReasonCode",
    "SearchSpaceTooLarge",
    "ZeroDelta",
    "build_profile",
    "check_optimal_embedding_local",
    "classify_conductor",
    "classify_finite_prime",
    "classify_real_place",
    "disc_coprime_to",
    "emit_config",
    "emit_report",
    "enumerate_admissible",
    "factor_ideal",
    "feasibility_report",
    "make_extension",
    "parse_config",
    "parse_field",
    "parse_report",
    "primes_above",
    "real_embeddings",
    "realize_config",
    "refine_place",
    "select_gartner",
    "select_greenberg",
    "sign_functional_equation",
]
