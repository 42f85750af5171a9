__version__ = "0.1.0"

from .errors import (
    SylvesterError,
    InvalidArgumentError,
    PrimeRangeError,
    ResourceLimitError,
    DomainError,
    NotInvertibleError,
    FormulaDomainError,
    PrecisionError,
    ReproductionError,
    ConfigError,
)
from .config import RunConfig, load_config
from .primes import PrimeTable, Factorization, build_table, factorize, nth_primorial
from .ntt import convolve, self_convolve
from .arith import (
    SmfSpec,
    PHI_BAR,
    SYLVESTER,
    PrimePowerValueTable,
    smf_spec,
    smf_eval,
    sylvester,
    phi_bar,
    convolve_prime_power,
    inverse_prime_power,
    dirichlet_inverse_oracle,
    fiber_witnesses,
    accumulation_witness,
)
from .comet import (
    GoldbachCounts,
    CometRecord,
    TwinPrimeConstant,
    goldbach_counts,
    twin_prime_constant,
    hl_estimate,
    big_g,
    crossover_scan,
    verify_crossover_claim,
    comet_emit,
)
from .unitsmod import unit_pairs_brute, unit_pairs_formula, count_unit_pairs, sylvester_identity_check
from .primorial import check_phi_bar_minimality, check_sylvester_maximality, limit_diagnostics
from .violation import CrossoverViolation, ViolationReport
from .workflow import Session

__all__ = [
    "__version__",
    # Errors
    "SylvesterError",
    "InvalidArgumentError",
    "PrimeRangeError",
    "ResourceLimitError",
    "DomainError",
    "NotInvertibleError",
    "FormulaDomainError",
    "PrecisionError",
    "ReproductionError",
    "ConfigError",
    # Configuration and sessions
    "RunConfig",
    "load_config",
    "Session",
    # Primes
    "PrimeTable",
    "Factorization",
    "build_table",
    "factorize",
    "nth_primorial",
    # Convolution
    "convolve",
    "self_convolve",
    # Strongly multiplicative functions
    "SmfSpec",
    "PHI_BAR",
    "SYLVESTER",
    "PrimePowerValueTable",
    "smf_spec",
    "smf_eval",
    "sylvester",
    "phi_bar",
    "convolve_prime_power",
    "inverse_prime_power",
    "dirichlet_inverse_oracle",
    "fiber_witnesses",
    "accumulation_witness",
    # Goldbach comet
    "GoldbachCounts",
    "CometRecord",
    "TwinPrimeConstant",
    "goldbach_counts",
    "twin_prime_constant",
    "hl_estimate",
    "big_g",
    "crossover_scan",
    "verify_crossover_claim",
    "comet_emit",
    "CrossoverViolation",
    "ViolationReport",
    # Unit pairs and primorials
    "unit_pairs_brute",
    "unit_pairs_formula",
    "count_unit_pairs",
    "sylvester_identity_check",
    "check_phi_bar_minimality",
    "check_sylvester_maximality",
    "limit_diagnostics",
]
