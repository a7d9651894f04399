"""Exact character sums over finite groups of characters of Hopf presentations."""

from .errors import CharsumError
from .ring import (
    FieldSpec,
    FieldElement,
    cyclotomic,
    extension_field,
    prime_field,
    rational,
    roots_of_unity,
)
from .group import FiniteGroup, closure, quotient_group
from .hopf import (
    Character,
    HopfPresentation,
    Monomial,
    char_eval,
    character_group,
    convolve,
    validate_character,
)
from .sums import (
    SigmaReport,
    membership_GPi,
    sigma_auto,
    sigma_brute,
    sigma_direct_product,
    sigma_grouplike,
    sigma_product_general,
    sigma_skew,
    sigma_via_quotient,
    stabilizer_in_Pi,
    verify_convolution_identities,
)
from .modular import (
    binomial_skip_sum,
    multinomial_mod,
    sigma_abelian_closed,
    sigma_abelian_split,
    sigma_pseudo_charp,
    varphi,
)
from .constructions import construct_abelian, construct_cyclic, construct_lie
from .hecke import RootSystemData, killed_roots, sigma_alpha_power, smash_weights

__version__ = "0.1.0"

__all__ = [
    "Character",
    "CharsumError",
    "FieldElement",
    "FieldSpec",
    "FiniteGroup",
    "HopfPresentation",
    "Monomial",
    "RootSystemData",
    "SigmaReport",
    "binomial_skip_sum",
    "char_eval",
    "character_group",
    "closure",
    "construct_abelian",
    "construct_cyclic",
    "construct_lie",
    "convolve",
    "cyclotomic",
    "extension_field",
    "killed_roots",
    "membership_GPi",
    "multinomial_mod",
    "prime_field",
    "quotient_group",
    "rational",
    "roots_of_unity",
    "sigma_abelian_closed",
    "sigma_abelian_split",
    "sigma_alpha_power",
    "sigma_auto",
    "sigma_brute",
    "sigma_direct_product",
    "sigma_grouplike",
    "sigma_product_general",
    "sigma_pseudo_charp",
    "sigma_skew",
    "sigma_via_quotient",
    "smash_weights",
    "stabilizer_in_Pi",
    "validate_character",
    "varphi",
    "verify_convolution_identities",
]
