"""Binary codes, support designs and the Assmus-Mattson extra-design criteria."""

__version__ = "0.1.0"

from .catalog import STANDARD_CATALOG, catalog_code
from .criteria import (
    am_designs_verified,
    am_t_values,
    criterion,
    criterion_five,
    criterion_four,
    find_design_weights,
    zdual_expansion,
)
from .designs import SupportDesign, check_t_design_direct, check_t_design_harmonic, delta_s, support_design
from .enumerators import WeightEnumerator, krawtchouk, macwilliams_transform
from .exceptions import BudgetExceeded, DomainError, InconsistencyError
from .feasibility import conjecture_probe, lemma_scan, putative_enumerator, scan, scan_nonexistence
from .gf2 import BinaryCode, code_profile, dual_code, parse_generator_matrix, weight_distribution
from .harmonics import HarmonicFunction, bachoc_transform, harm_basis, harmonic_weight_enumerator, tilde_evaluate

__all__ = [
    "STANDARD_CATALOG",
    "BinaryCode",
    "BudgetExceeded",
    "DomainError",
    "HarmonicFunction",
    "InconsistencyError",
    "SupportDesign",
    "WeightEnumerator",
    "am_designs_verified",
    "am_t_values",
    "bachoc_transform",
    "catalog_code",
    "check_t_design_direct",
    "check_t_design_harmonic",
    "code_profile",
    "conjecture_probe",
    "criterion",
    "criterion_five",
    "criterion_four",
    "delta_s",
    "dual_code",
    "find_design_weights",
    "harm_basis",
    "harmonic_weight_enumerator",
    "krawtchouk",
    "lemma_scan",
    "macwilliams_transform",
    "parse_generator_matrix",
    "putative_enumerator",
    "scan",
    "scan_nonexistence",
    "support_design",
    "tilde_evaluate",
    "weight_distribution",
    "zdual_expansion",
]
