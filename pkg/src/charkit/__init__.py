"""charkit: exact character theory for finite permutation groups.

Computes exact character tables over cyclotomic fields, classifies
irreducible characters (primitive / quasi-primitive / full vanishing-off /
monomial), and runs an exhaustive verification suite of classical
statements about those classes over a catalog of small groups.
"""

__version__ = "0.1.0"

from .catalog import parse_group
from .chartab import CharacterTable, character_table, class_mult_coefficients
from .classfun import (ClassFunction, OrbitData, decompose, induce,
                       inner_product, linear_characters_with_kernel_containing,
                       orbit_and_stabilizer, restrict, trivial_character,
                       vanishing_off_subgroup)
from .classify import (ClassificationReport, GroupContext, classify_group,
                       has_full_vanishing_off, is_primitive,
                       is_quasi_primitive, monomial_witness)
from .config import Config
from .cyclotomic import Cyclotomic, rational, root_of_unity
from .errors import (CapExceeded, CharkitError, GroupMismatch, NotACharacter,
                     ParseError)
from .kernels import BACKEND as KERNEL_BACKEND
from .permgroup import (ConjugacyClass, PermGroup, SubgroupRecord,
                        class_fusion, derived_series, order_and_membership,
                        subgroups_up_to_conjugacy)
from .verify import (ALL_CHECK_IDS, DEFAULT_CATALOG, CheckResult, run_check,
                     run_suite)

__all__ = [
    "__version__", "KERNEL_BACKEND",
    "parse_group", "PermGroup", "SubgroupRecord", "ConjugacyClass",
    "order_and_membership", "derived_series", "subgroups_up_to_conjugacy",
    "class_fusion",
    "Cyclotomic", "rational", "root_of_unity",
    "CharacterTable", "character_table", "class_mult_coefficients",
    "ClassFunction", "OrbitData", "inner_product", "restrict", "induce",
    "decompose", "vanishing_off_subgroup", "trivial_character",
    "linear_characters_with_kernel_containing", "orbit_and_stabilizer",
    "GroupContext", "ClassificationReport", "classify_group", "is_primitive",
    "is_quasi_primitive", "has_full_vanishing_off", "monomial_witness",
    "run_check", "run_suite", "CheckResult", "ALL_CHECK_IDS",
    "DEFAULT_CATALOG",
    "Config",
    "CharkitError", "ParseError", "CapExceeded", "GroupMismatch",
    "NotACharacter",
]
