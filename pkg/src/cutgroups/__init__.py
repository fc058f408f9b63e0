"""Exact decisions of the cut-property and RS-property for groups, with
integral group ring arithmetic and executable theorem suites."""
from .catalog import build_group, catalog, catalog_spec, default_catalog, emit_spec, parse_spec
from .errors import CutGroupsError
from .groups import (
    FiniteGroup,
    Permutation,
    Subgroup,
    center,
    centralizer,
    conjugacy_classes,
    conjugation_quotient,
    group_from_generators,
    normal_subgroups,
    quotient,
    semidirect,
    subgroup,
)
from .kernels import BACKEND
from .ring import GroupRingElement, bass_unit, delta_product_membership, is_unit, star, theta
from .rs import (
    is_cut,
    is_rs_element,
    is_rs_subgroup,
    pi_primes,
    q_classes,
    r_classes,
    rank_central_units,
    rank_preserved,
)
from .verdict import Verdict

__version__ = "0.1.0"

__all__ = [
    "BACKEND", "CutGroupsError", "FiniteGroup", "GroupRingElement", "Permutation", "Subgroup",
    "Verdict", "bass_unit", "build_group", "catalog", "catalog_spec", "center", "centralizer",
    "conjugacy_classes", "conjugation_quotient", "default_catalog", "delta_product_membership",
    "emit_spec", "group_from_generators", "is_cut", "is_rs_element", "is_rs_subgroup", "is_unit",
    "normal_subgroups", "parse_spec", "pi_primes", "q_classes", "quotient", "r_classes",
    "rank_central_units", "rank_preserved", "semidirect", "star", "subgroup", "theta",
]
