"""Finite quasigroup toolkit: linearity classes over groups, parastrophes,
multiplication and inner mapping groups, and endotopy semigroups, all
cross-checked against brute-force enumeration."""

from .core import PermGroup, closure_generate, compose, identity, invert, is_latin
from .errors import LqgError
from .groups import CATALOG_NAMES, FiniteGroup, catalog_group, validate_group
from .isotopy import Isotopy, apply_isotopy, find_isomorphism, lp_isotope
from .linear_forms import KINDS, LinearSpec, build, is_medial, is_t_quasigroup, recognize
from .parastrophy import TAGS, parastrophe
from .quasigroups import Quasigroup, subquasigroups
from .endotopy import EndotopySemigroup, endomorphisms_q, endotopies_bruteforce, endotopies_closed_form
from .mapping_groups import inner_group_bruteforce, multiplication_group

__all__ = [
    "CATALOG_NAMES",
    "EndotopySemigroup",
    "FiniteGroup",
    "Isotopy",
    "KINDS",
    "LinearSpec",
    "LqgError",
    "PermGroup",
    "Quasigroup",
    "TAGS",
    "apply_isotopy",
    "build",
    "catalog_group",
    "closure_generate",
    "compose",
    "endomorphisms_q",
    "endotopies_bruteforce",
    "endotopies_closed_form",
    "find_isomorphism",
    "identity",
    "inner_group_bruteforce",
    "invert",
    "is_latin",
    "is_medial",
    "is_t_quasigroup",
    "lp_isotope",
    "multiplication_group",
    "parastrophe",
    "recognize",
    "subquasigroups",
    "validate_group",
]
