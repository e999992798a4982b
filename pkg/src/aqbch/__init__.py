"""Asymmetric quantum and subsystem codes from classical BCH and Reed-Solomon codes."""

from __future__ import annotations

from .bounds import BoundReport, check_asym_hamming, check_asym_singleton, check_asym_subsystem_singleton, check_bounds
from .cyclic import (
    CyclicCode,
    DefiningSet,
    bch_bound,
    bch_code,
    bch_dimension_formula,
    cyclic_dual,
    cyclic_from_defining_set,
    cyclotomic_coset,
    cyclotomic_cosets,
    delta_max,
    delta_max_star,
    dual_defining_set,
    rs_code,
)
from .errors import CodeError, PreconditionError, ResourceCapError, TooLargeToEnumerate
from .gf import FieldElement, FiniteField, extension, field_create, field_of_order
from .linear_code import LinearCode, complement_basis, contains, dual, intersection, nullspace, rref
from .poly import Poly, minimal_polynomial
from .quantum import (
    AqecParams,
    Distance,
    SubsystemParams,
    aqec_bch_family,
    aqec_rs,
    asymmetric_subsystem,
    css_aqec,
    css_qec,
    cyclic_subsystem_from_T,
    euclidean_subsystem,
    subsystem_bch_designed,
    subsystem_bch_hermitian_params,
    trade_chain,
    trade_dimension,
)
from .weights import INFINITY, WeightReport, min_weight, relative_min_weight

__all__ = [name for name in dir() if not name.startswith("_") and name not in {"annotations"}]
