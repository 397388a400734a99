"""Workbench for entanglement-assisted quantum code parameters.

Finite-field and matrix kernels, classical code wrappers, the standard
entanglement-assisted constructions (CSS-type, Hermitian, concatenation
with length transforms), closed-form bounds and asymptotic rate curves,
and exact random-ensemble machinery, all tied together by a CLI.
"""

__version__ = "0.1.0"

from .codes import ClassicalCode, Distance, dual, hermitian_dual, min_distance
from .concat import (
    audit_tables,
    concatenate,
    expurgate,
    extend,
    load_bundled_tables,
    maximal_entanglement_closure_check,
)
from .eaqecc import (
    EaqeccParams,
    css_construct,
    css_entanglement,
    ea_singleton_defect,
    hermitian_construct,
    hermitian_entanglement,
    parse_params,
)
from .ensemble import EnsembleSpec, ensemble_exhaustive, nt_w_bruteforce, psi_t
from .errors import EaqecError
from .gf import FieldElement, FieldSpec, field_of_order
from .matrix import MatrixGF

__all__ = [
    "ClassicalCode",
    "Distance",
    "EaqecError",
    "EaqeccParams",
    "EnsembleSpec",
    "FieldElement",
    "FieldSpec",
    "MatrixGF",
    "__version__",
    "audit_tables",
    "concatenate",
    "css_construct",
    "css_entanglement",
    "dual",
    "ea_singleton_defect",
    "ensemble_exhaustive",
    "expurgate",
    "extend",
    "field_of_order",
    "hermitian_construct",
    "hermitian_dual",
    "hermitian_entanglement",
    "load_bundled_tables",
    "maximal_entanglement_closure_check",
    "min_distance",
    "nt_w_bruteforce",
    "parse_params",
    "psi_t",
]
