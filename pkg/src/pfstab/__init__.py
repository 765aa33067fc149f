"""Parafermion stabilizer codes over PF(D, 2n).

Construction, validation, distance and l_con computation, qudit
conversions, exhaustive code search, and an exact dense oracle for small
instances.
"""

from .algebra import PfOperator, lambda_matrix, parse_operator
from .builders import (
    QuditCheckMatrix,
    ToricCode,
    ToricSpec,
    build_clock_chain,
    build_toric,
    code_6_1_3_d7,
    code_8_1_3_d3,
    double_code_d6,
    double_to_css,
    embed_qudit_code,
    five_qutrit_code,
)
from .code import (
    CodeReport,
    DistanceResult,
    InvalidCodeError,
    LconResult,
    PfCode,
    PhaseAssignmentError,
    ValidationFlags,
    analyze,
    canonical_phases,
    centralizer_basis,
    codespace_dim,
    distance,
    group_order,
    is_logical,
    l_con,
    logical_basis,
    syndrome,
    validate,
)
from .codefile import load_code, load_qudit_code, save_code, save_qudit_code
from .oracle import DenseRep, clock_ops, jw_modes, op_matrix, projector, syndrome_sim
from .search import SearchSpec, canonical_equivalence_key, find_codes
from .zmod import ZModMatrix, howell_form, kernel_basis, span_membership, span_order

__version__ = "0.1.0"
