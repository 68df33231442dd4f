"""OGS and BN-pair canonical forms of PSL_2(q) over finite fields."""

from .decomp import (
    BnForm,
    OgsForm,
    bn_decompose,
    bn_form,
    bn_to_ogs,
    iter_ogs_forms,
    matrix_to_ogs,
    ogs_compose,
    ogs_form,
    ogs_to_bn,
)
from .errors import Psl2Error
from .gf import GF, FieldElement, field_for_order, field_new
from .psl2 import ProjMatrix, element_order, gen_h, gen_s, gen_u, identity, matrix, matrix_from_ints
from .seq import OgsParams, SeqTables, make_params, tables_for
from .verify import run_suite

__all__ = [
    "BnForm",
    "FieldElement",
    "GF",
    "OgsForm",
    "OgsParams",
    "ProjMatrix",
    "Psl2Error",
    "SeqTables",
    "bn_decompose",
    "bn_form",
    "bn_to_ogs",
    "element_order",
    "field_for_order",
    "field_new",
    "gen_h",
    "gen_s",
    "gen_u",
    "identity",
    "iter_ogs_forms",
    "make_params",
    "matrix",
    "matrix_from_ints",
    "matrix_to_ogs",
    "ogs_compose",
    "ogs_form",
    "ogs_to_bn",
    "run_suite",
    "tables_for",
]
