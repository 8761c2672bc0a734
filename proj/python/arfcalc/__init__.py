"""Exact Arf invariants in algebraic L-theory over Z and Z[x].

Thin re-export of the compiled extension. Polynomials are lists of
integer coefficients in ascending degree; matrices are lists of rows of
polynomials.
"""

from _arfcalc import (  # noqa: F401
    arf_democratic,
    boundary_q3_to_l2,
    canonical_order2_form,
    characteristic_element,
    classical_arf,
    e8,
    eval_lambda,
    eval_mu,
    generalized_arf,
    lgroups_table,
    linking_arf,
    poly_add,
    poly_mul,
    reduce_q0_zx,
    reduce_q1_zx,
    reduce_q3_zx,
    reduce_qn_z,
    signature,
    signature_mod8,
    tate_compose,
    tate_decompose,
    unil_table,
    verify_reduction,
)

__all__ = [
    "arf_democratic",
    "boundary_q3_to_l2",
    "canonical_order2_form",
    "characteristic_element",
    "classical_arf",
    "e8",
    "eval_lambda",
    "eval_mu",
    "generalized_arf",
    "lgroups_table",
    "linking_arf",
    "poly_add",
    "poly_mul",
    "reduce_q0_zx",
    "reduce_q1_zx",
    "reduce_q3_zx",
    "reduce_qn_z",
    "signature",
    "signature_mod8",
    "tate_compose",
    "tate_decompose",
    "unil_table",
    "verify_reduction",
]
