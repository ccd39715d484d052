"""Finite-field tower algebra: minimal polynomials and linear complexity of
linear recurring sequences over subfields.

The heavy lifting lives in the compiled extension ``fqlc._core``; this package
re-exports its public surface.
"""

from fqlc._core import (  # noqa: F401
    BoundReport,
    ClassRow,
    Element,
    Error,
    Factorization,
    Level,
    MultiSequence,
    Poly,
    Sequence,
    SigmaClass,
    SigmaClassPartition,
    SigmaOrbit,
    SubfieldResult,
    Tower,
    VerifyMismatch,
    VerifyReport,
    admissible_h,
    berlekamp_massey,
    bound_tightness,
    decompose_by_coprime_factors,
    decompose_to_base,
    derivative,
    distinct_degree_split,
    divrem,
    embed,
    embed_poly,
    enumerate_admissible_h,
    equal_degree_split,
    eval,
    factor_canonical,
    factor_over_extension,
    format_element,
    format_factorization,
    format_poly,
    format_sequence,
    frobenius_q,
    gcd,
    is_irreducible,
    joint_min_poly,
    lcm,
    lfsr_generate,
    linear_complexity_over_base,
    make_monic,
    min_poly_over_base,
    mo_lower_bound,
    orbit,
    orbit_order,
    orbit_product,
    partition_classes,
    powmod,
    project,
    project_poly,
    sigma,
    sigma_iter,
    squarefree_decomposition,
    verify_subfield_minpoly,
)

__version__ = "0.1.0"
