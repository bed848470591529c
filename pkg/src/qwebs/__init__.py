"""Colored sl(N) web calculus over Z[q,q^-1] with a matrix factorization backend."""

from .qpoly import (
    LaurentPoly,
    MultiPoly,
    NonExactDivision,
    PolyRing,
    bar,
    exact_divide,
    power_sum_in_e,
    qbinom,
    qint,
    x_series_component,
)
from .webs import (
    GlWeight,
    Ladder,
    NonIntegral,
    Rung,
    SlWeight,
    Star,
    WebLinComb,
    WeightMismatch,
    Zero,
    compose,
    d_norm,
    enumerate_weights,
    highest_weight_ladder,
    make_ladder,
    reflect,
)
from .repfun import (
    FockBasis,
    QMatrix,
    dump_matrix,
    ev_closed,
    ladder_matrix,
    lincomb_matrix,
    merge_matrix,
    rung_matrix,
    split_matrix,
    web_form,
)
from .relations import (
    NegativeCoefficient,
    RelationInstance,
    reduce_to_highest,
    relation_instances,
    simplify,
    verify_relation,
    verify_report,
)
from .mfcore import (
    GradedRing,
    IrreducibleToFinite,
    KoszulMF,
    TwoPeriodicComplex,
    check_potential,
    compile_web,
    dual,
    dump_mf,
    exclude_variables,
    ext_qdim,
    koszul,
    mf_edge,
    mf_merge,
    mf_split,
    tensor,
    tensor_all,
    totalization,
)

__all__ = [
    "LaurentPoly",
    "MultiPoly",
    "NonExactDivision",
    "PolyRing",
    "bar",
    "exact_divide",
    "power_sum_in_e",
    "qbinom",
    "qint",
    "x_series_component",
    "GlWeight",
    "Ladder",
    "NonIntegral",
    "Rung",
    "SlWeight",
    "Star",
    "WebLinComb",
    "WeightMismatch",
    "Zero",
    "compose",
    "d_norm",
    "enumerate_weights",
    "highest_weight_ladder",
    "make_ladder",
    "reflect",
    "FockBasis",
    "QMatrix",
    "dump_matrix",
    "ev_closed",
    "ladder_matrix",
    "lincomb_matrix",
    "merge_matrix",
    "rung_matrix",
    "split_matrix",
    "web_form",
    "NegativeCoefficient",
    "RelationInstance",
    "reduce_to_highest",
    "relation_instances",
    "simplify",
    "verify_relation",
    "verify_report",
    "GradedRing",
    "IrreducibleToFinite",
    "KoszulMF",
    "TwoPeriodicComplex",
    "check_potential",
    "compile_web",
    "dual",
    "dump_mf",
    "exclude_variables",
    "ext_qdim",
    "koszul",
    "mf_edge",
    "mf_merge",
    "mf_split",
    "tensor",
    "tensor_all",
    "totalization",
]
