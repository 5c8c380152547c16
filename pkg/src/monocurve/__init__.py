"""Exact Groebner bases for arithmetic-sequence monomial curve ideals,
their first syzygy modules, and oracle-backed verification of both."""

from .generators import (
    GeneratorSet,
    PatilSet,
    epsilon,
    expected_leading_monomials,
    groebner_generators,
    is_standard_shape,
    pairwise_lt_division,
    patil_generators,
    phi_binomial,
    psi_binomial,
    standard_monomials,
    tau,
    verify_groebner_generators,
    verify_ideal_equality,
    verify_minimality,
    verify_standard_monomials,
)
from .polyring import (
    Poly,
    WeightOrder,
    ZeroPolynomialError,
    buchberger,
    curve_image,
    in_curve_ideal,
    normal_form,
    s_polynomial,
    schreyer_syzygies,
    variable_monomial,
)
from .report import CheckResult, VerificationFailure, VerificationReport
from .semigroup import (
    CurveParams,
    GcdError,
    HypothesisError,
    NotMinimalError,
    ParameterError,
    m0_multiple_identity,
    make_params,
    min_multiple_of_m0,
    min_multiple_of_mp,
    mp_multiple_identity,
    parameter_sweep,
    semigroup_contains,
    semigroup_membership,
    verify_minimal_multiples,
    weight,
)
from .syzygy import (
    ModElement,
    ModuleOrder,
    Phi,
    Psi,
    SyzygySet,
    module_normal_form,
    module_s_vector,
    order_monomial,
    relation_image,
    is_relation,
    schreyer_relations,
    syzygy_A,
    syzygy_B,
    syzygy_L,
    syzygy_basis,
    verify_excluded_leading_forms,
    verify_order_projection,
    verify_syzygy_basis,
)

__version__ = "0.1.0"
