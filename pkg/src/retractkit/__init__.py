"""Exact tools for automorphisms, retracts and test elements in rank two.

Everything is computed over the rationals with Fraction arithmetic; the
two supported rings are the polynomial ring K[x, y] and the free
associative algebra K<x, y>.
"""

from .algebra import (
    COMM,
    NONCOMM,
    CommPoly,
    NCPoly,
    Poly,
    Scalar,
    UniPoly,
    abelianize,
    commutator,
    deg,
    divides,
    eval_uni,
    in_commutator_ideal,
    jacobian,
    leading_form,
    proportionality,
    ring_of,
    substitute,
    wdeg,
)
from .autorec import (
    ElementaryAuto,
    TameDecomposition,
    commutator_criterion,
    is_automorphism,
    random_automorphism,
    random_tame_factors,
    tame_decompose,
)
from .endo import (
    Endo,
    apply,
    compose,
    fixes,
    identity,
    is_idempotent,
    is_identity,
    is_injective,
    power,
)
from .errors import (
    ConstantGenerator,
    DegreeOfZero,
    DivisibilityUnexpected,
    DivisorZero,
    GeneratorNotFound,
    IdentityImproper,
    InvalidDegree,
    NotFoundWithinBound,
    NotIdempotent,
    ParseError,
    PreconditionViolated,
    RetractKitError,
    RingMismatch,
    TermBudgetExceeded,
)
from .estimates import (
    EstimateReport,
    FuzzSummary,
    OrankWitness,
    bound_comm,
    bound_noncomm,
    check_commutator_bound,
    check_jacobian_bound,
    fuzz_estimates,
    growth_comm,
    growth_noncomm,
    orank_witness,
)
from .exprio import (
    endo_from_dict,
    endo_from_json,
    endo_to_dict,
    parse_poly,
    parse_uni,
    print_poly,
    print_uni,
)
from .retracts import (
    DecompositionResult,
    RetractionCertificate,
    RetractionPower,
    RetractionSearch,
    canonical_form_check,
    decompose_inner,
    find_retraction_power,
    homogeneous_root,
    membership,
    search_retraction_detailed,
    search_retraction_for,
    verify_retraction,
)
from .testelem import (
    Certification,
    InjectionReport,
    OrbitCounterexampleReport,
    SearchConfig,
    certify_test_element,
    is_affine_in_generator,
    orbit_falsifier,
    verify_theorem_injection,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
