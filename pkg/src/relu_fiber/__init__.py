"""Exact symmetry analysis of shallow ReLU network parameters.

Decides when two parameters of a one-hidden-layer ReLU network realize the
same function, computes canonical minimal forms and stabilizers, enumerates
hidden symmetries (sign flips of cancelling row subsets), and certifies
whether a parameter's fibre is exactly one orbit of the permutation-and-
positive-scaling group.  All arithmetic is exact rational; every decision is
a zero-tolerance predicate.
"""

from .canon import MinimalForm, ZeroReduction, minimal_form, zero_factor_rank, zero_factor_reduce
from .equivalence import (
    Certificate,
    MirroredCertificate,
    ZeroCertificate,
    absorb_zero_row,
    collapse_pair,
    equivalent,
    equivalent_k1,
    flip,
    flip_subsets,
)
from .errors import (
    ArchitectureError,
    DimensionError,
    IndexRangeError,
    InputError,
    MalformedRationalError,
    PreconditionError,
    SchemaError,
    WidthCapError,
)
from .fibre import (
    Certified,
    FibreVerdict,
    ISOMORPHIC,
    NOT_ISOMORPHIC,
    UNKNOWN,
    Violation,
    genericity_certificate,
    genericity_certificate_k1,
    orbit_sample,
    sign_vectors,
    verdict,
)
from .group import (
    GroupElement,
    StabilizerDescription,
    act,
    compose,
    group_element,
    identity_element,
    inverse,
    pair_element,
    same_orbit,
    stabilizer,
    stabilizer_rows,
)
from .param import (
    Architecture,
    Neuron,
    Parameter,
    make_parameter,
    ominus,
    parameter_to_json,
    parse_parameter,
    project,
    serialize_parameter,
    validate_parameter,
)
from .plot import arrangement_svg
from .rational import AffRow, aff_row, format_rational, lex_cmp, lin_dep, parse_rational, semi_dep_ratio
from .realize import activation_pattern, equal_on_samples, evaluate, exact_equal_1d

__version__ = "0.1.0"

__all__ = [
    "AffRow",
    "Architecture",
    "ArchitectureError",
    "Certificate",
    "Certified",
    "DimensionError",
    "FibreVerdict",
    "GroupElement",
    "ISOMORPHIC",
    "IndexRangeError",
    "InputError",
    "MalformedRationalError",
    "MinimalForm",
    "MirroredCertificate",
    "NOT_ISOMORPHIC",
    "Neuron",
    "Parameter",
    "PreconditionError",
    "SchemaError",
    "StabilizerDescription",
    "UNKNOWN",
    "Violation",
    "WidthCapError",
    "ZeroCertificate",
    "ZeroReduction",
    "absorb_zero_row",
    "act",
    "activation_pattern",
    "aff_row",
    "arrangement_svg",
    "collapse_pair",
    "compose",
    "equal_on_samples",
    "equivalent",
    "equivalent_k1",
    "evaluate",
    "exact_equal_1d",
    "flip",
    "flip_subsets",
    "format_rational",
    "genericity_certificate",
    "genericity_certificate_k1",
    "group_element",
    "identity_element",
    "inverse",
    "lex_cmp",
    "lin_dep",
    "make_parameter",
    "minimal_form",
    "ominus",
    "orbit_sample",
    "pair_element",
    "parameter_to_json",
    "parse_parameter",
    "parse_rational",
    "project",
    "same_orbit",
    "semi_dep_ratio",
    "serialize_parameter",
    "sign_vectors",
    "stabilizer",
    "stabilizer_rows",
    "validate_parameter",
    "verdict",
    "zero_factor_rank",
    "zero_factor_reduce",
]
