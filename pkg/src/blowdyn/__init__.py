"""blowdyn: exact intersection rings of blown-up projective spaces and
entropy bookkeeping for candidate pullback automorphisms."""

from .errors import (
    BlowdynError,
    ConsistencyError,
    DimensionMismatch,
    HypothesisViolation,
    InvalidConfig,
    LengthMismatch,
    NotAmpleCandidate,
    NotUnimodular,
    NotValidated,
    ParseError,
    RingMismatch,
    SchemaError,
    ToleranceUnreachable,
    UnknownAction,
    UnknownClass,
    ZeroClass,
)
from .actions import PullbackAction, ValidationReport, identity_action
from .polys import IntPolynomial, cyclotomic, is_cyclotomic_product
from .ring import BlowupConfig, GradedClass, Mono, RingModel, build_ring
from .spectral import (
    DegreeSequence,
    Enclosure,
    PropertyReport,
    char_poly,
    degree_properties_report,
    directed_decimal,
    dynamical_degrees,
    entropy,
    radius_enclosure,
    spectral_radius,
)
from .positivity import (
    NefAssertion,
    kawamata_nu,
    nef_necessary_check,
    numerical_dimension,
    pf_eigenvector,
    verify_fixed_nef_class,
    weak_fano_report,
)
from .gate import ChainReport, GateVerdict, decide, degree_chain_report
from .document import InputDocument, dumps, load, loads, save

__version__ = "0.1.0"

__all__ = [
    "BlowupConfig",
    "GradedClass",
    "Mono",
    "RingModel",
    "build_ring",
    "PullbackAction",
    "ValidationReport",
    "identity_action",
    "IntPolynomial",
    "cyclotomic",
    "is_cyclotomic_product",
    "DegreeSequence",
    "Enclosure",
    "PropertyReport",
    "char_poly",
    "degree_properties_report",
    "dynamical_degrees",
    "entropy",
    "radius_enclosure",
    "spectral_radius",
    "directed_decimal",
    "NefAssertion",
    "kawamata_nu",
    "nef_necessary_check",
    "numerical_dimension",
    "pf_eigenvector",
    "verify_fixed_nef_class",
    "weak_fano_report",
    "ChainReport",
    "GateVerdict",
    "decide",
    "degree_chain_report",
    "InputDocument",
    "dumps",
    "load",
    "loads",
    "save",
    "BlowdynError",
    "ConsistencyError",
    "DimensionMismatch",
    "HypothesisViolation",
    "InvalidConfig",
    "LengthMismatch",
    "NotAmpleCandidate",
    "NotUnimodular",
    "NotValidated",
    "ParseError",
    "RingMismatch",
    "SchemaError",
    "ToleranceUnreachable",
    "UnknownAction",
    "UnknownClass",
    "ZeroClass",
]
