"""Penta- and hexa-valued representations of neutrosophic triples."""

from .algebra5 import (
    complement_primary,
    complement_vec,
    dual_primary,
    dual_vec,
    equivalence_vec,
    intersection_vec,
    negation_primary,
    negation_vec,
    s_implication_vec,
    union_vec,
    unit_vector,
)
from .bipolar import ambiguity, contradiction, decompose, ignorance, tetra_partition
from .core import (
    DEFAULT_TOLERANCE,
    BipolarProfile,
    ConsistencyViolation,
    DiscriminantNegative,
    ExclusivityViolation,
    HexaVector,
    LogicValue5,
    NeutroError,
    NeutroTriple,
    OutOfRange,
    PartitionViolation,
    PentaVector,
    PreconditionViolation,
    TolerancePolicy,
    Variant,
    renormalize,
    validate_hexa,
    validate_penta,
    validate_triple,
)
from .hexa import penta_of_hexa, to_hexa
from .penta import TenTermDecomposition, from_penta, ten_term_decomposition, to_penta

__version__ = "0.1.0"
