"""Domain types, validation and tolerance policy.

All value types are immutable ``NamedTuple`` instances so they unpack,
iterate and compare like plain tuples.  Constructors do no checking;
use the ``validate_*`` helpers on untrusted input.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import NamedTuple


class NeutroError(ValueError):
    """Base class for all domain errors raised by this package."""


class OutOfRange(NeutroError):
    def __init__(self, field: str, value: float):
        self.field = field
        self.value = value
        super().__init__(f"OutOfRange({field})")


class PartitionViolation(NeutroError):
    def __init__(self, total: float):
        self.total = total
        super().__init__(f"PartitionViolation(sum={total!r})")


class ExclusivityViolation(NeutroError):
    def __init__(self, product: float):
        self.product = product
        super().__init__(f"ExclusivityViolation(u*c={product!r})")


class DiscriminantNegative(NeutroError):
    def __init__(self, radicand: float):
        self.radicand = radicand
        super().__init__(f"DiscriminantNegative(radicand={radicand!r})")


class PreconditionViolation(NeutroError):
    pass


class ConsistencyViolation(NeutroError):
    pass


@dataclass(frozen=True)
class TolerancePolicy:
    """Tolerances used for partition, exact-zero and round-trip checks."""

    eps_partition: float = 1e-9
    eps_zero: float = 1e-12
    eps_roundtrip: float = 1e-9

    def __post_init__(self):
        for name in ("eps_partition", "eps_zero", "eps_roundtrip"):
            value = getattr(self, name)
            if not value > 0:
                raise ValueError(f"{name} must be strictly positive, got {value!r}")


DEFAULT_TOLERANCE = TolerancePolicy()


class Variant(enum.Enum):
    """Which of the two penta/hexa constructions to use."""

    I = 1
    II = 2

    @classmethod
    def parse(cls, value) -> "Variant":
        if isinstance(value, cls):
            return value
        key = str(value).strip().upper()
        lookup = {"1": cls.I, "I": cls.I, "2": cls.II, "II": cls.II}
        if key not in lookup:
            raise ValueError(f"unknown variant {value!r}")
        return lookup[key]


class LogicValue5(enum.Enum):
    """The five symbolic truth values.  No linear order is defined."""

    T = "t"
    C = "c"
    H = "h"
    U = "u"
    F = "f"

    def __str__(self):
        return self.value

    @classmethod
    def parse(cls, symbol: str) -> "LogicValue5":
        return cls(symbol.strip().lower())


class NeutroTriple(NamedTuple):
    """Primary representation: degrees of truth, indeterminacy, falsity."""

    mu: float
    omega: float
    nu: float


class BipolarProfile(NamedTuple):
    tau_plus: float
    tau_minus: float
    alpha: float
    pi: float
    kappa: float


class PentaVector(NamedTuple):
    """Five-valued partition over (true, contradictory, hesitant, unknown, false)."""

    t: float
    c: float
    h: float
    u: float
    f: float


class HexaVector(NamedTuple):
    """Penta vector with ambiguity ``a`` split off from ``t`` and ``f``."""

    t: float
    c: float
    h: float
    u: float
    f: float
    a: float


PENTA_FIELDS = PentaVector._fields
HEXA_FIELDS = HexaVector._fields


def nonneg(x: float, eps: float = DEFAULT_TOLERANCE.eps_zero) -> float:
    """Snap values in ``[-eps, 0]`` to ``+0.0``; leave everything else alone."""
    if -eps <= x <= 0.0:
        return 0.0
    return x


def clamp_unit(field: str, value: float, eps: float) -> float:
    """Return ``value`` clamped into [0, 1], or raise if it is more than ``eps`` outside."""
    value = float(value)
    # value - 1.0 is exact near 1, unlike the rounded sum 1.0 + eps
    if math.isnan(value) or value < -eps or value - 1.0 > eps:
        raise OutOfRange(field, value)
    if value <= 0.0:
        return 0.0  # also turns -0.0 into +0.0
    if value > 1.0:
        return 1.0
    return value


def validate_triple(mu, omega, nu, tol: TolerancePolicy = DEFAULT_TOLERANCE) -> NeutroTriple:
    eps = tol.eps_zero
    return NeutroTriple(
        clamp_unit("mu", mu, eps),
        clamp_unit("omega", omega, eps),
        clamp_unit("nu", nu, eps),
    )


def _validate_partition(fields, values, tol: TolerancePolicy):
    if len(values) != len(fields):
        raise TypeError(f"expected {len(fields)} components, got {len(values)}")
    clamped = [clamp_unit(name, v, tol.eps_zero) for name, v in zip(fields, values)]
    total = math.fsum(clamped)
    if abs(total - 1.0) > tol.eps_partition:
        raise PartitionViolation(total)
    return clamped


def validate_penta(t, c, h, u, f, tol: TolerancePolicy = DEFAULT_TOLERANCE) -> PentaVector:
    return PentaVector(*_validate_partition(PENTA_FIELDS, (t, c, h, u, f), tol))


def validate_hexa(t, c, h, u, f, a, tol: TolerancePolicy = DEFAULT_TOLERANCE) -> HexaVector:
    return HexaVector(*_validate_partition(HEXA_FIELDS, (t, c, h, u, f, a), tol))


def renormalize(vec):
    """Opt-in repair for noisy external data.

    Negative components are clipped to zero and the rest rescaled so the
    vector sums to one.  Works for both :class:`PentaVector` and
    :class:`HexaVector`.
    """
    clipped = [max(0.0, float(x)) for x in vec]
    total = math.fsum(clipped)
    if total == 0.0:
        raise PartitionViolation(0.0)
    return type(vec)(*(x / total for x in clipped))


def partition_sum(vec) -> float:
    return math.fsum(vec)


# canonical unit vectors
T_UNIT = PentaVector(1.0, 0.0, 0.0, 0.0, 0.0)
C_UNIT = PentaVector(0.0, 1.0, 0.0, 0.0, 0.0)
H_UNIT = PentaVector(0.0, 0.0, 1.0, 0.0, 0.0)
U_UNIT = PentaVector(0.0, 0.0, 0.0, 1.0, 0.0)
F_UNIT = PentaVector(0.0, 0.0, 0.0, 0.0, 1.0)
