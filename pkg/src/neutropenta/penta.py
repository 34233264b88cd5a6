"""Penta-valued forward and inverse transforms, plus the ten-term view.

Variant I spreads the indeterminacy-weighted terms of the bipolar
partition evenly over its neighbours; Variant II adds indeterminacy as
an extra term and renormalises by ``1 + (1 - alpha) * omega``.
"""

from __future__ import annotations

import math
from typing import NamedTuple

from .bipolar import decompose
from .core import (
    DEFAULT_TOLERANCE,
    DiscriminantNegative,
    ExclusivityViolation,
    NeutroTriple,
    OutOfRange,
    PentaVector,
    TolerancePolicy,
    Variant,
    nonneg,
    validate_penta,
)


class TenTermDecomposition(NamedTuple):
    weak_true: float
    weak_false: float
    neutral: float
    saturated: float
    hesitant_part: float
    true_part: float
    false_part: float
    unknown_part: float
    contradictory_part: float
    ambiguous_part: float


def _to_penta_1(mu, omega, nu) -> PentaVector:
    tau_p, tau_m, alpha, pi, kappa = decompose(mu, nu)
    scale = 1.0 - omega / 2.0
    spill = omega * alpha / 4.0
    return PentaVector(
        t=nonneg(scale * (mu - kappa) - spill),
        c=scale * kappa,
        h=(1.0 + alpha) / 2.0 * omega,
        u=scale * pi,
        f=nonneg(scale * (nu - kappa) - spill),
    )


def _to_penta_2(mu, omega, nu) -> PentaVector:
    tau_p, tau_m, alpha, pi, kappa = decompose(mu, nu)
    denom = 1.0 + (1.0 - alpha) * omega
    half_amb = alpha * omega / 2.0
    return PentaVector(
        t=nonneg((mu - kappa - half_amb) / denom),
        c=kappa / denom,
        h=omega / denom,
        u=pi / denom,
        f=nonneg((nu - kappa - half_amb) / denom),
    )


def to_penta(x: NeutroTriple, variant: Variant) -> PentaVector:
    """Map a primary triple to its penta-valued partition.

    The result always sums to one and has ``u * c == 0``, since at most one
    of ignorance and contradiction is nonzero.
    """
    mu, omega, nu = x
    if variant is Variant.I:
        return _to_penta_1(mu, omega, nu)
    if variant is Variant.II:
        return _to_penta_2(mu, omega, nu)
    raise TypeError(f"variant must be a Variant, got {variant!r}")


def _radicand_guard(radicand: float, tol: TolerancePolicy) -> float:
    if radicand < -tol.eps_zero:
        raise DiscriminantNegative(radicand)
    return max(radicand, 0.0)


def _unit_or_raise(field: str, value: float, tol: TolerancePolicy) -> float:
    if value < -tol.eps_roundtrip or value > 1.0 + tol.eps_roundtrip:
        # a partition vector outside the image of the forward map
        raise OutOfRange(field, value)
    return min(1.0, max(0.0, value))


def from_penta(
    p: PentaVector, variant: Variant, tol: TolerancePolicy = DEFAULT_TOLERANCE
) -> NeutroTriple:
    """Recover ``(mu, omega, nu)`` from a penta vector.

    Only defined on the image of :func:`to_penta`: the vector must be a
    partition, have ``u * c == 0`` and a nonnegative discriminant.

    Raises:
        PartitionViolation, OutOfRange: ``p`` is not a valid partition.
        ExclusivityViolation: ``u * c`` exceeds ``tol.eps_zero``.
        DiscriminantNegative: the square-root argument is below ``-tol.eps_zero``.
    """
    t, c, h, u, f = validate_penta(*p, tol=tol)
    if u * c > tol.eps_zero:
        raise ExclusivityViolation(u * c)

    # The printed radicands cancel badly near zero (sqrt turns 1e-16 into
    # 1e-8), so the guard uses them as printed while the root is taken of
    # an equal sum of nonnegative terms.
    if variant is Variant.I:
        # min(t, f) is symmetric, so t == f needs no tie-break
        m = min(t, f)
        beta = 0.5 + h + m
        _radicand_guard(beta * beta - 2.0 * h, tol)
        root = math.sqrt((0.5 - h) ** 2 + m * (1.0 + 2.0 * h + m))
        denom = 2.0 - beta + root
        omega = beta - root
    elif variant is Variant.II:
        spread = abs(t - f) + abs(c - u)
        _radicand_guard(1.0 - 4.0 * h * spread, tol)
        # equal to 1 - 4h*spread when t + c + h + u + f == 1
        root = math.sqrt((1.0 - 2.0 * h) ** 2 + 8.0 * h * (min(t, f) + min(c, u)))
        denom = 1.0 + root
        omega = 2.0 * h / denom
    else:
        raise TypeError(f"variant must be a Variant, got {variant!r}")

    mu = 0.5 + (t - f + c - u) / denom
    nu = 0.5 + (f - t + c - u) / denom
    return NeutroTriple(
        _unit_or_raise("mu", mu, tol),
        _unit_or_raise("omega", omega, tol),
        _unit_or_raise("nu", nu, tol),
    )


def ten_term_decomposition(x: NeutroTriple) -> TenTermDecomposition:
    """Expand ``(tau+ + tau- + alpha + pi + kappa) * (omega + 1 - omega)``."""
    mu, omega, nu = x
    tau_p, tau_m, alpha, pi, kappa = decompose(mu, nu)
    rest = 1.0 - omega
    return TenTermDecomposition(
        weak_true=omega * tau_p,
        weak_false=omega * tau_m,
        neutral=omega * pi,
        saturated=omega * kappa,
        hesitant_part=omega * alpha,
        true_part=rest * tau_p,
        false_part=rest * tau_m,
        unknown_part=rest * pi,
        contradictory_part=rest * kappa,
        ambiguous_part=rest * alpha,
    )


def collapse_ten_terms(d: TenTermDecomposition) -> PentaVector:
    """Fold the ten terms into five.

    Each upper-square term gives half of itself to hesitation and keeps
    the other half; ambiguity is split evenly between true and false.
    This reproduces ``to_penta(x, Variant.I)`` up to rounding.
    """
    return PentaVector(
        t=d.true_part + d.weak_true / 2.0 + d.ambiguous_part / 2.0,
        c=d.contradictory_part + d.saturated / 2.0,
        h=d.hesitant_part
        + (d.weak_true + d.weak_false + d.neutral + d.saturated) / 2.0,
        u=d.unknown_part + d.neutral / 2.0,
        f=d.false_part + d.weak_false / 2.0 + d.ambiguous_part / 2.0,
    )
