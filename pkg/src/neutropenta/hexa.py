"""Hexa-valued representations: the penta variants with ambiguity split out.

Hesitation, ignorance and contradiction are the same as in the matching
penta variant.  Truth and falsity keep only the net indices ``tau+`` and
``tau-``, so ``t * f == 0`` as well as ``u * c == 0`` and at most four of
the six components are nonzero.
"""

from __future__ import annotations

from .bipolar import decompose
from .core import (
    DEFAULT_TOLERANCE,
    ConsistencyViolation,
    HexaVector,
    NeutroTriple,
    PentaVector,
    TolerancePolicy,
    Variant,
)
from .penta import to_penta


def to_hexa(x: NeutroTriple, variant: Variant) -> HexaVector:
    mu, omega, nu = x
    tau_p, tau_m, alpha, pi, kappa = decompose(mu, nu)
    if variant is Variant.I:
        scale = 1.0 - omega / 2.0
        return HexaVector(
            t=scale * tau_p,
            c=scale * kappa,
            h=(1.0 + alpha) / 2.0 * omega,
            u=scale * pi,
            f=scale * tau_m,
            a=(1.0 - omega) * alpha,
        )
    if variant is Variant.II:
        denom = 1.0 + (1.0 - alpha) * omega
        return HexaVector(
            t=tau_p / denom,
            c=kappa / denom,
            h=omega / denom,
            u=pi / denom,
            f=tau_m / denom,
            a=(1.0 - omega) * alpha / denom,
        )
    raise TypeError(f"variant must be a Variant, got {variant!r}")


def penta_of_hexa(
    x: HexaVector,
    variant: Variant,
    source: NeutroTriple | None = None,
    tol: TolerancePolicy = DEFAULT_TOLERANCE,
) -> PentaVector:
    """Fold ambiguity back into truth and falsity, half to each.

    In both variants the penta truth index exceeds the hexa one by exactly
    ``a / 2`` (same for falsity), so the fold does not depend on
    ``variant``.  When ``source`` is given the result is compared with
    ``to_penta(source, variant)`` and a mismatch larger than
    ``tol.eps_partition`` raises :class:`ConsistencyViolation`.
    """
    if not isinstance(variant, Variant):
        raise TypeError(f"variant must be a Variant, got {variant!r}")
    half = x.a / 2.0
    folded = PentaVector(x.t + half, x.c, x.h, x.u, x.f + half)
    if source is not None:
        expected = to_penta(source, variant)
        gap = max(abs(p - q) for p, q in zip(folded, expected))
        if gap > tol.eps_partition:
            raise ConsistencyViolation(
                f"folded hexa differs from penta transform by {gap!r}"
            )
    return folded
