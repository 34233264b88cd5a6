"""Decomposition of a bipolar pair (mu, nu).

Ignorance and contradiction come first, then ambiguity, then the net
truth/falsity indices; each step only depends on the earlier ones.
"""

from __future__ import annotations

from .core import BipolarProfile, nonneg


def ignorance(mu: float, nu: float) -> float:
    """Unassigned mass, ``1 - min(1, mu + nu)``."""
    return 1.0 - min(1.0, mu + nu)


def contradiction(mu: float, nu: float) -> float:
    """Over-committed mass, ``max(1, mu + nu) - 1``."""
    return max(1.0, mu + nu) - 1.0


def ambiguity(mu: float, nu: float) -> float:
    kappa = contradiction(mu, nu)
    return 2.0 * min(mu - kappa, nu - kappa)


def decompose(mu: float, nu: float) -> BipolarProfile:
    """Return ``(tau_plus, tau_minus, alpha, pi, kappa)``, a partition of unity.

    >>> decompose(0.0, 0.0)
    BipolarProfile(tau_plus=0.0, tau_minus=0.0, alpha=0.0, pi=1.0, kappa=0.0)
    """
    pi = ignorance(mu, nu)
    kappa = contradiction(mu, nu)
    true_part = mu - kappa
    false_part = nu - kappa
    alpha = 2.0 * min(true_part, false_part)
    # the smaller side cancels exactly (2x/2 == x), so one of tau+/tau- is +0.0
    half = alpha / 2.0
    return BipolarProfile(
        nonneg(true_part - half),
        nonneg(false_part - half),
        nonneg(alpha),
        nonneg(pi),
        nonneg(kappa),
    )


def tetra_partition(mu: float, nu: float) -> tuple[float, float, float, float]:
    """Belnap-aligned terms ``(mu - kappa, nu - kappa, pi, kappa)``."""
    pi = ignorance(mu, nu)
    kappa = contradiction(mu, nu)
    return (nonneg(mu - kappa), nonneg(nu - kappa), nonneg(pi), nonneg(kappa))
