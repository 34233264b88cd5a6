"""Continuous operators on penta vectors and on primary triples.

Union and intersection work on any vector with ``t + c + u + f <= 1``
and ``c * u == 0``; both properties are preserved.  Hesitation is always
recomputed as the remaining mass.
"""

from __future__ import annotations

from .core import (
    C_UNIT,
    DEFAULT_TOLERANCE,
    F_UNIT,
    H_UNIT,
    T_UNIT,
    U_UNIT,
    LogicValue5,
    NeutroTriple,
    PentaVector,
    PreconditionViolation,
    TolerancePolicy,
)

UNIT_VECTORS = {
    LogicValue5.T: T_UNIT,
    LogicValue5.C: C_UNIT,
    LogicValue5.H: H_UNIT,
    LogicValue5.U: U_UNIT,
    LogicValue5.F: F_UNIT,
}


def unit_vector(value: LogicValue5) -> PentaVector:
    return UNIT_VECTORS[value]


def as_logic_value(p: PentaVector) -> LogicValue5 | None:
    """The symbolic value of a canonical unit vector, or None for mixtures."""
    for value, unit in UNIT_VECTORS.items():
        if tuple(p) == tuple(unit):
            return value
    return None


def check_operand(p: PentaVector, tol: TolerancePolicy = DEFAULT_TOLERANCE) -> None:
    t, c, h, u, f = p
    if min(t, c, u, f) < -tol.eps_zero:
        raise PreconditionViolation(f"negative component in {tuple(p)}")
    if (t + f) + (c + u) > 1.0 + tol.eps_zero:
        raise PreconditionViolation(f"t+c+u+f exceeds 1 in {tuple(p)}")
    if c * u > tol.eps_zero:
        raise PreconditionViolation(f"c*u = {c * u!r} is not zero in {tuple(p)}")


def _assemble(t, c, u, f) -> PentaVector:
    # (t + f) + (c + u) is symmetric under t<->f and c<->u, which keeps
    # commutativity and De Morgan exact in floating point
    h = 1.0 - ((t + f) + (c + u))
    return PentaVector(t + 0.0, c + 0.0, h + 0.0, u + 0.0, f + 0.0)


def union_vec(a: PentaVector, b: PentaVector, tol: TolerancePolicy = DEFAULT_TOLERANCE) -> PentaVector:
    """Disjunction: max on truth, min on falsity."""
    check_operand(a, tol)
    check_operand(b, tol)
    f = min(a.f, b.f)
    return _assemble(
        t=max(a.t, b.t),
        c=min(a.c + a.f, b.c + b.f) - f,
        u=min(a.u + a.f, b.u + b.f) - f,
        f=f,
    )


def intersection_vec(a: PentaVector, b: PentaVector, tol: TolerancePolicy = DEFAULT_TOLERANCE) -> PentaVector:
    """Conjunction: min on truth, max on falsity."""
    check_operand(a, tol)
    check_operand(b, tol)
    t = min(a.t, b.t)
    return _assemble(
        t=t,
        c=min(a.c + a.t, b.c + b.t) - t,
        u=min(a.u + a.t, b.u + b.t) - t,
        f=max(a.f, b.f),
    )


def complement_vec(x: PentaVector) -> PentaVector:
    t, c, h, u, f = x
    return PentaVector(f, c, h, u, t)


def negation_vec(x: PentaVector) -> PentaVector:
    t, c, h, u, f = x
    return PentaVector(f, u, h, c, t)


def dual_vec(x: PentaVector) -> PentaVector:
    t, c, h, u, f = x
    return PentaVector(t, u, h, c, f)


def equivalence_vec(a: PentaVector, b: PentaVector, tol: TolerancePolicy = DEFAULT_TOLERANCE) -> PentaVector:
    """Vector lift of ``(~a | b) & (a | ~b)``, built from the operators above."""
    return intersection_vec(
        union_vec(complement_vec(a), b, tol),
        union_vec(a, complement_vec(b), tol),
        tol,
    )


def s_implication_vec(a: PentaVector, b: PentaVector, tol: TolerancePolicy = DEFAULT_TOLERANCE) -> PentaVector:
    """Vector lift of ``~a | b``."""
    return union_vec(complement_vec(a), b, tol)


def complement_primary(x: NeutroTriple) -> NeutroTriple:
    mu, omega, nu = x
    return NeutroTriple(nu, omega, mu)


def negation_primary(x: NeutroTriple) -> NeutroTriple:
    mu, omega, nu = x
    return NeutroTriple(1.0 - mu, omega, 1.0 - nu)


def dual_primary(x: NeutroTriple) -> NeutroTriple:
    mu, omega, nu = x
    return NeutroTriple(1.0 - nu, omega, 1.0 - mu)
