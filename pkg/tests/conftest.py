from fractions import Fraction

from hypothesis import strategies as st

from neutropenta import NeutroTriple, PentaVector

unit = st.floats(min_value=0.0, max_value=1.0, allow_nan=False, allow_infinity=False)


@st.composite
def triples(draw):
    return NeutroTriple(draw(unit), draw(unit), draw(unit))


@st.composite
def operands(draw):
    """Penta vectors with c*u == 0 and nonnegative hesitation."""
    cuts = sorted(draw(unit) for _ in range(3))
    t, mid, h, f = cuts[0], cuts[1] - cuts[0], cuts[2] - cuts[1], 1.0 - cuts[2]
    if draw(st.booleans()):
        return PentaVector(t, mid, h, 0.0, f)
    return PentaVector(t, 0.0, h, mid, f)


# Exact rational oracle, written straight from the definitions and kept
# apart from the float code path.  Variant I goes through the ten-term
# redistribution rather than the closed-form result.

def exact_bipolar(mu, nu):
    mu, nu = Fraction(mu), Fraction(nu)
    pi = 1 - min(1, mu + nu)
    kappa = max(1, mu + nu) - 1
    alpha = 2 * min(mu - kappa, nu - kappa)
    return (mu - kappa - alpha / 2, nu - kappa - alpha / 2, alpha, pi, kappa)


def exact_penta(mu, omega, nu, variant):
    tp, tm, alpha, pi, kappa = exact_bipolar(mu, nu)
    w = Fraction(omega)
    if variant == 1:
        return (
            (1 - w) * tp + w * tp / 2 + (1 - w) * alpha / 2,
            (1 - w) * kappa + w * kappa / 2,
            w * alpha + (w * tp + w * tm + w * pi + w * kappa) / 2,
            (1 - w) * pi + w * pi / 2,
            (1 - w) * tm + w * tm / 2 + (1 - w) * alpha / 2,
        )
    mu, nu = Fraction(mu), Fraction(nu)
    num = (mu - kappa - alpha * w / 2, kappa, w, pi, nu - kappa - alpha * w / 2)
    denom = sum(num)
    return tuple(x / denom for x in num)


def exact_hexa(mu, omega, nu, variant):
    tp, tm, alpha, pi, kappa = exact_bipolar(mu, nu)
    w = Fraction(omega)
    if variant == 1:
        s = 1 - w / 2
        return (s * tp, s * kappa, (1 + alpha) / 2 * w, s * pi, s * tm, (1 - w) * alpha)
    num = (tp, kappa, w, pi, tm, (1 - w) * alpha)
    denom = sum(num)
    return tuple(x / denom for x in num)


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
