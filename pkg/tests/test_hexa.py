import math

import pytest
from hypothesis import given

from neutropenta import (
    ConsistencyViolation,
    HexaVector,
    NeutroTriple,
    Variant,
    penta_of_hexa,
    to_hexa,
    to_penta,
)

from conftest import exact_hexa, triples

I, II = Variant.I, Variant.II


@pytest.mark.parametrize("x, variant, expected", [
    ((0.8, 0.4, 0.5), I, (0.24, 0.24, 0.28, 0, 0, 0.24)),
    ((1, 0, 0), I, (1, 0, 0, 0, 0, 0)),
    ((1, 0, 0), II, (1, 0, 0, 0, 0, 0)),
    ((0.6, 0.5, 0.2), II, (0.4 / 1.3, 0, 0.5 / 1.3, 0.2 / 1.3, 0, 0.2 / 1.3)),
])
def test_to_hexa_worked_points(x, variant, expected):
    assert tuple(to_hexa(NeutroTriple(*x), variant)) == pytest.approx(expected, abs=1e-12)


class TestFold:
    def test_zero_indeterminacy(self):
        # at omega = 0: a = alpha = 0.4, so the fold adds 0.2 to t
        x = NeutroTriple(0.6, 0.0, 0.2)
        q = to_hexa(x, I)
        assert q.a == pytest.approx(0.4)
        p = penta_of_hexa(q, I, source=x)
        assert p.t == pytest.approx(q.t + 0.2, abs=1e-15)
        assert tuple(p) == pytest.approx(tuple(to_penta(x, I)), abs=1e-15)

    def test_no_ambiguity_is_identity(self):
        x = NeutroTriple(1.0, 0.3, 0.0)
        q = to_hexa(x, II)
        assert q.a == 0.0
        assert tuple(penta_of_hexa(q, II)) == tuple(q)[:5]

    def test_variant_two_difference(self):
        x = NeutroTriple(0.6, 0.5, 0.2)
        p, q = to_penta(x, II), to_hexa(x, II)
        assert p.t - q.t == pytest.approx(0.1 / 1.3, abs=1e-12)
        assert penta_of_hexa(q, II, source=x).t == pytest.approx(p.t, abs=1e-12)

    def test_mismatch_raises(self):
        x = NeutroTriple(0.6, 0.5, 0.2)
        with pytest.raises(ConsistencyViolation):
            penta_of_hexa(to_hexa(x, I), II, source=x)

    def test_variant_type(self):
        with pytest.raises(TypeError):
            penta_of_hexa(HexaVector(1, 0, 0, 0, 0, 0), "I")


@pytest.mark.parametrize("variant", [I, II])
class TestProperties:
    @given(x=triples())
    def test_matches_exact_oracle(self, x, variant):
        want = [float(v) for v in exact_hexa(*x, variant.value)]
        assert tuple(to_hexa(x, variant)) == pytest.approx(want, abs=1e-12)

    @given(x=triples())
    def test_partition_and_exclusivity(self, x, variant):
        q = to_hexa(x, variant)
        assert math.fsum(q) == pytest.approx(1.0, abs=1e-12)
        assert q.t * q.f == 0.0
        assert q.u * q.c == 0.0
        assert all(0.0 <= v <= 1.0 for v in q)
        assert sum(v > 0 for v in q) <= 4

    @given(x=triples())
    def test_shares_h_u_c_with_penta(self, x, variant):
        p, q = to_penta(x, variant), to_hexa(x, variant)
        assert (q.h, q.u, q.c) == (p.h, p.u, p.c)

    @given(x=triples())
    def test_ambiguity_split(self, x, variant):
        p, q = to_penta(x, variant), to_hexa(x, variant)
        assert p.t + p.f == pytest.approx(q.t + q.f + q.a, abs=1e-12)
        assert tuple(penta_of_hexa(q, variant, source=x)) == pytest.approx(tuple(p), abs=1e-12)
