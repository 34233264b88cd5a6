"""Seeded invariant suite used by ``neutropenta check``.

Every property is evaluated over a deterministic sample and reduced to
a pass count and the largest violation seen.  Nothing here depends on
wall-clock time, so equal seeds give byte-identical reports.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from itertools import product

from . import algebra5 as alg
from . import logic5
from .bipolar import decompose, ignorance, contradiction
from .core import NeutroTriple, PentaVector, Variant
from .hexa import penta_of_hexa, to_hexa
from .penta import collapse_ten_terms, from_penta, ten_term_decomposition, to_penta

PARTITION_TOL = 1e-12
ROUNDTRIP_TOL = 1e-9
DIAGRAM_TOL = 1e-12
DYADIC_BITS = 10


@dataclass
class PropertyResult:
    name: str
    tolerance: float
    total: int = 0
    passed: int = 0
    max_violation: float = 0.0

    def record(self, violation: float) -> None:
        self.total += 1
        if math.isnan(violation):
            violation = math.inf
        if violation <= self.tolerance:
            self.passed += 1
        if violation > self.max_violation:
            self.max_violation = violation

    @property
    def ok(self) -> bool:
        return self.total > 0 and self.passed == self.total


@dataclass
class Report:
    samples: int
    seed: int
    results: list[PropertyResult] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(r.ok for r in self.results)

    def format(self, version: str | None = None) -> str:
        lines = []
        if version:
            lines.append(f"# neutropenta {version}")
        lines.append(f"# samples={self.samples} seed={self.seed}")
        width = max(len(r.name) for r in self.results)
        for r in self.results:
            status = "PASS" if r.ok else "FAIL"
            lines.append(
                f"{r.name:<{width}}  {status}  {r.passed}/{r.total}"
                f"  max_violation={r.max_violation:.3e}  tol={r.tolerance:.0e}"
            )
        failed = sum(not r.ok for r in self.results)
        lines.append(f"# {len(self.results) - failed} passed, {failed} failed")
        return "\n".join(lines) + "\n"


def cube_grid(step: float = 0.05):
    n = int(math.floor(1.0 / step + 1e-9))
    axis = [round(i * step, 12) for i in range(n + 1)]
    for mu in axis:
        for omega in axis:
            for nu in axis:
                yield NeutroTriple(mu, omega, nu)


def random_triples(rng: random.Random, n: int):
    for _ in range(n):
        yield NeutroTriple(rng.random(), rng.random(), rng.random())


def random_operand(rng: random.Random, bits: int = DYADIC_BITS) -> PentaVector:
    """A random penta vector with ``c * u == 0`` on a dyadic grid.

    Components are multiples of ``2**-bits`` so sums and differences in
    the vector operators are exact and algebraic laws can be checked by
    plain equality.
    """
    scale = 1 << bits
    cuts = sorted(rng.randint(0, scale) for _ in range(3))
    t, mid, h, f = cuts[0], cuts[1] - cuts[0], cuts[2] - cuts[1], scale - cuts[2]
    if rng.random() < 0.5:
        c, u = mid, 0
    else:
        c, u = 0, mid
    return PentaVector(t / scale, c / scale, h / scale, u / scale, f / scale)


def _gap(p, q) -> float:
    return max(abs(a - b) for a, b in zip(p, q))


def _exact(p, q) -> float:
    # 0 when equal as tuples of floats (after -0 normalisation), else the gap
    same = tuple(x + 0.0 for x in p) == tuple(x + 0.0 for x in q)
    return 0.0 if same else max(_gap(p, q), math.ulp(1.0))


def _point_properties():
    return {
        "bipolar.mu+nu+pi-kappa=1": PropertyResult("bipolar.mu+nu+pi-kappa=1", PARTITION_TOL),
        "bipolar.partition": PropertyResult("bipolar.partition", PARTITION_TOL),
        "bipolar.pi*kappa=0": PropertyResult("bipolar.pi*kappa=0", 0.0),
        "bipolar.tau+*tau-=0": PropertyResult("bipolar.tau+*tau-=0", 0.0),
        **{
            f"{space}.{v.name}.{prop}": PropertyResult(f"{space}.{v.name}.{prop}", tol)
            for space, props in (
                ("penta", (("partition", PARTITION_TOL), ("u*c=0", 0.0), ("nonnegative", 0.0),
                           ("roundtrip", ROUNDTRIP_TOL), ("complement_diagram", DIAGRAM_TOL),
                           ("negation_diagram", DIAGRAM_TOL), ("dual_diagram", DIAGRAM_TOL))),
                ("hexa", (("partition", PARTITION_TOL), ("t*f=0", 0.0), ("u*c=0", 0.0),
                          ("nonnegative", 0.0), ("fold_to_penta", DIAGRAM_TOL))),
            )
            for v in Variant
            for prop, tol in props
        },
        "ten_term.partition": PropertyResult("ten_term.partition", PARTITION_TOL),
        "ten_term.collapse=penta.I": PropertyResult("ten_term.collapse=penta.I", DIAGRAM_TOL),
    }


def check_point(x: NeutroTriple, props: dict) -> None:
    mu, omega, nu = x
    pi, kappa = ignorance(mu, nu), contradiction(mu, nu)
    props["bipolar.mu+nu+pi-kappa=1"].record(abs(mu + nu + pi - kappa - 1.0))
    prof = decompose(mu, nu)
    props["bipolar.partition"].record(abs(math.fsum(prof) - 1.0))
    props["bipolar.pi*kappa=0"].record(abs(prof.pi * prof.kappa))
    props["bipolar.tau+*tau-=0"].record(abs(prof.tau_plus * prof.tau_minus))

    for v in Variant:
        key = f"penta.{v.name}."
        p = to_penta(x, v)
        props[key + "partition"].record(abs(math.fsum(p) - 1.0))
        props[key + "u*c=0"].record(abs(p.u * p.c))
        props[key + "nonnegative"].record(max(0.0, -min(p)))
        props[key + "roundtrip"].record(_gap(from_penta(p, v), x))
        props[key + "complement_diagram"].record(
            _gap(to_penta(alg.complement_primary(x), v), alg.complement_vec(p)))
        props[key + "negation_diagram"].record(
            _gap(to_penta(alg.negation_primary(x), v), alg.negation_vec(p)))
        props[key + "dual_diagram"].record(
            _gap(to_penta(alg.dual_primary(x), v), alg.dual_vec(p)))

        key = f"hexa.{v.name}."
        q = to_hexa(x, v)
        props[key + "partition"].record(abs(math.fsum(q) - 1.0))
        props[key + "t*f=0"].record(abs(q.t * q.f))
        props[key + "u*c=0"].record(abs(q.u * q.c))
        props[key + "nonnegative"].record(max(0.0, -min(q)))
        props[key + "fold_to_penta"].record(_gap(penta_of_hexa(q, v), p))

    ten = ten_term_decomposition(x)
    props["ten_term.partition"].record(abs(math.fsum(ten) - 1.0))
    props["ten_term.collapse=penta.I"].record(
        _gap(collapse_ten_terms(ten), to_penta(x, Variant.I)))


def check_algebra(rng: random.Random, n: int) -> list[PropertyResult]:
    names = [
        "vec.closure", "vec.union.idempotent", "vec.intersection.idempotent",
        "vec.union.commutative", "vec.intersection.commutative",
        "vec.union.associative", "vec.intersection.associative",
        "vec.de_morgan", "vec.unary.involution", "vec.unary.composition",
    ]
    res = {name: PropertyResult(name, 0.0) for name in names}
    unary = (alg.complement_vec, alg.negation_vec, alg.dual_vec)
    for _ in range(n):
        a, b, c = random_operand(rng), random_operand(rng), random_operand(rng)
        ab_u, ab_i = alg.union_vec(a, b), alg.intersection_vec(a, b)
        for d in (ab_u, ab_i):
            over = max(0.0, (d.t + d.c + d.u + d.f) - 1.0)
            res["vec.closure"].record(max(over, abs(d.c * d.u), max(0.0, -min(d))))
        res["vec.union.idempotent"].record(_exact(alg.union_vec(a, a), a))
        res["vec.intersection.idempotent"].record(_exact(alg.intersection_vec(a, a), a))
        res["vec.union.commutative"].record(_exact(ab_u, alg.union_vec(b, a)))
        res["vec.intersection.commutative"].record(_exact(ab_i, alg.intersection_vec(b, a)))
        res["vec.union.associative"].record(
            _exact(alg.union_vec(ab_u, c), alg.union_vec(a, alg.union_vec(b, c))))
        res["vec.intersection.associative"].record(
            _exact(alg.intersection_vec(ab_i, c), alg.intersection_vec(a, alg.intersection_vec(b, c))))
        res["vec.de_morgan"].record(max(
            _exact(alg.complement_vec(ab_u),
                   alg.intersection_vec(alg.complement_vec(a), alg.complement_vec(b))),
            _exact(alg.complement_vec(ab_i),
                   alg.union_vec(alg.complement_vec(a), alg.complement_vec(b))),
        ))
        res["vec.unary.involution"].record(max(_exact(op(op(a)), a) for op in unary))
        worst = 0.0
        for i, j in ((0, 1), (1, 0), (0, 2), (2, 0), (1, 2), (2, 1)):
            third = unary[3 - i - j]
            worst = max(worst, _exact(unary[i](unary[j](a)), third(a)))
        res["vec.unary.composition"].record(worst)
    return list(res.values())


def check_tables() -> list[PropertyResult]:
    composed = PropertyResult("logic5.tables_compose", 0.0)
    canonical = PropertyResult("vec.canonical=tables", 0.0)
    binary = {
        "union": (logic5.union_sym, alg.union_vec),
        "intersection": (logic5.intersection_sym, alg.intersection_vec),
        "equivalence": (logic5.equivalence_sym, alg.equivalence_vec),
        "implication": (logic5.s_implication_sym, alg.s_implication_vec),
    }
    unary = {
        "complement": (logic5.complement_sym, alg.complement_vec),
        "negation": (logic5.negation_sym, alg.negation_vec),
        "dual": (logic5.dual_sym, alg.dual_vec),
    }
    for x, y in product(logic5.ORDER, repeat=2):
        composed.record(0.0 if logic5.equivalence_composed(x, y) == logic5.equivalence_sym(x, y) else 1.0)
        composed.record(0.0 if logic5.s_implication_composed(x, y) == logic5.s_implication_sym(x, y) else 1.0)
        for sym_op, vec_op in binary.values():
            got = vec_op(alg.unit_vector(x), alg.unit_vector(y))
            canonical.record(_exact(got, alg.unit_vector(sym_op(x, y))))
    for x in logic5.ORDER:
        for sym_op, vec_op in unary.values():
            canonical.record(_exact(vec_op(alg.unit_vector(x)), alg.unit_vector(sym_op(x))))
    return [composed, canonical]


def run_checks(samples: int, seed: int) -> Report:
    """Run the full invariant suite on ``samples`` random points and operand triples."""
    if samples < 1:
        raise ValueError("samples must be >= 1")
    rng = random.Random(seed)
    props = _point_properties()
    for x in random_triples(rng, samples):
        check_point(x, props)
    report = Report(samples=samples, seed=seed)
    report.results.extend(props.values())
    report.results.extend(check_algebra(rng, samples))
    report.results.extend(check_tables())
    return report
