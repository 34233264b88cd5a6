"""Truth tables of the five-valued logic, checked cell by cell."""

from itertools import product

import pytest

from neutropenta.core import LogicValue5
from neutropenta.logic5 import (
    ORDER,
    complement_sym,
    dual_sym,
    equivalence_composed,
    equivalence_sym,
    format_table,
    intersection_sym,
    negation_sym,
    s_implication_composed,
    s_implication_sym,
    union_sym,
)

T, C, H, U, F = ORDER
V = LogicValue5.parse

# Row-major copies of the printed tables, kept separate from the module's
# own golden strings so a transcription slip on either side shows up.
PRINTED = {
    union_sym: ["ttttt", "tchhc", "thhhh", "thhuu", "tchuf"],
    intersection_sym: ["tchuf", "cchhf", "hhhhf", "uhhuf", "fffff"],
    equivalence_sym: ["tchuf", "cchhc", "hhhhh", "uhhuu", "fchut"],
    s_implication_sym: ["tchuf", "tchhc", "thhhh", "thhuu", "ttttt"],
}


@pytest.mark.parametrize("op", list(PRINTED), ids=lambda f: f.__name__)
def test_binary_tables(op):
    rows = PRINTED[op]
    for i, x in enumerate(ORDER):
        for j, y in enumerate(ORDER):
            assert op(x, y) == V(rows[i][j]), (x, y)


@pytest.mark.parametrize("op, printed", [
    (complement_sym, "fchut"),
    (negation_sym, "fuhct"),
    (dual_sym, "tuhcf"),
])
def test_unary_tables(op, printed):
    assert [op(x) for x in ORDER] == [V(ch) for ch in printed]


@pytest.mark.parametrize("op, x, y, want", [
    (union_sym, C, U, H),
    (union_sym, F, F, F),
    (union_sym, T, H, T),
    (intersection_sym, C, U, H),
    (intersection_sym, C, C, C),
    (intersection_sym, H, F, F),
    (equivalence_sym, F, F, T),
    (equivalence_sym, U, C, H),
    (equivalence_sym, T, C, C),
    (s_implication_sym, F, U, T),
    (s_implication_sym, U, C, H),
    (s_implication_sym, T, U, U),
])
def test_spot_values(op, x, y, want):
    assert op(x, y) is want


def test_departure_from_belnap():
    # Belnap has c|u = t and c&u = f; here both give hesitant
    assert union_sym(C, U) is H
    assert intersection_sym(C, U) is H


@pytest.mark.parametrize("x, y", list(product(ORDER, repeat=2)))
def test_compositional_definitions(x, y):
    assert equivalence_composed(x, y) is equivalence_sym(x, y)
    assert s_implication_composed(x, y) is s_implication_sym(x, y)


@pytest.mark.parametrize("op", [union_sym, intersection_sym])
def test_lattice_laws(op):
    for x, y in product(ORDER, repeat=2):
        assert op(x, y) is op(y, x)
    for x, y, z in product(ORDER, repeat=3):
        assert op(op(x, y), z) is op(x, op(y, z))
    for x in ORDER:
        assert op(x, x) is x


def test_identities_and_absorbing():
    for x in ORDER:
        assert union_sym(F, x) is x and union_sym(T, x) is T
        assert intersection_sym(T, x) is x and intersection_sym(F, x) is F


def test_unary_involutions_and_compositions():
    for x in ORDER:
        for op in (complement_sym, negation_sym, dual_sym):
            assert op(op(x)) is x
        assert dual_sym(x) is complement_sym(negation_sym(x)) is negation_sym(complement_sym(x))
        assert negation_sym(x) is complement_sym(dual_sym(x))
        assert complement_sym(x) is negation_sym(dual_sym(x))


def test_de_morgan_under_complement():
    for x, y in product(ORDER, repeat=2):
        assert complement_sym(union_sym(x, y)) is intersection_sym(complement_sym(x), complement_sym(y))


def test_format_table_layout():
    text = format_table("union").splitlines()
    assert text[0].split("\t")[1:] == ["t", "c", "h", "u", "f"]
    assert text[2].split("\t") == ["c", "t", "c", "h", "h", "c"]
    imp = format_table("implication").splitlines()
    assert imp[-1].split("\t") == ["f", "t", "t", "t", "t", "t"]
    comp = format_table("complement").splitlines()
    assert [line.split("\t") for line in comp[1:]] == [
        ["t", "f"], ["c", "c"], ["h", "h"], ["u", "u"], ["f", "t"]]
