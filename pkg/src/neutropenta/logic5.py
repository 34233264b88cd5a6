"""Symbolic five-valued logic over {t, c, h, u, f}.

This is Belnap's four-valued logic plus *hesitant*.  The one structural
change is that contradictory and unknown now meet and join to ``h``
instead of ``f`` and ``t``.

Binary tables are stored as golden text, rows and columns in the order
``t c h u f``.  Equivalence and S-implication also have compositional
definitions (:func:`equivalence_composed`, :func:`s_implication_composed`)
which the tests cross-check against the stored tables.
"""

from __future__ import annotations

from .core import LogicValue5

T, C, H, U, F = LogicValue5.T, LogicValue5.C, LogicValue5.H, LogicValue5.U, LogicValue5.F

ORDER = (T, C, H, U, F)

UNION_TABLE = """
t t t t t
t c h h c
t h h h h
t h h u u
t c h u f
"""

INTERSECTION_TABLE = """
t c h u f
c c h h f
h h h h f
u h h u f
f f f f f
"""

EQUIVALENCE_TABLE = """
t c h u f
c c h h c
h h h h h
u h h u u
f c h u t
"""

IMPLICATION_TABLE = """
t c h u f
t c h h c
t h h h h
t h h u u
t t t t t
"""

COMPLEMENT_TABLE = "f c h u t"
NEGATION_TABLE = "f u h c t"
DUAL_TABLE = "t u h c f"


def _parse_binary(text: str) -> dict[tuple[LogicValue5, LogicValue5], LogicValue5]:
    rows = [line.split() for line in text.strip().splitlines()]
    assert len(rows) == 5 and all(len(r) == 5 for r in rows)
    return {
        (x, y): LogicValue5.parse(rows[i][j])
        for i, x in enumerate(ORDER)
        for j, y in enumerate(ORDER)
    }


def _parse_unary(text: str) -> dict[LogicValue5, LogicValue5]:
    cells = text.split()
    assert len(cells) == 5
    return {x: LogicValue5.parse(cell) for x, cell in zip(ORDER, cells)}


UNION = _parse_binary(UNION_TABLE)
INTERSECTION = _parse_binary(INTERSECTION_TABLE)
EQUIVALENCE = _parse_binary(EQUIVALENCE_TABLE)
IMPLICATION = _parse_binary(IMPLICATION_TABLE)
COMPLEMENT = _parse_unary(COMPLEMENT_TABLE)
NEGATION = _parse_unary(NEGATION_TABLE)
DUAL = _parse_unary(DUAL_TABLE)


def union_sym(x: LogicValue5, y: LogicValue5) -> LogicValue5:
    return UNION[x, y]


def intersection_sym(x: LogicValue5, y: LogicValue5) -> LogicValue5:
    return INTERSECTION[x, y]


def complement_sym(x: LogicValue5) -> LogicValue5:
    return COMPLEMENT[x]


def negation_sym(x: LogicValue5) -> LogicValue5:
    return NEGATION[x]


def dual_sym(x: LogicValue5) -> LogicValue5:
    return DUAL[x]


def equivalence_sym(x: LogicValue5, y: LogicValue5) -> LogicValue5:
    return EQUIVALENCE[x, y]


def s_implication_sym(x: LogicValue5, y: LogicValue5) -> LogicValue5:
    return IMPLICATION[x, y]


def equivalence_composed(x: LogicValue5, y: LogicValue5) -> LogicValue5:
    """``(~x | y) & (x | ~y)`` with ``~`` the complement."""
    return intersection_sym(
        union_sym(complement_sym(x), y), union_sym(x, complement_sym(y))
    )


def s_implication_composed(x: LogicValue5, y: LogicValue5) -> LogicValue5:
    """``~x | y`` with ``~`` the complement."""
    return union_sym(complement_sym(x), y)


BINARY_OPERATORS = {
    "union": union_sym,
    "intersection": intersection_sym,
    "equivalence": equivalence_sym,
    "implication": s_implication_sym,
}

UNARY_OPERATORS = {
    "complement": complement_sym,
    "negation": negation_sym,
    "dual": dual_sym,
}

_SYMBOLS = {
    "union": "∪",
    "intersection": "∩",
    "equivalence": "↔",
    "implication": "→",
    "complement": "¬",
    "negation": "‾",
    "dual": "≈",
}


def format_table(which: str) -> str:
    """Render a table as whitespace-aligned text, in paper layout order."""
    sym = _SYMBOLS[which]
    if which in BINARY_OPERATORS:
        op = BINARY_OPERATORS[which]
        lines = ["\t".join([sym, *(str(v) for v in ORDER)])]
        for x in ORDER:
            lines.append("\t".join([str(x), *(str(op(x, y)) for y in ORDER)]))
    elif which in UNARY_OPERATORS:
        op = UNARY_OPERATORS[which]
        lines = ["\t" + sym]
        lines.extend(f"{x}\t{op(x)}" for x in ORDER)
    else:
        raise KeyError(which)
    return "\n".join(lines) + "\n"
