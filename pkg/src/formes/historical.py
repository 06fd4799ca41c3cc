"""Regeneration of the two classical divisor-form tables (squarefree a <= 31).

The printed tables are embedded verbatim, defects included, so the generator
can diff its own output against them and flag disagreements instead of
silently rewriting history.  Two defects are known in the plus table: the
a = 29 row omits one admissible form, and the a = 30 row carries an entry
that violates the table's own p*r - q^2 = a header.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import FormesError
from .enumeration import Sign, enumerate_divisor_forms, squarefree_kernel
from .indefinite import divisor_classes

# variant tags for minus-table entries:
#   "plain"    p*y^2 +- 2q*y*z - r*z^2 only
#   "negated"  the negation -p*y^2 -+ 2q*y*z + r*z^2 only (printed -p, -r)
#   "both"     one class contains both (printed +-p, +-r)
PLAIN, NEGATED, BOTH = "plain", "negated", "both"

# Table of odd divisor forms of t^2 + a*u^2: p*y^2 +- 2q*y*z + r*z^2, pr - q^2 = a.
# Exact transcription.  The printed q column elides repeats (row 17 prints
# "0, 1" for three entries); the evident alignment is stored.  Rows 29 and 30
# are transcribed with their defects.
TABLE_PLUS: dict[int, tuple[tuple[int, int, int], ...]] = {
    1: ((1, 0, 1),),
    2: ((1, 0, 2),),
    3: ((1, 0, 3),),
    5: ((1, 0, 5), (2, 1, 3)),
    6: ((1, 0, 6), (2, 0, 3)),
    7: ((1, 0, 7),),
    10: ((1, 0, 10), (2, 0, 5)),
    11: ((1, 0, 11), (3, 1, 4)),
    13: ((1, 0, 13), (2, 1, 7)),
    14: ((1, 0, 14), (2, 0, 7), (3, 1, 5)),
    15: ((1, 0, 15), (3, 0, 5)),
    17: ((1, 0, 17), (2, 1, 9), (3, 1, 6)),
    19: ((1, 0, 19), (4, 1, 5)),
    21: ((1, 0, 21), (3, 0, 7), (2, 1, 11), (5, 2, 5)),
    22: ((1, 0, 22), (2, 0, 11)),
    23: ((1, 0, 23), (3, 1, 8)),
    26: ((1, 0, 26), (2, 0, 13), (3, 1, 9), (5, 2, 6)),
    29: ((1, 0, 29), (3, 1, 10), (5, 1, 6)),
    30: ((1, 0, 30), (3, 0, 10), (5, 0, 6), (2, 1, 17)),
    31: ((1, 0, 31), (5, 2, 7)),
}

# Table of odd divisor forms of t^2 - a*u^2: p*y^2 +- 2q*y*z - r*z^2, pr + q^2 = a,
# reduced to essentially distinct classes.  "+-" prefixes in the print mean the
# class contains the form and its negation jointly.
TABLE_MINUS: dict[int, tuple[tuple[int, int, int, str], ...]] = {
    1: ((1, 0, 1, PLAIN),),
    2: ((1, 0, 2, BOTH),),
    3: ((1, 0, 3, PLAIN), (1, 0, 3, NEGATED)),
    5: ((1, 0, 5, BOTH),),
    6: ((1, 0, 6, PLAIN), (1, 0, 6, NEGATED)),
    7: ((1, 0, 7, PLAIN), (1, 0, 7, NEGATED)),
    10: ((1, 0, 10, BOTH), (2, 0, 5, BOTH)),
    11: ((1, 0, 11, PLAIN), (1, 0, 11, NEGATED)),
    13: ((1, 0, 13, BOTH),),
    14: ((1, 0, 14, PLAIN), (1, 0, 14, NEGATED)),
    15: ((1, 0, 15, PLAIN), (1, 0, 15, NEGATED), (3, 0, 5, PLAIN), (3, 0, 5, NEGATED)),
    17: ((1, 0, 17, BOTH),),
    19: ((1, 0, 19, PLAIN), (1, 0, 19, NEGATED)),
    21: ((1, 0, 21, PLAIN), (1, 0, 21, NEGATED)),
    22: ((1, 0, 22, PLAIN), (1, 0, 22, NEGATED)),
    23: ((1, 0, 23, PLAIN), (1, 0, 23, NEGATED)),
    26: ((1, 0, 26, BOTH), (2, 0, 13, BOTH)),
    29: ((1, 0, 29, BOTH),),
    30: ((1, 0, 30, PLAIN), (1, 0, 30, NEGATED), (2, 0, 15, PLAIN), (2, 0, 15, NEGATED)),
    31: ((1, 0, 31, PLAIN), (1, 0, 31, NEGATED)),
}

FLAG_INCONSISTENT = "historical-row-inconsistent"
FLAG_EXTRA = "extra-vs-historical"
FLAG_MISSING = "missing-vs-historical"
FLAG_REORDERED = "reordered-vs-historical"


@dataclass(frozen=True)
class TableRow:
    a: int
    sign: Sign
    entries: tuple[tuple[int, int, int, str], ...]  # (p, q, r, variant)
    flags: tuple[str, ...]


def _printed_entry_valid(a: int, sign: Sign, p: int, q: int, r: int) -> bool:
    # the headers' own conditions: pr -+ q^2 = a and neither outer below 2q
    if sign is Sign.PLUS:
        return p * r - q * q == a and p >= 2 * q and r >= 2 * q
    return p * r + q * q == a and p >= 2 * q and r >= 2 * q


def _computed_minus_entries(a: int) -> tuple[tuple[int, int, int, str], ...]:
    if a == 1:
        # split case: y^2 - z^2 and its negation are argument swaps of each other
        return ((1, 0, 1, PLAIN),)
    out = []
    for cls in divisor_classes(a):
        rep = cls.representative
        triple = (rep.p, rep.q, rep.r)
        negs = {e.negated for e in cls.members if (e.p, e.q, e.r) == triple}
        variant = BOTH if negs == {False, True} else (NEGATED if True in negs else PLAIN)
        out.append((rep.p, rep.q, rep.r, variant))
    return tuple(out)


def build_table_rows(max_a: int, sign: Sign) -> list[TableRow]:
    """Computed table rows for all squarefree a <= max_a, flagged against the
    embedded historical snapshot wherever it has a row."""
    if max_a < 1:
        raise FormesError(f"max_a must be positive, got {max_a}")
    snapshot = TABLE_PLUS if sign is Sign.PLUS else TABLE_MINUS
    rows = []
    for a in range(1, max_a + 1):
        if squarefree_kernel(a)[1] != 1:
            continue
        if sign is Sign.PLUS:
            computed = tuple(
                (e.p, e.q, e.r, PLAIN)
                for e in enumerate_divisor_forms(a, Sign.PLUS, odd_only=True)
            )
        else:
            computed = _computed_minus_entries(a)

        flags: list[str] = []
        if a in snapshot:
            printed = [
                e if sign is Sign.MINUS else (*e, PLAIN) for e in snapshot[a]
            ]
            valid = [e for e in printed if _printed_entry_valid(a, sign, *e[:3])]
            if len(valid) != len(printed):
                flags.append(FLAG_INCONSISTENT)
            extra = [e for e in computed if e not in valid]
            missing = [e for e in valid if e not in computed]
            if extra:
                flags.append(FLAG_EXTRA)
            if missing:
                flags.append(FLAG_MISSING)
            if not extra and not missing and list(computed) != valid:
                flags.append(FLAG_REORDERED)
        rows.append(TableRow(a, sign, computed, tuple(flags)))
    return rows


def render_csv(rows: list[TableRow]) -> str:
    """One line per entry: a,sign,p,q,r,negated,flags ("both" expands to two)."""
    lines = ["a,sign,p,q,r,negated,flags"]
    for row in rows:
        flagtext = ";".join(row.flags)
        for p, q, r, variant in row.entries:
            negs = [False, True] if variant == BOTH else [variant == NEGATED]
            for neg in negs:
                lines.append(
                    f"{row.a},{row.sign.value},{p},{q},{r},{str(neg).lower()},{flagtext}"
                )
    return "\n".join(lines) + "\n"


def _md_cell(value: int, variant: str) -> str:
    if variant == BOTH:
        return f"±{value}"
    if variant == NEGATED:
        return f"−{value}"
    return str(value)


def render_markdown(rows: list[TableRow], sign: Sign) -> str:
    """Two-table layout: one markdown row per a with aligned p, q, r columns."""
    if sign is Sign.PLUS:
        title = "Odd divisor forms of t² + a·u² (p·y² ± 2q·yz + r·z², pr − q² = a)"
    else:
        title = "Odd divisor forms of t² − a·u² (p·y² ± 2q·yz − r·z², pr + q² = a)"
    lines = [f"### {title}", "", "| a | p | q | r | flags |", "|---|---|---|---|---|"]
    for row in rows:
        ps = ", ".join(_md_cell(p, v) for p, _, _, v in row.entries)
        qs = ", ".join(str(q) for _, q, _, _ in row.entries)
        rs = ", ".join(_md_cell(r, v) for _, _, r, v in row.entries)
        lines.append(f"| {row.a} | {ps} | {qs} | {rs} | {';'.join(row.flags)} |")
    return "\n".join(lines) + "\n"
