"""Serialization of orbits, tables, posets and permutations to CSV, JSON and
DOT. Big integers are always written as decimal strings."""

from __future__ import annotations

import csv
import io
import json
from decimal import Decimal
from fractions import Fraction
from typing import Iterable, Sequence

from .analysis import LexiProdPermutation
from .majorization import MajorizationPoset, product_profile, sum_profile
from .orbits import base2_orbit, enumerate_orbits, orbit_json


def to_csv(header: Sequence[str], rows: Iterable[Sequence]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def to_json(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


# --- rounded presentation ---------------------------------------------------


def _decimal_exponent(v: Fraction) -> int:
    """``e`` with ``10**e <= v < 10**(e + 1)`` for ``v > 0``."""
    e = len(str(v.numerator)) - len(str(v.denominator))
    while Fraction(10) ** e > v:
        e -= 1
    while Fraction(10) ** (e + 1) <= v:
        e += 1
    return e


def round_significant(v: Fraction | int, digits: int = 2) -> Decimal:
    """Round a nonnegative rational to ``digits`` significant figures.

    Exact ties round toward zero, which reproduces the printed partial-product
    table (8.75 is shown as 8.7).
    """
    v = Fraction(v)
    if v < 0:
        raise ValueError("only nonnegative values are supported")
    if v == 0:
        return Decimal(0)
    shift = _decimal_exponent(v) - digits + 1
    scaled = v / Fraction(10) ** shift
    n = scaled.numerator // scaled.denominator
    if scaled - n > Fraction(1, 2):
        n += 1
    return Decimal(n).scaleb(shift)


def format_decimal(d: Decimal) -> str:
    if d == d.to_integral_value():
        return str(int(d))
    return format(d, "f")


def row_exponent(row: Sequence[int]) -> int:
    """Shared power of ten for one table row.

    Rows whose smallest entry is below 10 are shown unscaled; otherwise the
    exponent is the digit count of the smallest entry, so it lands in [0.1, 1).
    """
    low = min(row)
    return 0 if low < 10 else len(str(low))


def rounded_grid(columns: Sequence[Sequence[int]], digits: int = 2) -> tuple[list[int], list[list[str]]]:
    """Per-row exponents and mantissa strings for a column-major table."""
    rows = list(zip(*columns))
    exponents = [row_exponent(r) for r in rows]
    cells = [
        [format_decimal(round_significant(Fraction(v, 10**x), digits)) for v in r]
        for r, x in zip(rows, exponents)
    ]
    return exponents, cells


# --- tables -----------------------------------------------------------------


def orbit_table(p: int, q: int, kind: str) -> dict:
    """Columns ``I_i`` and ``S_i`` (or ``P_i``) for every orbit, as exact integers."""
    if kind not in ("sums", "products"):
        raise ValueError(f"unknown table kind {kind!r}")
    orbits = []
    for w in enumerate_orbits(p, q):
        o = base2_orbit(w)
        partial = sum_profile(o).sums if kind == "sums" else product_profile(o).products
        orbits.append({"rep": w.bits, "base2": list(o.values), "partial": list(partial)})
    return {"p": p, "q": q, "kind": kind, "orbits": orbits}


def table_csv(table: dict, rounded: bool = False) -> str:
    label = "S" if table["kind"] == "sums" else "P"
    orbits = table["orbits"]
    header = ["i"]
    for o in orbits:
        header += [f"{o['rep']}:I", f"{o['rep']}:{label}"]
    exponents: list[int] = []
    cells: list[list[str]] = []
    if rounded:
        exponents, cells = rounded_grid([o["partial"] for o in orbits])
        header += [f"{o['rep']}:{label}~" for o in orbits] + ["x"]
    rows = []
    for i in range(table["q"]):
        row: list = [i + 1]
        for o in orbits:
            row += [str(o["base2"][i]), str(o["partial"][i])]
        if rounded:
            row += cells[i] + [exponents[i]]
        rows.append(row)
    return to_csv(header, rows)


def table_json(table: dict, rounded: bool = False) -> str:
    out = {
        "p": table["p"],
        "q": table["q"],
        "kind": table["kind"],
        "orbits": [
            {
                "rep": o["rep"],
                "base2": [str(v) for v in o["base2"]],
                "partial": [str(v) for v in o["partial"]],
            }
            for o in table["orbits"]
        ],
    }
    if rounded:
        exponents, cells = rounded_grid([o["partial"] for o in table["orbits"]])
        out["exponents"] = exponents
        for j, o in enumerate(out["orbits"]):
            o["rounded"] = [row[j] for row in cells]
    return to_json(out)


# --- orbits -----------------------------------------------------------------


def orbits_json(p: int, q: int) -> str:
    return to_json([orbit_json(w) for w in enumerate_orbits(p, q)])


def orbits_csv(p: int, q: int) -> str:
    header = ["rep"] + [f"I{i}" for i in range(1, q + 1)]
    rows = [[w.bits, *map(str, base2_orbit(w).values)] for w in enumerate_orbits(p, q)]
    return to_csv(header, rows)


# --- posets -----------------------------------------------------------------


def poset_dot(poset: MajorizationPoset) -> str:
    """Hasse diagram in DOT; an edge ``x -> y`` means ``x ≺ y`` is a cover."""
    name = f"W_{poset.p}_{poset.q}_{poset.kind}"
    lines = [f'digraph "{name}" {{']
    lines += [f'  "{w.bits}";' for w in poset.nodes]
    lines += [f'  "{a.bits}" -> "{b.bits}";' for a, b in sorted(poset.hasse_edges)]
    lines.append("}")
    return "\n".join(lines) + "\n"


def poset_json(poset: MajorizationPoset) -> str:
    return to_json(
        {
            "p": poset.p,
            "q": poset.q,
            "kind": poset.kind,
            "nodes": [w.bits for w in poset.nodes],
            "hasse_edges": [[a.bits, b.bits] for a, b in sorted(poset.hasse_edges)],
            "collisions": [[a.bits, b.bits] for a, b in poset.collisions],
        }
    )


def poset_csv(poset: MajorizationPoset) -> str:
    return to_csv(["from", "to"], [[a.bits, b.bits] for a, b in sorted(poset.hasse_edges)])


# --- lexiproductional permutation -------------------------------------------

LEXIPROD_HEADER = ["lex_rank", "orbit", "product", "product_rank", "class"]


def lexiprod_csv(perm: LexiProdPermutation) -> str:
    return to_csv(LEXIPROD_HEADER, [[r[k] for k in LEXIPROD_HEADER] for r in perm.rows()])


def lexiprod_json(perm: LexiProdPermutation) -> str:
    return to_json({"p": perm.p, "q": perm.q, "rows": perm.rows()})


def permutation_plot_csv(perm: LexiProdPermutation) -> str:
    """Two-column staircase data: lexicographic rank against product rank."""
    return to_csv(["lex_rank", "product_rank"], [[i, r] for i, r in enumerate(perm.mapping, 1)])
