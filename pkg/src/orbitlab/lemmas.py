"""Exact checks of the base-2 expansion identities and inequalities used in
the extremality proofs.

Three families are encoded as data:

* ``LEMMA3``: chains of generalized expansions in ``q`` (and ``p``) joined by
  ``=``/``>``.
* ``LEMMA4`` and ``LEMMA5``: ``c * (x)_2 < (y w)_2`` where ``x`` is a binary
  run pattern, ``y`` a fixed binary prefix and ``w`` ranges over all binary
  words making both sides equally long with equally many ones.

Each check evaluates both sides with exact rationals.
"""

from __future__ import annotations

import operator
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, product
from typing import Callable, Iterator

from .expansions import evaluate, format_rational, from_pattern, pattern_digits
from .words import BinaryWord

_RELATIONS: dict[str, Callable[[Fraction, Fraction], bool]] = {
    "=": operator.eq,
    ">": operator.gt,
    "<": operator.lt,
    "<=": operator.le,
}


class NoAdmissibleWord(ValueError):
    """No binary ``w`` satisfies the equal-length / equal-ones side condition."""


@dataclass(frozen=True)
class LemmaReport:
    lemma: int
    item: int
    params: dict
    lhs: Fraction | None
    rhs: Fraction | None
    holds: bool | None
    status: str  # "holds", "fails" or "vacuous"
    checked: int = 0
    witness: str | None = None
    values: tuple[Fraction, ...] = field(default=())

    def to_json(self) -> dict:
        out = {
            "lemma": self.lemma,
            "item": self.item,
            "params": dict(self.params),
            "lhs": None if self.lhs is None else format_rational(self.lhs),
            "rhs": None if self.rhs is None else format_rational(self.rhs),
            "holds": self.holds,
            "status": self.status,
            "checked": self.checked,
        }
        if self.witness is not None:
            out["witness"] = self.witness
        if self.values:
            out["chain"] = [format_rational(v) for v in self.values]
        return out


# --- chains in q ------------------------------------------------------------


@dataclass(frozen=True)
class ChainItem:
    item: int
    relations: str
    terms: Callable[[int], tuple[str, ...]]
    min_q: int
    needs_p: Callable[[int, int], bool] | None = None


def _fixed(*terms: str) -> Callable[[int], tuple[str, ...]]:
    return lambda q: terms


def _lemma3_item1(q: int) -> tuple[str, ...]:
    # 0 1 2 .. (k-1) (2k+2) 0^{q-k-1} for k = 1 .. q-1
    return tuple(f"0..{k - 1} ({2 * k + 2}) 0^{{q-{k}-1}}" for k in range(1, q))


_TOP = "0..(q-2) (2q)"

LEMMA3: dict[int, ChainItem] = {
    1: ChainItem(1, "", _lemma3_item1, 2),
    2: ChainItem(
        2, ">", _fixed(_TOP, "0..(p-1) p^{q-2p+1} ~(p-1)..1"), 2, lambda p, q: 1 <= p <= q - p
    ),
    3: ChainItem(
        3, ">", _fixed(_TOP, "0..(q-p-1) (q-p)^{2p-q+1} ~(q-p-1)..1"), 3,
        lambda p, q: q - p < p < q,
    ),
    4: ChainItem(4, "===", _fixed("0 4 0^{q-2}", "0 3 2 0^{q-3}", "0 3 1 2 0^{q-4}", "0 2 3 2 0^{q-4}"), 4),
    5: ChainItem(
        5, "==>",
        _fixed("0 2 3 1 1 2 1 0^{q-7}", "0 2 3 1 2 0 1 0^{q-7}", "0 2 3 2 0 0 1 0^{q-7}", "0 2 3 2 0^{q-4}"),
        7,
    ),
    6: ChainItem(6, "==>", _fixed("0 2 2 0^{q-3}", "0 1 4 0^{q-3}", "0 1 2^{q-3} 4", "0 1 2^{q-3} 1"), 3),
    7: ChainItem(
        7, "==>",
        _fixed("0 2 3 1 0^{q-4}", "0 1 2 7 0^{q-4}", "0 1 2 3 4^{q-5} 8", "0 1 2 3 4^{q-7} 3 2 1"),
        7,
    ),
    8: ChainItem(
        8, "=>==",
        _fixed(
            "0 2 2 2 3 2 1 1 0^{q-8}", "0 2 2 2 4 0 1 1 0^{q-8}", "0 2 2 2 4 0^{q-5}",
            "0 2 2 4 0 0^{q-5}", "0 2 3 2 0^{q-4}",
        ),
        8,
    ),
    9: ChainItem(
        9, "==>>",
        _fixed(
            "0 2 2 2 2 1 1 0^{q-7}", "0 2 3 0 2 1 1 0^{q-7}", "0 2 3 1 0 1 1 0^{q-7}",
            "0 2 3 1 0^{q-4}", "0 1 2 3 4^{q-7} 3 2 1",
        ),
        7,
    ),
    10: ChainItem(
        10, ">==>",
        _fixed(
            "0 2 2 1 2 1 0^{q-6}", "0 2 2 1 2 0^{q-5}", "0 1 5 0^{q-3}", "0 1 2 3^{q-4} 6",
            "0 1 2 3^{q-5} 2 1",
        ),
        6,
    ),
    11: ChainItem(
        11, "===>",
        _fixed(
            "0 2 1 1 2 0^{q-5}", "0 1 3 1 2 0^{q-5}", "0 1 4 0 0 0^{q-5}", "0 1 2^{q-3} 4",
            "0 1 2^{q-3} 1",
        ),
        5,
    ),
}


def lemma3_valid(item: int, q: int, p: int | None = None) -> bool:
    entry = LEMMA3[item]
    if q < entry.min_q:
        return False
    if entry.needs_p is not None:
        return p is not None and entry.needs_p(p, q)
    return True


def lemma3_report(item: int, q: int, p: int | None = None) -> LemmaReport:
    if item not in LEMMA3:
        raise ValueError(f"Lemma 3 has items 1..11, got {item}")
    entry = LEMMA3[item]
    if not lemma3_valid(item, q, p):
        raise ValueError(f"parameters q={q}, p={p} are outside the range of item {item}")
    env = {"q": q} if p is None else {"q": q, "p": p}
    terms = [from_pattern(t, **env) for t in entry.terms(q)]
    if len({len(t) for t in terms}) != 1:
        raise ValueError(f"item {item}: expansions of unequal length for q={q}")
    values = tuple(evaluate(t) for t in terms)
    relations = entry.relations or "=" * (len(values) - 1)
    holds = all(_RELATIONS[r](a, b) for r, a, b in zip(relations, values, values[1:]))
    params = {"q": q} if entry.needs_p is None else {"q": q, "p": p}
    return LemmaReport(
        3, item, params, values[0], values[-1], holds, "holds" if holds else "fails",
        checked=len(values), values=values,
    )


def check_lemma3(item: int, q: int, p: int | None = None) -> bool:
    return bool(lemma3_report(item, q, p).holds)


# --- inequalities over admissible suffixes ----------------------------------


@dataclass(frozen=True)
class SuffixItem:
    lemma: int
    item: int
    params: tuple[str, ...]
    multiplier: Fraction
    left: str
    prefix: str
    relation: str = "<"
    condition: Callable[..., bool] = lambda **kw: True

    def left_word(self, **params: int) -> str:
        return _binary(self.left, params)

    def prefix_word(self, **params: int) -> str:
        return _binary(self.prefix, params)


def _binary(pattern: str, params: dict) -> str:
    digits = pattern_digits(pattern, **params)
    if any(d not in (0, 1) for d in digits):
        raise ValueError(f"pattern {pattern!r} is not binary")
    return "".join(str(int(d)) for d in digits)


F = Fraction

LEMMA4: dict[int, SuffixItem] = {
    1: SuffixItem(4, 1, ("b1", "a", "b2"), F(2), "0^{b1} 1^a 0^{b2}", "0^{b1-2} 1",
                  condition=lambda b1, a, b2: b1 >= 3),
    2: SuffixItem(4, 2, ("a", "b"), F(4), "0^5 1^a 0^b", "0 0 1"),
    3: SuffixItem(4, 3, ("a", "b"), F(21, 8), "0^4 1^a 0^b", "0 0 1 0 1 0 1"),
    4: SuffixItem(4, 4, ("b1", "a", "b2"), F(1), "0^{b1} 1^a 0^{b2}", "0^{b1-1} 1",
                  condition=lambda b1, a, b2: b1 >= 2),
    5: SuffixItem(4, 5, ("a", "b"), F(1, 2), "0 1^a 0^b", "0 1"),
    6: SuffixItem(4, 6, ("a", "b"), F(1), "1 0^b 1^a", "1", relation="<="),
    7: SuffixItem(4, 7, ("a", "b"), F(2, 3), "1 1 0^b 1^a", "1"),
    8: SuffixItem(4, 8, ("a", "b"), F(4, 7), "1 1 1 0^b 1^a", "1"),
    9: SuffixItem(4, 9, ("a1", "b", "a2"), F(1, 2), "1^{a1} 0^b 1^{a2}", "1",
                  condition=lambda a1, b, a2: a1 >= 1),
}

LEMMA5: dict[int, SuffixItem] = {
    1: SuffixItem(5, 1, ("b1", "a", "b2"), F(3, 2), "0^{b1+1} 1^a 0^{b2}", "0^{b1} 1 1",
                  condition=lambda b1, a, b2: b1 >= 1),
    2: SuffixItem(5, 2, ("b1", "a", "b2"), F(11, 8), "0^{b1+1} 1^a 0^{b2}", "0^{b1} 1 0 1 1",
                  condition=lambda b1, a, b2: b1 >= 1),
    3: SuffixItem(5, 3, ("b",), F(8, 3), "0 0 0 0 1 1 0^b", "0 0 1"),
    4: SuffixItem(5, 4, ("a", "b"), F(13, 8), "0 0 0 1^a 0^b", "0 0 1 1 0 1"),
    5: SuffixItem(5, 5, ("b",), F(5, 3), "0 0 0 1 1 0^b", "0 0 1 0 1"),
    6: SuffixItem(5, 6, ("a", "b"), F(3, 4), "0 1^a 0^b", "0 1 1"),
    7: SuffixItem(5, 7, ("b1", "b2", "a"), F(2, 3), "0^{b1} 1 1 0^{b2} 1^a", "0^{b1} 1"),
    8: SuffixItem(5, 8, ("a1", "b", "a2"), F(3, 4), "1^{a1} 0^b 1^{a2}", "1 1",
                  condition=lambda a1, b, a2: a1 >= 1 and b >= 1),
    9: SuffixItem(5, 9, ("b1", "b2", "a"), F(5, 6), "0^{b1} 1 1 0^{b2} 1^a", "0^{b1} 1 0 1",
                  condition=lambda b1, b2, a: b2 >= 1),
}

SUFFIX_LEMMAS = {4: LEMMA4, 5: LEMMA5}


def _validate_params(entry: SuffixItem, params: dict) -> dict:
    if set(params) != set(entry.params):
        raise ValueError(
            f"Lemma {entry.lemma} item {entry.item} takes {entry.params}, got {tuple(params)}"
        )
    if any(v < 0 for v in params.values()):
        raise ValueError("parameters must be nonnegative")
    if sum(params.values()) < 1:
        raise ValueError("parameters must not all be zero")
    if not entry.condition(**params):
        raise ValueError(f"parameters {params} violate the side condition of item {entry.item}")
    return {name: params[name] for name in entry.params}


def suffix_shape(entry: SuffixItem, **params: int) -> tuple[int, int]:
    """Length and ones-count every admissible ``w`` must have."""
    left = entry.left_word(**params)
    prefix = entry.prefix_word(**params)
    length = len(left) - len(prefix)
    ones = left.count("1") - prefix.count("1")
    if length < 0 or not 0 <= ones <= length:
        raise NoAdmissibleWord(
            f"Lemma {entry.lemma} item {entry.item} with {params}: no w of length {length} "
            f"with {ones} ones"
        )
    return length, ones


def minimal_suffix(length: int, ones: int) -> str:
    """Admissible suffix with the smallest base-2 value: ``0^z 1^o``."""
    return "0" * (length - ones) + "1" * ones


def admissible_suffixes(length: int, ones: int) -> Iterator[str]:
    for pos in combinations(range(length), ones):
        chars = ["0"] * length
        for i in pos:
            chars[i] = "1"
        yield "".join(chars)


def _lookup(lemma: int, item: int) -> SuffixItem:
    table = SUFFIX_LEMMAS.get(lemma)
    if table is None or item not in table:
        raise ValueError(f"unknown item {item} of Lemma {lemma}")
    return table[item]


def suffix_report(
    lemma: int, item: int, w: BinaryWord | str | None = None, max_len: int = 12, **params: int
) -> LemmaReport:
    """Check one parameter instance.

    With ``w`` given only that suffix is checked. Otherwise every admissible
    suffix is checked when its length is at most ``max_len``; beyond that only
    the minimal suffix is, which bounds every other right-hand side from below.
    """
    entry = _lookup(lemma, item)
    params = _validate_params(entry, params)
    length, ones = suffix_shape(entry, **params)
    left_value = int(entry.left_word(**params), 2)
    lhs = entry.multiplier * left_value
    prefix = entry.prefix_word(**params)
    compare = _RELATIONS[entry.relation]

    if w is not None:
        w = w.bits if isinstance(w, BinaryWord) else str(w)
        if len(w) != length or w.count("1") != ones or w.strip("01"):
            raise ValueError(f"w={w!r} is not admissible: need length {length} with {ones} ones")
        candidates: Iterator[str] = iter([w])
    elif length <= max_len:
        candidates = admissible_suffixes(length, ones)
    else:
        candidates = iter([minimal_suffix(length, ones)])

    checked = 0
    witness = None
    smallest = None
    for suffix in candidates:
        rhs = int(prefix + suffix, 2) if prefix + suffix else 0
        checked += 1
        if smallest is None or rhs < smallest:
            smallest = rhs
        if witness is None and not compare(lhs, rhs):
            witness = suffix
    holds = witness is None
    return LemmaReport(
        lemma, item, params, lhs, Fraction(smallest), holds, "holds" if holds else "fails",
        checked=checked, witness=witness,
    )


def check_lemma4(item: int, w: BinaryWord | str | None = None, **params: int) -> bool:
    return bool(suffix_report(4, item, w, **params).holds)


def check_lemma5(item: int, w: BinaryWord | str | None = None, **params: int) -> bool:
    return bool(suffix_report(5, item, w, **params).holds)


# --- grids ------------------------------------------------------------------


def lemma3_grid(q_max: int = 14) -> list[LemmaReport]:
    reports = []
    for item, entry in LEMMA3.items():
        for q in range(entry.min_q, q_max + 1):
            if entry.needs_p is None:
                reports.append(lemma3_report(item, q))
            else:
                for p in range(1, q):
                    if entry.needs_p(p, q):
                        reports.append(lemma3_report(item, q, p))
    return reports


def suffix_grid(lemma: int, grid: int = 6, max_len: int = 12) -> list[LemmaReport]:
    reports = []
    for item, entry in SUFFIX_LEMMAS[lemma].items():
        for values in product(range(grid + 1), repeat=len(entry.params)):
            params = dict(zip(entry.params, values))
            if sum(values) < 1 or not entry.condition(**params):
                continue
            try:
                reports.append(suffix_report(lemma, item, max_len=max_len, **params))
            except NoAdmissibleWord:
                reports.append(LemmaReport(lemma, item, params, None, None, None, "vacuous"))
    return reports


def lemma_grid(grid: int = 6, q_max: int = 14, max_len: int = 12) -> list[LemmaReport]:
    """Every item of the three lemma families over the standard parameter grid."""
    return lemma3_grid(q_max) + suffix_grid(4, grid, max_len) + suffix_grid(5, grid, max_len)
