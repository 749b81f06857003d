"""Brute-force checks of the extremality theorems over a whole family
``W_{p,q}``, and the permutations comparing lexicographic and product order."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from math import gcd

from .majorization import product_profile, sum_profile
from .orbits import (
    base2_orbit,
    balanced_orbits,
    build_orbit,
    enumerate_orbits,
    most_unbalanced,
    shifts,
)
from .words import BinaryWord, as_word

THEOREMS = ("t1", "t2", "c3", "t4", "t5", "t6")


@dataclass(frozen=True)
class Counterexample:
    theorem: str
    orbit: str
    index: int | None  # 1-based position i of the offending partial sum/product
    values: tuple[str, ...]


@dataclass(frozen=True)
class TheoremReport:
    theorem: str
    p: int
    q: int
    holds: bool
    orbits_checked: int
    counterexamples: tuple[Counterexample, ...] = ()
    in_hypothesis: bool = True
    conjecture: bool = False
    details: dict = field(default_factory=dict)

    @property
    def violation(self) -> bool:
        """A failure inside the stated hypotheses of a proven theorem."""
        return self.in_hypothesis and not self.conjecture and not self.holds

    def to_json(self) -> dict:
        return {
            "theorem": self.theorem,
            "p": self.p,
            "q": self.q,
            "holds": self.holds,
            "in_hypothesis": self.in_hypothesis,
            "conjecture": self.conjecture,
            "orbits_checked": self.orbits_checked,
            "counterexamples": [
                {"theorem": c.theorem, "orbit": c.orbit, "index": c.index, "values": list(c.values)}
                for c in self.counterexamples
            ],
            "details": self.details,
        }


def _report(theorem, p, q, n, bad, in_hyp=True, conjecture=False, **details) -> TheoremReport:
    return TheoremReport(
        theorem, p, q, not bad, n, tuple(bad), in_hyp, conjecture, dict(sorted(details.items()))
    )


def _profiles(p: int, q: int, kind: str) -> dict[BinaryWord, tuple[int, ...]]:
    out = {}
    for w in enumerate_orbits(p, q):
        o = base2_orbit(w)
        out[w] = sum_profile(o).sums if kind == "sum" else product_profile(o).products
    return out


def _dominance_failures(theorem, profiles, extreme, extreme_is_larger) -> list[Counterexample]:
    """Every (w, i) where ``extreme``'s profile is on the wrong side of ``w``'s."""
    ref = profiles[extreme]
    bad = []
    for w, prof in profiles.items():
        for i, (x, y) in enumerate(zip(ref, prof), start=1):
            if (x < y) if extreme_is_larger else (x > y):
                bad.append(Counterexample(theorem, w.bits, i, (str(x), str(y))))
    return bad


def _unique_balanced(p: int, q: int) -> BinaryWord | None:
    found = balanced_orbits(p, q)
    return found[0] if len(found) == 1 else None


def theorem4(p: int, q: int) -> TheoremReport:
    """``S_i(u) <= S_i(w)`` for all ``w`` and ``i``, with ``u = 0^{q-p}1^p``."""
    profiles = _profiles(p, q, "sum")
    u = most_unbalanced(p, q)
    bad = _dominance_failures("t4", profiles, u, extreme_is_larger=False)
    return _report("t4", p, q, len(profiles), bad, extreme=u.bits)


def theorem1(p: int, q: int) -> TheoremReport:
    """``S_i(b) >= S_i(w)`` for the balanced orbit ``b``.

    Outside coprime parameters the check runs exploratorily when exactly one
    balanced orbit exists.
    """
    coprime = gcd(p, q) == 1
    profiles = _profiles(p, q, "sum")
    b = _unique_balanced(p, q)
    if b is None:
        return _report("t1", p, q, len(profiles), [], coprime, skipped="no unique balanced orbit")
    bad = _dominance_failures("t1", profiles, b, extreme_is_larger=True)
    return _report("t1", p, q, len(profiles), bad, coprime, extreme=b.bits)


def conjecture3(p: int, q: int) -> TheoremReport:
    """``P_i(b) >= P_i(w)`` for the balanced orbit; report only."""
    coprime = gcd(p, q) == 1
    profiles = _profiles(p, q, "product")
    b = _unique_balanced(p, q)
    if b is None:
        return _report(
            "c3", p, q, len(profiles), [], coprime, True, skipped="no unique balanced orbit"
        )
    bad = _dominance_failures("c3", profiles, b, extreme_is_larger=True)
    return _report("c3", p, q, len(profiles), bad, coprime, True, extreme=b.bits)


def theorem6(p: int, q: int) -> TheoremReport:
    """``P_i(u) <= P_i(w)``; proven for ``p < q - p``."""
    profiles = _profiles(p, q, "product")
    u = most_unbalanced(p, q)
    bad = _dominance_failures("t6", profiles, u, extreme_is_larger=False)
    return _report("t6", p, q, len(profiles), bad, p < q - p, extreme=u.bits)


def _total_products(p: int, q: int) -> dict[BinaryWord, int]:
    return {w: math.prod(base2_orbit(w).values) for w in enumerate_orbits(p, q)}


def theorem5(p: int, q: int) -> TheoremReport:
    """``P(w)`` is minimized exactly at ``u``; proven for ``p < q - p``."""
    totals = _total_products(p, q)
    u = most_unbalanced(p, q)
    bad = [
        Counterexample("t5", w.bits, None, (str(v), str(totals[u])))
        for w, v in totals.items()
        if w != u and v <= totals[u]
    ]
    low = min(totals.values())
    argmin = [w.bits for w, v in totals.items() if v == low]
    return _report(
        "t5", p, q, len(totals), bad, p < q - p, extreme=u.bits, argmin=argmin, minimum=str(low)
    )


def theorem2(p: int, q: int) -> TheoremReport:
    """``P(w)`` is maximized exactly at the balanced orbit; proven for coprime ``p, q``."""
    coprime = gcd(p, q) == 1
    totals = _total_products(p, q)
    high = max(totals.values())
    argmax = [w.bits for w, v in totals.items() if v == high]
    b = _unique_balanced(p, q)
    if b is None:
        return _report(
            "t2", p, q, len(totals), [], coprime, skipped="no unique balanced orbit",
            argmax=argmax, maximum=str(high),
        )
    bad = [
        Counterexample("t2", w.bits, None, (str(v), str(totals[b])))
        for w, v in totals.items()
        if w != b and v >= totals[b]
    ]
    return _report(
        "t2", p, q, len(totals), bad, coprime, extreme=b.bits, argmax=argmax, maximum=str(high)
    )


CHECKS = {
    "t1": theorem1,
    "t2": theorem2,
    "c3": conjecture3,
    "t4": theorem4,
    "t5": theorem5,
    "t6": theorem6,
}


def run_check(theorem: str, p: int, q: int) -> TheoremReport:
    try:
        check = CHECKS[theorem]
    except KeyError:
        raise ValueError(f"unknown theorem {theorem!r}; expected one of {THEOREMS}") from None
    return check(p, q)


def merge_reports(name: str, parts: list[TheoremReport]) -> TheoremReport:
    """Combine per-theorem reports; ``holds`` covers only in-hypothesis parts."""
    first = parts[0]
    counted = [r for r in parts if r.in_hypothesis]
    details = {r.theorem: {"holds": r.holds, "in_hypothesis": r.in_hypothesis, **r.details}
               for r in parts}
    return TheoremReport(
        name,
        first.p,
        first.q,
        all(r.holds for r in counted),
        first.orbits_checked,
        tuple(c for r in counted for c in r.counterexamples),
        True,
        False,
        details,
    )


def verify_sum_extremes(p: int, q: int) -> TheoremReport:
    """Theorem 4 always; Theorem 1 as well when ``p`` and ``q`` are coprime."""
    parts = [theorem4(p, q)]
    if gcd(p, q) == 1:
        parts.append(theorem1(p, q))
    return merge_reports("sum-extremes", parts)


def verify_product_extremes(p: int, q: int) -> TheoremReport:
    """Theorem 5 (argmin) and Theorem 2 (argmax); out-of-hypothesis parts are exploratory."""
    return merge_reports("product-extremes", [theorem5(p, q), theorem2(p, q)])


def verify_partial_product_extreme(p: int, q: int) -> TheoremReport:
    """Theorem 6; Conjecture 3 rides along in ``details`` and never affects ``holds``."""
    t6 = theorem6(p, q)
    c3 = conjecture3(p, q)
    merged = merge_reports("partial-product-extremes", [t6])
    merged.details["c3"] = {"holds": c3.holds, "in_hypothesis": c3.in_hypothesis, **c3.details,
                            "counterexamples": len(c3.counterexamples)}
    return merged


# --- permutations -----------------------------------------------------------


def lexidynamic_permutation(w: BinaryWord | str) -> tuple[int, ...]:
    """``pi[i-1]`` is the 1-based rank of ``σ^{i-1}(w)`` in the sorted orbit.

    Equal shifts of a periodic word are ranked in shift order, so the result
    is always a permutation.
    """
    dyn = shifts(as_word(w))
    order = sorted(range(len(dyn)), key=lambda k: (dyn[k], k))
    ranks = [0] * len(dyn)
    for rank, k in enumerate(order, start=1):
        ranks[k] = rank
    return tuple(ranks)


class ProductTieError(ValueError):
    """Two orbits share a total product, so product rank is undefined."""

    def __init__(self, pair: tuple[str, str], product: int):
        super().__init__(f"orbits {pair[0]} and {pair[1]} share product {product}")
        self.pair = pair
        self.product = product


@dataclass(frozen=True)
class LexiProdPermutation:
    """Lexicographic rank to product rank over the orbit representatives.

    ``mapping[i-1]`` is the product rank of the ``i``-th orbit in lexicographic
    order. An orbit whose product rank is below its lexicographic rank is over
    balanced, above is under balanced, equal is equally balanced.
    """

    p: int
    q: int
    orbits: tuple[BinaryWord, ...]
    products: tuple[int, ...]
    mapping: tuple[int, ...]
    classes: tuple[str, ...]

    @property
    def m(self) -> int:
        return len(self.orbits)

    def by_class(self, label: str) -> list[str]:
        return [w.bits for w, c in zip(self.orbits, self.classes) if c == label]

    def rows(self) -> list[dict]:
        return [
            {
                "lex_rank": i,
                "orbit": w.bits,
                "product": str(prod),
                "product_rank": rank,
                "class": cls,
            }
            for i, (w, prod, rank, cls) in enumerate(
                zip(self.orbits, self.products, self.mapping, self.classes), start=1
            )
        ]


def classify(lex_rank: int, product_rank: int) -> str:
    if product_rank < lex_rank:
        return "over"
    if product_rank > lex_rank:
        return "under"
    return "equal"


def lexiprod_permutation(p: int, q: int) -> LexiProdPermutation:
    orbits = enumerate_orbits(p, q)
    products = [math.prod(base2_orbit(w).values) for w in orbits]
    order = sorted(range(len(orbits)), key=lambda i: products[i])
    for i, j in zip(order, order[1:]):
        if products[i] == products[j]:
            raise ProductTieError((orbits[i].bits, orbits[j].bits), products[i])
    mapping = [0] * len(orbits)
    for rank, i in enumerate(order, start=1):
        mapping[i] = rank
    classes = tuple(classify(i, r) for i, r in enumerate(mapping, start=1))
    return LexiProdPermutation(p, q, tuple(orbits), tuple(products), tuple(mapping), classes)


def sorted_orbit(w: BinaryWord | str) -> tuple[BinaryWord, ...]:
    return build_orbit(w).words
