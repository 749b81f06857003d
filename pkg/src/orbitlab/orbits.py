"""Orbits of binary words under cyclic shift, their base-2 orbits, and the
enumeration of orbit representatives with a fixed number of ones."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import gcd

from .words import BinaryWord, as_word, is_balanced, is_canonical


@dataclass(frozen=True)
class OrbitVector:
    """The ``q`` cyclic shifts of a word in lexicographic order.

    Periodic words keep their repeated shifts, so ``len(words) == q`` always.
    """

    words: tuple[BinaryWord, ...]

    @property
    def rep(self) -> BinaryWord:
        return self.words[0]

    def __len__(self) -> int:
        return len(self.words)


@dataclass(frozen=True)
class Base2Orbit:
    """Base-2 values of an orbit's words, nondecreasing."""

    values: tuple[int, ...]
    ones: int

    @property
    def q(self) -> int:
        return len(self.values)

    @property
    def p(self) -> int:
        return self.ones

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self):
        return iter(self.values)


def base2_value(w: BinaryWord | str) -> int:
    """Read ``w`` as a base-2 integer, most significant symbol first."""
    return int(as_word(w).bits, 2)


def shifts(w: BinaryWord | str) -> list[BinaryWord]:
    """The dynamic order ``w, σ(w), ..., σ^{q-1}(w)``."""
    w = as_word(w)
    b = w.bits
    return [BinaryWord(b[k:] + b[:k]) for k in range(len(b))]


def build_orbit(w: BinaryWord | str) -> OrbitVector:
    return OrbitVector(tuple(sorted(shifts(w))))


def base2_orbit(w: BinaryWord | str) -> Base2Orbit:
    w = as_word(w)
    return Base2Orbit(tuple(base2_value(x) for x in build_orbit(w).words), w.ones)


def _check_pq(p: int, q: int) -> None:
    if not 1 <= p < q:
        raise ValueError(f"need 1 <= p < q, got p={p}, q={q}")


def enumerate_orbits(p: int, q: int) -> list[BinaryWord]:
    """Canonical representatives of all orbits of length-``q`` words with ``p`` ones.

    Reference implementation: every weight-``p`` word is generated and kept if
    it equals its own least rotation. Output is in lexicographic order.
    """
    _check_pq(p, q)
    reps = []
    for ones_at in combinations(range(q), p):
        bits = ["0"] * q
        for i in ones_at:
            bits[i] = "1"
        s = "".join(bits)
        if is_canonical(s):
            reps.append(BinaryWord(s))
    reps.sort()
    return reps


def enumerate_necklaces(p: int, q: int) -> list[BinaryWord]:
    """Fixed-density necklaces via the FKM prenecklace recursion, pruned on weight.

    Produces the same list as :func:`enumerate_orbits` without visiting
    non-canonical words.
    """
    _check_pq(p, q)
    a = [0] * (q + 1)
    out: list[BinaryWord] = []

    def gen(t: int, period: int, ones: int) -> None:
        if t > q:
            if q % period == 0 and ones == p:
                out.append(BinaryWord("".join(map(str, a[1:]))))
            return
        remaining = q - t + 1
        for digit in (a[t - period], 1) if a[t - period] == 0 else (1,):
            new_ones = ones + digit
            if new_ones > p or new_ones + (remaining - 1) < p:
                continue
            a[t] = digit
            gen(t + 1, period if digit == a[t - period] else t, new_ones)

    gen(1, 1, 0)
    return out


def most_unbalanced(p: int, q: int) -> BinaryWord:
    """The word ``0^{q-p} 1^p``."""
    _check_pq(p, q)
    return BinaryWord("0" * (q - p) + "1" * p)


def balanced_orbit(p: int, q: int) -> BinaryWord:
    """Representative of the unique orbit of balanced words, for coprime ``p, q``."""
    _check_pq(p, q)
    if gcd(p, q) != 1:
        raise ValueError(f"balanced orbit is only unique for coprime p, q (got {p}, {q})")
    found = [w for w in enumerate_orbits(p, q) if is_balanced(w)]
    if len(found) != 1:
        raise RuntimeError(f"expected one balanced orbit for ({p}, {q}), found {len(found)}")
    return found[0]


def balanced_orbits(p: int, q: int) -> list[BinaryWord]:
    """All balanced orbit representatives; also defined when ``gcd(p, q) > 1``."""
    return [w for w in enumerate_orbits(p, q) if is_balanced(w)]


def orbit_json(w: BinaryWord | str) -> dict:
    """JSON-ready orbit record; integers are decimal strings."""
    orbit = build_orbit(w)
    return {
        "rep": orbit.rep.bits,
        "words": [x.bits for x in orbit.words],
        "base2": [str(v) for v in base2_orbit(w).values],
    }
