"""Binary words over {0, 1}: rotation, lexicographic comparison, cyclic
window counts and the cyclic balance test."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import accumulate


@dataclass(frozen=True, order=True)
class BinaryWord:
    """Immutable finite word over ``{0, 1}``, stored as a ``'0'``/``'1'`` string.

    Ordering of ``BinaryWord`` values is lexicographic with ``0 < 1``, which
    for equal-length words coincides with Python string ordering.
    """

    bits: str
    ones: int = field(init=False, compare=False, repr=False)

    def __post_init__(self) -> None:
        if not isinstance(self.bits, str):
            raise TypeError(f"bits must be a str, got {type(self.bits).__name__}")
        if not self.bits:
            raise ValueError("empty word is not supported")
        if self.bits.strip("01"):
            raise ValueError(f"word {self.bits!r} contains symbols other than 0/1")
        object.__setattr__(self, "ones", self.bits.count("1"))

    @classmethod
    def from_bits(cls, bits) -> BinaryWord:
        """Build a word from an iterable of 0/1 integers."""
        return cls("".join("1" if b else "0" for b in _check_bits(bits)))

    @property
    def zeros(self) -> int:
        return len(self.bits) - self.ones

    def __len__(self) -> int:
        return len(self.bits)

    def __getitem__(self, i: int) -> int:
        return 1 if self.bits[i] == "1" else 0

    def __iter__(self):
        return (1 if c == "1" else 0 for c in self.bits)

    def __str__(self) -> str:
        return self.bits


def _check_bits(bits):
    for b in bits:
        if b not in (0, 1):
            raise ValueError(f"symbol {b!r} is not 0 or 1")
        yield b


def as_word(w: BinaryWord | str) -> BinaryWord:
    return w if isinstance(w, BinaryWord) else BinaryWord(w)


def rotate(w: BinaryWord | str, k: int) -> BinaryWord:
    """Return ``σ^k(w)``, the word shifted left ``k`` times.

    ``k`` must satisfy ``0 <= k < len(w)``; out-of-range shifts raise instead of
    wrapping.
    """
    w = as_word(w)
    n = len(w)
    if not 0 <= k < n:
        raise ValueError(f"shift {k} out of range for word of length {n}")
    return BinaryWord(w.bits[k:] + w.bits[:k])


def lex_compare(u: BinaryWord | str, v: BinaryWord | str) -> int:
    """Three-way lexicographic comparison: -1, 0 or 1."""
    u, v = as_word(u), as_word(v)
    if len(u) != len(v):
        raise ValueError(f"cannot compare words of lengths {len(u)} and {len(v)}")
    return (u.bits > v.bits) - (u.bits < v.bits)


def cyclic_prefix_sums(w: BinaryWord | str) -> list[int]:
    """Prefix one-counts of the doubled word ``ww``; entry ``i`` counts ``ww[:i]``."""
    w = as_word(w)
    return [0, *accumulate(int(c) for c in w.bits * 2)]


def window_ones(w: BinaryWord | str, start: int, length: int) -> int:
    """Number of 1s in the cyclic factor of ``w`` of the given length at ``start``."""
    w = as_word(w)
    n = len(w)
    if not 0 <= start < n:
        raise ValueError(f"start {start} out of range for word of length {n}")
    if not 1 <= length <= n:
        raise ValueError(f"window length {length} must lie in [1, {n}]")
    sums = cyclic_prefix_sums(w)
    return sums[start + length] - sums[start]


def is_balanced(w: BinaryWord | str) -> bool:
    """Cyclic balance test.

    For every window length the one-counts of all cyclic windows may differ by
    at most one. Runs in O(n^2) using prefix sums over the doubled word.
    """
    w = as_word(w)
    n = len(w)
    sums = cyclic_prefix_sums(w)
    for length in range(1, n):
        counts = [sums[s + length] - sums[s] for s in range(n)]
        if max(counts) - min(counts) > 1:
            return False
    return True


def least_rotation(w: BinaryWord | str) -> tuple[BinaryWord, int]:
    """Lexicographically least rotation of ``w`` and the smallest shift giving it."""
    w = as_word(w)
    n = len(w)
    doubled = w.bits * 2
    # min() keeps the first minimum, so periodic words resolve to the smallest k
    k = min(range(n), key=lambda s: doubled[s : s + n])
    return BinaryWord(doubled[k : k + n]), k


def is_canonical(w: BinaryWord | str) -> bool:
    """True when ``w`` is its own least rotation (a necklace representative)."""
    w = as_word(w)
    doubled = w.bits * 2
    n = len(w)
    return all(w.bits <= doubled[s : s + n] for s in range(1, n))
