"""Partial-sum and partial-product profiles of base-2 orbits, the two
majorization orders they induce, and the resulting posets with their Hasse
diagrams."""

from __future__ import annotations

import operator
from dataclasses import dataclass, field
from itertools import accumulate
from typing import Literal, Sequence

from .orbits import Base2Orbit, base2_orbit, enumerate_orbits
from .words import BinaryWord

Kind = Literal["sum", "product"]


@dataclass(frozen=True)
class SumProfile:
    p: int
    q: int
    sums: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.sums)


@dataclass(frozen=True)
class ProductProfile:
    p: int
    q: int
    products: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.products)


def sum_profile(o: Base2Orbit) -> SumProfile:
    return SumProfile(o.p, o.q, tuple(accumulate(o.values)))


def product_profile(o: Base2Orbit) -> ProductProfile:
    return ProductProfile(o.p, o.q, tuple(accumulate(o.values, operator.mul)))


def _dominated(a: Sequence[int], b: Sequence[int]) -> bool:
    return all(x >= y for x, y in zip(a, b))


def _check_same_family(a, b) -> None:
    if (a.p, a.q) != (b.p, b.q):
        raise ValueError(f"profiles from different families: ({a.p},{a.q}) vs ({b.p},{b.q})")


def sum_majorizes(a: SumProfile, b: SumProfile) -> bool:
    """True when ``b`` majorizes ``a``: every partial sum of ``b`` is at least
    that of ``a``. In the orbit order this is ``b ≺ a``."""
    _check_same_family(a, b)
    return _dominated(b.sums, a.sums)


def product_majorizes(a: ProductProfile, b: ProductProfile) -> bool:
    """True when every partial product of ``b`` is at least that of ``a``,
    i.e. ``b ≺_p a``."""
    _check_same_family(a, b)
    return _dominated(b.products, a.products)


def profile(w: BinaryWord | str, kind: Kind) -> tuple[int, ...]:
    o = base2_orbit(w)
    if kind == "sum":
        return sum_profile(o).sums
    if kind == "product":
        return product_profile(o).products
    raise ValueError(f"unknown kind {kind!r}")


@dataclass(frozen=True)
class MajorizationPoset:
    """Orbit representatives of one family under ``≺`` or ``≺_p``.

    ``relation[i][j]`` is true when ``nodes[i] ≺ nodes[j]``. A Hasse edge
    ``(x, y)`` means ``x ≺ y`` with nothing strictly in between, i.e. the arrow
    points from the more balanced side toward ``0^{q-p}1^p``.
    """

    p: int
    q: int
    kind: Kind
    nodes: tuple[BinaryWord, ...]
    relation: tuple[tuple[bool, ...], ...]
    hasse_edges: tuple[tuple[BinaryWord, BinaryWord], ...]
    collisions: tuple[tuple[BinaryWord, BinaryWord], ...] = field(default=())

    def index(self, w: BinaryWord | str) -> int:
        bits = w.bits if isinstance(w, BinaryWord) else w
        for i, node in enumerate(self.nodes):
            if node.bits == bits:
                return i
        raise KeyError(bits)

    def le(self, a: BinaryWord | str, b: BinaryWord | str) -> bool:
        """True when ``a ≺ b``."""
        return self.relation[self.index(a)][self.index(b)]


def relation_matrix(profiles: Sequence[Sequence[int]]) -> list[list[bool]]:
    return [[_dominated(a, b) for b in profiles] for a in profiles]


def transitive_reduction(relation: Sequence[Sequence[bool]]) -> list[tuple[int, int]]:
    """Covering pairs ``(i, j)`` of a reflexive transitive relation.

    Pairs related in both directions are treated as equal and never covered.
    """
    n = len(relation)
    strict = [[relation[i][j] and not relation[j][i] for j in range(n)] for i in range(n)]
    edges = []
    for i in range(n):
        for j in range(n):
            if strict[i][j] and not any(strict[i][k] and strict[k][j] for k in range(n)):
                edges.append((i, j))
    return edges


def transitive_closure(n: int, edges: Sequence[tuple[int, int]]) -> list[list[bool]]:
    """Reflexive transitive closure (Warshall)."""
    reach = [[i == j for j in range(n)] for i in range(n)]
    for i, j in edges:
        reach[i][j] = True
    for k in range(n):
        for i in range(n):
            if reach[i][k]:
                row_k = reach[k]
                row_i = reach[i]
                for j in range(n):
                    if row_k[j]:
                        row_i[j] = True
    return reach


def build_poset(p: int, q: int, kind: Kind = "sum") -> MajorizationPoset:
    if kind not in ("sum", "product"):
        raise ValueError(f"unknown kind {kind!r}")
    nodes = enumerate_orbits(p, q)
    profiles = [profile(w, kind) for w in nodes]
    rel = relation_matrix(profiles)
    n = len(nodes)
    collisions = tuple(
        (nodes[i], nodes[j]) for i in range(n) for j in range(i + 1, n) if rel[i][j] and rel[j][i]
    )
    edges = tuple((nodes[i], nodes[j]) for i, j in transitive_reduction(rel))
    return MajorizationPoset(
        p, q, kind, tuple(nodes), tuple(tuple(r) for r in rel), edges, collisions
    )


@dataclass(frozen=True)
class Extremes:
    least: BinaryWord | None
    greatest: BinaryWord | None


def extremal_elements(poset: MajorizationPoset) -> Extremes:
    """Least element (below everything) and greatest element (above everything)."""
    n = len(poset.nodes)
    rel = poset.relation
    least = [i for i in range(n) if all(rel[i][j] for j in range(n))]
    greatest = [j for j in range(n) if all(rel[i][j] for i in range(n))]
    return Extremes(
        poset.nodes[least[0]] if len(least) == 1 else None,
        poset.nodes[greatest[0]] if len(greatest) == 1 else None,
    )
