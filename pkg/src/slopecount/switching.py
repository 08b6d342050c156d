"""Seidel switching on graphs over {1..n+1} and the additive F_q^n action on weightings.

Vertex n+1 is the distinguished vertex: it is never switched, and each class
is represented by its unique member in which n+1 is isolated.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Sequence

from .graphs import (
    LabeledGraph,
    all_graphs,
    format_graph,
    has_induced_c5,
    has_induced_p4,
    induced_subgraph,
    parse_graph,
    slot_pairs,
)
from .weights import EdgeWeighting


def _cut_mask(n_total: int, xs: frozenset) -> int:
    mask = 0
    for s, (i, j) in enumerate(slot_pairs(n_total)):
        if (i in xs) != (j in xs):
            mask |= 1 << s
    return mask


def switch(g: LabeledGraph, xs: Iterable[int]) -> LabeledGraph:
    """Complement exactly the edges with one endpoint in ``xs`` (a subset of 1..n)."""
    xs = frozenset(xs)
    if any(not 1 <= x < g.n for x in xs):
        raise ValueError(f"switching set {sorted(xs)} must lie in 1..{g.n - 1}")
    return LabeledGraph(g.n, g.mask ^ _cut_mask(g.n, xs))


def orbit(g: LabeledGraph) -> Iterator[LabeledGraph]:
    """All 2^n members of the switching class of ``g``."""
    base = range(1, g.n)
    for size in range(g.n):
        for xs in combinations(base, size):
            yield switch(g, xs)


@dataclass(frozen=True)
class SwitchingClass:
    representative: LabeledGraph

    def __post_init__(self):
        last = self.representative.n
        if last < 2:
            raise ValueError("switching classes live on at least 2 vertices")
        if self.representative.neighbors(last):
            raise ValueError(f"vertex {last} must be isolated in a class representative")

    @property
    def n(self) -> int:
        """Number of switchable vertices (the class lives on n+1 vertices)."""
        return self.representative.n - 1

    def base_graph(self) -> LabeledGraph:
        """The representative with the isolated top vertex dropped."""
        return induced_subgraph(self.representative, range(1, self.n + 1))

    def members(self) -> Iterator[LabeledGraph]:
        return orbit(self.representative)

    def __str__(self) -> str:
        return format_graph(self.representative)


def parse_class(text: str) -> SwitchingClass:
    return SwitchingClass(parse_graph(text))


def canonical_representative(g: LabeledGraph) -> SwitchingClass:
    return SwitchingClass(switch(g, g.neighbors(g.n)))


def cograph_to_class(g: LabeledGraph) -> SwitchingClass:
    """Add an isolated vertex n+1 and take its class."""
    return SwitchingClass(LabeledGraph.from_edges(g.n + 1, g.edges))


def orbit_has_induced_c5(c: SwitchingClass, paranoid: bool = False) -> bool:
    """Whether some member of the class has an induced 5-cycle.

    The fast path checks the base graph for an induced P4, which is
    equivalent; ``paranoid=True`` scans every member instead.
    """
    if paranoid:
        return any(has_induced_c5(h) for h in c.members())
    if c.n < 1:
        return False
    return has_induced_p4(c.base_graph())


def count_c5free_classes(n_plus_1: int) -> int:
    """Number of switching classes on [n+1] with no member containing an induced C5.

    Always uses the full orbit scan.
    """
    if not 2 <= n_plus_1 <= 7:
        raise ValueError("n+1 must be in 2..7")
    return sum(
        not orbit_has_induced_c5(cograph_to_class(g), paranoid=True) for g in all_graphs(n_plus_1 - 1)
    )


def q_switch(x: Sequence[int], a: EdgeWeighting) -> EdgeWeighting:
    """(x . a)_ij = a_ij + x_i + x_j over F_q."""
    if len(x) != a.n:
        raise ValueError(f"switching vector has length {len(x)}, expected {a.n}")
    q = a.q
    vals = tuple((v + x[i - 1] + x[j - 1]) % q for v, (i, j) in zip(a.values, slot_pairs(a.n)))
    return EdgeWeighting(a.n, q, vals)
