"""Cotrees and labeled cograph counts (OEIS A006351).

Labeled cographs on [n] are in bijection with canonical cotrees, whose
internal nodes alternate between disjoint union and join.  Counting those
trees gives s(n), the number of series-parallel networks with n labeled
edges, without building any network.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, List, Tuple, Union

from .graphs import LabeledGraph

UNION = "union"
JOIN = "join"

MAX_DP_N = 9

PAPER_SEQUENCE = (1, 2, 8, 52, 472, 5504, 78416)


@dataclass(frozen=True)
class CotreeNode:
    kind: str
    children: Tuple["Cotree", ...]

    def __post_init__(self):
        if self.kind not in (UNION, JOIN):
            raise ValueError(f"unknown cotree node kind {self.kind!r}")
        if len(self.children) < 2:
            raise ValueError("internal cotree nodes need at least two children")
        for child in self.children:
            if isinstance(child, CotreeNode) and child.kind == self.kind:
                raise ValueError("cotree kinds must alternate along every path")


Cotree = Union[int, CotreeNode]


def union(*children: Cotree) -> CotreeNode:
    return CotreeNode(UNION, tuple(children))


def join(*children: Cotree) -> CotreeNode:
    return CotreeNode(JOIN, tuple(children))


def leaves(t: Cotree) -> List[int]:
    if isinstance(t, int):
        return [t]
    out = []
    for child in t.children:
        out.extend(leaves(child))
    return out


def cotree_to_graph(t: Cotree) -> LabeledGraph:
    labels = leaves(t)
    n = len(labels)
    if sorted(labels) != list(range(1, n + 1)):
        raise ValueError(f"cotree leaves {sorted(labels)} are not exactly 1..{n}")

    edges = []

    def build(node: Cotree) -> List[int]:
        if isinstance(node, int):
            return [node]
        parts = [build(child) for child in node.children]
        if node.kind == JOIN:
            for a in range(len(parts)):
                for b in range(a + 1, len(parts)):
                    edges.extend((u, v) for u in parts[a] for v in parts[b])
        return [v for part in parts for v in part]

    build(t)
    return LabeledGraph.from_edges(n, edges)


def _submasks_with_low_bit(mask: int):
    """Nonempty submasks of ``mask`` that contain its lowest set bit."""
    low = mask & -mask
    rest = mask ^ low
    sub = rest
    while True:
        yield sub | low
        if sub == 0:
            break
        sub = (sub - 1) & rest


def count_labeled_cographs(n: int) -> int:
    """Number of canonical cotrees on leaves 1..n, by a DP over leaf subsets.

    For a subset S with |S| >= 2, ``rooted[S]`` counts cotrees on S whose root
    has a fixed kind; by the union/join symmetry it is the same for both kinds.
    A child block of size >= 2 must have the opposite kind, which again
    contributes ``rooted[B]``; a singleton block is a leaf.  ``parts[S]`` sums
    over all set partitions of S (one or more blocks).
    """
    if n < 1:
        raise ValueError("n must be positive")
    if n > MAX_DP_N:
        raise ValueError(f"subset DP is limited to n <= {MAX_DP_N}")
    if n == 1:
        return 1
    full = (1 << n) - 1
    block = [0] * (full + 1)   # leaf or opposite-kind subtree on the block
    parts = [0] * (full + 1)
    parts[0] = 1
    for s in range(1, full + 1):
        proper = 0
        for b in _submasks_with_low_bit(s):
            if b != s:
                proper += block[b] * parts[s ^ b]
        if s & (s - 1) == 0:
            block[s] = 1
        else:
            block[s] = proper  # at least two blocks under a fixed-kind root
        parts[s] = proper + block[s]
    return 2 * block[full]


def sp_sequence(n_max: int) -> Tuple[int, ...]:
    """(s(1), ..., s(n_max)) via labeled cograph counts."""
    return tuple(count_labeled_cographs(n) for n in range(1, n_max + 1))


def _set_partitions(items: Tuple[int, ...]) -> Iterator[List[Tuple[int, ...]]]:
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for sub in _set_partitions(rest):
        yield [(first,)] + sub
        for i in range(len(sub)):
            yield sub[:i] + [(first,) + sub[i]] + sub[i + 1:]


def _rooted(items: Tuple[int, ...], kind: str) -> Iterator[CotreeNode]:
    other = JOIN if kind == UNION else UNION
    for partition in _set_partitions(items):
        if len(partition) < 2:
            continue
        yield from _assemble(kind, other, partition, 0, ())


def _assemble(kind, other, partition, i, acc) -> Iterator[CotreeNode]:
    if i == len(partition):
        yield CotreeNode(kind, acc)
        return
    blk = partition[i]
    options = [blk[0]] if len(blk) == 1 else _rooted(blk, other)
    for child in options:
        yield from _assemble(kind, other, partition, i + 1, acc + (child,))


def enumerate_cotrees(n: int) -> Iterator[Cotree]:
    """Every canonical cotree on leaves 1..n (small n only)."""
    items = tuple(range(1, n + 1))
    if n == 1:
        yield 1
        return
    yield from _rooted(items, UNION)
    yield from _rooted(items, JOIN)
