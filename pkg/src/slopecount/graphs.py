"""Labeled simple graphs on {1..n} stored as edge bitmasks, plus wheels.

Edge slots are ordered lexicographically: (1,2), (1,3), ..., (1,n), (2,3), ...,
(n-1,n).  Bit ``s`` of ``LabeledGraph.mask`` is set iff slot ``s`` is an edge.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, permutations
from math import comb, factorial
from typing import FrozenSet, Iterable, Iterator, Sequence, Tuple

MAX_VERTICES = 12

Edge = Tuple[int, int]


def num_slots(n: int) -> int:
    return n * (n - 1) // 2


def slot_index(n: int, i: int, j: int) -> int:
    """Index of the unordered pair {i, j} in the lexicographic slot order."""
    if i > j:
        i, j = j, i
    if not (1 <= i < j <= n):
        raise ValueError(f"pair ({i},{j}) is not an edge slot of K_{n}")
    return (i - 1) * (2 * n - i) // 2 + (j - i - 1)


@lru_cache(maxsize=None)
def slot_pairs(n: int) -> Tuple[Edge, ...]:
    return tuple((i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1))


def _check_n(n: int) -> None:
    if not 1 <= n <= MAX_VERTICES:
        raise ValueError(f"vertex count must be in 1..{MAX_VERTICES}, got {n}")


@dataclass(frozen=True)
class LabeledGraph:
    n: int
    mask: int = 0

    def __post_init__(self):
        _check_n(self.n)
        if self.mask < 0 or self.mask >> num_slots(self.n):
            raise ValueError(f"mask {self.mask:#x} has bits outside the {num_slots(self.n)} slots")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Edge]) -> "LabeledGraph":
        mask = 0
        for i, j in edges:
            if i == j:
                raise ValueError(f"self-loop at vertex {i}")
            mask |= 1 << slot_index(n, i, j)
        return cls(n, mask)

    @classmethod
    def complete(cls, n: int) -> "LabeledGraph":
        return cls(n, (1 << num_slots(n)) - 1)

    @classmethod
    def path(cls, n: int) -> "LabeledGraph":
        return cls.from_edges(n, [(i, i + 1) for i in range(1, n)])

    @classmethod
    def cycle(cls, n: int) -> "LabeledGraph":
        return cls.from_edges(n, [(i, i % n + 1) for i in range(1, n + 1)])

    @property
    def edges(self) -> Tuple[Edge, ...]:
        pairs = slot_pairs(self.n)
        return tuple(pairs[s] for s in range(len(pairs)) if self.mask >> s & 1)

    def has_edge(self, i: int, j: int) -> bool:
        return bool(self.mask >> slot_index(self.n, i, j) & 1)

    def neighbors(self, v: int) -> FrozenSet[int]:
        return frozenset(u for u in range(1, self.n + 1) if u != v and self.has_edge(u, v))

    def complement(self) -> "LabeledGraph":
        return LabeledGraph(self.n, self.mask ^ ((1 << num_slots(self.n)) - 1))

    def intersect(self, other: "LabeledGraph") -> "LabeledGraph":
        if other.n != self.n:
            raise ValueError("intersection needs graphs on the same vertex count")
        return LabeledGraph(self.n, self.mask & other.mask)

    def num_edges(self) -> int:
        return bin(self.mask).count("1")

    def to_literal(self) -> str:
        return format_graph(self)

    def __str__(self) -> str:
        return format_graph(self)


def parse_graph(text: str) -> LabeledGraph:
    """Parse ``n:EdgeList`` such as ``5:12,23,34,45,15``."""
    head, sep, body = text.strip().partition(":")
    if not sep:
        raise ValueError(f"graph literal {text!r} lacks ':'")
    try:
        n = int(head)
    except ValueError:
        raise ValueError(f"bad vertex count {head!r}") from None
    _check_n(n)
    edges = []
    for tok in filter(None, (t.strip() for t in body.split(","))):
        if n <= 9:
            if len(tok) != 2 or not tok.isdigit():
                raise ValueError(f"bad edge token {tok!r}")
            i, j = int(tok[0]), int(tok[1])
        else:
            # two-digit labels need a separator: 10-11
            try:
                i, j = (int(x) for x in tok.split("-"))
            except ValueError:
                raise ValueError(f"bad edge token {tok!r}") from None
        if not (1 <= i <= n and 1 <= j <= n) or i == j:
            raise ValueError(f"edge token {tok!r} out of range for n={n}")
        edges.append((i, j))
    return LabeledGraph.from_edges(n, edges)


def format_graph(g: LabeledGraph) -> str:
    sep = "" if g.n <= 9 else "-"
    return f"{g.n}:" + ",".join(f"{i}{sep}{j}" for i, j in g.edges)


def induced_subgraph(g: LabeledGraph, vertices: Iterable[int]) -> LabeledGraph:
    """Restrict ``g`` to ``vertices``, relabeled 1..|U| in increasing order."""
    verts = sorted(set(vertices))
    if any(not 1 <= v <= g.n for v in verts):
        raise ValueError(f"vertex set {verts} not contained in 1..{g.n}")
    m = len(verts)
    if m == 0:
        raise ValueError("induced subgraph needs at least one vertex")
    mask = 0
    for a in range(m):
        for b in range(a + 1, m):
            if g.mask >> slot_index(g.n, verts[a], verts[b]) & 1:
                mask |= 1 << slot_index(m, a + 1, b + 1)
    return LabeledGraph(m, mask)


# --- pattern detection -----------------------------------------------------


@lru_cache(maxsize=None)
def _subset_slots(n: int, size: int) -> Tuple[Tuple[int, ...], ...]:
    """For each ``size``-subset of 1..n, the slots of its internal pairs in local slot order."""
    out = []
    for sub in combinations(range(1, n + 1), size):
        out.append(tuple(slot_index(n, sub[a], sub[b]) for a in range(size) for b in range(a + 1, size)))
    return tuple(out)


def _labeled_patterns(size: int, edge_lists: Iterable[Sequence[Edge]]) -> FrozenSet[int]:
    return frozenset(LabeledGraph.from_edges(size, e).mask for e in edge_lists)


@lru_cache(maxsize=None)
def p4_patterns() -> FrozenSet[int]:
    """Local 6-bit masks of the 12 labeled 4-paths on {1,2,3,4}."""
    paths = set()
    for p in permutations(range(1, 5)):
        if p[0] < p[-1]:
            paths.add(tuple(zip(p, p[1:])))
    return _labeled_patterns(4, paths)


@lru_cache(maxsize=None)
def c5_patterns() -> FrozenSet[int]:
    """Local 10-bit masks of the 12 labeled 5-cycles on {1..5}."""
    cycles = []
    for p in permutations(range(2, 6)):
        if p[0] < p[-1]:
            seq = (1,) + p
            cycles.append([(seq[i], seq[(i + 1) % 5]) for i in range(5)])
    return _labeled_patterns(5, cycles)


@lru_cache(maxsize=None)
def claw_patterns() -> FrozenSet[int]:
    return _labeled_patterns(4, ([(c, v) for v in range(1, 5) if v != c] for c in range(1, 5)))


def _local_mask(mask: int, slots: Sequence[int]) -> int:
    local = 0
    for b, s in enumerate(slots):
        local |= (mask >> s & 1) << b
    return local


def _find_pattern(g: LabeledGraph, size: int, patterns: FrozenSet[int]):
    if g.n < size:
        return None
    for sub, slots in zip(combinations(range(1, g.n + 1), size), _subset_slots(g.n, size)):
        if _local_mask(g.mask, slots) in patterns:
            return sub
    return None


def find_induced_p4(g: LabeledGraph):
    """Vertex 4-tuple inducing a P4, or None."""
    return _find_pattern(g, 4, p4_patterns())


def has_induced_p4(g: LabeledGraph) -> bool:
    return find_induced_p4(g) is not None


def find_induced_c5(g: LabeledGraph):
    return _find_pattern(g, 5, c5_patterns())


def has_induced_c5(g: LabeledGraph) -> bool:
    return find_induced_c5(g) is not None


def _components(g: LabeledGraph, verts: FrozenSet[int]) -> list:
    adj = {v: g.neighbors(v) & verts for v in verts}
    seen, comps = set(), []
    for v in sorted(verts):
        if v in seen:
            continue
        comp, stack = set(), [v]
        while stack:
            u = stack.pop()
            if u in comp:
                continue
            comp.add(u)
            stack.extend(adj[u] - comp)
        seen |= comp
        comps.append(frozenset(comp))
    return comps


def _reducible(g: LabeledGraph, gc: LabeledGraph, verts: FrozenSet[int]) -> bool:
    if len(verts) <= 1:
        return True
    comps = _components(g, verts)
    if len(comps) > 1:
        return all(_reducible(g, gc, c) for c in comps)
    co_comps = _components(gc, verts)
    if len(co_comps) > 1:
        return all(_reducible(g, gc, c) for c in co_comps)
    return False


def is_cograph(g: LabeledGraph, method: str = "p4") -> bool:
    """Whether ``g`` has no induced P4.

    ``method="p4"`` scans 4-subsets; ``method="cotree"`` runs the
    complement-reducibility recursion (every connected induced piece must have
    a disconnected complement).  The two are independent and must agree.
    """
    if method == "p4":
        return not has_induced_p4(g)
    if method == "cotree":
        return _reducible(g, g.complement(), frozenset(range(1, g.n + 1)))
    raise ValueError(f"unknown method {method!r}")


def is_connected_edges(vertices: Iterable[int], edges: Iterable[Edge]) -> bool:
    verts = set(vertices)
    if not verts:
        return True
    parent = {v: v for v in verts}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    groups = len(verts)
    for u, v in edges:
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[ru] = rv
            groups -= 1
    return groups == 1


def is_spanning_tree(vertices: Iterable[int], edges: Iterable[Edge]) -> bool:
    verts = set(vertices)
    edges = list(edges)
    return len(edges) == len(verts) - 1 and is_connected_edges(verts, edges)


def all_graphs(n: int) -> Iterator[LabeledGraph]:
    for mask in range(1 << num_slots(n)):
        yield LabeledGraph(n, mask)


# --- wheels ----------------------------------------------------------------


def _dihedral_min(spokes: Sequence[int]) -> Tuple[int, ...]:
    k = len(spokes)
    best = None
    for seq in (tuple(spokes), tuple(reversed(spokes))):
        for r in range(k):
            cand = seq[r:] + seq[:r]
            if best is None or cand < best:
                best = cand
    return best


@dataclass(frozen=True, order=True)
class Wheel:
    """The wheel W(center; spokes) with spokes in cyclic order, stored dihedral-minimal."""

    center: int
    spokes: Tuple[int, ...]

    def __post_init__(self):
        spokes = tuple(self.spokes)
        if len(spokes) < 3:
            raise ValueError("a wheel needs at least 3 spokes")
        if len(set(spokes) | {self.center}) != len(spokes) + 1:
            raise ValueError("wheel vertices must be distinct")
        object.__setattr__(self, "spokes", _dihedral_min(spokes))

    @property
    def k(self) -> int:
        return len(self.spokes)

    @property
    def vertices(self) -> Tuple[int, ...]:
        return (self.center,) + self.spokes

    @property
    def radii(self) -> Tuple[Edge, ...]:
        return tuple(_pair(self.center, s) for s in self.spokes)

    @property
    def chords_cw(self) -> Tuple[Edge, ...]:
        """Chord i joins spoke i to spoke i+1 (cyclically)."""
        s = self.spokes
        return tuple(_pair(s[i], s[(i + 1) % self.k]) for i in range(self.k))

    @property
    def chords_ccw(self) -> Tuple[Edge, ...]:
        """Chord i joins spoke i-1 to spoke i (cyclically)."""
        s = self.spokes
        return tuple(_pair(s[i - 1], s[i]) for i in range(self.k))

    @property
    def edges(self) -> FrozenSet[Edge]:
        return frozenset(self.radii) | frozenset(self.chords_cw)

    @property
    def edge_count(self) -> int:
        return 2 * self.k

    def __str__(self) -> str:
        return f"W({self.center};{','.join(map(str, self.spokes))})"


def _pair(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


def wheel_count(n: int, ideal="I") -> int:
    kmax = 3 if str(ideal) == "J" else n - 1
    return n * sum(comb(n - 1, k) * factorial(k - 1) // 2 for k in range(3, kmax + 1))


@lru_cache(maxsize=None)
def _enumerate_wheels(n: int, only_k3: bool) -> Tuple[Wheel, ...]:
    wheels = []
    kmax = 3 if only_k3 else n - 1
    for center in range(1, n + 1):
        rest = [v for v in range(1, n + 1) if v != center]
        for k in range(3, kmax + 1):
            for sub in combinations(rest, k):
                first = sub[0]
                # fix the smallest spoke first and take one of each reflected pair
                for perm in permutations(sub[1:]):
                    if perm[0] < perm[-1]:
                        wheels.append(Wheel(center, (first,) + perm))
    return tuple(wheels)


def enumerate_wheels(n: int, ideal="I") -> Tuple[Wheel, ...]:
    """Canonical wheels of K_n: all of them for ideal I, only 3-wheels for J."""
    if n < 1:
        raise ValueError("n must be positive")
    return _enumerate_wheels(n, str(ideal) == "J")


def coupled_spanning_trees(w: Wheel) -> Tuple[FrozenSet[Edge], ...]:
    """Cpl(W): nonempty proper radius subsets completed by all-clockwise or all-counterclockwise chords."""
    k = w.k
    radii, cw, ccw = w.radii, w.chords_cw, w.chords_ccw
    seen = []
    found = set()
    for chords in (cw, ccw):
        for bits in range(1, (1 << k) - 1):
            t = frozenset(radii[i] if bits >> i & 1 else chords[i] for i in range(k))
            if t not in found:
                found.add(t)
                seen.append(t)
    return tuple(seen)


def is_coupled_spanning_tree(w: Wheel, tree: Iterable[Edge]) -> bool:
    t = frozenset(_pair(*e) for e in tree)
    if not t <= w.edges:
        raise ValueError("edge set is not contained in the wheel")
    return is_spanning_tree(w.vertices, t) and is_spanning_tree(w.vertices, w.edges - t)
