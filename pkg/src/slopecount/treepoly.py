"""Wheel tree polynomials: evaluation, the mod-2 expansion, zero tests, text export."""

from __future__ import annotations

import enum
from functools import lru_cache
from typing import Optional, Tuple

from .graphs import (
    LabeledGraph,
    Wheel,
    coupled_spanning_trees,
    enumerate_wheels,
    p4_patterns,
    slot_index,
    _local_mask,
    _subset_slots,
)
from .weights import EdgeWeighting, weighting_to_graph


class IdealSpec(str, enum.Enum):
    I = "I"  # all wheels
    J = "J"  # 3-wheels only

    def __str__(self) -> str:
        return self.value


def as_ideal(ideal) -> IdealSpec:
    try:
        return IdealSpec(str(ideal))
    except ValueError:
        raise ValueError(f"ideal must be 'I' or 'J', got {ideal!r}") from None


def wheel_slots(w: Wheel, n: int) -> Tuple[Tuple[int, ...], Tuple[int, ...], Tuple[int, ...]]:
    """Slot indices of (radii, clockwise chords, counterclockwise chords) inside K_n."""
    if max(w.vertices) > n:
        raise ValueError(f"{w} does not fit in K_{n}")
    return (
        tuple(slot_index(n, *e) for e in w.radii),
        tuple(slot_index(n, *e) for e in w.chords_cw),
        tuple(slot_index(n, *e) for e in w.chords_ccw),
    )


def _product(values, radius, chord, q: int) -> int:
    acc = 1
    for r, c in zip(radius, chord):
        f = values[r] - values[c]
        if f % q == 0:
            return 0
        acc = acc * f % q
    return acc


def tau_parts(w: Wheel, a: EdgeWeighting) -> Tuple[int, int]:
    """(tau_1(a), tau_2(a)) reduced mod q."""
    radius, cw, ccw = wheel_slots(w, a.n)
    return _product(a.values, radius, cw, a.q), _product(a.values, radius, ccw, a.q)


def tau_eval(w: Wheel, a: EdgeWeighting) -> int:
    """tau_W(a) = prod(radius_i - cw_chord_i) - prod(radius_i - ccw_chord_i) in F_q."""
    t1, t2 = tau_parts(w, a)
    return (t1 - t2) % a.q


def tau_eval_expanded_mod2(w: Wheel, a: EdgeWeighting) -> int:
    """Sum over coupled spanning trees T of prod_{e in T} a_e, over F_2."""
    if a.q != 2:
        raise ValueError("the coupled-spanning-tree expansion is only sign-free mod 2")
    if max(w.vertices) > a.n:
        raise ValueError(f"{w} does not fit in K_{a.n}")
    total = 0
    for tree in coupled_spanning_trees(w):
        total ^= all(a[e] for e in tree)
    return int(total)


def first_nonzero_wheel(a: EdgeWeighting, ideal=IdealSpec.I) -> Optional[Wheel]:
    for w in enumerate_wheels(a.n, as_ideal(ideal)):
        if tau_eval(w, a):
            return w
    return None


def is_zero_point(a: EdgeWeighting, ideal=IdealSpec.I) -> bool:
    """Whether every wheel polynomial of the ideal vanishes at ``a``."""
    return first_nonzero_wheel(a, ideal) is None


def is_zero_point_graph(a: EdgeWeighting) -> bool:
    """q=2, ideal J via graphs: zero iff no 4-set of G_a carries a P4 pattern."""
    g: LabeledGraph = weighting_to_graph(a)
    patterns = p4_patterns()
    return not any(_local_mask(g.mask, slots) in patterns for slots in _subset_slots(a.n, 4))


def export_polynomial(w: Wheel) -> str:
    """tau_W as one factored line in variables m_i_j, clockwise product minus counterclockwise."""

    def var(e):
        return f"m_{e[0]}_{e[1]}"

    def prod(chords):
        return "*".join(f"({var(r)}-{var(c)})" for r, c in zip(w.radii, chords))

    return f"{prod(w.chords_cw)}-{prod(w.chords_ccw)}"


@lru_cache(maxsize=None)
def wheel_table(n: int, ideal) -> Tuple[Tuple[Tuple[int, ...], Tuple[int, ...], Tuple[int, ...]], ...]:
    """Slot triples for every wheel of the ideal, in enumeration order."""
    return tuple(wheel_slots(w, n) for w in enumerate_wheels(n, as_ideal(ideal)))
