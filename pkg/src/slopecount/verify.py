"""Exhaustive checks tying tree-polynomial zeros to cographs and switching classes.

Each check returns a ``CheckResult``; none raise on a failed property, so the
CLI can print every sub-check and the first counterexample found.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Any, Dict, List, Optional

import numpy as np

from . import kernels
from .graphs import (
    LabeledGraph,
    all_graphs,
    claw_patterns,
    enumerate_wheels,
    has_induced_c5,
    has_induced_p4,
    induced_subgraph,
    is_coupled_spanning_tree,
    num_slots,
    p4_patterns,
    slot_index,
    slot_pairs,
)
from .pointcount import _check_budget
from .switching import (
    canonical_representative,
    cograph_to_class,
    orbit_has_induced_c5,
    switch,
)
from .treepoly import IdealSpec, tau_eval, tau_eval_expanded_mod2
from .weights import EdgeWeighting, all_weightings, complement_weighting, level_graphs

THEOREM1_MAX_N = 6


@dataclass
class CheckResult:
    name: str
    checked: int = 0
    failures: int = 0
    counterexample: Optional[str] = None
    details: Dict[str, Any] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.failures == 0

    def fail(self, example: str) -> None:
        self.failures += 1
        if self.counterexample is None:
            self.counterexample = example

    def to_json(self) -> dict:
        return {
            "check": self.name,
            "checked": self.checked,
            "failures": self.failures,
            "passed": self.passed,
            "counterexample": self.counterexample,
            **self.details,
        }

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        extra = "".join(f" {k}={v}" for k, v in self.details.items())
        text = f"{status} {self.name}: {self.checked} checked, {self.failures} failures{extra}"
        if self.counterexample:
            text += f" (e.g. {self.counterexample})"
        return text


# --- Theorem 1 -------------------------------------------------------------


def _all_zero_flags(n: int, ideal: IdealSpec, backend: Optional[str]) -> np.ndarray:
    d = num_slots(n)
    impl = kernels.get_backend(backend)
    codes = np.arange(2**d, dtype=np.int64)
    return np.asarray(impl.wheel_zero_flags(2, d, *kernels.wheel_arrays(n, ideal), codes)).astype(bool)


def verify_theorem1(n: int, backend: Optional[str] = None, max_n: int = THEOREM1_MAX_N) -> CheckResult:
    """Four independent cardinalities over F_2 and their pointwise bijections.

    zeros of I_n and of J_n come from wheel-polynomial evaluation, cographs
    from the 4-subset P4 scan, and C5-free switching classes on [n+1] from full
    orbit scans.  The identity map (zeros <-> cographs) and the
    add-an-isolated-vertex map (cographs <-> classes) are checked per element.
    """
    if not 1 <= n <= max_n:
        raise ValueError(f"n must be in 1..{max_n} for exhaustive verification")
    _check_budget(n, 2, 2**max(num_slots(max_n), 1))
    res = CheckResult(f"theorem1 n={n}")
    zeros_i = _all_zero_flags(n, IdealSpec.I, backend)
    zeros_j = _all_zero_flags(n, IdealSpec.J, backend)
    cographs = 0
    c5free_images = set()
    for code in range(2 ** num_slots(n)):
        a = EdgeWeighting.from_code(n, 2, code)
        g = LabeledGraph.from_edges(n, [pair for pair, v in zip(slot_pairs(n), a.values) if v])
        cog = not has_induced_p4(g)
        cographs += cog
        cls = cograph_to_class(g)
        c5free = not orbit_has_induced_c5(cls, paranoid=True)
        if c5free:
            c5free_images.add(cls)
        res.checked += 1
        if not (zeros_i[code] == zeros_j[code] == cog == c5free):
            res.fail(
                f"point {a}: zero_I={bool(zeros_i[code])} zero_J={bool(zeros_j[code])} "
                f"cograph={cog} class_c5free={c5free}"
            )
    classes = _count_c5free_classes_independent(n)
    counts = {
        "zeros_I": int(zeros_i.sum()),
        "zeros_J": int(zeros_j.sum()),
        "cographs": cographs,
        "c5free_classes": classes,
    }
    if len(set(counts.values())) != 1:
        res.fail(f"cardinalities differ: {counts}")
    if len(c5free_images) != cographs:
        res.fail("cograph -> class map is not injective")
    res.details.update(counts)
    return res


def _count_c5free_classes_independent(n: int) -> int:
    """C5-free classes on [n+1], found by canonicalizing every graph on [n+1] (n <= 5)
    or by scanning the isolated-vertex representatives (n = 6)."""
    if n <= 5:
        reps = {canonical_representative(g) for g in all_graphs(n + 1)}
    else:
        reps = {cograph_to_class(g) for g in all_graphs(n)}
    if len(reps) != 2 ** num_slots(n):
        raise AssertionError("switching class count is not 2^C(n,2)")
    return sum(not orbit_has_induced_c5(c, paranoid=True) for c in reps)


# --- coupled spanning trees and tree polynomials over F_2 -----------------


def _wheel_edge_weightings(w, n):
    """Every 0/1 weighting of the wheel's edges inside K_n, other slots 0."""
    edges = sorted(w.edges)
    slots = [slot_index(n, *e) for e in edges]
    d = num_slots(n)
    for bits in range(1 << len(edges)):
        vals = [0] * d
        chosen = []
        for b, (e, s) in enumerate(zip(edges, slots)):
            if bits >> b & 1:
                vals[s] = 1
                chosen.append(e)
        yield EdgeWeighting(n, 2, tuple(vals)), frozenset(chosen)


def _wheels_with_k(k: int):
    return [w for w in enumerate_wheels(k + 1, IdealSpec.I) if w.k == k]


def check_tree_not_zero(ks=(3, 4, 5)) -> List[CheckResult]:
    """tau_W(a) != 0 iff the 1-edges of W form a coupled spanning tree; plus the
    mod-2 expansion oracle and complement symmetry on the same range."""
    tnz = CheckResult("treenotzero")
    expansion = CheckResult("expansion-oracle")
    symmetry = CheckResult("complement-symmetry")
    for k in ks:
        for w in _wheels_with_k(k):
            n = k + 1
            for a, tree in _wheel_edge_weightings(w, n):
                value = tau_eval(w, a)
                tnz.checked += 1
                if bool(value) != is_coupled_spanning_tree(w, tree):
                    tnz.fail(f"{w} at {a}")
                expansion.checked += 1
                if value != tau_eval_expanded_mod2(w, a):
                    expansion.fail(f"{w} at {a}")
                symmetry.checked += 1
                if value != tau_eval(w, complement_weighting(a)):
                    symmetry.fail(f"{w} at {a}")
    return [tnz, expansion, symmetry]


# --- switching --------------------------------------------------------------


def check_cog5cyc(n: int = 4) -> List[CheckResult]:
    """Both implications relating induced C5s in a class to induced P4s, over all
    graphs on [n+1] and all switches, plus fast path vs orbit-scan agreement."""
    injective = CheckResult(f"cog5cyc(1) n+1={n + 1}")
    surjective = CheckResult(f"cog5cyc(2) n+1={n + 1}")
    fast = CheckResult(f"c5-fast-path n+1={n + 1}")
    subsets = [xs for size in range(n + 1) for xs in combinations(range(1, n + 1), size)]
    for g in all_graphs(n + 1):
        if has_induced_c5(g):
            for xs in subsets:
                injective.checked += 1
                h = switch(g, xs)
                if not has_induced_p4(h):
                    injective.fail(f"{g} switched by {set(xs) or '{}'} has no induced P4")
        else:
            injective.checked += len(subsets)
    for g in all_graphs(n):
        cls = cograph_to_class(g)
        oracle = orbit_has_induced_c5(cls, paranoid=True)
        fast.checked += 1
        if oracle != orbit_has_induced_c5(cls):
            fast.fail(str(cls))
        if has_induced_p4(g):
            surjective.checked += 1
            if not oracle:
                surjective.fail(f"{g} has an induced P4 but its class has no induced C5")
    return [injective, surjective, fast]


# --- weight-induced subgraphs over F_q -------------------------------------


def _has_cycle(g: LabeledGraph) -> bool:
    parent = list(range(g.n + 1))

    def find(x):
        while parent[x] != x:
            x = parent[x]
        return x

    for u, v in g.edges:
        ru, rv = find(u), find(v)
        if ru == rv:
            return True
        parent[ru] = rv
    return False


def check_generalize(q: int) -> List[CheckResult]:
    """Weight-induced P4 forces a nonzero, a claw or cycle forces a zero, for every
    3-wheel of K4 and every point of F_q^6."""
    p4 = CheckResult(f"generalize-p4 q={q}")
    claw = CheckResult(f"generalize-claw q={q}")
    cycle = CheckResult(f"generalize-cycle q={q}")
    wheels = enumerate_wheels(4, IdealSpec.J)
    for a in all_weightings(4, q):
        levels = level_graphs(a)
        has_p4 = any(h.mask in p4_patterns() for h in levels)
        has_claw = any(h.mask in claw_patterns() for h in levels)
        has_cycle = any(_has_cycle(h) for h in levels)
        for w in wheels:
            value = tau_eval(w, a)
            if has_p4:
                p4.checked += 1
                if not value:
                    p4.fail(f"{w} at {a}")
            if has_claw:
                claw.checked += 1
                if value:
                    claw.fail(f"{w} at {a}")
            if has_cycle:
                cycle.checked += 1
                if value:
                    cycle.fail(f"{w} at {a}")
    return [p4, claw, cycle]


def check_generalize_corollary(n: int, q: int) -> CheckResult:
    """A weight-induced P4 on some 4-clique forces a nonzero of I_n; a cycle or
    claw in some level of every 4-clique forces a zero."""
    res = CheckResult(f"generalize-corollary n={n} q={q}")
    impl = kernels.get_backend(None)
    d = num_slots(n)
    codes = np.arange(q**d, dtype=np.int64)
    zero = np.asarray(impl.wheel_zero_flags(q, d, *kernels.wheel_arrays(n, IdealSpec.I), codes)).astype(bool)
    quads = list(combinations(range(1, n + 1), 4))
    covered = 0
    for code in range(q**d):
        a = EdgeWeighting.from_code(n, q, code)
        some_p4 = False
        all_forced = True
        for quad in quads:
            levels = [induced_subgraph(h, quad) for h in level_graphs(a)]
            some_p4 |= any(h.mask in p4_patterns() for h in levels)
            all_forced &= any(_has_cycle(h) or h.mask in claw_patterns() for h in levels)
        res.checked += 1
        if some_p4 and zero[code]:
            res.fail(f"{a} has a weight-induced P4 but is a zero")
        if all_forced and not zero[code]:
            res.fail(f"{a} has forced zeros on every 4-clique but is not a zero")
        covered += some_p4 or all_forced
    res.details["decided_by_patterns"] = covered
    return res


def check_invariants_switching(n_plus_1: int) -> List[CheckResult]:
    """Free action and canonical-representative invariance, exhaustive."""
    free = CheckResult(f"free-action n+1={n_plus_1}")
    canon = CheckResult(f"canonical-representative n+1={n_plus_1}")
    n = n_plus_1 - 1
    subsets = [xs for size in range(n + 1) for xs in combinations(range(1, n + 1), size)]
    for g in all_graphs(n_plus_1):
        rep = canonical_representative(g)
        for xs in subsets:
            h = switch(g, xs)
            if xs:
                free.checked += 1
                if h == g:
                    free.fail(f"{g} fixed by {set(xs)}")
            canon.checked += 1
            if canonical_representative(h) != rep:
                canon.fail(f"{g} and its switch by {set(xs)}")
    return [free, canon]


THEOREMS = ("1", "treenotzero", "cog5cyc", "generalize")


def run_theorem(theorem: str, n: Optional[int] = None, q: Optional[int] = None, backend=None) -> List[CheckResult]:
    """Dispatch for the ``verify`` subcommand."""
    if theorem == "1":
        return [verify_theorem1(4 if n is None else n, backend=backend)]
    if theorem == "treenotzero":
        kmax = 5 if n is None else n - 1
        if not 3 <= kmax <= 6:
            raise ValueError("treenotzero checks wheels with 3..6 spokes (n = 4..7)")
        return check_tree_not_zero(tuple(range(3, kmax + 1)))
    if theorem == "cog5cyc":
        n = 4 if n is None else n
        if not 1 <= n <= 5:
            raise ValueError("cog5cyc is exhaustive only for n <= 5")
        return check_cog5cyc(n)
    if theorem == "generalize":
        qs = (3, 5) if q is None or q == 2 else (q,)
        out = []
        for qq in qs:
            out.extend(check_generalize(qq))
        if q is None or q == 3:
            out.append(check_generalize_corollary(4, 3))
        return out
    raise ValueError(f"unknown theorem {theorem!r}; choose from {THEOREMS}")
