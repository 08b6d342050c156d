"""Exhaustive zero counting over F_q^C(n,2), per-type tables, and point classification.

The point space is the range of base-q codes [0, q^d).  It is cut into fixed
contiguous chunks (independent of the worker count), each chunk is counted by
the selected backend, and partial counts are summed in chunk order.
"""

from __future__ import annotations

import logging
import math
import os
import random
import time
from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

import numpy as np

from . import kernels
from .graphs import Wheel, enumerate_wheels, find_induced_p4, is_cograph, num_slots
from .treepoly import IdealSpec, as_ideal, first_nonzero_wheel
from .weights import EdgeWeighting, check_prime, classify_type, format_type, weighting_to_graph

log = logging.getLogger(__name__)

DEFAULT_BUDGET = 2**32
MIN_CHUNK = 1 << 16
MAX_CHUNKS = 256
CROSSCHECK_SAMPLES = 100_000


class BudgetExceeded(RuntimeError):
    def __init__(self, n: int, q: int, points: int, budget: int):
        self.points = points
        self.budget = budget
        super().__init__(
            f"q={q}, n={n} has {points:,} points (~2^{math.log2(points):.1f}), "
            f"over the budget of {budget:,}; pass an override to run anyway"
        )


class VerificationError(AssertionError):
    def __init__(self, message: str, counterexample=None):
        super().__init__(message)
        self.counterexample = counterexample


@dataclass
class CountReport:
    n: int
    q: int
    ideal: str
    zero_count: int
    total_points: int
    elapsed: float = 0.0
    per_type: Optional[Dict[Tuple[int, ...], Tuple[int, int]]] = None
    method: str = "poly"
    wheel: Optional[str] = None

    def __post_init__(self):
        if not 0 <= self.zero_count <= self.total_points:
            raise ValueError("zero count outside [0, total]")
        if self.per_type is not None:
            zeros = sum(z for z, _ in self.per_type.values())
            points = sum(z + nz for z, nz in self.per_type.values())
            if zeros != self.zero_count or points != self.total_points:
                raise ValueError("per-type rows do not add up to the totals")

    @property
    def nonzero_count(self) -> int:
        return self.total_points - self.zero_count

    def to_json(self) -> dict:
        out = {
            "n": self.n,
            "q": self.q,
            "ideal": self.ideal,
            "zeros": self.zero_count,
            "total": self.total_points,
            "elapsed_ms": round(self.elapsed * 1000, 3),
        }
        if self.wheel is not None:
            out["wheel"] = self.wheel
        if self.per_type is not None:
            out["per_type"] = [
                {"type": format_type(t), "zeros": z, "nonzeros": nz} for t, (z, nz) in self.per_type.items()
            ]
        return out

    @classmethod
    def from_json(cls, data: dict) -> "CountReport":
        per_type = None
        if "per_type" in data:
            per_type = {
                tuple(int(p) for p in row["type"].strip("()").split(",")): (row["zeros"], row["nonzeros"])
                for row in data["per_type"]
            }
        return cls(
            n=data["n"],
            q=data["q"],
            ideal=data["ideal"],
            zero_count=data["zeros"],
            total_points=data["total"],
            elapsed=data["elapsed_ms"] / 1000,
            per_type=per_type,
            wheel=data.get("wheel"),
        )


def default_workers() -> int:
    env = os.environ.get("SLOPECOUNT_THREADS")
    if env:
        workers = int(env)
        if workers < 1:
            raise ValueError("SLOPECOUNT_THREADS must be >= 1")
        return workers
    return os.cpu_count() or 1


def partition_ranges(total: int, min_chunk: int = MIN_CHUNK, max_chunks: int = MAX_CHUNKS) -> List[Tuple[int, int]]:
    """Contiguous [lo, hi) ranges covering [0, total) exactly once."""
    if total <= 0:
        return []
    chunk = max(min_chunk, -(-total // max_chunks))
    return [(lo, min(lo + chunk, total)) for lo in range(0, total, chunk)]


def _check_budget(n: int, q: int, budget: Optional[int]) -> int:
    total = q ** num_slots(n)
    if budget is not None and total > budget:
        raise BudgetExceeded(n, q, total, budget)
    return total


def _run_ranges(func, ranges, workers: int) -> List[int]:
    if workers <= 1 or len(ranges) <= 1:
        return [func(lo, hi) for lo, hi in ranges]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(lambda r: func(*r), ranges))


def _code_to_graph_mask(code: int, d: int) -> int:
    """For q=2 the code's most significant bit is slot 0; graph masks keep slot 0 in bit 0."""
    return int(format(code, f"0{d}b")[::-1], 2) if d else 0


def count_zeros(
    n: int,
    q: int,
    ideal=IdealSpec.I,
    workers: Optional[int] = None,
    method: str = "auto",
    budget: Optional[int] = DEFAULT_BUDGET,
    backend: Optional[str] = None,
    crosscheck_samples: Optional[int] = None,
    seed: int = 0,
) -> CountReport:
    """Count the common zeros in F_q^C(n,2) of the ideal's wheel polynomials.

    ``method`` is ``"poly"`` (evaluate wheel polynomials), ``"graph"`` (q=2 and
    ideal J only: count graphs with no induced P4), or ``"auto"``, which picks
    the graph path for q=2, ideal J, n >= 7.  The graph path is cross-checked
    against the polynomial path on random points.
    """
    check_prime(q)
    if n < 1:
        raise ValueError("n must be positive")
    ideal = as_ideal(ideal)
    total = _check_budget(n, q, budget)
    workers = default_workers() if workers is None else workers
    if workers < 1:
        raise ValueError("workers must be >= 1")
    if method == "auto":
        method = "graph" if (q == 2 and ideal is IdealSpec.J and n >= 7) else "poly"
    if method == "graph" and not (q == 2 and ideal is IdealSpec.J):
        raise ValueError("the graph path only applies to q=2 with ideal J")
    if method not in ("poly", "graph"):
        raise ValueError(f"unknown method {method!r}")
    impl = kernels.get_backend(backend)
    d = num_slots(n)
    t0 = time.perf_counter()
    if method == "poly":
        tables = kernels.wheel_arrays(n, ideal)

        def func(lo, hi):
            return impl.count_wheel_zeros(q, d, *tables, lo, hi)

    else:
        subsets, table = kernels.p4_arrays(n)

        def func(lo, hi):
            return impl.count_p4_free(subsets, table, lo, hi)

    ranges = partition_ranges(total)
    zeros = sum(_run_ranges(func, ranges, workers))
    if method == "graph":
        samples = CROSSCHECK_SAMPLES if crosscheck_samples is None else crosscheck_samples
        _crosscheck_graph_path(n, impl, samples, seed)
    elapsed = time.perf_counter() - t0
    log.info("count_zeros n=%d q=%d ideal=%s method=%s: %d zeros in %.3fs", n, q, ideal, method, zeros, elapsed)
    return CountReport(n, q, ideal.value, zeros, total, elapsed, method=method)


def _crosscheck_graph_path(n: int, impl, samples: int, seed: int) -> None:
    if samples <= 0 or n < 4:
        return
    d = num_slots(n)
    rng = random.Random(seed)
    codes = np.array([rng.randrange(1 << d) for _ in range(samples)], dtype=np.int64)
    poly = impl.wheel_zero_flags(2, d, *kernels.wheel_arrays(n, IdealSpec.J), codes)
    masks = np.array([_code_to_graph_mask(int(c), d) for c in codes], dtype=np.uint64)
    graph = impl.p4_free_flags(*kernels.p4_arrays(n), masks)
    bad = np.flatnonzero(np.asarray(poly) != np.asarray(graph))
    if bad.size:
        a = EdgeWeighting.from_code(n, 2, int(codes[bad[0]]))
        raise VerificationError(f"graph and polynomial paths disagree at {a}", a)


def tabulate_by_type(
    n: int,
    q: int,
    wheel: Optional[Wheel] = None,
    budget: Optional[int] = DEFAULT_BUDGET,
    backend: Optional[str] = None,
    ideal=None,
) -> CountReport:
    """Zeros / non-zeros per point type, for one wheel polynomial (default: the first 3-wheel) or an ideal."""
    check_prime(q)
    total = _check_budget(n, q, budget)
    d = num_slots(n)
    impl = kernels.get_backend(backend)
    t0 = time.perf_counter()
    if ideal is not None:
        ideal = as_ideal(ideal)
        tables = kernels.wheel_arrays(n, ideal)
        label = ideal.value
        wheel_name = None
    else:
        if wheel is None:
            wheels = enumerate_wheels(n, IdealSpec.J)
            if not wheels:
                raise ValueError("tabulation needs n >= 4 for a wheel")
            wheel = wheels[0]
        tables = kernels.single_wheel_arrays(wheel, n)
        label = "W"
        wheel_name = str(wheel)
    rows: Counter = Counter()
    for lo, hi in partition_ranges(total, min_chunk=1 << 18):
        codes = np.arange(lo, hi, dtype=np.int64)
        flags = np.asarray(impl.wheel_zero_flags(q, d, *tables, codes)).astype(bool)
        counts = np.zeros((codes.size, q), dtype=np.int64)
        rest = codes.copy()
        for _ in range(d):
            counts[np.arange(codes.size), rest % q] += 1
            rest //= q
        counts = -np.sort(-counts, axis=1)
        keys, inverse = np.unique(counts, axis=0, return_inverse=True)
        inverse = inverse.reshape(-1)
        z = np.bincount(inverse, weights=flags, minlength=len(keys))
        a = np.bincount(inverse, minlength=len(keys))
        for key, zc, ac in zip(keys, z, a):
            part = tuple(int(p) for p in key if p)
            rows[part, True] += int(zc)
            rows[part, False] += int(ac - zc)
    types = sorted({t for t, _ in rows}, reverse=True)
    per_type = {t: (rows[t, True], rows[t, False]) for t in types}
    zeros = sum(z for z, _ in per_type.values())
    return CountReport(n, q, label, zeros, total, time.perf_counter() - t0, per_type=per_type, wheel=wheel_name)


def multinomial_type_counts(n: int, q: int) -> Dict[Tuple[int, ...], int]:
    """Number of points of each type, from the multinomial formula."""
    d = num_slots(n)
    out: Dict[Tuple[int, ...], int] = {}
    for part in _partitions(d, q):
        arrangements = math.factorial(d)
        for p in part:
            arrangements //= math.factorial(p)
        # choose which field values carry the parts; equal parts are interchangeable
        values = math.perm(q, len(part))
        for mult in Counter(part).values():
            values //= math.factorial(mult)
        out[part] = arrangements * values
    return out


def _partitions(total: int, max_parts: int, largest: Optional[int] = None):
    largest = total if largest is None else largest
    if total == 0:
        yield ()
        return
    if max_parts == 0:
        return
    for first in range(min(total, largest), 0, -1):
        for rest in _partitions(total - first, max_parts - 1, first):
            yield (first,) + rest


def classify_point(a: EdgeWeighting) -> dict:
    """Zero status under both ideals, plus graph data when q=2; JSON-ready."""
    w_i = first_nonzero_wheel(a, IdealSpec.I)
    w_j = first_nonzero_wheel(a, IdealSpec.J)
    record = {
        "point": str(a) if a.q <= 10 else list(a.values),
        "q": a.q,
        "n": a.n,
        "type": format_type(classify_type(a)),
        "zero_I": w_i is None,
        "zero_J": w_j is None,
        "first_nonzero_wheel_I": str(w_i) if w_i else None,
        "first_nonzero_wheel_J": str(w_j) if w_j else None,
    }
    if a.q == 2:
        g = weighting_to_graph(a)
        p4 = find_induced_p4(g)
        record["graph"] = str(g)
        record["edges"] = [f"{i}{j}" if a.n <= 9 else f"{i}-{j}" for i, j in g.edges]
        record["is_cograph"] = is_cograph(g)
        record["induced_p4"] = list(p4) if p4 else None
    return record
