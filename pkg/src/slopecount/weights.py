"""Prime-field scalars and edge weightings a in F_q^C(n,2)."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence, Tuple

from .graphs import LabeledGraph, num_slots, slot_index

SUPPORTED_PRIMES = (2, 3, 5, 7, 11, 13)


def check_prime(q: int) -> None:
    if q not in SUPPORTED_PRIMES:
        raise ValueError(f"q must be a prime in {SUPPORTED_PRIMES}, got {q}")


@dataclass(frozen=True)
class FieldElement:
    value: int
    q: int

    def __post_init__(self):
        check_prime(self.q)
        object.__setattr__(self, "value", self.value % self.q)

    def _coerce(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.q != self.q:
                raise ValueError("field elements from different fields")
            return other.value
        if isinstance(other, int):
            return other
        return NotImplemented

    def __add__(self, other):
        return FieldElement(self.value + self._coerce(other), self.q)

    __radd__ = __add__

    def __sub__(self, other):
        return FieldElement(self.value - self._coerce(other), self.q)

    def __rsub__(self, other):
        return FieldElement(self._coerce(other) - self.value, self.q)

    def __mul__(self, other):
        return FieldElement(self.value * self._coerce(other), self.q)

    __rmul__ = __mul__

    def __neg__(self):
        return FieldElement(-self.value, self.q)

    def inverse(self) -> "FieldElement":
        if self.value == 0:
            raise ZeroDivisionError("0 has no inverse")
        return FieldElement(pow(self.value, self.q - 2, self.q), self.q)

    def __truediv__(self, other):
        return self * FieldElement(self._coerce(other), self.q).inverse()

    def __bool__(self):
        return self.value != 0

    def __int__(self):
        return self.value


@dataclass(frozen=True)
class EdgeWeighting:
    """One residue mod q per edge slot of K_n, in lexicographic slot order."""

    n: int
    q: int
    values: Tuple[int, ...]

    def __post_init__(self):
        check_prime(self.q)
        vals = tuple(self.values)
        if len(vals) != num_slots(self.n):
            raise ValueError(f"expected {num_slots(self.n)} values for n={self.n}, got {len(vals)}")
        if any(not 0 <= v < self.q for v in vals):
            raise ValueError(f"values must be reduced mod {self.q}")
        object.__setattr__(self, "values", vals)

    @classmethod
    def from_code(cls, n: int, q: int, code: int) -> "EdgeWeighting":
        """Decode a base-q integer whose most significant digit is slot (1,2)."""
        d = num_slots(n)
        if not 0 <= code < q**d:
            raise ValueError(f"code {code} out of range for q={q}, n={n}")
        digits = [0] * d
        for s in range(d - 1, -1, -1):
            code, digits[s] = divmod(code, q)
        return cls(n, q, tuple(digits))

    @classmethod
    def from_graph(cls, g: LabeledGraph) -> "EdgeWeighting":
        return cls(g.n, 2, tuple(g.mask >> s & 1 for s in range(num_slots(g.n))))

    @classmethod
    def constant(cls, n: int, q: int, value: int = 0) -> "EdgeWeighting":
        return cls(n, q, (value % q,) * num_slots(n))

    @property
    def code(self) -> int:
        code = 0
        for v in self.values:
            code = code * self.q + v
        return code

    def __getitem__(self, pair) -> int:
        i, j = pair
        return self.values[slot_index(self.n, i, j)]

    def element(self, i: int, j: int) -> FieldElement:
        return FieldElement(self[i, j], self.q)

    def to_text(self) -> str:
        return format_point(self)

    def __str__(self) -> str:
        return format_point(self)


def all_weightings(n: int, q: int) -> Iterator[EdgeWeighting]:
    for code in range(q ** num_slots(n)):
        yield EdgeWeighting.from_code(n, q, code)


def parse_point(text: str) -> EdgeWeighting:
    """Parse ``q:n:digits`` (e.g. ``3:4:000112``); for q=2, ``2:n:0x..`` is also accepted.

    The hex form is the same base-2 integer as the digit string.
    """
    parts = text.strip().split(":")
    if len(parts) != 3:
        raise ValueError(f"point {text!r} is not of the form q:n:digits")
    try:
        q, n = int(parts[0]), int(parts[1])
    except ValueError:
        raise ValueError(f"bad header in point {text!r}") from None
    check_prime(q)
    if not 1 <= n:
        raise ValueError(f"bad vertex count {n}")
    d = num_slots(n)
    body = parts[2].strip()
    if q == 2 and body.lower().startswith("0x"):
        try:
            code = int(body, 16)
        except ValueError:
            raise ValueError(f"bad hex bitmask {body!r}") from None
        if code >> d:
            raise ValueError(f"hex bitmask {body!r} exceeds {d} slots")
        return EdgeWeighting.from_code(n, q, code)
    if len(body) != d:
        raise ValueError(f"expected {d} digits for n={n}, got {len(body)}")
    digits = []
    for pos, ch in enumerate(body):
        if not ch.isdigit() or int(ch) >= q:
            raise ValueError(f"invalid digit {ch!r} at position {pos} (q={q})")
        digits.append(int(ch))
    return EdgeWeighting(n, q, tuple(digits))


def format_point(a: EdgeWeighting) -> str:
    if a.q > 10:
        raise ValueError("digit-string format only covers q <= 10")
    return f"{a.q}:{a.n}:" + "".join(map(str, a.values))


def _require_binary(a: EdgeWeighting) -> None:
    if a.q != 2:
        raise ValueError(f"operation needs q=2, got q={a.q}; use weight_induced_subgraph")


def weighting_to_graph(a: EdgeWeighting) -> LabeledGraph:
    """The graph G_a whose edges are the slots with value 1 (q=2 only)."""
    _require_binary(a)
    return weight_induced_subgraph(a, 1)


def complement_weighting(a: EdgeWeighting) -> EdgeWeighting:
    _require_binary(a)
    return EdgeWeighting(a.n, 2, tuple(1 - v for v in a.values))


def weight_induced_subgraph(a: EdgeWeighting, alpha: int) -> LabeledGraph:
    alpha = int(alpha)
    if not 0 <= alpha < a.q:
        raise ValueError(f"level {alpha} is not reduced mod {a.q}")
    mask = 0
    for s, v in enumerate(a.values):
        if v == alpha:
            mask |= 1 << s
    return LabeledGraph(a.n, mask)


def level_graphs(a: EdgeWeighting) -> Tuple[LabeledGraph, ...]:
    return tuple(weight_induced_subgraph(a, alpha) for alpha in range(a.q))


def classify_type(a: EdgeWeighting | Sequence[int]) -> Tuple[int, ...]:
    """Occurrence counts of the values present, in descending order."""
    values = a.values if isinstance(a, EdgeWeighting) else a
    return tuple(sorted(Counter(values).values(), reverse=True))


def format_type(parts: Iterable[int]) -> str:
    return "(" + ",".join(map(str, parts)) + ")"
