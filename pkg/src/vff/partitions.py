"""Young diagrams, elementary moves and the induced order on partitions of N.

Columns are stored non-increasing, ``s_1 >= ... >= s_r >= 1``.  The same
objects index Fock monomials (``(2, 1, 1)`` is ``phi_1^2 phi_2``) and lowering
words of the Virasoro algebra.
"""

from __future__ import annotations

from collections import Counter, deque
from functools import lru_cache

from .errors import EmptyPartition, IndexOutOfRange, LevelMismatch

__all__ = [
    "Partition",
    "enumerate_level",
    "partition_count",
    "multiplicity_form",
    "from_multiplicities",
    "r_star",
    "tau",
    "moves",
    "preceq",
    "distance_to_minimal",
    "minimal",
    "maximal",
    "poset_dot",
]


class Partition(tuple):
    """An immutable non-increasing tuple of positive integers."""

    __slots__ = ()

    def __new__(cls, columns=()):
        cols = tuple(int(c) for c in columns)
        for a, b in zip(cols, cols[1:]):
            if a < b:
                raise ValueError(f"columns must be non-increasing: {cols}")
        if cols and cols[-1] < 1:
            raise ValueError(f"columns must be positive: {cols}")
        return super().__new__(cls, cols)

    @classmethod
    def sorted(cls, parts) -> "Partition":
        """Canonical partition from parts in any order; zero parts are dropped."""
        return cls(sorted((p for p in parts if p), reverse=True))

    @property
    def level(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def multiplicities(self) -> dict[int, int]:
        return multiplicity_form(self)

    def with_part(self, n: int) -> "Partition":
        cols = list(self)
        i = 0
        while i < len(cols) and cols[i] >= n:
            i += 1
        cols.insert(i, n)
        return tuple.__new__(Partition, cols)

    def without_part(self, n: int) -> "Partition":
        cols = list(self)
        cols.remove(n)
        return tuple.__new__(Partition, cols)

    def sort_key(self):
        """Graded order: by level, then reverse-lexicographic on columns."""
        return (self.level, tuple(-c for c in self))

    def __repr__(self):
        return f"Partition({tuple(self)!r})"


def _desc(n: int, largest: int):
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in _desc(n - first, first):
            yield (first,) + rest


@lru_cache(maxsize=None)
def _level(n: int) -> tuple[Partition, ...]:
    return tuple(Partition(p) for p in _desc(n, n))


def enumerate_level(n: int) -> list[Partition]:
    """All partitions of ``n``, largest first column first: (4), (3,1), (2,2), ..."""
    if n < 0:
        raise ValueError("level must be non-negative")
    return list(_level(n))


@lru_cache(maxsize=None)
def _count(n: int) -> int:
    # p(n) via Euler's pentagonal recurrence
    if n < 0:
        return 0
    if n == 0:
        return 1
    total, k = 0, 1
    while True:
        g1 = k * (3 * k - 1) // 2
        if g1 > n:
            break
        sign = 1 if k % 2 else -1
        total += sign * _count(n - g1)
        g2 = k * (3 * k + 1) // 2
        if g2 <= n:
            total += sign * _count(n - g2)
        k += 1
    return total


def partition_count(n: int, p0: str = "one") -> int:
    """Number of partitions of ``n``.

    ``p0`` picks the value at 0: ``"one"`` (the value the Kac product needs)
    or ``"zero"``.  Negative ``n`` gives 0.
    """
    if p0 not in ("one", "zero"):
        raise ValueError("p0 must be 'one' or 'zero'")
    if n == 0:
        return 1 if p0 == "one" else 0
    return _count(n)


def multiplicity_form(p) -> dict[int, int]:
    return dict(sorted(Counter(p).items()))


def from_multiplicities(k) -> Partition:
    parts = []
    for n, kn in k.items():
        if n < 1 or kn < 0:
            raise ValueError(f"bad multiplicity entry {n}: {kn}")
        parts.extend([n] * kn)
    return Partition.sorted(parts)


def r_star(p) -> int:
    """Index (1-based) of the last column of maximal height."""
    if not p:
        raise EmptyPartition("r* of the empty partition")
    s1 = p[0]
    return sum(1 for c in p if c == s1)


def tau(j: int, p) -> Partition:
    """The j-th elementary move (1-based column index)."""
    s = list(p)
    r = len(s)
    if not 1 <= j <= r:
        raise IndexOutOfRange(f"column {j} out of range for {tuple(p)}")
    sj = s[j - 1]
    if sj == 1:
        return Partition(p)
    jstar = max(l for l in range(1, r + 1) if s[l - 1] == sj)
    if sj in (s[-1], s[-1] + 1):
        s[jstar - 1] -= 1
        s.append(1)
    else:
        k = min(l for l in range(1, r + 1) if s[l - 1] <= sj - 2)
        s[jstar - 1] = sj - 1
        s[k - 1] += 1
    return Partition(s)


def moves(p) -> set[Partition]:
    """Distinct partitions reachable by one non-trivial elementary move."""
    out = set()
    for j in range(1, len(p) + 1):
        q = tau(j, p)
        if q != p:
            out.add(q)
    return out


@lru_cache(maxsize=None)
def _below(p: Partition) -> frozenset:
    seen = {p}
    todo = deque([p])
    while todo:
        x = todo.popleft()
        for y in moves(x):
            if y not in seen:
                seen.add(y)
                todo.append(y)
    return frozenset(seen)


def preceq(a, b) -> bool:
    """True iff ``a`` is reachable from ``b`` by a (possibly empty) sequence of moves."""
    a, b = Partition(a), Partition(b)
    if a.level != b.level:
        raise LevelMismatch(f"levels differ: {a.level} vs {b.level}")
    return a in _below(b)


def minimal(n: int) -> Partition:
    return Partition((1,) * n)


def maximal(n: int) -> Partition:
    return Partition((n,) if n else ())


@lru_cache(maxsize=None)
def distance_to_minimal(p) -> int:
    p = Partition(p)
    target = minimal(p.level)
    dist = {p: 0}
    todo = deque([p])
    while todo:
        x = todo.popleft()
        if x == target:
            return dist[x]
        for y in moves(x):
            if y not in dist:
                dist[y] = dist[x] + 1
                todo.append(y)
    raise AssertionError(f"{p} does not reach {target}")  # pragma: no cover


def poset_dot(n: int) -> str:
    """DOT digraph of the elementary moves on partitions of ``n``."""
    lines = [f'digraph "T_{n}" {{']
    for p in enumerate_level(n):
        lines.append(f'  "{_label(p)}";')
    for p in enumerate_level(n):
        for j in range(1, len(p) + 1):
            q = tau(j, p)
            if q != p:
                lines.append(f'  "{_label(p)}" -> "{_label(q)}" [label="tau{j}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def _label(p) -> str:
    return ",".join(map(str, p)) or "()"
