"""Formal reduction of singular integral types and their candidate pole sets.

A type ``(r, s)`` is a partition ``s`` of singularity orders (``r`` = number of
columns) together with a count of smooth insertions.  One reduction step
clears the linear factor ``alpha - alpha_{r*, s_1}`` and produces a set of
strictly smaller types; iterating gives a finite tree whose factors are the
candidate poles.
"""

from __future__ import annotations

import json
import threading
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .errors import EmptyType, InvalidIndex
from .partitions import Partition, distance_to_minimal, enumerate_level, r_star

__all__ = [
    "IntegralType",
    "EmptyOnly",
    "Rectangle",
    "Reduction",
    "ReductionNode",
    "reduce",
    "reduction_tree",
    "pole_candidates",
    "verify_regularity",
    "window_index",
    "window_index_alt",
    "rectangle_in_window",
    "measure",
    "tree_to_dot",
    "tree_to_json",
    "iter_edges",
]


@dataclass(frozen=True, order=True)
class IntegralType:
    singular: Partition = Partition()
    smooth_count: int = 0

    def __post_init__(self):
        if not isinstance(self.singular, Partition):
            object.__setattr__(self, "singular", Partition.sorted(self.singular))
        if self.smooth_count < 0:
            raise ValueError("smooth_count must be >= 0")

    @property
    def level(self) -> int:
        return self.singular.level

    @property
    def r(self) -> int:
        return len(self.singular)

    def is_empty(self) -> bool:
        return not self.singular

    def __str__(self):
        cols = ",".join(map(str, self.singular))
        return f"({self.r},({cols}))" + (f"+{self.smooth_count}" if self.smooth_count else "")


@dataclass(frozen=True)
class EmptyOnly:
    pass


@dataclass(frozen=True)
class Rectangle:
    r: int
    s: int

    def __post_init__(self):
        if self.r < 1 or self.s < 1:
            raise InvalidIndex("rectangle sides must be >= 1")

    @property
    def partition(self) -> Partition:
        return Partition((self.s,) * self.r)


def measure(t: IntegralType) -> tuple[int, int]:
    """(level, distance to the minimal partition); decreases along every edge."""
    if t.is_empty():
        return (0, 0)
    return (t.level, distance_to_minimal(t.singular))


@dataclass(frozen=True)
class Reduction:
    factor: tuple[int, int]
    edges: tuple  # ((origin, IntegralType), ...) sorted, deduplicated

    @property
    def children(self) -> frozenset:
        return frozenset(c for _, c in self.edges)


def _child(parts, smooth) -> IntegralType:
    zeros = sum(1 for p in parts if p == 0)
    return IntegralType(Partition.sorted(parts), smooth + zeros)


@lru_cache(maxsize=None)
def _reduce(t: IntegralType) -> Reduction:
    s = list(t.singular)
    r = len(s)
    rs = r_star(t.singular)
    s1 = s[0]
    sm = t.smooth_count
    edges = set()
    if s1 == 1:
        # the derivative term and the boundary term both leave r-1 unit singularities
        child = IntegralType(Partition((1,) * (r - 1)), sm)
        edges.add(("I1", child))
        edges.add(("I3~", child))
    else:
        for j in range(rs, r):  # 0-based j > r*
            for l in range(1, s1 - s[j]):
                parts = list(s)
                parts[0] -= l
                parts[j] += l
                edges.add(("J1", _child(parts, sm)))
        for k in range(1, s1 + 1):
            edges.add(("J2", _child([s1 - k] + s[1:], sm)))
        for l in range(1, s1):
            edges.add(("J3", _child([s1 - l] + s[1:] + [l], sm)))
        edges.add(("J4~", _child(s[1:], sm)))
    ordered = tuple(sorted(edges, key=lambda e: (e[0], measure(e[1]), e[1])))
    return Reduction((rs, s1), ordered)


_lock = threading.RLock()


def reduce(t: IntegralType) -> Reduction:
    if not isinstance(t, IntegralType):
        t = IntegralType(Partition.sorted(t))
    if t.is_empty():
        raise EmptyType("cannot reduce the empty type")
    with _lock:
        return _reduce(t)


def _is_terminal(t: IntegralType, base) -> str | None:
    if t.is_empty():
        return "Empty"
    if isinstance(base, Rectangle) and t.singular == base.partition:
        return "RectangleBase"
    return None


@dataclass(frozen=True)
class ReductionNode:
    node_type: IntegralType
    factor: tuple | None
    children: tuple = field(default=())  # ((origin, ReductionNode), ...)
    terminal: str = "Leaf"

    def factors(self) -> set:
        out = set()
        stack = [self]
        seen = set()
        while stack:
            n = stack.pop()
            if n.node_type in seen:
                continue
            seen.add(n.node_type)
            if n.factor is not None:
                out.add(n.factor)
            stack.extend(c for _, c in n.children)
        return out

    def depth(self) -> int:
        return 1 + max((c.depth() for _, c in self.children), default=0) if self.children else 0


@lru_cache(maxsize=None)
def _tree(t: IntegralType, base) -> ReductionNode:
    term = _is_terminal(t, base)
    if term is not None:
        return ReductionNode(t, None, (), term)
    red = _reduce(t)
    kids = tuple((origin, _tree(c, base)) for origin, c in red.edges)
    return ReductionNode(t, red.factor, kids, "Internal")


def _base(base):
    if base is None or base == "empty":
        return EmptyOnly()
    if isinstance(base, (EmptyOnly, Rectangle)):
        return base
    r, s = base
    return Rectangle(r, s)


def reduction_tree(t, base=None) -> ReductionNode:
    """Reduce until every leaf is empty (or the base rectangle)."""
    if not isinstance(t, IntegralType):
        t = IntegralType(Partition.sorted(t))
    with _lock:
        return _tree(t, _base(base))


@lru_cache(maxsize=None)
def _candidates(t: IntegralType, base) -> frozenset:
    if _is_terminal(t, base) is not None:
        return frozenset()
    red = _reduce(t)
    out = {red.factor}
    for _, c in red.edges:
        out |= _candidates(c, base)
    return frozenset(out)


def pole_candidates(t, base=None) -> frozenset:
    """Union of cleared factors (r, s) over the whole reduction tree."""
    if not isinstance(t, IntegralType):
        t = IntegralType(Partition.sorted(t))
    with _lock:
        return _candidates(t, _base(base))


def verify_regularity(r: int, s: int) -> bool:
    """No type of level <= rs reduced down to the (r, s) rectangle produces the pair (r, s)."""
    base = Rectangle(r, s)
    for n in range(1, r * s + 1):
        for p in enumerate_level(n):
            if (r, s) in pole_candidates(IntegralType(p), base):
                return False
    return True


def window_index(t: IntegralType) -> Fraction:
    """|s| / 2r, the index of the Kac value bounding the analyticity window."""
    if not isinstance(t, IntegralType):
        t = IntegralType(Partition.sorted(t))
    if t.is_empty():
        raise EmptyType("window index of the empty type")
    return Fraction(t.level, 2 * t.r)


def window_index_alt(t: IntegralType) -> Fraction:
    """|s| / r, the other reading of the window bound."""
    return 2 * window_index(t)


def rectangle_in_window(r: int, s: int) -> bool:
    # alpha_{r,s} < alpha_{r,s/2} iff s > s/2
    if r < 1 or s < 1:
        raise InvalidIndex("r and s must be >= 1")
    return Fraction(s) > window_index(IntegralType(Partition((s,) * r)))


# -- export ---------------------------------------------------------------------


def iter_edges(node: ReductionNode):
    """Distinct (parent, origin, child) triples of the tree, depth first."""
    seen = set()
    stack = [node]
    while stack:
        n = stack.pop()
        if n.node_type in seen:
            continue
        seen.add(n.node_type)
        for origin, c in n.children:
            yield n, origin, c
        stack.extend(c for _, c in reversed(n.children))


def _node_id(t: IntegralType) -> str:
    return str(t)


def tree_to_dot(node: ReductionNode) -> str:
    lines = ["digraph reduction {"]
    nodes = {node.node_type: node}
    edges = []
    for parent, origin, child in iter_edges(node):
        nodes.setdefault(child.node_type, child)
        edges.append((parent.node_type, origin, child.node_type))
    for t in sorted(nodes):
        n = nodes[t]
        note = f"factor {n.factor[0]},{n.factor[1]}" if n.factor else n.terminal
        lines.append(f'  "{_node_id(t)}" [label="{_node_id(t)}\\n{note}"];')
    for a, origin, b in sorted(edges, key=lambda e: (e[0], e[2], e[1])):
        lines.append(f'  "{_node_id(a)}" -> "{_node_id(b)}" [label="{origin}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def type_to_obj(t: IntegralType) -> dict:
    return {"singular": list(t.singular), "smooth_count": t.smooth_count}


def type_from_obj(obj) -> IntegralType:
    return IntegralType(Partition(obj["singular"]), int(obj["smooth_count"]))


def tree_to_obj(node: ReductionNode) -> dict:
    return {
        "type": type_to_obj(node.node_type),
        "factor": list(node.factor) if node.factor else None,
        "terminal": node.terminal,
        "children": [{"origin": o, "node": tree_to_obj(c)} for o, c in node.children],
    }


def tree_to_json(node: ReductionNode) -> str:
    return json.dumps(tree_to_obj(node), sort_keys=True)
