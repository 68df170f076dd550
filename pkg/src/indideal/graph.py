"""Finite simple graphs stored as per-vertex neighbour bitmasks.

Vertices are numbered ``1..n`` at every public boundary (parsing, rendering,
edge lists) and ``0..n-1`` inside the bitmasks: bit ``i`` stands for vertex
``i + 1``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

FAMILY_KINDS = ("path", "cycle", "cyclepow", "centipede", "complete")


class GraphParseError(ValueError):
    """Raised for malformed edge-list text; carries the offending line number."""

    def __init__(self, lineno: int, message: str):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if self.n < 0 or len(self.adj) != self.n:
            raise ValueError("adjacency must have one mask per vertex")
        full = (1 << self.n) - 1
        for i, nb in enumerate(self.adj):
            if nb & ~full:
                raise ValueError(f"vertex {i + 1} has a neighbour outside 1..{self.n}")
            if nb >> i & 1:
                raise ValueError(f"loop at vertex {i + 1}")
            for j in iter_bits(nb):
                if not self.adj[j] >> i & 1:
                    raise ValueError(f"asymmetric adjacency between {i + 1} and {j + 1}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        """Build from 1-indexed edges; duplicates are collapsed."""
        adj = [0] * n
        for u, v in edges:
            if not (1 <= u <= n and 1 <= v <= n):
                raise ValueError(f"edge ({u}, {v}) out of range 1..{n}")
            if u == v:
                raise ValueError(f"loop edge ({u}, {v})")
            adj[u - 1] |= 1 << (v - 1)
            adj[v - 1] |= 1 << (u - 1)
        return cls(n, tuple(adj))

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def edges(self) -> list[tuple[int, int]]:
        """Sorted 1-indexed edge list with ``u < v``."""
        return [
            (i + 1, j + 1)
            for i in range(self.n)
            for j in iter_bits(self.adj[i])
            if j > i
        ]

    @property
    def num_edges(self) -> int:
        return sum(nb.bit_count() for nb in self.adj) // 2

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u - 1] >> (v - 1) & 1)

    def is_independent(self, mask: int) -> bool:
        return all(not (self.adj[i] & mask) for i in iter_bits(mask))

    def is_complete(self) -> bool:
        full = self.full_mask
        return all(nb == full & ~(1 << i) for i, nb in enumerate(self.adj))

    def to_edge_list(self) -> str:
        lines = [str(self.n)] + [f"{u} {v}" for u, v in self.edges()]
        return "\n".join(lines) + "\n"


def iter_bits(mask: int):
    """Yield the indices of set bits in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_to_vertices(mask: int) -> list[int]:
    return [i + 1 for i in iter_bits(mask)]


def vertices_to_mask(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << (v - 1)
    return mask


def parse_edge_list(text: str) -> Graph:
    """Parse the edge-list format.

    The first non-comment line holds the vertex count; every following
    non-comment line is an edge ``u v``.  ``#`` starts a comment.
    """
    n = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        if n is None:
            if len(fields) != 1:
                raise GraphParseError(lineno, f"expected vertex count, got {line!r}")
            try:
                n = int(fields[0])
            except ValueError:
                raise GraphParseError(lineno, f"vertex count is not an integer: {line!r}") from None
            if n < 1:
                raise GraphParseError(lineno, f"vertex count must be positive, got {n}")
            continue
        if len(fields) != 2:
            raise GraphParseError(lineno, f"expected 'u v', got {line!r}")
        try:
            u, v = int(fields[0]), int(fields[1])
        except ValueError:
            raise GraphParseError(lineno, f"non-integer vertex in {line!r}") from None
        for x in (u, v):
            if not 1 <= x <= n:
                raise GraphParseError(lineno, f"vertex {x} out of range 1..{n}")
        if u == v:
            raise GraphParseError(lineno, f"loop edge at vertex {u}")
        edges.append((u, v))
    if n is None:
        raise GraphParseError(0, "missing vertex count")
    return Graph.from_edges(n, edges)


@dataclass(frozen=True)
class FamilySpec:
    kind: str
    n: int
    d: int = 1

    def __post_init__(self):
        if self.kind not in FAMILY_KINDS:
            raise ValueError(f"unknown family {self.kind!r}; expected one of {', '.join(FAMILY_KINDS)}")
        if self.kind == "cycle" and self.n < 2:
            raise ValueError("cycle needs n >= 2")
        if self.kind == "cyclepow" and (self.d < 1 or self.n < self.d + 1):
            raise ValueError("cyclepow needs d >= 1 and n >= d + 1")
        if self.n < 1:
            raise ValueError(f"{self.kind} needs n >= 1")

    @classmethod
    def parse(cls, text: str) -> "FamilySpec":
        """Parse ``path:N``, ``cycle:N``, ``cyclepow:N:D``, ``centipede:N`` or ``complete:N``."""
        parts = text.strip().split(":")
        kind = parts[0]
        want = 3 if kind == "cyclepow" else 2
        if len(parts) != want:
            raise ValueError(f"bad family spec {text!r}")
        try:
            nums = [int(p) for p in parts[1:]]
        except ValueError:
            raise ValueError(f"bad family spec {text!r}") from None
        return cls(kind, *nums)

    def __str__(self):
        if self.kind == "cyclepow":
            return f"cyclepow:{self.n}:{self.d}"
        return f"{self.kind}:{self.n}"


def build_family(spec: FamilySpec) -> Graph:
    n = spec.n
    if spec.kind == "path":
        return Graph.from_edges(n, [(i, i + 1) for i in range(1, n)])
    if spec.kind == "cycle":
        return build_family(FamilySpec("cyclepow", n, 1))
    if spec.kind == "cyclepow":
        edges = [
            (i, j)
            for i, j in combinations(range(1, n + 1), 2)
            if min(j - i, n - (j - i)) <= spec.d
        ]
        return Graph.from_edges(n, edges)
    if spec.kind == "centipede":
        # legs a_i -> i, spine b_i -> n + i
        edges = [(i, n + i) for i in range(1, n + 1)]
        edges += [(n + j, n + j + 1) for j in range(1, n)]
        return Graph.from_edges(2 * n, edges)
    return Graph.from_edges(n, combinations(range(1, n + 1), 2))


def path_graph(n: int) -> Graph:
    return build_family(FamilySpec("path", n))


def cycle_graph(n: int) -> Graph:
    return build_family(FamilySpec("cycle", n))


def complete_graph(n: int) -> Graph:
    return build_family(FamilySpec("complete", n))


def empty_graph(n: int) -> Graph:
    return Graph(n, (0,) * n)


def all_graphs(n: int):
    """Every labelled simple graph on ``n`` vertices (``2**(n choose 2)`` of them)."""
    pairs = list(combinations(range(1, n + 1), 2))
    for code in range(1 << len(pairs)):
        yield Graph.from_edges(n, [p for k, p in enumerate(pairs) if code >> k & 1])


def random_graph(n: int, p: float, rng) -> Graph:
    """Erdős–Rényi G(n, p) drawn from ``rng`` (a ``random.Random``)."""
    return Graph.from_edges(
        n, [e for e in combinations(range(1, n + 1), 2) if rng.random() < p]
    )
