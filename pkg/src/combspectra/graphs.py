"""Simple unweighted graphs on vertices {1..n}: parsing, distances, components.

Vertices are 1-based everywhere in this package.  Two input formats are
accepted behind one parse entry point:

* edge-list text: first line ``n m``, then ``m`` lines ``u v``; blank lines
  and ``#`` comments are ignored;
* graph6 (one line per graph, n <= 62).
"""

from __future__ import annotations

from collections import deque
from typing import Iterable, Iterator

from .errors import ParseError, PreconditionError

__all__ = [
    "SimpleGraph",
    "DistanceTable",
    "parse_edge_list",
    "parse_graph6",
    "parse_graph",
    "to_edge_list",
    "to_graph6",
    "all_pairs_distances",
    "component_orders",
    "is_connected",
    "path_graph",
    "cycle_graph",
    "complete_graph",
    "star_graph",
    "empty_graph",
]


class SimpleGraph:
    """An immutable simple graph: no loops, no multi-edges, n >= 1."""

    __slots__ = ("n", "edges", "_adj", "_hash")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 1:
            raise ValueError("a graph needs at least one vertex")
        norm = set()
        for u, v in edges:
            if not (1 <= u <= n and 1 <= v <= n):
                raise ValueError(f"vertex out of range in edge ({u}, {v})")
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            norm.add((u, v) if u < v else (v, u))
        self.n = n
        self.edges = frozenset(norm)
        self._adj: tuple[frozenset, ...] | None = None
        self._hash: int | None = None

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def adjacency(self) -> tuple[frozenset, ...]:
        adj = self._adj
        if adj is None:
            sets: list[set[int]] = [set() for _ in range(self.n)]
            for u, v in self.edges:
                sets[u - 1].add(v)
                sets[v - 1].add(u)
            adj = tuple(frozenset(s) for s in sets)
            self._adj = adj
        return adj

    def neighbors(self, v: int) -> frozenset:
        return self.adjacency[v - 1]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v - 1])

    def has_edge(self, u: int, v: int) -> bool:
        return ((u, v) if u < v else (v, u)) in self.edges

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def relabel(self, perm: tuple[int, ...]) -> "SimpleGraph":
        """Apply a vertex permutation (perm[v-1] is the new name of v)."""
        return SimpleGraph(self.n, ((perm[u - 1], perm[v - 1]) for u, v in self.edges))

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, SimpleGraph)
            and self.n == other.n
            and self.edges == other.edges
        )

    def __hash__(self) -> int:
        h = self._hash
        if h is None:
            h = hash((self.n, self.edges))
            self._hash = h
        return h

    def __repr__(self) -> str:
        return f"SimpleGraph(n={self.n}, edges={sorted(self.edges)})"


class DistanceTable:
    """Shortest-path distances for unordered pairs; absent means unreachable."""

    __slots__ = ("n", "_dist")

    def __init__(self, n: int, dist: dict[tuple[int, int], int]):
        self.n = n
        self._dist = dist

    def get(self, u: int, v: int) -> int | None:
        if u == v:
            return 0
        key = (u, v) if u < v else (v, u)
        return self._dist.get(key)

    def pairs(self) -> dict[tuple[int, int], int]:
        return dict(self._dist)


def all_pairs_distances(g: SimpleGraph) -> DistanceTable:
    """Breadth-first search from every vertex; disconnected pairs are absent."""
    dist: dict[tuple[int, int], int] = {}
    adj = g.adjacency
    for src in range(1, g.n + 1):
        seen = {src: 0}
        queue = deque([src])
        while queue:
            u = queue.popleft()
            du = seen[u]
            for w in adj[u - 1]:
                if w not in seen:
                    seen[w] = du + 1
                    queue.append(w)
        for v, d in seen.items():
            if src < v:
                dist[(src, v)] = d
    return DistanceTable(g.n, dist)


def component_orders(g: SimpleGraph) -> tuple[int, ...]:
    """Orders of the connected components, sorted ascending."""
    adj = g.adjacency
    unvisited = set(range(1, g.n + 1))
    orders = []
    while unvisited:
        start = min(unvisited)
        stack = [start]
        unvisited.discard(start)
        size = 0
        while stack:
            u = stack.pop()
            size += 1
            for w in adj[u - 1]:
                if w in unvisited:
                    unvisited.discard(w)
                    stack.append(w)
        orders.append(size)
    return tuple(sorted(orders))


def is_connected(g: SimpleGraph) -> bool:
    return len(component_orders(g)) == 1


# -- parsing ----------------------------------------------------------------


def _data_lines(text: str) -> Iterator[tuple[int, str]]:
    for i, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        yield i, line


def parse_edge_list(text: str) -> SimpleGraph:
    """Parse the edge-list format; every error names its line number."""
    lines = list(_data_lines(text))
    if not lines:
        raise ParseError("empty input: expected a header line 'n m'")
    lineno, header = lines[0]
    fields = header.split()
    if len(fields) != 2:
        raise ParseError(f"line {lineno}: expected header 'n m', got {header!r}")
    try:
        n, m = int(fields[0]), int(fields[1])
    except ValueError:
        raise ParseError(f"line {lineno}: non-integer header fields in {header!r}") from None
    if n < 1:
        raise ParseError(f"line {lineno}: vertex count must be at least 1")
    if m < 0:
        raise ParseError(f"line {lineno}: negative edge count")
    edges: set[tuple[int, int]] = set()
    for lineno, line in lines[1:]:
        fields = line.split()
        if len(fields) != 2:
            raise ParseError(f"line {lineno}: expected 'u v', got {line!r}")
        try:
            u, v = int(fields[0]), int(fields[1])
        except ValueError:
            raise ParseError(f"line {lineno}: non-integer vertex in {line!r}") from None
        if not (1 <= u <= n) or not (1 <= v <= n):
            raise ParseError(f"line {lineno}: vertex out of range 1..{n} in {line!r}")
        if u == v:
            raise ParseError(f"line {lineno}: loop at vertex {u}")
        e = (u, v) if u < v else (v, u)
        if e in edges:
            raise ParseError(f"line {lineno}: duplicate edge {e}")
        edges.add(e)
    if len(edges) != m:
        raise ParseError(f"header promised {m} edges but {len(edges)} were given")
    return SimpleGraph(n, edges)


_G6_HEADER = ">>graph6<<"


def parse_graph6(line: str) -> SimpleGraph:
    """Decode one graph6 line (n <= 62; the extended size formats are rejected)."""
    s = line.strip()
    if s.startswith(_G6_HEADER):
        s = s[len(_G6_HEADER):]
    if not s:
        raise ParseError("empty graph6 line")
    vals = []
    for ch in s:
        v = ord(ch) - 63
        if not (0 <= v <= 63):
            raise ParseError(f"invalid graph6 character {ch!r}")
        vals.append(v)
    n = vals[0]
    if n == 63:
        raise ParseError("graph6 inputs with n > 62 are not supported")
    if n < 1:
        raise ParseError("graph6 graph must have at least one vertex")
    n_pairs = n * (n - 1) // 2
    need = (n_pairs + 5) // 6
    if len(vals) - 1 != need:
        raise ParseError(
            f"graph6 line has {len(vals) - 1} data characters, expected {need} for n={n}"
        )
    bits = []
    for v in vals[1:]:
        for shift in range(5, -1, -1):
            bits.append((v >> shift) & 1)
    edges = []
    idx = 0
    for col in range(1, n):
        for row in range(col):
            if bits[idx]:
                edges.append((row + 1, col + 1))
            idx += 1
    return SimpleGraph(n, edges)


def to_graph6(g: SimpleGraph) -> str:
    """Encode as one graph6 line (n <= 62)."""
    if g.n > 62:
        raise ValueError("graph6 encoding supported only for n <= 62")
    bits = []
    for col in range(1, g.n):
        for row in range(col):
            bits.append(1 if g.has_edge(row + 1, col + 1) else 0)
    while len(bits) % 6:
        bits.append(0)
    chars = [chr(63 + g.n)]
    for i in range(0, len(bits), 6):
        v = 0
        for b in bits[i : i + 6]:
            v = (v << 1) | b
        chars.append(chr(63 + v))
    return "".join(chars)


def parse_graph(text: str) -> SimpleGraph:
    """Single entry point: edge-list text, or a graph6 line if the first
    meaningful line does not look like an 'n m' header."""
    for _lineno, line in _data_lines(text):
        fields = line.split()
        if len(fields) == 2:
            try:
                int(fields[0]), int(fields[1])
            except ValueError:
                return parse_graph6(line)
            return parse_edge_list(text)
        return parse_graph6(line)
    raise ParseError("empty input")


def to_edge_list(g: SimpleGraph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.sorted_edges())
    return "\n".join(lines) + "\n"


# -- small standard graphs ---------------------------------------------------


def empty_graph(n: int) -> SimpleGraph:
    return SimpleGraph(n)


def path_graph(n: int) -> SimpleGraph:
    return SimpleGraph(n, ((i, i + 1) for i in range(1, n)))


def cycle_graph(n: int) -> SimpleGraph:
    if n < 3:
        raise PreconditionError("a cycle needs at least 3 vertices")
    edges = [(i, i + 1) for i in range(1, n)]
    edges.append((1, n))
    return SimpleGraph(n, edges)


def complete_graph(n: int) -> SimpleGraph:
    return SimpleGraph(n, ((u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1)))


def star_graph(n: int) -> SimpleGraph:
    """K_{1,n-1} with the center at vertex 1."""
    return SimpleGraph(n, ((1, v) for v in range(2, n + 1)))
