"""Graphs, caterpillar specs, and Randić matrix assembly."""

import math
import re
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Optional

import networkx as nx
import numpy as np


class GraphError(ValueError):
    pass


class ParseError(GraphError):
    pass


@dataclass(frozen=True)
class Graph:
    """Undirected simple graph on vertices 0..n-1."""
    n: int
    edges: frozenset[tuple[int, int]] = field(default_factory=frozenset)

    def __post_init__(self) -> None:
        if self.n < 0:
            raise GraphError(f"vertex count must be non-negative, got {self.n}")
        normalized = set()
        for u, v in self.edges:
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise GraphError(f"edge ({u}, {v}) out of range for n={self.n}")
            normalized.add((min(u, v), max(u, v)))
        object.__setattr__(self, "edges", frozenset(normalized))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        """Build a graph, rejecting duplicate edges (in either orientation)."""
        seen: set[tuple[int, int]] = set()
        for u, v in edges:
            key = (min(u, v), max(u, v))
            if key in seen:
                raise GraphError(f"duplicate edge ({u}, {v})")
            seen.add(key)
        return cls(n, frozenset(seen))

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def neighbors(self) -> list[list[int]]:
        adj: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.sorted_edges():
            adj[u].append(v)
            adj[v].append(u)
        return adj

    def to_networkx(self) -> nx.Graph:
        h = nx.Graph()
        h.add_nodes_from(range(self.n))
        h.add_edges_from(self.edges)
        return h

    @classmethod
    def from_networkx(cls, h: nx.Graph) -> "Graph":
        """Relabel nodes to 0..n-1 in sorted order and copy the edges."""
        if sorted(h.nodes) != list(range(h.number_of_nodes())):
            h = nx.convert_node_labels_to_integers(h, ordering="sorted")
        return cls(h.number_of_nodes(), frozenset(h.edges))

    def is_connected(self) -> bool:
        return self.n == 0 or nx.is_connected(self.to_networkx())

    def is_tree(self) -> bool:
        return self.n >= 1 and nx.is_tree(self.to_networkx())


@dataclass(frozen=True)
class CaterpillarSpec:
    """T(p_1, ..., p_r): spine path of order r, p_i leaves on spine vertex i."""
    p: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "p", tuple(int(x) for x in self.p))
        if len(self.p) < 2:
            raise GraphError(f"caterpillar needs r >= 2 spine vertices, got r={len(self.p)}")
        bad = [x for x in self.p if x < 1]
        if bad:
            raise GraphError(f"every leaf count p_i must be >= 1, got {list(self.p)}")

    @property
    def r(self) -> int:
        return len(self.p)

    @property
    def n(self) -> int:
        return self.r + sum(self.p)

    def reversed(self) -> "CaterpillarSpec":
        return CaterpillarSpec(tuple(reversed(self.p)))

    def is_reversal_of(self, other: "CaterpillarSpec") -> bool:
        """T(p_1..p_r) and T(p_r..p_1) are the same tree read from the other end."""
        return self.p == other.p or self.p == other.reversed().p

    def __str__(self) -> str:
        return format_caterpillar(self)


class SymmetricMatrix:
    """Dense real symmetric matrix; entries are read-only after construction."""

    def __init__(self, entries: np.ndarray) -> None:
        arr = np.array(entries, dtype=float)
        if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
            raise GraphError(f"symmetric matrix must be square, got shape {arr.shape}")
        if not np.array_equal(arr, arr.T):
            raise GraphError("matrix is not exactly symmetric")
        arr.setflags(write=False)
        self._entries = arr

    @classmethod
    def from_upper(cls, k: int, upper: dict[tuple[int, int], float],
                   diagonal: Optional[Iterable[float]] = None) -> "SymmetricMatrix":
        """Build from entries (i, j), i < j, mirrored on write."""
        arr = np.zeros((k, k))
        for (i, j), value in upper.items():
            arr[i, j] = value
            arr[j, i] = value
        if diagonal is not None:
            arr[np.diag_indices(k)] = list(diagonal)
        return cls(arr)

    @property
    def k(self) -> int:
        return self._entries.shape[0]

    @property
    def entries(self) -> np.ndarray:
        return self._entries

    def __getitem__(self, idx):
        return self._entries[idx]

    def trace(self) -> float:
        return float(np.trace(self._entries))

    def __repr__(self) -> str:
        return f"SymmetricMatrix(k={self.k})"


# ---------------------------------------------------------------------------
# Constructors
# ---------------------------------------------------------------------------

def empty_graph(n: int) -> Graph:
    return Graph.from_networkx(nx.empty_graph(n))


def path_graph(n: int) -> Graph:
    return Graph.from_networkx(nx.path_graph(n))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphError(f"cycle needs n >= 3, got {n}")
    return Graph.from_networkx(nx.cycle_graph(n))


def star_graph(n: int) -> Graph:
    """Star S_n: centre 0 joined to n-1 leaves."""
    if n < 1:
        return Graph(0)
    return Graph.from_networkx(nx.star_graph(n - 1))


def complete_graph(n: int) -> Graph:
    return Graph.from_networkx(nx.complete_graph(n))


def matching_graph(m: int) -> Graph:
    """m disjoint copies of K_2."""
    h = nx.empty_graph(2 * m)
    h.add_edges_from((2 * i, 2 * i + 1) for i in range(m))
    return Graph.from_networkx(h)


def build_caterpillar(spec: CaterpillarSpec) -> Graph:
    """Spine vertices 0..r-1 form a path; leaves follow, grouped by spine vertex."""
    edges = [(i, i + 1) for i in range(spec.r - 1)]
    nxt = spec.r
    for i, count in enumerate(spec.p):
        for _ in range(count):
            edges.append((i, nxt))
            nxt += 1
    return Graph(spec.n, frozenset(edges))


def random_tree(n: int, rng: np.random.Generator) -> Graph:
    """Uniform labelled tree on n vertices via Prüfer decoding."""
    if n <= 1:
        return Graph(max(n, 0))
    seq = [int(x) for x in rng.integers(0, n, size=n - 2)]
    return Graph.from_networkx(nx.from_prufer_sequence(seq))


def random_caterpillar_spec(rng: np.random.Generator, max_r: int, max_p: int) -> CaterpillarSpec:
    r = int(rng.integers(2, max_r + 1))
    return CaterpillarSpec(tuple(int(x) for x in rng.integers(1, max_p + 1, size=r)))


# ---------------------------------------------------------------------------
# Degrees and matrices
# ---------------------------------------------------------------------------

def degrees(g: Graph) -> list[int]:
    deg = [0] * g.n
    for u, v in g.edges:
        deg[u] += 1
        deg[v] += 1
    return deg


def adjacency_matrix(g: Graph) -> SymmetricMatrix:
    return SymmetricMatrix.from_upper(g.n, {e: 1.0 for e in g.edges})


def randic_matrix(g: Graph) -> SymmetricMatrix:
    """Entry 1/sqrt(d_i d_j) on edges, zero elsewhere."""
    deg = degrees(g)
    return SymmetricMatrix.from_upper(
        g.n, {(u, v): 1.0 / math.sqrt(deg[u] * deg[v]) for u, v in g.edges}
    )


# ---------------------------------------------------------------------------
# Caterpillar structure
# ---------------------------------------------------------------------------

def spine(g: Graph) -> list[int]:
    """Vertices remaining after deleting every degree-1 vertex."""
    deg = degrees(g)
    return [v for v in range(g.n) if deg[v] > 1]


def caterpillar_spec_of(g: Graph) -> Optional[CaterpillarSpec]:
    """Recover T(p_1..p_r) from a graph, or None if it is not such a caterpillar.

    Orientation is canonical: the lexicographically smaller of p and its reversal.
    """
    if not g.is_tree():
        return None
    body = spine(g)
    if len(body) < 2:
        return None
    body_set = set(body)
    adj = g.neighbors()
    inner = {v: [w for w in adj[v] if w in body_set] for v in body}
    if any(len(ws) > 2 for ws in inner.values()):
        return None
    ends = [v for v, ws in inner.items() if len(ws) == 1]
    if len(ends) != 2:
        return None
    order = [ends[0]]
    prev = None
    while len(order) < len(body):
        cur = order[-1]
        step = [w for w in inner[cur] if w != prev]
        prev = cur
        order.append(step[0])
    p = tuple(len(adj[v]) - len(inner[v]) for v in order)
    if min(p) < 1:
        return None
    return CaterpillarSpec(min(p, tuple(reversed(p))))


# ---------------------------------------------------------------------------
# Text formats
# ---------------------------------------------------------------------------

_SPEC_RE = re.compile(r"^T\((.*)\)$")
_DECIMAL_RE = re.compile(r"[0-9]+")


def format_caterpillar(spec: CaterpillarSpec) -> str:
    return "T(" + ",".join(str(x) for x in spec.p) + ")"


def parse_caterpillar(text: str) -> CaterpillarSpec:
    """Parse "T(p1,p2,...,pr)"; whitespace is ignored."""
    compact = "".join(text.split())
    m = _SPEC_RE.match(compact)
    if m is None:
        raise ParseError(f"not a caterpillar spec: {text!r} (expected T(p1,...,pr))")
    body = m.group(1)
    parts = body.split(",") if body else []
    if not all(_DECIMAL_RE.fullmatch(part) for part in parts):
        raise ParseError(f"leaf counts must be decimal integers: {text!r}")
    try:
        return CaterpillarSpec(tuple(int(part) for part in parts))
    except GraphError as e:
        raise ParseError(str(e)) from e


def looks_like_caterpillar(text: str) -> bool:
    return "".join(text.split()).startswith("T(")


def parse_edge_list(text: str) -> Graph:
    """Parse "u v" lines; '#' lines are comments; optional leading "n <count>" header."""
    n_header: Optional[int] = None
    edges: list[tuple[int, int]] = []
    seen_content = False
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if parts[0] == "n":
            if seen_content or n_header is not None:
                raise ParseError(f"line {lineno}: header 'n <count>' must come first")
            if len(parts) != 2 or not _DECIMAL_RE.fullmatch(parts[1]):
                raise ParseError(f"line {lineno}: malformed header {line!r}")
            n_header = int(parts[1])
            seen_content = True
            continue
        seen_content = True
        if len(parts) != 2 or not all(_DECIMAL_RE.fullmatch(x) for x in parts):
            raise ParseError(f"line {lineno}: expected 'u v', got {line!r}")
        u, v = int(parts[0]), int(parts[1])
        if u == v:
            raise ParseError(f"line {lineno}: self-loop at vertex {u}")
        edges.append((u, v))

    n = n_header if n_header is not None else (max((max(e) for e in edges), default=-1) + 1)
    for u, v in edges:
        if u >= n or v >= n:
            raise ParseError(f"vertex out of range in edge ({u}, {v}) for n={n}")
    try:
        return Graph.from_edges(n, edges)
    except GraphError as e:
        raise ParseError(str(e)) from e


def load_edge_list(path: str | Path) -> Graph:
    path = Path(path)
    if not path.exists():
        raise ParseError(f"File not found: {path}")
    try:
        text = path.read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as e:
        raise ParseError(f"Cannot read {path}: {e}") from e
    return parse_edge_list(text)


def format_edge_list(g: Graph) -> str:
    lines = [f"n {g.n}"] + [f"{u} {v}" for u, v in g.sorted_edges()]
    return "\n".join(lines) + "\n"
