"""Signed graphs, markings and their matrices.

A signed graph is a finite simple graph with every edge signed +1 or -1.
A marking assigns +1 or -1 to every vertex; the canonical marking of a
vertex is the product of the signs of its incident edges.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, NamedTuple, Sequence

from .exact import Matrix

Edge = tuple[int, int, int]  # (i, j, sign) with i < j


def _normalize_edges(n: int, edges: Iterable[Sequence[int]]) -> tuple[Edge, ...]:
    seen: dict[tuple[int, int], int] = {}
    for e in edges:
        if len(e) != 3:
            raise ValueError(f"edge must be (i, j, sign), got {e!r}")
        i, j, s = int(e[0]), int(e[1]), int(e[2])
        if s not in (1, -1):
            raise ValueError(f"edge sign must be +1 or -1, got {s}")
        if i == j:
            raise ValueError(f"self-loop at vertex {i} is not allowed")
        if not (0 <= i < n and 0 <= j < n):
            raise ValueError(f"edge ({i}, {j}) out of range for {n} vertices")
        if i > j:
            i, j = j, i
        if (i, j) in seen:
            raise ValueError(f"duplicate edge ({i}, {j})")
        seen[(i, j)] = s
    return tuple((i, j, s) for (i, j), s in sorted(seen.items()))


class SignedGraph:
    """Simple graph on vertices 0..n-1 with +-1 edge signs."""

    __slots__ = ("n", "edges")

    def __init__(self, n: int, edges: Iterable[Sequence[int]] = ()):
        if n < 1:
            raise ValueError("graph needs at least one vertex")
        self.n = n
        self.edges = _normalize_edges(n, edges)

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    def degrees(self) -> tuple[int, ...]:
        deg = [0] * self.n
        for i, j, _ in self.edges:
            deg[i] += 1
            deg[j] += 1
        return tuple(deg)

    def neighbors(self, v: int) -> list[tuple[int, int]]:
        """(neighbor, sign) pairs for vertex v."""
        out = []
        for i, j, s in self.edges:
            if i == v:
                out.append((j, s))
            elif j == v:
                out.append((i, s))
        return out

    def sign_of(self, i: int, j: int) -> int:
        if i > j:
            i, j = j, i
        for a, b, s in self.edges:
            if (a, b) == (i, j):
                return s
        raise KeyError(f"no edge ({i}, {j})")

    def underlying_positive(self) -> "SignedGraph":
        return SignedGraph(self.n, [(i, j, 1) for i, j, _ in self.edges])

    def negated(self) -> "SignedGraph":
        return SignedGraph(self.n, [(i, j, -s) for i, j, s in self.edges])

    def __eq__(self, other: object) -> bool:
        if isinstance(other, SignedGraph):
            return self.n == other.n and self.edges == other.edges
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"SignedGraph(n={self.n}, edges={list(self.edges)})"


class Marking:
    """Vector of +-1 vertex signs."""

    __slots__ = ("signs",)

    def __init__(self, signs: Iterable[int]):
        vals = tuple(int(s) for s in signs)
        if not vals:
            raise ValueError("marking must cover at least one vertex")
        if any(s not in (1, -1) for s in vals):
            raise ValueError("marking entries must be +1 or -1")
        self.signs = vals

    @classmethod
    def all_positive(cls, n: int) -> "Marking":
        return cls([1] * n)

    def __len__(self) -> int:
        return len(self.signs)

    def __iter__(self):
        return iter(self.signs)

    def __getitem__(self, i: int) -> int:
        return self.signs[i]

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Marking):
            return self.signs == other.signs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.signs)

    def __repr__(self) -> str:
        return f"Marking({''.join('+' if s > 0 else '-' for s in self.signs)})"


@dataclass(frozen=True)
class MarkedSignedGraph:
    """A signed graph together with a marking of its vertices."""

    graph: SignedGraph
    marking: Marking

    def __post_init__(self):
        if len(self.marking) != self.graph.n:
            raise ValueError(
                f"marking length {len(self.marking)} differs from "
                f"vertex count {self.graph.n}")

    @classmethod
    def with_canonical_marking(cls, g: SignedGraph) -> "MarkedSignedGraph":
        return cls(g, canonical_marking(g))

    @property
    def n(self) -> int:
        return self.graph.n


def canonical_marking(g: SignedGraph) -> Marking:
    """Product of incident edge signs per vertex; +1 for isolated vertices."""
    marks = [1] * g.n
    for i, j, s in g.edges:
        marks[i] *= s
        marks[j] *= s
    return Marking(marks)


def mu_signed_graph(mg: MarkedSignedGraph) -> SignedGraph:
    """Same underlying graph, each edge re-signed to mark(u)*mark(v)."""
    mu = mg.marking
    return SignedGraph(mg.graph.n,
                       [(i, j, mu[i] * mu[j]) for i, j, _ in mg.graph.edges])


def balance_marking(g: SignedGraph) -> Marking | None:
    """A marking realizing every edge sign as an endpoint product, or None.

    BFS mark propagation per component; a graph admits such a marking exactly
    when every cycle carries an even number of negative edges.
    """
    adj: list[list[tuple[int, int]]] = [[] for _ in range(g.n)]
    for i, j, s in g.edges:
        adj[i].append((j, s))
        adj[j].append((i, s))
    marks = [0] * g.n
    for start in range(g.n):
        if marks[start]:
            continue
        marks[start] = 1
        queue = deque([start])
        while queue:
            v = queue.popleft()
            for w, s in adj[v]:
                expected = marks[v] * s
                if marks[w] == 0:
                    marks[w] = expected
                    queue.append(w)
                elif marks[w] != expected:
                    return None
    return Marking(marks)


def is_balanced(g: SignedGraph) -> bool:
    """True when some marking realizes all edge signs as endpoint products."""
    return balance_marking(g) is not None


def regular_degree(g: SignedGraph) -> int | None:
    """Common underlying degree, or None when the graph is not regular."""
    degs = g.degrees()
    return degs[0] if all(d == degs[0] for d in degs) else None


def require_regular(g: SignedGraph, label: str) -> int:
    degs = g.degrees()
    r = degs[0]
    for v, d in enumerate(degs):
        if d != r:
            raise ValueError(
                f"{label} must be regular: vertex {v} has degree {d}, "
                f"vertex 0 has degree {r}")
    return r


class GraphMatrices(NamedTuple):
    A: Matrix
    D: Matrix
    L: Matrix
    Q: Matrix


def adjacency_matrix(g: SignedGraph) -> Matrix:
    rows = [[0] * g.n for _ in range(g.n)]
    for i, j, s in g.edges:
        rows[i][j] = s
        rows[j][i] = s
    return Matrix(rows)


def matrices(mg: MarkedSignedGraph | SignedGraph) -> GraphMatrices:
    """Adjacency A, underlying degree matrix D, L = D - A and Q = D + A."""
    g = mg.graph if isinstance(mg, MarkedSignedGraph) else mg
    a = adjacency_matrix(g)
    d = Matrix.diagonal(g.degrees())
    return GraphMatrices(A=a, D=d, L=d - a, Q=d + a)


def _resolve_signs(m: int, signs) -> list[int]:
    if signs is None or signs == "+" or signs == "all-positive":
        return [1] * m
    if signs == "-" or signs == "all-negative":
        return [-1] * m
    if isinstance(signs, str):
        if len(signs) != m:
            raise ValueError(f"need {m} signs, got {len(signs)}")
        out = []
        for ch in signs:
            if ch == "+":
                out.append(1)
            elif ch == "-":
                out.append(-1)
            else:
                raise ValueError(f"sign characters must be + or -, got {ch!r}")
        return out
    vals = [int(s) for s in signs]
    if len(vals) != m:
        raise ValueError(f"need {m} signs, got {len(vals)}")
    if any(s not in (1, -1) for s in vals):
        raise ValueError("signs must be +1 or -1")
    return vals


def _from_pairs(n: int, pairs: list[tuple[int, int]], signs) -> SignedGraph:
    ss = _resolve_signs(len(pairs), signs)
    return SignedGraph(n, [(i, j, s) for (i, j), s in zip(pairs, ss)])


def star(n: int, signs=None) -> SignedGraph:
    """Star on n vertices: center 0 joined to n-1 leaves."""
    if n < 1:
        raise ValueError("star needs at least one vertex")
    return _from_pairs(n, [(0, k) for k in range(1, n)], signs)


def path(n: int, signs=None) -> SignedGraph:
    if n < 1:
        raise ValueError("path needs at least one vertex")
    return _from_pairs(n, [(k, k + 1) for k in range(n - 1)], signs)


def cycle(n: int, signs=None) -> SignedGraph:
    if n < 3:
        raise ValueError("cycle needs at least three vertices")
    return _from_pairs(n, [(k, (k + 1) % n) for k in range(n)], signs)


def complete(n: int, signs=None) -> SignedGraph:
    if n < 1:
        raise ValueError("complete graph needs at least one vertex")
    return _from_pairs(n, [(i, j) for i in range(n) for j in range(i + 1, n)], signs)


def complete_bipartite(a: int, b: int, signs=None) -> SignedGraph:
    if a < 1 or b < 1:
        raise ValueError("both parts need at least one vertex")
    return _from_pairs(a + b, [(i, a + j) for i in range(a) for j in range(b)], signs)


def prism(n: int, signs=None) -> SignedGraph:
    """Circular ladder: two n-cycles joined by rungs; prism(3) is the triangular prism."""
    if n < 3:
        raise ValueError("prism needs cycles of length at least three")
    pairs = [(k, (k + 1) % n) for k in range(n)]
    pairs += [(n + k, n + (k + 1) % n) for k in range(n)]
    pairs += [(k, n + k) for k in range(n)]
    return _from_pairs(2 * n, pairs, signs)


def line_graph(g: SignedGraph) -> SignedGraph:
    """All-positive line graph of the underlying graph of g."""
    base = [(i, j) for i, j, _ in g.edges]
    if not base:
        raise ValueError("line graph of an edgeless graph is empty")
    out = []
    for a in range(len(base)):
        for b in range(a + 1, len(base)):
            if set(base[a]) & set(base[b]):
                out.append((a, b, 1))
    return SignedGraph(len(base), out)
