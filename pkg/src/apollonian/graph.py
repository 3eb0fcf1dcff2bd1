"""Simple undirected graphs on dense vertex indices ``0..n-1``.

Everything downstream (clique-trees, classification, toughness) works on
:class:`Graph`, an immutable adjacency-set representation.  Vertex sets are
plain ``frozenset`` objects at the API level; the exhaustive searches convert
them to integer bitmasks internally.
"""

from __future__ import annotations

import heapq
import json
from collections.abc import Iterable
from dataclasses import dataclass, field
from functools import cached_property
from typing import Any

__all__ = [
    "STRUCTURAL_CAP",
    "Graph",
    "GraphError",
    "NotConnectedError",
    "NotChordalError",
    "SizeCapError",
    "VertexSet",
    "complete_graph",
    "graph_to_dot",
    "connected_components",
    "cycle_graph",
    "induced_subgraph",
    "is_chordal",
    "is_clique",
    "is_complete",
    "is_connected",
    "is_perfect_elimination_ordering",
    "new_graph",
    "path_graph",
    "perfect_elimination_ordering",
    "simplicial_vertices",
]

STRUCTURAL_CAP = 10_000

VertexSet = frozenset


class GraphError(ValueError):
    """Invalid graph input (bad endpoints, self-loops, malformed JSON)."""


class NotConnectedError(GraphError):
    pass


class NotChordalError(GraphError):
    pass


class SizeCapError(GraphError):
    """The input is larger than the cap configured for an operation."""


@dataclass(frozen=True, eq=False)
class Graph:
    n: int
    adj: tuple[frozenset[int], ...]
    name: str | None = field(default=None)

    @cached_property
    def m(self) -> int:
        return sum(len(a) for a in self.adj) // 2

    @cached_property
    def masks(self) -> tuple[int, ...]:
        """Neighbourhood of every vertex as an integer bitmask."""
        out = []
        for nbrs in self.adj:
            mask = 0
            for w in nbrs:
                mask |= 1 << w
            out.append(mask)
        return tuple(out)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in sorted(self.adj[u]) if u < v]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def vertices(self) -> range:
        return range(self.n)

    def remove_edge(self, u: int, v: int) -> Graph:
        if not self.has_edge(u, v):
            raise GraphError(f"edge {u}-{v} not in graph")
        edges = [e for e in self.edges() if e != (min(u, v), max(u, v))]
        return new_graph(self.n, edges, name=self.name)

    def remove_vertices(self, s: Iterable[int]) -> tuple[Graph, dict[int, int]]:
        drop = set(s)
        return induced_subgraph(self, [v for v in range(self.n) if v not in drop])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        label = f" {self.name!r}" if self.name else ""
        return f"<Graph{label} n={self.n} m={self.m}>"

    def to_dict(self) -> dict[str, Any]:
        d: dict[str, Any] = {"n": self.n, "edges": [list(e) for e in self.edges()]}
        if self.name is not None:
            d["name"] = self.name
        return d

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> Graph:
        """Parse the JSON interchange format.  Duplicate pairs are rejected."""
        try:
            n = data["n"]
            edges = data["edges"]
        except (KeyError, TypeError) as exc:
            raise GraphError(f"graph JSON needs 'n' and 'edges': {exc}") from None
        if not isinstance(n, int) or isinstance(n, bool) or n < 0:
            raise GraphError(f"'n' must be a non-negative integer, got {n!r}")
        seen = set()
        pairs = []
        for e in edges:
            if not isinstance(e, (list, tuple)) or len(e) != 2:
                raise GraphError(f"edge {e!r} is not a pair")
            u, v = e
            if not all(isinstance(x, int) and not isinstance(x, bool) for x in (u, v)):
                raise GraphError(f"edge {e!r} has non-integer endpoints")
            key = (min(u, v), max(u, v))
            if key in seen:
                raise GraphError(f"duplicate edge {list(key)}")
            seen.add(key)
            pairs.append(key)
        name = data.get("name")
        if name is not None and not isinstance(name, str):
            raise GraphError("'name' must be a string")
        return new_graph(n, pairs, name=name)

    @classmethod
    def from_json(cls, text: str) -> Graph:
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise GraphError(f"invalid JSON: {exc}") from None
        return cls.from_dict(data)


def new_graph(
    n: int,
    edges: Iterable[tuple[int, int]],
    name: str | None = None,
    cap: int = STRUCTURAL_CAP,
) -> Graph:
    """Build a graph on ``n`` vertices; repeated pairs collapse to one edge."""
    if n < 0:
        raise GraphError(f"vertex count must be non-negative, got {n}")
    if n > cap:
        raise SizeCapError(f"n={n} exceeds structural cap {cap}")
    adj: list[set[int]] = [set() for _ in range(n)]
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) has an endpoint outside [0, {n})")
        if u == v:
            raise GraphError(f"self-loop at vertex {u}")
        adj[u].add(v)
        adj[v].add(u)
    return Graph(n, tuple(frozenset(a) for a in adj), name)


def complete_graph(n: int) -> Graph:
    return new_graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)], name=f"K{n}")


def path_graph(n: int) -> Graph:
    return new_graph(n, [(i, i + 1) for i in range(n - 1)], name=f"P{n}")


def cycle_graph(n: int) -> Graph:
    return new_graph(n, [(i, (i + 1) % n) for i in range(n)], name=f"C{n}")


def connected_components(g: Graph, removed: Iterable[int] = ()) -> list[list[int]]:
    """Components of ``g - removed``, each sorted, ordered by smallest vertex."""
    gone = set(removed)
    for v in gone:
        if not 0 <= v < g.n:
            raise GraphError(f"vertex {v} not in graph")
    seen = set(gone)
    parts = []
    for s in range(g.n):
        if s in seen:
            continue
        seen.add(s)
        comp = [s]
        stack = [s]
        while stack:
            u = stack.pop()
            for w in g.adj[u]:
                if w not in seen:
                    seen.add(w)
                    comp.append(w)
                    stack.append(w)
        parts.append(sorted(comp))
    return parts


def is_connected(g: Graph) -> bool:
    return g.n > 0 and len(connected_components(g)) == 1


def is_clique(g: Graph, s: Iterable[int]) -> bool:
    verts = list(s)
    return all(verts[j] in g.adj[verts[i]] for i in range(len(verts)) for j in range(i + 1, len(verts)))


def simplicial_vertices(g: Graph) -> frozenset[int]:
    return frozenset(v for v in range(g.n) if is_clique(g, g.adj[v]))


def is_complete(g: Graph) -> bool:
    return g.m == g.n * (g.n - 1) // 2


def induced_subgraph(g: Graph, s: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """Return ``G[S]`` relabelled to ``0..|S|-1`` plus the old -> new index map."""
    keep = sorted(set(s))
    if not keep:
        raise GraphError("induced subgraph of an empty vertex set")
    index = {v: i for i, v in enumerate(keep)}
    edges = [(index[u], index[w]) for u in keep for w in g.adj[u] if w in index and u < w]
    return new_graph(len(keep), edges, name=g.name), index


def _mcs_visit_order(g: Graph) -> list[int]:
    # Maximum cardinality search; ties go to the smallest vertex index.
    weight = [0] * g.n
    done = [False] * g.n
    heap = [(0, v) for v in range(g.n)]
    heapq.heapify(heap)
    order = []
    while heap:
        negw, v = heapq.heappop(heap)
        if done[v] or -negw != weight[v]:
            continue
        done[v] = True
        order.append(v)
        for w in g.adj[v]:
            if not done[w]:
                weight[w] += 1
                heapq.heappush(heap, (-weight[w], w))
    return order


def is_perfect_elimination_ordering(g: Graph, order: list[int]) -> bool:
    """Check that every vertex's later neighbours form a clique."""
    if sorted(order) != list(range(g.n)):
        return False
    pos = {v: i for i, v in enumerate(order)}
    for v in order:
        later = [w for w in g.adj[v] if pos[w] > pos[v]]
        if not later:
            continue
        u = min(later, key=pos.__getitem__)
        if any(w != u and w not in g.adj[u] for w in later):
            return False
    return True


def perfect_elimination_ordering(g: Graph) -> list[int] | None:
    """A perfect elimination ordering of ``g``, or ``None`` if ``g`` is not chordal."""
    if not is_connected(g):
        raise NotConnectedError("chordality test requires a connected graph")
    peo = _mcs_visit_order(g)[::-1]
    return peo if is_perfect_elimination_ordering(g, peo) else None


def is_chordal(g: Graph) -> bool:
    return perfect_elimination_ordering(g) is not None


def graph_to_dot(g: Graph) -> str:
    title = g.name or "G"
    lines = [f'graph "{title}" {{']
    lines += [f"  {v};" for v in range(g.n)]
    lines += [f"  {u} -- {v};" for u, v in g.edges()]
    lines.append("}")
    return "\n".join(lines) + "\n"
