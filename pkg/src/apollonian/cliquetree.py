"""Maximal cliques, clique-trees and minimal vertex separators of chordal graphs."""

from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass
from functools import cached_property
from typing import Any

from .graph import Graph, GraphError, NotChordalError, _mcs_visit_order, is_connected, is_perfect_elimination_ordering

__all__ = [
    "CliqueTree",
    "DegreeProfile",
    "SeparatorMultiset",
    "build_clique_tree",
    "clique_intersection_edges",
    "has_induced_subtree_property",
    "is_uniquely_representable",
    "maximal_cliques",
    "minimal_separators",
    "tree_canonical_form",
    "tree_degree_profile",
    "unlabeled_tree_canonical_form",
]

SeparatorMultiset = Counter  # sorted separator tuple -> multiplicity


def _fmt(s) -> str:
    return "{" + ",".join(str(v) for v in sorted(s)) + "}"


@dataclass(frozen=True)
class CliqueTree:
    """A tree on the maximal cliques of a chordal graph.

    ``edges`` holds ``(i, j, separator)`` triples with ``i < j`` indexing into
    ``nodes``; the separator is always ``nodes[i] & nodes[j]``.
    """

    nodes: tuple[frozenset[int], ...]
    edges: tuple[tuple[int, int, frozenset[int]], ...]

    @cached_property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        nbrs: list[list[int]] = [[] for _ in self.nodes]
        for i, j, _ in self.edges:
            nbrs[i].append(j)
            nbrs[j].append(i)
        return tuple(tuple(sorted(a)) for a in nbrs)

    @cached_property
    def _separator_of(self) -> dict[tuple[int, int], frozenset[int]]:
        out = {}
        for i, j, s in self.edges:
            out[i, j] = out[j, i] = s
        return out

    def __len__(self) -> int:
        return len(self.nodes)

    def degree(self, i: int) -> int:
        return len(self.adjacency[i])

    def separator(self, i: int, j: int) -> frozenset[int]:
        return self._separator_of[i, j]

    def leaves(self) -> list[int]:
        return [i for i in range(len(self.nodes)) if self.degree(i) == 1]

    def weight(self) -> int:
        return sum(len(s) for _, _, s in self.edges)

    def path(self, i: int, j: int) -> list[int]:
        """Node sequence of the unique tree path from ``i`` to ``j``."""
        parent = {i: -1}
        queue = deque([i])
        while queue:
            u = queue.popleft()
            if u == j:
                break
            for w in self.adjacency[u]:
                if w not in parent:
                    parent[w] = u
                    queue.append(w)
        out = [j]
        while out[-1] != i:
            out.append(parent[out[-1]])
        return out[::-1]

    def containing(self, v: int) -> list[int]:
        return [i for i, q in enumerate(self.nodes) if v in q]

    def to_dict(self) -> dict[str, Any]:
        return {
            "nodes": [sorted(q) for q in self.nodes],
            "edges": [[i, j, sorted(s)] for i, j, s in self.edges],
        }

    def to_dot(self, name: str = "clique_tree") -> str:
        lines = [f'graph "{name}" {{']
        lines += [f'  {i} [label="{_fmt(q)}"];' for i, q in enumerate(self.nodes)]
        lines += [f'  {i} -- {j} [label="{_fmt(s)}"];' for i, j, s in self.edges]
        lines.append("}")
        return "\n".join(lines) + "\n"


def _require_chordal(g: Graph) -> list[int]:
    if not is_connected(g):
        raise GraphError("clique-tree construction requires a connected graph")
    order = _mcs_visit_order(g)
    if not is_perfect_elimination_ordering(g, order[::-1]):
        raise NotChordalError(f"{g!r} is not chordal")
    return order


def maximal_cliques(g: Graph) -> list[frozenset[int]]:
    """Maximal cliques of a connected chordal graph, in search order.

    Uses the maximum cardinality search: the clique ``{v} + earlier
    neighbours`` is maximal exactly when the next visited vertex does not
    gain a label larger than ``v``'s.
    """
    order = _require_chordal(g)
    pos = {v: i for i, v in enumerate(order)}
    earlier = [frozenset(w for w in g.adj[v] if pos[w] < pos[v]) for v in order]
    cliques = []
    for i, v in enumerate(order):
        if i == len(order) - 1 or len(earlier[i + 1]) <= len(earlier[i]):
            cliques.append(earlier[i] | {v})
    return cliques


def clique_intersection_edges(cliques: list[frozenset[int]]) -> dict[tuple[int, int], int]:
    """Weighted edges ``(i, j) -> |Qi & Qj|`` between intersecting cliques."""
    members: dict[int, list[int]] = {}
    for i, q in enumerate(cliques):
        for v in q:
            members.setdefault(v, []).append(i)
    weight: Counter = Counter()
    for idx in members.values():
        for a in range(len(idx)):
            for b in range(a + 1, len(idx)):
                weight[idx[a], idx[b]] += 1
    return dict(weight)


def _find(parent: list[int], x: int) -> int:
    while parent[x] != x:
        parent[x] = parent[parent[x]]
        x = parent[x]
    return x


def build_clique_tree(g: Graph) -> CliqueTree:
    """Maximum-weight spanning tree of the clique-intersection graph.

    Ties between equal-weight edges go to the lexicographically smallest
    pair of sorted cliques, so the output is deterministic; for uniquely
    representable graphs the tree does not depend on the tie-break at all.
    """
    cliques = maximal_cliques(g)
    keys = [tuple(sorted(q)) for q in cliques]
    candidates = []
    for (i, j), w in clique_intersection_edges(cliques).items():
        a, b = sorted((i, j), key=keys.__getitem__)
        candidates.append((-w, keys[a], keys[b], i, j))
    candidates.sort()
    parent = list(range(len(cliques)))
    chosen = []
    for _, _, _, i, j in candidates:
        ri, rj = _find(parent, i), _find(parent, j)
        if ri == rj:
            continue
        parent[ri] = rj
        a, b = min(i, j), max(i, j)
        chosen.append((a, b, cliques[a] & cliques[b]))
        if len(chosen) == len(cliques) - 1:
            break
    chosen.sort(key=lambda e: (e[0], e[1]))
    return CliqueTree(tuple(cliques), tuple(chosen))


def minimal_separators(t: CliqueTree) -> SeparatorMultiset:
    return Counter(tuple(sorted(s)) for _, _, s in t.edges)


def is_uniquely_representable(g: Graph) -> bool:
    """No minimal separator properly inside another, and every multiplicity 1."""
    mult = minimal_separators(build_clique_tree(g))
    if any(c > 1 for c in mult.values()):
        return False
    seps = [frozenset(s) for s in mult]
    return not any(a < b for a in seps for b in seps)


def has_induced_subtree_property(g: Graph, t: CliqueTree) -> bool:
    """Every vertex's cliques must induce a connected subtree of ``t``."""
    for v in range(g.n):
        holders = set(t.containing(v))
        if not holders:
            return False
        start = min(holders)
        seen = {start}
        stack = [start]
        while stack:
            u = stack.pop()
            for w in t.adjacency[u]:
                if w in holders and w not in seen:
                    seen.add(w)
                    stack.append(w)
        if seen != holders:
            return False
    return True


def _tree_centers(n: int, adjacency) -> list[int]:
    if n <= 2:
        return list(range(n))
    degree = [len(a) for a in adjacency]
    layer = [v for v in range(n) if degree[v] <= 1]
    remaining = n
    while remaining > 2:
        remaining -= len(layer)
        nxt = []
        for v in layer:
            for w in adjacency[v]:
                degree[w] -= 1
                if degree[w] == 1:
                    nxt.append(w)
        layer = nxt
    return sorted(layer)


def _rooted_encoding(root: int, adjacency) -> str:
    parent = {root: -1}
    order = [root]
    for u in order:
        for w in adjacency[u]:
            if w not in parent:
                parent[w] = u
                order.append(w)
    enc: dict[int, str] = {}
    for u in reversed(order):
        kids = sorted(enc[w] for w in adjacency[u] if parent.get(w) == u and w != parent[u])
        enc[u] = "(" + "".join(kids) + ")"
    return enc[root]


def unlabeled_tree_canonical_form(n: int, edge_list) -> str:
    """Center-rooted AHU string; equal exactly for isomorphic unlabeled trees."""
    if n == 0:
        return ""
    adjacency: list[list[int]] = [[] for _ in range(n)]
    for e in edge_list:
        i, j = e[0], e[1]
        adjacency[i].append(j)
        adjacency[j].append(i)
    return min(_rooted_encoding(c, adjacency) for c in _tree_centers(n, adjacency))


def tree_canonical_form(t: CliqueTree) -> str:
    return unlabeled_tree_canonical_form(len(t.nodes), t.edges)


@dataclass(frozen=True)
class DegreeProfile:
    counts: dict[int, int]
    degree4: list[int]
    leaves: int


def tree_degree_profile(t: CliqueTree, ran: bool = True) -> DegreeProfile:
    """Degree histogram of the tree nodes.

    With ``ran=True`` a node of degree above 4 raises, since no RAN
    clique-tree can have one.
    """
    degrees = [t.degree(i) for i in range(len(t.nodes))]
    if ran and any(d > 4 for d in degrees):
        raise GraphError(f"clique-tree node of degree {max(degrees)} > 4: input is not a RAN")
    return DegreeProfile(
        counts=dict(sorted(Counter(degrees).items())),
        degree4=[i for i, d in enumerate(degrees) if d == 4],
        leaves=degrees.count(1),
    )
