"""Generating and recognising random Apollonian networks, k-trees and k-paths.

Randomness comes from :class:`random.Random` (MT19937) seeded with the
caller's integer, which is reproducible across platforms and Python
versions.  Every generator also returns or accepts an :class:`InsertionTrace`,
so a graph can be rebuilt without the PRNG at all.
"""

from __future__ import annotations

import json
import random
from collections import deque
from dataclasses import dataclass
from itertools import combinations
from typing import Any

from .cliquetree import build_clique_tree, is_uniquely_representable, minimal_separators
from .graph import Graph, GraphError, is_complete, is_connected, new_graph, simplicial_vertices

__all__ = [
    "AN_DEPTH_CAP",
    "InsertionTrace",
    "ShapeError",
    "TreeShape",
    "generate_an",
    "generate_ran",
    "is_kpath",
    "is_ktree",
    "is_ran",
    "proposition_report",
    "preferential_tree_shape",
    "random_hub_shape",
    "random_tree_shape",
    "realize_ran_from_shape",
    "shape_trace",
]

AN_DEPTH_CAP = 6


class ShapeError(ValueError):
    pass


@dataclass(frozen=True)
class InsertionTrace:
    """Start from the ``base`` triangle, then join each new vertex to a 3-clique."""

    base: tuple[int, int, int]
    steps: tuple[tuple[int, tuple[int, int, int]], ...]

    @property
    def n(self) -> int:
        return 3 + len(self.steps)

    def replay(self, name: str | None = None) -> Graph:
        if sorted(self.base) != [0, 1, 2]:
            raise GraphError(f"trace base must be the triangle [0, 1, 2], got {list(self.base)}")
        edges = {(0, 1), (0, 2), (1, 2)}
        adj: dict[int, set[int]] = {0: {1, 2}, 1: {0, 2}, 2: {0, 1}}
        for expected, (v, face) in enumerate(self.steps, start=3):
            if v != expected:
                raise GraphError(f"trace step introduces vertex {v}, expected {expected}")
            a, b, c = face
            if len({a, b, c}) != 3 or any(x not in adj for x in face):
                raise GraphError(f"step for vertex {v}: invalid face {list(face)}")
            if not (b in adj[a] and c in adj[a] and c in adj[b]):
                raise GraphError(f"step for vertex {v}: face {list(face)} is not a triangle")
            adj[v] = set(face)
            for x in face:
                adj[x].add(v)
                edges.add((x, v))
        return new_graph(self.n, edges, name=name)

    def to_dict(self) -> dict[str, Any]:
        return {
            "base": list(self.base),
            "steps": [{"v": v, "face": list(face)} for v, face in self.steps],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> InsertionTrace:
        try:
            base = tuple(data["base"])
            steps = tuple((int(s["v"]), tuple(sorted(s["face"]))) for s in data["steps"])
        except (KeyError, TypeError, ValueError) as exc:
            raise GraphError(f"malformed trace: {exc}") from None
        if len(base) != 3 or any(len(f) != 3 for _, f in steps):
            raise GraphError("trace base and faces must have three vertices")
        return cls(base, steps)  # type: ignore[arg-type]


def _sorted3(a: int, b: int, c: int) -> tuple[int, int, int]:
    return tuple(sorted((a, b, c)))  # type: ignore[return-value]


def generate_ran(n: int, seed: int) -> tuple[Graph, InsertionTrace]:
    """Random Apollonian network on ``n`` vertices.

    Each step picks one of the active inner faces uniformly, puts a new
    vertex inside it joined to its three corners, and replaces the face by
    the three faces it splits into.  The outer face is never chosen.
    """
    if n < 4:
        raise ValueError(f"a RAN needs n >= 4, got {n}")
    rng = random.Random(seed)
    faces = [(0, 1, 2)]
    steps = []
    for v in range(3, n):
        i = rng.randrange(len(faces))
        a, b, c = face = faces[i]
        faces[i] = faces[-1]
        faces.pop()
        faces += [_sorted3(a, b, v), _sorted3(a, c, v), _sorted3(b, c, v)]
        steps.append((v, face))
    trace = InsertionTrace((0, 1, 2), tuple(steps))
    return trace.replay(name=f"ran-n{n}-s{seed}"), trace


def generate_an(depth: int, cap: int = AN_DEPTH_CAP) -> Graph:
    """Deterministic Apollonian network: every active face is split each round.

    ``depth=0`` is K4; each further round adds one vertex per active face, so
    the vertex count is ``4 + 3 + 9 + ... + 3**depth``.
    """
    if depth < 0:
        raise ValueError("depth must be non-negative")
    if depth > cap:
        raise ValueError(f"depth {depth} exceeds cap {cap}")
    steps = [(3, (0, 1, 2))]
    faces = [(0, 1, 3), (0, 2, 3), (1, 2, 3)]
    v = 4
    for _ in range(depth):
        nxt = []
        for a, b, c in faces:
            steps.append((v, (a, b, c)))
            nxt += [_sorted3(a, b, v), _sorted3(a, c, v), _sorted3(b, c, v)]
            v += 1
        faces = nxt
    return InsertionTrace((0, 1, 2), tuple(steps)).replay(name=f"an-depth{depth}")


def is_ktree(g: Graph, k: int) -> bool:
    """Peel simplicial vertices of degree ``k`` until ``K_{k+1}`` remains."""
    if k < 1:
        raise ValueError("k must be positive")
    n = g.n
    if n < k + 1 or not is_connected(g):
        return False
    if n == k + 1:
        return is_complete(g)
    if g.m != k * n - k * (k + 1) // 2:
        return False
    adj = [set(a) for a in g.adj]
    alive = n
    removed = [False] * n
    queue = deque(v for v in range(n) if len(adj[v]) == k)
    while alive > k + 1:
        while queue:
            v = queue.popleft()
            if not removed[v] and len(adj[v]) == k and _is_clique_sets(adj, adj[v]):
                break
        else:
            return False
        removed[v] = True
        alive -= 1
        for w in adj[v]:
            adj[w].discard(v)
            if len(adj[w]) == k:
                queue.append(w)
        adj[v] = set()
    rest = [v for v in range(n) if not removed[v]]
    return all(len(adj[v]) == k for v in rest) and _is_clique_sets(adj, rest)


def _is_clique_sets(adj: list[set[int]], verts) -> bool:
    vs = list(verts)
    return all(vs[j] in adj[vs[i]] for i in range(len(vs)) for j in range(i + 1, len(vs)))


def is_ran(g: Graph) -> bool:
    """True for uniquely representable 3-trees (planar 3-trees); K4 included."""
    return is_ktree(g, 3) and is_uniquely_representable(g)


def is_kpath(g: Graph, k: int) -> bool:
    if g.n == k + 1:
        return is_complete(g)
    return is_ktree(g, k) and len(simplicial_vertices(g)) == 2


@dataclass(frozen=True)
class TreeShape:
    """An unlabeled tree given by a node count and an edge list."""

    n_nodes: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if self.n_nodes < 1:
            raise ShapeError("a tree shape needs at least one node")
        if len(self.edges) != self.n_nodes - 1:
            raise ShapeError(f"{self.n_nodes} nodes need {self.n_nodes - 1} edges, got {len(self.edges)}")
        adjacency = self.adjacency()
        seen = {0}
        stack = [0]
        while stack:
            for w in adjacency[stack.pop()]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        if len(seen) != self.n_nodes:
            raise ShapeError("tree shape is not connected")
        if self.max_degree() > 4:
            raise ShapeError(f"tree shape has a node of degree {self.max_degree()} > 4")

    def adjacency(self) -> list[list[int]]:
        out: list[list[int]] = [[] for _ in range(self.n_nodes)]
        for i, j in self.edges:
            if not (0 <= i < self.n_nodes and 0 <= j < self.n_nodes) or i == j:
                raise ShapeError(f"bad shape edge ({i}, {j})")
            out[i].append(j)
            out[j].append(i)
        return [sorted(a) for a in out]

    def max_degree(self) -> int:
        return max((len(a) for a in self.adjacency()), default=0)

    @classmethod
    def from_parents(cls, parents: list[int]) -> TreeShape:
        """Node ``i + 1`` hangs below ``parents[i]``."""
        return cls(len(parents) + 1, tuple((p, i + 1) for i, p in enumerate(parents)))

    @classmethod
    def path(cls, k: int) -> TreeShape:
        return cls.from_parents(list(range(k - 1)))

    @classmethod
    def star(cls, leaves: int) -> TreeShape:
        return cls.from_parents([0] * leaves)

    @classmethod
    def regular(cls, k: int, inner_parents: list[int]) -> TreeShape:
        """A k-regular tree: the inner tree given by parents, padded with leaves."""
        parents = list(inner_parents)
        degree = [0] * (len(parents) + 1)
        for i, p in enumerate(parents):
            degree[p] += 1
            degree[i + 1] += 1
        if max(degree) > k:
            raise ShapeError(f"inner tree already has a node of degree above {k}")
        for u in range(len(degree)):
            parents += [u] * (k - degree[u])
        return cls.from_parents(parents)


def random_tree_shape(n_nodes: int, rng: random.Random, max_degree: int = 4) -> TreeShape:
    """Grow a tree by hanging each new node below a uniform non-saturated node."""
    degree = [0]
    parents = []
    for v in range(1, n_nodes):
        open_nodes = [u for u in range(v) if degree[u] < max_degree]
        p = rng.choice(open_nodes)
        parents.append(p)
        degree[p] += 1
        degree.append(1)
    return TreeShape.from_parents(parents)


def preferential_tree_shape(n_nodes: int, rng: random.Random, alpha: float = 2.0) -> TreeShape:
    """Like :func:`random_tree_shape`, but parents are drawn with weight ``(degree + 1) ** alpha``."""
    degree = [0]
    parents = []
    for v in range(1, n_nodes):
        open_nodes = [u for u in range(v) if degree[u] < 4]
        p = rng.choices(open_nodes, [(degree[u] + 1) ** alpha for u in open_nodes])[0]
        parents.append(p)
        degree[p] += 1
        degree.append(1)
    return TreeShape.from_parents(parents)


def random_hub_shape(n_nodes: int, rng: random.Random) -> TreeShape | None:
    """Two or three degree-4 hubs joined by paths that keep a degree-2 node.

    Every other node has degree at most 3, so no path between hubs is fat.
    Returns ``None`` when ``n_nodes`` is too small for the drawn layout.
    """
    parents: list[int] = []
    degree = [0]
    keep_two: set[int] = set()

    def add(p: int) -> int:
        parents.append(p)
        degree[p] += 1
        degree.append(1)
        return len(degree) - 1

    hubs = [0]
    n_hubs = 3 if n_nodes >= 15 and rng.random() < 0.4 else 2
    while len(hubs) < n_hubs:
        if len(hubs) == 1:
            anchor = 0
        else:
            anchor = rng.choice([u for u in range(len(degree)) if degree[u] < 4 and u not in keep_two])
        p = rng.randint(1, 3)
        prev = anchor
        chain = []
        for _ in range(p):
            prev = add(prev)
            chain.append(prev)
        keep_two.add(rng.choice(chain))
        hubs.append(add(prev))
    for h in hubs:
        while degree[h] < 4:
            add(h)
    if len(degree) > n_nodes:
        return None
    while len(degree) < n_nodes:
        free = [u for u in range(len(degree)) if u not in hubs and u not in keep_two and degree[u] < 3]
        add(rng.choice(free))
    return TreeShape.from_parents(parents)


def shape_trace(shape: TreeShape, seed: int) -> InsertionTrace:
    """Insertion trace of a RAN whose clique-tree has the given shape.

    Node 0 becomes the clique {0, 1, 2, 3}.  Walking the tree breadth first,
    each child clique keeps a 3-subset of its parent's clique and adds one
    new vertex; the children of a node get distinct 3-subsets (other than
    the one shared with its own parent) in seeded random order.
    """
    rng = random.Random(seed)
    adjacency = shape.adjacency()
    clique = {0: (0, 1, 2, 3)}
    parent_sep: dict[int, tuple[int, ...] | None] = {0: None}
    steps = [(3, (0, 1, 2))]
    nxt = 4
    queue = deque([0])
    while queue:
        u = queue.popleft()
        children = [w for w in adjacency[u] if w not in clique]
        subsets = [s for s in combinations(clique[u], 3) if s != parent_sep[u]]
        rng.shuffle(subsets)
        for child, sep in zip(children, subsets):
            steps.append((nxt, sep))
            clique[child] = tuple(sorted(sep + (nxt,)))
            parent_sep[child] = sep
            nxt += 1
            queue.append(child)
    return InsertionTrace((0, 1, 2), tuple(steps))  # type: ignore[arg-type]


def realize_ran_from_shape(shape: TreeShape, seed: int) -> Graph:
    return shape_trace(shape, seed).replay(name=f"shape{shape.n_nodes}-s{seed}")


def proposition_report(g: Graph) -> dict[str, bool]:
    """Structural facts every non-complete RAN's clique-tree satisfies."""
    t = build_clique_tree(g)
    n = g.n
    si = simplicial_vertices(g)
    mult = minimal_separators(t)
    internal_ok = True
    for i, q in enumerate(t.nodes):
        if t.degree(i) >= 2:
            covered = set().union(*(t.separator(i, j) for j in t.adjacency[i]))
            internal_ok &= q <= covered
    return {
        "cliques_n_minus_3": len(t.nodes) == n - 3,
        "separators_n_minus_4": len(t.edges) == n - 4 and len(mult) == n - 4,
        "leaves_equal_simplicial": len(t.leaves()) == len(si),
        "internal_cliques_covered_by_separators": internal_ok,
        "max_tree_degree_4": all(t.degree(i) <= 4 for i in range(len(t.nodes))),
        "cliques_size_4": all(len(q) == 4 for q in t.nodes),
        "separators_size_3": all(len(s) == 3 for s in mult),
        "multiplicities_one": all(c == 1 for c in mult.values()),
        "simplicial_at_most_2n_minus_4_over_3": 3 * len(si) <= 2 * n - 4,
        "edges_3n_minus_6": g.m == 3 * n - 6,
    }
