"""Hamiltonian cycles: an exact backtracking solver, the spanning-mop
construction for class C5, mop verification, and the per-class answers."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Any

from .classify import ClassLabel, check_admissible, classify
from .cliquetree import build_clique_tree, is_uniquely_representable
from .graph import Graph, GraphError, NotConnectedError, SizeCapError, is_connected, new_graph
from .ran import is_ktree

__all__ = [
    "HAMILTON_CAP",
    "HamiltonResult",
    "Mop",
    "MopConstructionError",
    "build_spanning_mop_c5",
    "class_hamiltonicity",
    "hamiltonian_cycle",
    "is_hamiltonian_cycle",
    "mop_boundary_cycle",
    "verify_mop",
]

HAMILTON_CAP = 24


class MopConstructionError(RuntimeError):
    pass


@dataclass(frozen=True)
class HamiltonResult:
    hamiltonian: bool
    cycle: tuple[int, ...] | None = None

    def to_dict(self) -> dict[str, Any]:
        if self.hamiltonian:
            return {"hamiltonian": True, "cycle": list(self.cycle or ())}
        return {"hamiltonian": False}


def is_hamiltonian_cycle(g: Graph, cycle) -> bool:
    cycle = list(cycle)
    if len(cycle) != g.n or sorted(cycle) != list(range(g.n)) or g.n < 3:
        return False
    return all(g.has_edge(cycle[i], cycle[(i + 1) % g.n]) for i in range(g.n))


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def hamiltonian_cycle(g: Graph, cap: int = HAMILTON_CAP) -> HamiltonResult:
    """Decide Hamiltonicity exactly by depth-first path extension.

    The path starts at a maximum-degree vertex and always tries the
    neighbour with the fewest remaining options first.  A branch is cut as
    soon as the unvisited vertices stop being connected, or one of them has
    fewer than two usable neighbours left.
    """
    n = g.n
    if n > cap:
        raise SizeCapError(f"Hamiltonicity search on n={n} exceeds cap {cap}")
    if not is_connected(g):
        raise NotConnectedError("Hamiltonicity search requires a connected graph")
    if n < 3 or any(len(a) < 2 for a in g.adj):
        return HamiltonResult(False)
    nb = g.masks
    start = max(range(n), key=lambda v: (len(g.adj[v]), -v))
    full = (1 << n) - 1

    def connected(mask: int) -> bool:
        reach = frontier = mask & -mask
        while frontier:
            grow = 0
            for v in _bits(frontier):
                grow |= nb[v]
            frontier = grow & mask & ~reach
            reach |= frontier
        return reach == mask

    path = [start]

    def extend(cur: int, unvisited: int) -> bool:
        if not unvisited:
            return bool(nb[cur] >> start & 1)
        usable = unvisited | (1 << cur) | (1 << start)
        for w in _bits(unvisited):
            if (nb[w] & usable).bit_count() < 2:
                return False
        if not nb[start] & unvisited or not connected(unvisited):
            return False
        options = [w for w in _bits(nb[cur] & unvisited)]
        options.sort(key=lambda w: ((nb[w] & unvisited).bit_count(), w))
        for w in options:
            path.append(w)
            if extend(w, unvisited & ~(1 << w)):
                return True
            path.pop()
        return False

    if extend(start, full & ~(1 << start)):
        cycle = tuple(path)
        if not is_hamiltonian_cycle(g, cycle):
            raise AssertionError("backtracking produced an invalid cycle")
        return HamiltonResult(True, cycle)
    return HamiltonResult(False)


@dataclass(frozen=True)
class Mop:
    """A spanning maximal outerplanar subgraph and its boundary cycle."""

    edges: frozenset[tuple[int, int]]
    cycle: tuple[int, ...]

    def to_dict(self) -> dict[str, Any]:
        return {"edges": [list(e) for e in sorted(self.edges)], "cycle": list(self.cycle)}


def _edge(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


class _Ring:
    """Doubly linked cyclic vertex order supporting insertion on an edge."""

    def __init__(self, order):
        order = list(order)
        self.nxt = {v: order[(i + 1) % len(order)] for i, v in enumerate(order)}
        self.prv = {v: order[i - 1] for i, v in enumerate(order)}

    def neighbours(self, v: int) -> tuple[int, int]:
        return self.prv[v], self.nxt[v]

    def insert(self, w: int, u: int, v: int) -> None:
        if self.nxt[u] == v:
            u, v = u, v
        elif self.nxt[v] == u:
            u, v = v, u
        else:
            raise MopConstructionError(f"{u}-{v} is not a boundary edge")
        self.nxt[u], self.prv[w], self.nxt[w], self.prv[v] = w, u, v, w

    def walk(self, start: int) -> tuple[int, ...]:
        out = [start]
        while self.nxt[out[-1]] != start:
            out.append(self.nxt[out[-1]])
        return tuple(out)


def build_spanning_mop_c5(g: Graph, label: ClassLabel | None = None) -> Mop:
    """Spanning mop of a C5 graph, grown outward from its degree-4 clique.

    The degree-4 clique ``{a, b, c, d}`` and the new vertices of its four
    neighbouring cliques give the seed cycle ``a v1 b v2 c v3 d v4``.  Then,
    breadth first, each processed clique with new vertex ``v`` (flanked by
    ``x`` and ``y`` on the cycle) passes its one or two child cliques onto
    the boundary edges ``x-v`` and ``v-y``; every child separator contains
    ``v`` and at least one of ``x``, ``y``, so a distinct edge is always free.
    Ties prefer the edge towards the smaller vertex index.
    """
    label = label or classify(g)
    if label.label != "C5":
        raise ValueError(f"spanning mop construction needs a C5 graph, got {label.label}")
    t = build_clique_tree(g)
    (q,) = [i for i in range(len(t.nodes)) if t.degree(i) == 4]
    a, b, c, d = sorted(t.nodes[q])
    new_vertex = {}
    excluded = {}
    for k in t.adjacency[q]:
        (v,) = t.nodes[k] - t.nodes[q]
        (x,) = t.nodes[q] - t.nodes[k]
        new_vertex[k] = v
        excluded[x] = k
    # slot between two consecutive corners takes the neighbour missing a corner
    # not on that slot
    v1, v2, v3, v4 = (new_vertex[excluded[x]] for x in (d, a, b, c))
    ring = _Ring([a, v1, b, v2, c, v3, d, v4])
    edges = {_edge(*e) for e in [(a, v1), (v1, b), (b, v2), (v2, c), (c, v3), (v3, d), (d, v4), (v4, a)]}
    edges |= {_edge(*e) for e in [(a, b), (b, c), (c, d), (d, a), (a, c)]}

    parent = {q: -1, **{k: q for k in t.adjacency[q]}}
    queue = deque(sorted(t.adjacency[q]))
    while queue:
        u = queue.popleft()
        v = new_vertex[u]
        kids = [k for k in t.adjacency[u] if k not in parent]
        if not kids:
            continue
        if len(kids) > 2:
            raise MopConstructionError(f"clique {sorted(t.nodes[u])} has {len(kids)} children")
        x, y = sorted(ring.neighbours(v))
        if not {x, y} <= t.nodes[u]:
            raise MopConstructionError(f"cycle neighbours of {v} are not in its clique")
        kid_info = []
        for k in kids:
            sep = t.nodes[u] & t.nodes[k]
            (w,) = t.nodes[k] - t.nodes[u]
            if v not in sep:
                raise MopConstructionError(f"separator {sorted(sep)} misses vertex {v}")
            kid_info.append((w, k, [z for z in (x, y) if z in sep]))
        kid_info.sort()
        assignment = None
        if len(kid_info) == 1:
            assignment = [kid_info[0][2][0]]
        else:
            (_, _, opts1), (_, _, opts2) = kid_info
            for z1 in opts1:
                rest = [z for z in opts2 if z != z1]
                if rest:
                    assignment = [z1, rest[0]]
                    break
        if assignment is None:
            raise MopConstructionError(f"no boundary edges free for children of {sorted(t.nodes[u])}")
        for (w, k, _), z in zip(kid_info, assignment):
            ring.insert(w, v, z)
            edges |= {_edge(w, v), _edge(w, z)}
            new_vertex[k] = w
            parent[k] = u
            queue.append(k)

    mop = Mop(frozenset(edges), ring.walk(a))
    if not verify_mop(g, mop):
        raise MopConstructionError("constructed subgraph failed mop verification")
    return mop


def mop_boundary_cycle(h: Graph) -> tuple[int, ...] | None:
    """Boundary cycle of a mop, or ``None`` if ``h`` is not one.

    Peels degree-2 vertices whose neighbours are adjacent down to a
    triangle, then reinserts them; each reinsertion must land on an edge of
    the current cycle.
    """
    n = h.n
    if n < 3:
        return None
    adj = [set(a) for a in h.adj]
    alive = set(range(n))
    peeled = []
    stack = [v for v in range(n) if len(adj[v]) == 2]
    while len(alive) > 3:
        v = None
        while stack:
            cand = stack.pop()
            if cand in alive and len(adj[cand]) == 2:
                x, y = adj[cand]
                if y in adj[x]:
                    v = cand
                    break
        if v is None:
            return None
        x, y = adj[v]
        peeled.append((v, x, y))
        alive.discard(v)
        for w in (x, y):
            adj[w].discard(v)
            if len(adj[w]) == 2:
                stack.append(w)
    tri = sorted(alive)
    if any(tri[j] not in adj[tri[i]] for i in range(3) for j in range(i + 1, 3)):
        return None
    ring = _Ring(tri)
    for v, x, y in reversed(peeled):
        try:
            ring.insert(v, x, y)
        except MopConstructionError:
            return None
    return ring.walk(0)


def _same_cycle(c1, c2) -> bool:
    if len(c1) != len(c2):
        return False
    if not c1:
        return True
    i = list(c2).index(c1[0]) if c1[0] in c2 else -1
    if i < 0:
        return False
    rot = tuple(c2[i:]) + tuple(c2[:i])
    back = (rot[0],) + tuple(reversed(rot[1:]))
    return tuple(c1) in (rot, back)


def verify_mop(g: Graph, m: Mop) -> bool:
    """Spanning, a uniquely representable 2-tree, boundary Hamiltonian in ``g``."""
    n = g.n
    if any(not (0 <= u < n and 0 <= v < n) or not g.has_edge(u, v) for u, v in m.edges):
        return False
    if len(m.edges) != 2 * n - 3:
        return False
    try:
        h = new_graph(n, m.edges)
    except GraphError:
        return False
    if any(not a for a in h.adj) or not is_ktree(h, 2) or not is_uniquely_representable(h):
        return False
    boundary = mop_boundary_cycle(h)
    if boundary is None or not is_hamiltonian_cycle(g, boundary):
        return False
    return not m.cycle or _same_cycle(tuple(m.cycle), boundary)


_HAMILTONIAN = {"C0", "C2", "C3", "C4", "C5"}
_NON_HAMILTONIAN = {"C6", "C7"}


def class_hamiltonicity(label: ClassLabel | str, n: int) -> str:
    """``"Hamiltonian"``, ``"NonHamiltonian"`` or ``"Unknown"`` for a class."""
    name = label.label if isinstance(label, ClassLabel) else label
    check_admissible(name, n)
    if name == "Complete":
        return "Hamiltonian" if n >= 3 else "NonHamiltonian"
    if name == "C1":
        return "Hamiltonian" if n == 8 else "NonHamiltonian"
    if name in _HAMILTONIAN:
        return "Hamiltonian"
    if name in _NON_HAMILTONIAN:
        return "NonHamiltonian"
    return "Unknown"
