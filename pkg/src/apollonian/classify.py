"""Neat, fat and slim paths of a RAN clique-tree and the C0..C8 partition."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Any

from .cliquetree import CliqueTree, build_clique_tree, tree_degree_profile
from .graph import Graph, GraphError, is_complete, simplicial_vertices
from .ran import is_ran

__all__ = [
    "LABELS",
    "ClassInvariantError",
    "ClassLabel",
    "NeatPath",
    "NotRANError",
    "check_admissible",
    "class_cardinality_checks",
    "classify",
    "neat_paths",
    "regular_degree",
    "triple_intersection_report",
]

LABELS = ("Complete", "C0", "C1", "C2", "C3", "C4", "C5", "C6", "C7", "C8")


class NotRANError(GraphError):
    pass


class ClassInvariantError(AssertionError):
    """A graph violates a count constraint of the class it was put in."""


@dataclass(frozen=True)
class NeatPath:
    qi: int
    qj: int
    internal: tuple[int, ...]
    kind: str  # "fat" or "slim"
    endpoint_intersection: int

    @property
    def p(self) -> int:
        return len(self.internal)

    @property
    def nodes(self) -> tuple[int, ...]:
        return (self.qi, *self.internal, self.qj)

    def to_dict(self) -> dict[str, Any]:
        return {
            "qi": self.qi,
            "qj": self.qj,
            "internal": list(self.internal),
            "kind": self.kind,
            "endpoint_intersection": self.endpoint_intersection,
        }


@dataclass(frozen=True)
class ClassLabel:
    label: str
    evidence: dict[str, Any] = field(default_factory=dict)

    def __post_init__(self):
        if self.label not in LABELS:
            raise ValueError(f"unknown class label {self.label!r}")

    def __str__(self) -> str:
        return self.label


def neat_paths(t: CliqueTree) -> list[NeatPath]:
    """All neat paths, one per unordered pair of degree-4 nodes that has one."""
    deg4 = [i for i in range(len(t.nodes)) if t.degree(i) == 4]
    out = []
    for qi, qj in combinations(deg4, 2):
        internal = tuple(t.path(qi, qj)[1:-1])
        if any(t.degree(k) > 3 for k in internal):
            continue
        kind = "fat" if all(t.degree(k) == 3 for k in internal) else "slim"
        out.append(NeatPath(qi, qj, internal, kind, len(t.nodes[qi] & t.nodes[qj])))
    return out


def regular_degree(t: CliqueTree) -> int | None:
    """``k`` if every non-leaf node has degree ``k``, else ``None``."""
    inner = {t.degree(i) for i in range(len(t.nodes)) if t.degree(i) > 1}
    return inner.pop() if len(inner) == 1 else None


def _c7_witness(t: CliqueTree, path: NeatPath) -> dict[str, Any] | None:
    inter, p = path.endpoint_intersection, path.p
    if inter == 2 and p >= 2:
        return {"case": "a", "path": path.to_dict(), "cliques": []}
    if inter not in (0, 1):
        return None
    need, min_p = (1, 3) if inter == 1 else (2, 4)
    if p < min_p:
        return None
    union = t.nodes[path.qi] | t.nodes[path.qj]
    on_path = set(path.internal)
    inside = [
        {"node": k, "on_path": k in on_path}
        for k in range(len(t.nodes))
        if t.degree(k) == 3 and t.nodes[k] < union
    ]
    if len(inside) < need:
        return None
    return {"case": "b" if inter == 1 else "c", "path": path.to_dict(), "cliques": inside}


def classify(g: Graph, tree: CliqueTree | None = None) -> ClassLabel:
    """Place a RAN in exactly one of Complete, C0, ..., C8.

    Tests run in a fixed order, so that overlapping definitions (a 4-regular
    tree also has fat paths) resolve to the first matching class.
    """
    if not is_ran(g):
        raise NotRANError(f"{g!r} is not a RAN")
    n = g.n
    si = len(simplicial_vertices(g))
    base: dict[str, Any] = {"n": n, "si": si}
    if is_complete(g):
        return ClassLabel("Complete", base)
    if n == 5:
        return ClassLabel("C0", base)
    t = tree if tree is not None else build_clique_tree(g)
    profile = tree_degree_profile(t)
    base["degree4"] = profile.degree4
    base["tree_degrees"] = profile.counts
    k = regular_degree(t)
    if k == 4:
        return ClassLabel("C1", {**base, "ell": (n - 8) // 3})
    if k == 3:
        return ClassLabel("C2", {**base, "ell": (n - 7) // 2})
    if k == 2:
        return ClassLabel("C3", base)
    if not profile.degree4:
        return ClassLabel("C4", base)
    if len(profile.degree4) == 1:
        return ClassLabel("C5", base)
    paths = neat_paths(t)
    fat = [pth for pth in paths if pth.kind == "fat"]
    if fat:
        shortest = min(fat, key=lambda pth: (pth.p, pth.qi, pth.qj))
        return ClassLabel("C6", {**base, "witness": shortest.to_dict()})
    for pth in paths:
        w = _c7_witness(t, pth)
        if w is not None:
            return ClassLabel("C7", {**base, "witness": w})
    return ClassLabel("C8", {**base, "neat_paths": [pth.to_dict() for pth in paths]})


def check_admissible(label: str, n: int) -> None:
    """Raise ``ValueError`` when no RAN of class ``label`` has ``n`` vertices."""
    ok = {
        "Complete": 1 <= n <= 4,
        "C0": n == 5,
        "C1": n >= 8 and n % 3 == 2,
        "C2": n >= 7 and n % 2 == 1,
        "C3": n >= 6,
        "C4": n >= 8,
        "C5": n >= 9,
        "C6": n >= 12,
        "C7": n >= 13,
        "C8": n >= 12,
    }
    if label not in ok:
        raise ValueError(f"unknown class label {label!r}")
    if not ok[label]:
        raise ValueError(f"no RAN in {label} has n={n} vertices")


def class_cardinality_checks(label: ClassLabel, g: Graph) -> dict[str, bool]:
    """Check vertex and simplicial-vertex counts implied by the class.

    Raises :class:`ClassInvariantError` naming the failed constraint; that
    can only happen through a bug, since the counts follow from the tree
    shape.
    """
    n = g.n
    si = len(simplicial_vertices(g))
    name = label.label
    checks: dict[str, bool] = {}
    if name == "Complete":
        checks["n <= 4"] = n <= 4
    elif name == "C0":
        checks["n == 5"] = n == 5
        checks["|SI| == 2"] = si == 2
    elif name == "C1":
        ell = (n - 8) // 3
        checks["n == 8 + 3l"] = n >= 8 and (n - 8) % 3 == 0
        checks["|SI| == 4 + 2l"] = si == 4 + 2 * ell
    elif name == "C2":
        ell = (n - 7) // 2
        checks["n == 7 + 2l"] = n >= 7 and (n - 7) % 2 == 0
        checks["|SI| == 3 + l == floor(n/2)"] = si == 3 + ell == n // 2
    elif name == "C3":
        checks["n >= 6"] = n >= 6
        checks["|SI| == 2"] = si == 2
    else:
        n_min, si_min = {"C4": (8, 3), "C5": (9, 4), "C6": (12, 6), "C7": (13, 6), "C8": (12, 6)}[name]
        checks[f"n >= {n_min}"] = n >= n_min
        checks[f"|SI| >= {si_min}"] = si >= si_min
    failed = [k for k, v in checks.items() if not v]
    if failed:
        raise ClassInvariantError(f"{g!r} labelled {name} violates {', '.join(failed)} (n={n}, |SI|={si})")
    return checks


def triple_intersection_report(t: CliqueTree) -> dict[str, Any]:
    """Pairwise and triple intersection sizes among degree-4 node cliques.

    Empty unless the tree has at least three degree-4 nodes.
    """
    deg4 = [i for i in range(len(t.nodes)) if t.degree(i) == 4]
    if len(deg4) < 3:
        return {}
    pairs = {f"{i},{j}": len(t.nodes[i] & t.nodes[j]) for i, j in combinations(deg4, 2)}
    triples = {
        f"{i},{j},{k}": len(t.nodes[i] & t.nodes[j] & t.nodes[k]) for i, j, k in combinations(deg4, 3)
    }
    return {"degree4": deg4, "pairwise": pairs, "triple": triples}
