"""Exact toughness by exhaustive separator search, and the per-class bounds.

Toughness values are :class:`fractions.Fraction` or ``math.inf`` (complete
graphs).  Fractions compare exactly against ``math.inf``, so no comparison in
this module ever goes through a float approximation of a rational.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Union

import numpy as np

from .classify import ClassLabel, check_admissible, classify
from .cliquetree import build_clique_tree
from .graph import (
    Graph,
    NotConnectedError,
    SizeCapError,
    connected_components,
    is_complete,
    is_connected,
    simplicial_vertices,
)

__all__ = [
    "INF",
    "TOUGHNESS_CAP",
    "TheoremViolation",
    "ToughnessInterval",
    "ToughnessResult",
    "class_toughness",
    "format_rational",
    "parse_rational",
    "proof_separator",
    "separator_ratio",
    "simplicial_removal_monotonicity_check",
    "toughness_exact",
    "verify_class_toughness",
]

INF = math.inf
TOUGHNESS_CAP = 20
_CHUNK = 1 << 15

Tough = Union[Fraction, float]


class TheoremViolation(AssertionError):
    """An exhaustively computed value contradicts a proved statement."""


def format_rational(x: Tough) -> str:
    if x == INF:
        return "inf"
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def parse_rational(text: str) -> Tough:
    return INF if text.strip() == "inf" else Fraction(text)


@dataclass(frozen=True)
class ToughnessResult:
    value: Tough
    witness: frozenset[int] | None
    omega: int | None

    def to_dict(self) -> dict[str, Any]:
        out: dict[str, Any] = {"tau": format_rational(self.value)}
        if self.witness is not None:
            out["witness"] = sorted(self.witness)
            out["omega"] = self.omega
        return out


def separator_ratio(g: Graph, s) -> tuple[int, int]:
    """``(|S|, omega(G - S))`` for a vertex set ``S``."""
    s = frozenset(s)
    return len(s), len(connected_components(g, s)) if len(s) < g.n else 0


def _component_counts(masks: np.ndarray, n: int, edges: list[tuple[int, int]]) -> np.ndarray:
    # Min-label propagation over the surviving vertices of every subset at
    # once; row v holds vertex v's label for each subset (n for removed ones).
    removed = ((masks[None, :] >> np.arange(n, dtype=np.int64)[:, None]) & 1).astype(bool)
    fill = np.where(removed, n, 0).astype(np.int8)
    ident = np.arange(n, dtype=np.int8)[:, None]
    lab = np.maximum(ident, fill)
    sweep = edges + edges[::-1]
    while True:
        before = lab.copy()
        for u, v in sweep:
            m = np.minimum(lab[u], lab[v])
            np.maximum(m, fill[u], out=lab[u])
            np.maximum(m, fill[v], out=lab[v])
        if np.array_equal(before, lab):
            break
    return (lab == ident).sum(axis=0)


def _initial_bound(g: Graph) -> Fraction:
    # Any disconnecting set gives an upper bound; neighbourhoods always exist
    # for a non-complete connected graph.
    candidates = [frozenset(g.adj[v]) for v in range(g.n) if len(g.adj[v]) < g.n - 1]
    candidates.append(frozenset(range(g.n)) - simplicial_vertices(g))
    best = None
    for s in candidates:
        size, omega = separator_ratio(g, s)
        if omega >= 2 and (best is None or Fraction(size, omega) < best):
            best = Fraction(size, omega)
    assert best is not None
    return best


def toughness_exact(g: Graph, cap: int = TOUGHNESS_CAP) -> ToughnessResult:
    """Minimum of ``|S| / omega(G - S)`` over every disconnecting ``S``.

    All ``2**n`` subsets are scanned in chunks (sizes that cannot beat a
    known separator are skipped).  Among minimisers the witness has the
    fewest vertices, then the lexicographically smallest sorted vertex list.
    """
    n = g.n
    if n > cap:
        raise SizeCapError(f"toughness search on n={n} exceeds cap {cap}")
    if not is_connected(g):
        raise NotConnectedError("toughness is defined here for connected graphs only")
    if is_complete(g):
        return ToughnessResult(INF, None, None)
    bound = _initial_bound(g)
    # |S| / omega >= |S| / (n - |S|), so larger sets cannot beat the bound.
    smax = min(n - 2, (bound.numerator * n) // (bound.numerator + bound.denominator))
    edges = g.edges()
    best: Fraction | None = None
    best_size = None
    tied: list[int] = []
    for lo in range(0, 1 << n, _CHUNK):
        masks = np.arange(lo, min(lo + _CHUNK, 1 << n), dtype=np.int64)
        sizes = np.bitwise_count(masks)
        keep = (sizes >= 1) & (sizes <= smax)
        masks, sizes = masks[keep], sizes[keep].astype(np.int64)
        if not len(masks):
            continue
        omega = _component_counts(masks, n, edges)
        split = omega >= 2
        masks, sizes, omega = masks[split], sizes[split], omega[split].astype(np.int64)
        for w in np.unique(omega):
            s = int(sizes[omega == w].min())
            r = Fraction(s, int(w))
            if best is None or r < best or (r == best and s < best_size):
                best, best_size, tied = r, s, []
            if r == best and s == best_size:
                hit = (sizes == s) & (omega == w)
                tied.extend(int(x) for x in masks[hit])
    assert best is not None and best <= bound
    witness = min((tuple(v for v in range(n) if m >> v & 1) for m in tied))
    return ToughnessResult(best, frozenset(witness), best_size * best.denominator // best.numerator)


@dataclass(frozen=True)
class ToughnessInterval:
    lower: Tough
    upper: Tough
    exact: bool
    lower_open: bool = False
    upper_open: bool = False
    known: bool = True

    def contains(self, x: Tough) -> bool:
        if not self.known:
            return True
        above = x > self.lower if self.lower_open else x >= self.lower
        below = x < self.upper if self.upper_open else x <= self.upper
        return above and below

    def to_dict(self) -> dict[str, Any]:
        if not self.known:
            return {"known": False}
        return {
            "lower": format_rational(self.lower),
            "upper": format_rational(self.upper),
            "exact": self.exact,
            "lower_open": self.lower_open,
            "upper_open": self.upper_open,
        }


def class_toughness(label: ClassLabel | str, n: int) -> ToughnessInterval:
    """Toughness of a RAN in the given class with ``n`` vertices, as proved.

    C0, C1, C2 and C5 are exact; C3 and C4 are closed bounds; C6 and C7 only
    give ``tau < 1``; nothing is proved for C8.
    """
    name = label.label if isinstance(label, ClassLabel) else label
    check_admissible(name, n)
    F = Fraction
    if name == "Complete":
        return ToughnessInterval(INF, INF, True)
    if name in ("C0", "C1", "C2", "C5"):
        v = {"C0": F(3, 2), "C1": F(n + 4, 2 * n - 4), "C2": F(n + 1, n - 1), "C5": F(1)}[name]
        return ToughnessInterval(v, v, True)
    if name == "C3":
        low = F(n, n - 2) if n % 2 == 0 else F(n + 1, n - 1)
        return ToughnessInterval(low, F(3, 2), low == F(3, 2))
    if name == "C4":
        return ToughnessInterval(F(n + 2, n), F(4, 3), False)
    if name in ("C6", "C7"):
        return ToughnessInterval(F(0), F(1), False, lower_open=True, upper_open=True)
    return ToughnessInterval(F(0), INF, False, lower_open=True, upper_open=True, known=False)


def proof_separator(g: Graph, label: ClassLabel | None = None) -> tuple[frozenset[int], int] | None:
    """The separator the class's toughness argument removes, with its omega.

    C0: the three shared vertices; C1, C2: every non-simplicial vertex; C5:
    the degree-4 clique; C6: the cliques along a fat path (just the two
    endpoint cliques when they are adjacent); C7: the two endpoint cliques
    of the witness path.  Other classes have no such separator.
    """
    label = label or classify(g)
    name = label.label
    t = build_clique_tree(g) if name not in ("Complete", "C0") else None
    if name == "C0":
        s = frozenset(v for v in range(g.n) if len(g.adj[v]) == g.n - 1)
    elif name in ("C1", "C2"):
        s = frozenset(range(g.n)) - simplicial_vertices(g)
    elif name == "C5":
        assert t is not None
        s = t.nodes[label.evidence["degree4"][0]]
    elif name == "C6":
        assert t is not None
        fat = label.evidence["witness"]
        path = [fat["qi"], *fat["internal"], fat["qj"]]
        s = frozenset().union(*(t.nodes[k] for k in path))
    elif name == "C7":
        assert t is not None
        w = label.evidence["witness"]["path"]
        s = t.nodes[w["qi"]] | t.nodes[w["qj"]]
    else:
        return None
    return s, separator_ratio(g, s)[1]


def verify_class_toughness(g: Graph, cap: int = TOUGHNESS_CAP) -> dict[str, Any]:
    """Check the proved class value or bound against the exhaustive toughness.

    Raises :class:`TheoremViolation` on any mismatch.  C8 values are only
    recorded.
    """
    label = classify(g)
    interval = class_toughness(label, g.n)
    result = toughness_exact(g, cap)
    tau = result.value
    if interval.exact:
        ok = tau == interval.lower
    else:
        ok = interval.contains(tau)
    report = {
        "label": label.label,
        "n": g.n,
        "tau": format_rational(tau),
        "interval": interval.to_dict(),
        "asserted": interval.known,
        "ok": ok,
    }
    if not ok:
        raise TheoremViolation(f"{g!r} in {label.label}: tau={format_rational(tau)} outside {interval.to_dict()}")
    return report


def simplicial_removal_monotonicity_check(g: Graph, cap: int = TOUGHNESS_CAP) -> dict[str, Any]:
    """Removing simplicial vertices of a non-complete k-tree never lowers toughness."""
    if is_complete(g):
        raise ValueError("monotonicity check needs a non-complete graph")
    base = toughness_exact(g, cap).value
    si = sorted(simplicial_vertices(g))
    per_vertex = {}
    for v in si:
        h, _ = g.remove_vertices([v])
        per_vertex[v] = toughness_exact(h, cap).value
    rest, _ = g.remove_vertices(si)
    without_si = toughness_exact(rest, cap).value
    failed = [v for v, t in per_vertex.items() if t < base]
    if failed or without_si < base:
        raise TheoremViolation(
            f"{g!r}: tau={format_rational(base)} but removing {failed or 'SI'} lowers it"
        )
    return {
        "tau": format_rational(base),
        "per_vertex": {v: format_rational(t) for v, t in per_vertex.items()},
        "without_simplicial": format_rational(without_si),
        "ok": True,
    }
