"""Seeded instance sampling and the C8 toughness experiment.

Every sampled graph is a pure function of ``(n, seed)``: the seed picks the
generator (``seed % 3``) and then drives it.  An experiment CSV can therefore
be regenerated, row by row, from its ``n`` and ``seed`` columns.
"""

from __future__ import annotations

import csv
import io
import random
import time
from collections import Counter
from dataclasses import asdict, dataclass
from fractions import Fraction
from typing import Any, Iterable, Iterator

from .classify import ClassLabel, classify, triple_intersection_report
from .cliquetree import build_clique_tree
from .fixtures import fixture
from .graph import Graph
from .hamilton import HAMILTON_CAP, hamiltonian_cycle
from .ran import generate_ran, random_hub_shape, random_tree_shape, realize_ran_from_shape
from .toughness import TOUGHNESS_CAP, format_rational, toughness_exact

__all__ = [
    "CSV_COLUMNS",
    "GENERATORS",
    "ExperimentRecord",
    "graph_signature",
    "make_instance",
    "records_to_csv",
    "run_c8_experiment",
    "sample_class",
    "summarize",
]

GENERATORS = ("ran", "shape", "hubs")


def make_instance(n: int, seed: int) -> Graph | None:
    """The graph sampled for ``(n, seed)``, or ``None`` if the generator declines.

    ``ran`` grows a random Apollonian network by uniform face choice;
    ``shape`` realises a uniformly grown clique-tree shape; ``hubs`` realises
    a shape with two or three degree-4 nodes joined through slim paths, which
    is where classes C7 and C8 live.
    """
    method = GENERATORS[seed % len(GENERATORS)]
    if method == "ran":
        g, _ = generate_ran(n, seed)
        return g
    rng = random.Random(seed)
    if method == "shape":
        shape = random_tree_shape(n - 3, rng)
    else:
        shape = random_hub_shape(n - 3, rng)
        if shape is None:
            return None
    g = realize_ran_from_shape(shape, rng.randrange(1 << 32))
    return Graph(g.n, g.adj, name=f"{method}-n{n}-s{seed}")


def graph_signature(g: Graph, rounds: int = 4) -> tuple:
    """Isomorphism-invariant colour-refinement signature.

    Equal graphs always share a signature; distinct signatures prove
    non-isomorphism.  Used to keep sampled instances pairwise distinct.
    """
    colour = [len(a) for a in g.adj]
    for _ in range(rounds):
        keys = [(colour[v], tuple(sorted(colour[w] for w in g.adj[v]))) for v in range(g.n)]
        palette = {k: i for i, k in enumerate(sorted(set(keys)))}
        colour = [palette[k] for k in keys]
        history = tuple(sorted(Counter(keys).items()))
    return (g.n, g.m, history if g.n else ())


def sample_class(
    label: str,
    count: int,
    n_min: int,
    n_max: int,
    seed: int = 0,
    max_trials: int = 200_000,
) -> list[tuple[int, int, Graph, ClassLabel]]:
    """Up to ``count`` pairwise non-isomorphic instances of class ``label``.

    Trial ``i`` uses ``n = n_min + i % (n_max - n_min + 1)`` and seed
    ``seed + i``.  Returns ``(n, seed, graph, class label)`` tuples.
    """
    out = []
    seen = set()
    width = n_max - n_min + 1
    for i in range(max_trials):
        if len(out) >= count:
            break
        n, s = n_min + i % width, seed + i
        g = make_instance(n, s)
        if g is None:
            continue
        lab = classify(g)
        if lab.label != label:
            continue
        sig = graph_signature(g)
        if sig in seen:
            continue
        seen.add(sig)
        out.append((n, s, g, lab))
    return out


CSV_COLUMNS = (
    "source",
    "seed",
    "n",
    "label",
    "tau",
    "hamiltonian",
    "degree4",
    "triple_intersection",
)


@dataclass
class ExperimentRecord:
    source: str
    seed: int | None
    n: int
    label: str
    tau: str
    hamiltonian: bool | None
    degree4: int
    triple_intersection: int | None
    runtime_ms: float | None = None

    def row(self, timing: bool = False) -> list[str]:
        def cell(x: Any) -> str:
            if x is None:
                return ""
            if isinstance(x, bool):
                return "true" if x else "false"
            return str(x)

        values = [cell(getattr(self, c)) for c in CSV_COLUMNS]
        if timing:
            values.append(f"{self.runtime_ms:.1f}" if self.runtime_ms is not None else "")
        return values

    def to_dict(self) -> dict[str, Any]:
        return asdict(self)


def analyse_c8(g: Graph, source: str, seed: int | None, tough_cap: int, ham_cap: int) -> ExperimentRecord:
    start = time.perf_counter()
    lab = classify(g)
    t = build_clique_tree(g)
    report = triple_intersection_report(t)
    triple = max(report["triple"].values()) if report else None
    tau = format_rational(toughness_exact(g, tough_cap).value) if g.n <= tough_cap else "skipped"
    ham = hamiltonian_cycle(g, ham_cap).hamiltonian if g.n <= ham_cap else None
    return ExperimentRecord(
        source=source,
        seed=seed,
        n=g.n,
        label=lab.label,
        tau=tau,
        hamiltonian=ham,
        degree4=len(lab.evidence.get("degree4", [])),
        triple_intersection=triple,
        runtime_ms=(time.perf_counter() - start) * 1000,
    )


def run_c8_experiment(
    n_max: int = 16,
    samples: int = 100,
    seed: int = 0,
    n_min: int = 12,
    include_fixtures: Iterable[str] = (),
    tough_cap: int = TOUGHNESS_CAP,
    ham_cap: int = HAMILTON_CAP,
    max_trials: int = 200_000,
) -> Iterator[ExperimentRecord]:
    """Exact toughness and Hamiltonicity of sampled C8 graphs.

    Named fixtures come first, then ``samples`` distinct C8 instances with
    ``n_min <= n <= n_max``.  The conjecture that every C8 graph has
    toughness 1 is only observed here, never assumed.
    """
    if n_max > tough_cap:
        raise ValueError(f"n_max={n_max} exceeds the toughness cap {tough_cap}")
    for name in include_fixtures:
        g = fixture(name)
        yield analyse_c8(g, name, None, max(tough_cap, g.n), max(ham_cap, g.n))
    if samples <= 0:
        return
    for n, s, g, _ in sample_class("C8", samples, max(n_min, 12), n_max, seed, max_trials):
        yield analyse_c8(g, GENERATORS[s % len(GENERATORS)], s, tough_cap, ham_cap)


def records_to_csv(records: Iterable[ExperimentRecord], timing: bool = False) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(list(CSV_COLUMNS) + (["runtime_ms"] if timing else []))
    for r in records:
        w.writerow(r.row(timing))
    return buf.getvalue()


def summarize(records: list[ExperimentRecord]) -> dict[str, Any]:
    """Conjecture status over the sample; counterexamples are listed in full."""
    measured = [r for r in records if r.tau != "skipped"]
    counter = [r for r in measured if Fraction(r.tau) != 1]
    by_triple: Counter = Counter()
    for r in records:
        by_triple[(r.triple_intersection, r.hamiltonian)] += 1
    return {
        "records": len(records),
        "measured": len(measured),
        "tau_counts": dict(sorted(Counter(r.tau for r in measured).items())),
        "hamiltonian": sum(1 for r in records if r.hamiltonian is True),
        "non_hamiltonian": sum(1 for r in records if r.hamiltonian is False),
        "triple_vs_hamiltonian": [
            {"triple_intersection": k[0], "hamiltonian": k[1], "count": v}
            for k, v in sorted(by_triple.items(), key=lambda kv: (str(kv[0][0]), str(kv[0][1])))
        ],
        "conjecture_holds_on_sample": not counter,
        "counterexamples": [
            {"source": r.source, "seed": r.seed, "n": r.n, "tau": r.tau} for r in counter
        ],
    }
