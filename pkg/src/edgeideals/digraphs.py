"""Vertex-weighted oriented graphs and their edge ideals.

A weighted oriented graph is a simple digraph with a positive integer
weight per vertex and no bidirected edges.  The edge ideal has one
generator tail·head^{w(head)} per directed edge.  This module also
classifies graphs into the formula-bearing classes (rooted forests,
oriented cycles, unicyclic graphs with away-oriented attached trees),
checks the weight hypotheses those formulas need, and generates seeded
random instances for verification campaigns.
"""

from __future__ import annotations

import json
import random
import warnings
from dataclasses import dataclass
from enum import Enum
from typing import Iterable

from .monomials import Monomial, MonomialIdeal, Variable, make_ideal


class GraphClassTag(Enum):
    ROOTED_FOREST = "RootedForest"
    ORIENTED_CYCLE = "OrientedCycle"
    UNICYCLIC_ATTACHED = "UnicyclicAttached"
    UNICYCLIC_GENERAL = "UnicyclicGeneral"
    OTHER = "Other"


@dataclass(frozen=True)
class GraphClass:
    """Classification tag plus a class-specific witness.

    witness: roots (forest), the directed cycle's vertex sequence (cycle
    and attached classes), or the per-component tag list (general/other).
    """

    tag: GraphClassTag
    witness: tuple

    def __str__(self) -> str:
        return self.tag.value


@dataclass(frozen=True)
class HypothesisReport:
    """Vertices violating the weight hypothesis of the classified class.

    Rule: weight >= 2 at every vertex of degree != 1 (forests and
    unicyclic classes) or at every vertex (cycles).  Sources carry the
    conventional weight 1 and are exempt, since their weight never enters
    the edge ideal.
    """

    satisfied: bool
    violations: tuple[str, ...]
    rule: str


class WeightedDigraph:
    """Immutable vertex-weighted oriented graph.

    ``vertices`` is an ordered tuple of (name, weight); ``edges`` an
    ordered tuple of (tail, head) pairs.  No self-loops, no repeated
    edges, at most one edge per unordered vertex pair.
    """

    __slots__ = ("vertices", "edges", "_index", "_out", "_in")

    def __init__(self, vertices: Iterable[tuple[str, int]], edges: Iterable[tuple[str, str]]):
        self.vertices = tuple((str(n), int(w)) for n, w in vertices)
        self.edges = tuple((str(t), str(h)) for t, h in edges)
        names = [n for n, _ in self.vertices]
        if len(set(names)) != len(names):
            raise ValueError("repeated vertex name")
        for n, w in self.vertices:
            if w < 1:
                raise ValueError(f"vertex {n} has weight {w}; weights must be >= 1")
        self._index = {n: i for i, n in enumerate(names)}
        seen_pairs: set[frozenset[str]] = set()
        self._out: dict[str, list[str]] = {n: [] for n in names}
        self._in: dict[str, list[str]] = {n: [] for n in names}
        for t, h in self.edges:
            if t not in self._index or h not in self._index:
                raise ValueError(f"edge ({t}, {h}) uses an undeclared vertex")
            if t == h:
                raise ValueError(f"self-loop at {t}")
            pair = frozenset((t, h))
            if pair in seen_pairs:
                raise ValueError(f"repeated or bidirected edge between {t} and {h}")
            seen_pairs.add(pair)
            self._out[t].append(h)
            self._in[h].append(t)

    # -- basic accessors ---------------------------------------------------

    def vertex_names(self) -> tuple[str, ...]:
        return tuple(n for n, _ in self.vertices)

    def weight(self, v: str) -> int:
        return self.vertices[self._require(v)][1]

    def _require(self, v: str) -> int:
        if v not in self._index:
            raise ValueError(f"unknown vertex {v!r}")
        return self._index[v]

    def out_neighbors(self, v: str) -> tuple[str, ...]:
        self._require(v)
        return tuple(self._out[v])

    def in_neighbors(self, v: str) -> tuple[str, ...]:
        self._require(v)
        return tuple(self._in[v])

    def degree(self, v: str) -> int:
        """Degree in the underlying undirected graph."""
        self._require(v)
        return len(self._out[v]) + len(self._in[v])

    def is_source(self, v: str) -> bool:
        """In-degree 0 with at least one out-edge."""
        self._require(v)
        return not self._in[v] and bool(self._out[v])

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, WeightedDigraph)
            and self.vertices == other.vertices
            and self.edges == other.edges
        )

    def __hash__(self) -> int:
        return hash((self.vertices, self.edges))

    def __repr__(self) -> str:
        return f"WeightedDigraph({list(self.vertices)}, {list(self.edges)})"

    # -- serialization -----------------------------------------------------

    def to_json_dict(self) -> dict:
        return {
            "vertices": [{"name": n, "weight": w} for n, w in self.vertices],
            "edges": [[t, h] for t, h in self.edges],
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "WeightedDigraph":
        try:
            vertices = [(v["name"], v["weight"]) for v in data["vertices"]]
            edges = [(e[0], e[1]) for e in data["edges"]]
        except (KeyError, TypeError, IndexError) as exc:
            raise ValueError(f"malformed graph JSON: {exc}") from exc
        return cls(vertices, edges)

    @classmethod
    def from_json(cls, text: str) -> "WeightedDigraph":
        return cls.from_json_dict(json.loads(text))


def normalize_source_weights(D: WeightedDigraph) -> WeightedDigraph:
    """Set every source's weight to 1 (its weight never enters the edge ideal).

    A source has in-degree 0 and at least one out-edge; isolated vertices
    are left alone.  Idempotent.
    """
    vertices = tuple((n, 1 if D.is_source(n) else w) for n, w in D.vertices)
    return WeightedDigraph(vertices, D.edges)


def edge_ideal(D: WeightedDigraph) -> MonomialIdeal:
    """One generator tail·head^{w(head)} per edge, over ambient V(D).

    Distinct edges of an oriented graph always give non-dividing
    monomials, so the generator count equals the edge count; this is
    asserted.  An empty edge set yields the zero ideal with a warning.
    """
    ambient = tuple(Variable(n) for n in D.vertex_names())
    if not D.edges:
        warnings.warn("graph has no edges; edge ideal is the zero ideal", stacklevel=2)
        return MonomialIdeal(ambient, ())
    gens = []
    for t, h in D.edges:
        gens.append(Monomial({Variable(t): 1}) * Monomial({Variable(h): D.weight(h)}))
    ideal = make_ideal(gens, ambient)
    if len(ideal.generators) != len(D.edges):
        raise AssertionError("edge generators collapsed under divisibility")
    return ideal


def components(D: WeightedDigraph) -> list[WeightedDigraph]:
    """Connected components of the underlying graph, order inherited."""
    names = D.vertex_names()
    parent = {n: n for n in names}

    def find(a: str) -> str:
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for t, h in D.edges:
        ra, rb = find(t), find(h)
        if ra != rb:
            parent[ra] = rb
    groups: dict[str, list[str]] = {}
    for n in names:
        groups.setdefault(find(n), []).append(n)
    out = []
    for root in sorted(groups, key=lambda r: D._index[groups[r][0]]):
        members = set(groups[root])
        verts = [(n, w) for n, w in D.vertices if n in members]
        edges = [(t, h) for t, h in D.edges if t in members]
        out.append(WeightedDigraph(verts, edges))
    return out


def delete_edge(D: WeightedDigraph, e: tuple[str, str]) -> WeightedDigraph:
    """Remove one directed edge, keeping all vertices."""
    e = (str(e[0]), str(e[1]))
    if e not in D.edges:
        raise ValueError(f"edge {e} not in the graph")
    return WeightedDigraph(D.vertices, tuple(x for x in D.edges if x != e))


def delete_vertex(D: WeightedDigraph, v: str) -> WeightedDigraph:
    """Remove a vertex and all incident edges (induced subgraph)."""
    D._require(v)
    return WeightedDigraph(
        tuple(x for x in D.vertices if x[0] != v),
        tuple(e for e in D.edges if v not in e),
    )


def _component_status(comp: WeightedDigraph) -> tuple[str, tuple]:
    """('rooted_tree', (root,)) | ('oriented_cycle'|'unicyclic_attached', cycle) | ('other', ())."""
    n_v, n_e = len(comp.vertices), len(comp.edges)
    names = comp.vertex_names()
    if n_e == n_v - 1:
        if all(len(comp.in_neighbors(n)) <= 1 for n in names):
            roots = [n for n in names if not comp.in_neighbors(n)]
            return ("rooted_tree", (roots[0],))
        return ("other", ())
    if n_e == n_v:
        if all(len(comp.in_neighbors(n)) == 1 for n in names):
            # Every vertex has a unique predecessor; walking back finds the cycle.
            walk = [names[0]]
            seen = {names[0]: 0}
            while True:
                prev = comp.in_neighbors(walk[-1])[0]
                if prev in seen:
                    cycle = tuple(reversed(walk[seen[prev]:]))
                    break
                seen[prev] = len(walk)
                walk.append(prev)
            # Rotate so the cycle starts at its first-declared vertex.
            start = min(range(len(cycle)), key=lambda i: comp._index[cycle[i]])
            cycle = cycle[start:] + cycle[:start]
            if len(cycle) == n_v:
                return ("oriented_cycle", cycle)
            return ("unicyclic_attached", cycle)
        return ("other", ())
    return ("other", ())


def classify(D: WeightedDigraph) -> GraphClass:
    """Classify into the formula-bearing graph classes.

    RootedForest: every component a tree with all edges oriented away
    from one root.  OrientedCycle: a single directed cycle.
    UnicyclicAttached: connected, one directed cycle plus rooted trees
    oriented away from it.  UnicyclicGeneral: several components, each a
    rooted tree or an attached-type unicyclic component, at least one
    cyclic.  Everything else is Other.
    """
    comps = components(D)
    if not comps:
        return GraphClass(GraphClassTag.OTHER, ())
    statuses = [_component_status(c) for c in comps]
    kinds = [s[0] for s in statuses]
    if all(k == "rooted_tree" for k in kinds):
        return GraphClass(GraphClassTag.ROOTED_FOREST, tuple(s[1][0] for s in statuses))
    if len(comps) == 1:
        kind, witness = statuses[0]
        if kind == "oriented_cycle":
            return GraphClass(GraphClassTag.ORIENTED_CYCLE, witness)
        if kind == "unicyclic_attached":
            return GraphClass(GraphClassTag.UNICYCLIC_ATTACHED, witness)
        return GraphClass(GraphClassTag.OTHER, tuple(kinds))
    if all(k in ("rooted_tree", "oriented_cycle", "unicyclic_attached") for k in kinds):
        return GraphClass(GraphClassTag.UNICYCLIC_GENERAL, tuple(kinds))
    return GraphClass(GraphClassTag.OTHER, tuple(kinds))


def check_hypotheses(D: WeightedDigraph, cls: GraphClass) -> HypothesisReport:
    """List the vertices violating the class's weight hypothesis.

    Forests and unicyclic classes require weight >= 2 wherever the
    (underlying) degree differs from 1; oriented cycles require weight
    >= 2 everywhere.  Sources are exempt: their weight is conventionally
    1 and never appears in the edge ideal.
    """
    if cls.tag is GraphClassTag.ORIENTED_CYCLE:
        rule = "weight >= 2 at every vertex"
        bad = [n for n, w in D.vertices if w < 2]
    else:
        rule = "weight >= 2 at every non-source vertex of degree != 1"
        bad = [
            n
            for n, w in D.vertices
            if w < 2 and D.degree(n) != 1 and not D.is_source(n)
        ]
    return HypothesisReport(satisfied=not bad, violations=tuple(bad), rule=rule)


# -- seeded random instances ----------------------------------------------


def _draw_weights(D: WeightedDigraph, rng: random.Random, lo: int, hi: int) -> WeightedDigraph:
    """Non-leaves draw from [lo, hi]; leaves from [1, hi] (degree-1 vertices are unconstrained)."""
    vertices = []
    for n, _ in D.vertices:
        if D.degree(n) == 1:
            vertices.append((n, rng.randint(1, hi)))
        else:
            vertices.append((n, rng.randint(lo, hi)))
    return WeightedDigraph(vertices, D.edges)


def _random_forest_edges(n: int, rng: random.Random, prefix: str = "v") -> tuple[list[str], list[tuple[str, str]]]:
    names = [f"{prefix}{i}" for i in range(1, n + 1)]
    edges = [(names[0], names[1])]
    for k in range(2, n):
        if rng.random() < 0.15:
            continue  # new root: this vertex starts another tree
        parent = names[rng.randrange(k)]
        edges.append((parent, names[k]))
    return names, edges


def random_instance(
    class_tag: GraphClassTag | str,
    *,
    cycle_len: int = 0,
    extra_vertices: int = 0,
    weight_range: tuple[int, int] = (2, 4),
    seed: int = 0,
) -> WeightedDigraph:
    """Deterministic random graph of the requested class.

    ``extra_vertices`` is the attached-tree vertex count for cyclic
    classes and the total vertex count for forests (``cycle_len`` must
    then be 0).  The result is normalized, is asserted to classify as
    requested, and (when the weight range starts at 2) to satisfy the
    weight hypotheses.
    """
    tag = GraphClassTag(class_tag) if not isinstance(class_tag, GraphClassTag) else class_tag
    lo, hi = weight_range
    if not (1 <= lo <= hi):
        raise ValueError(f"empty or invalid weight range {weight_range}")
    rng = random.Random(f"edgeideals:{tag.value}:{cycle_len}:{extra_vertices}:{lo}:{hi}:{seed}")

    if tag is GraphClassTag.ROOTED_FOREST:
        if cycle_len:
            raise ValueError("cycle_len must be 0 for a rooted forest")
        n = extra_vertices
        if n < 2:
            raise ValueError("a rooted forest instance needs at least 2 vertices")
        names, edges = _random_forest_edges(n, rng)
        D = WeightedDigraph([(nm, 1) for nm in names], edges)
    elif tag in (GraphClassTag.ORIENTED_CYCLE, GraphClassTag.UNICYCLIC_ATTACHED, GraphClassTag.UNICYCLIC_GENERAL):
        if cycle_len < 3:
            raise ValueError(f"cycle_len must be >= 3, got {cycle_len}")
        cyc = [f"x{i}" for i in range(1, cycle_len + 1)]
        edges = [(cyc[i], cyc[(i + 1) % cycle_len]) for i in range(cycle_len)]
        if tag is GraphClassTag.ORIENTED_CYCLE:
            if extra_vertices:
                raise ValueError("an oriented cycle takes no extra vertices")
            D = WeightedDigraph([(nm, 1) for nm in cyc], edges)
        elif tag is GraphClassTag.UNICYCLIC_ATTACHED:
            if extra_vertices < 1:
                raise ValueError(
                    "an attached unicyclic instance needs >= 1 attached vertex "
                    "(0 degenerates to a bare oriented cycle)"
                )
            hosts = list(cyc)
            for j in range(1, extra_vertices + 1):
                y = f"y{j}"
                edges.append((hosts[rng.randrange(len(hosts))], y))
                hosts.append(y)
            D = WeightedDigraph([(nm, 1) for nm in hosts], edges)
        else:
            attach = extra_vertices // 2
            hosts = list(cyc)
            for j in range(1, attach + 1):
                y = f"y{j}"
                edges.append((hosts[rng.randrange(len(hosts))], y))
                hosts.append(y)
            forest_n = max(2, extra_vertices - attach + 2)
            fnames, fedges = _random_forest_edges(forest_n, rng, prefix="z")
            D = WeightedDigraph(
                [(nm, 1) for nm in hosts + fnames], edges + fedges
            )
    else:
        raise ValueError(f"cannot generate instances of class {tag.value}")

    D = normalize_source_weights(_draw_weights(D, rng, lo, hi))
    got = classify(D)
    if got.tag is not tag:
        raise AssertionError(f"generator produced {got.tag.value}, wanted {tag.value}")
    if lo >= 2:
        report = check_hypotheses(D, got)
        if not report.satisfied:
            raise AssertionError(f"generated instance violates hypotheses at {report.violations}")
    return D
