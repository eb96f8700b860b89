"""Immutable multi-hypergraphs and their basic constructions.

A hypergraph is a vertex set together with a sequence of edges; every edge is
a set of at least two vertices.  Edges are identified by their position, so
two edges with the same vertex set are distinct (parallel) edges.

All functions here are pure: they build new values and never mutate.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass
from functools import cached_property
from typing import Any, Iterable, Mapping, Sequence

from .errors import ConstructionError, DomainError

Vertex = str
Edge = tuple[Vertex, ...]


@dataclass(frozen=True)
class Hypergraph:
    """A finite hypergraph with ordered, possibly parallel edges.

    ``vertices`` is sorted; every edge is a sorted tuple of vertices.  Use
    :func:`build` to construct validated instances.
    """

    vertices: tuple[Vertex, ...]
    edges: tuple[Edge, ...]

    @classmethod
    def _trusted(cls, vertices: Iterable[Vertex], edges: Iterable[Iterable[Vertex]]) -> Hypergraph:
        # Internal constructor: callers guarantee the invariants.
        obj = object.__new__(cls)
        object.__setattr__(obj, "vertices", tuple(sorted(vertices)))
        object.__setattr__(obj, "edges", tuple(tuple(sorted(e)) for e in edges))
        return obj

    def __len__(self) -> int:
        return len(self.vertices)

    def __repr__(self) -> str:
        es = ", ".join("".join(e) if all(len(v) == 1 for v in e) else "{" + ",".join(e) + "}" for e in self.edges)
        return f"Hypergraph(V={list(self.vertices)}, E=[{es}])"

    @property
    def order(self) -> int:
        return len(self.vertices)

    @property
    def size(self) -> int:
        return len(self.edges)

    @property
    def is_empty(self) -> bool:
        return not self.vertices

    @cached_property
    def index(self) -> dict[Vertex, int]:
        """Position of each vertex in ``vertices``."""
        return {v: i for i, v in enumerate(self.vertices)}

    @cached_property
    def masks(self) -> tuple[int, ...]:
        """Each edge as a bitmask over vertex positions."""
        idx = self.index
        return tuple(sum(1 << idx[v] for v in e) for e in self.edges)

    @cached_property
    def incidence(self) -> dict[Vertex, tuple[int, ...]]:
        """Edge ids incident to each vertex (the set E_H(v))."""
        inc: dict[Vertex, list[int]] = {v: [] for v in self.vertices}
        for eid, e in enumerate(self.edges):
            for v in e:
                inc[v].append(eid)
        return {v: tuple(ids) for v, ids in inc.items()}

    @cached_property
    def degrees(self) -> dict[Vertex, int]:
        return {v: len(ids) for v, ids in self.incidence.items()}

    @property
    def full_mask(self) -> int:
        return (1 << len(self.vertices)) - 1

    @property
    def min_degree(self) -> int:
        return min(self.degrees.values(), default=0)

    @property
    def max_degree(self) -> int:
        return max(self.degrees.values(), default=0)

    @property
    def degree_sum(self) -> int:
        return sum(len(e) for e in self.edges)

    @property
    def is_simple(self) -> bool:
        return len(set(self.edges)) == len(self.edges)

    def is_regular(self, r: int | None = None) -> bool:
        if self.is_empty:
            return False
        ds = set(self.degrees.values())
        return len(ds) == 1 and (r is None or ds == {r})

    def is_uniform(self, q: int) -> bool:
        return all(len(e) == q for e in self.edges)

    def vertices_of(self, mask: int) -> list[Vertex]:
        return [v for i, v in enumerate(self.vertices) if mask >> i & 1]

    def mask_of(self, vs: Iterable[Vertex]) -> int:
        idx = self.index
        m = 0
        for v in vs:
            m |= 1 << idx[v]
        return m


@dataclass(frozen=True)
class DegreeProfile:
    degrees: dict[Vertex, int]
    min_degree: int
    max_degree: int
    degree_sum: int


def build(vertex_ids: Iterable[Vertex], edge_incidences: Iterable[Iterable[Vertex]]) -> Hypergraph:
    """Build a validated hypergraph; edges keep their input order."""
    vs = list(vertex_ids)
    for v in vs:
        if not isinstance(v, str):
            raise ConstructionError(f"vertex identifiers must be strings, got {v!r}")
    if len(set(vs)) != len(vs):
        dup = sorted(v for v, c in Counter(vs).items() if c > 1)
        raise ConstructionError(f"duplicate vertex id(s): {dup}")
    vset = set(vs)
    edges = []
    for pos, inc in enumerate(edge_incidences):
        e = set(inc)
        if len(e) < 2:
            raise ConstructionError(f"edge {pos}: incidence cardinality < 2 ({sorted(e)})")
        unknown = e - vset
        if unknown:
            raise ConstructionError(f"edge {pos}: unknown vertex {sorted(unknown)}")
        edges.append(e)
    return Hypergraph._trusted(vs, edges)


def empty() -> Hypergraph:
    return Hypergraph._trusted((), ())


def degree(H: Hypergraph, v: Vertex) -> int:
    try:
        return H.degrees[v]
    except KeyError:
        raise DomainError(f"unknown vertex {v!r}") from None


def degree_profile(H: Hypergraph) -> DegreeProfile:
    return DegreeProfile(dict(H.degrees), H.min_degree, H.max_degree, H.degree_sum)


def multiplicity(H: Hypergraph, u: Vertex, v: Vertex) -> int:
    """Number of ordinary edges with vertex set exactly {u, v}."""
    if u == v:
        raise DomainError("multiplicity needs two distinct vertices")
    for w in (u, v):
        if w not in H.index:
            raise DomainError(f"unknown vertex {w!r}")
    pair = tuple(sorted((u, v)))
    return sum(1 for e in H.edges if e == pair)


def _check_subset(H: Hypergraph, X: Iterable[Vertex]) -> set[Vertex]:
    xs = set(X)
    extra = xs - H.index.keys()
    if extra:
        raise DomainError(f"not a subset of V(H): {sorted(extra)}")
    return xs


def induced(H: Hypergraph, X: Iterable[Vertex]) -> Hypergraph:
    """H[X]: keep the edges lying entirely inside X."""
    xs = _check_subset(H, X)
    return Hypergraph._trusted(xs, (e for e in H.edges if xs.issuperset(e)))


def delete_vertices(H: Hypergraph, X: Iterable[Vertex]) -> Hypergraph:
    """H - X."""
    xs = _check_subset(H, X)
    return induced(H, [v for v in H.vertices if v not in xs])


def shrink(H: Hypergraph, X: Iterable[Vertex]) -> Hypergraph:
    """H(X): keep edges meeting X in at least two vertices, cut down to X."""
    xs = _check_subset(H, X)
    kept = []
    for e in H.edges:
        cut = [v for v in e if v in xs]
        if len(cut) >= 2:
            kept.append(cut)
    return Hypergraph._trusted(xs, kept)


def shrink_delete(H: Hypergraph, X: Iterable[Vertex]) -> Hypergraph:
    """H ÷ X = H(V(H) - X)."""
    xs = _check_subset(H, X)
    return shrink(H, [v for v in H.vertices if v not in xs])


def delete_edge(H: Hypergraph, eid: int) -> Hypergraph:
    """H - e: drop one edge, keep every vertex."""
    if not 0 <= eid < len(H.edges):
        raise DomainError(f"unknown edge id {eid}")
    return Hypergraph._trusted(H.vertices, H.edges[:eid] + H.edges[eid + 1 :])


def induced_mask(H: Hypergraph, mask: int) -> Hypergraph:
    """H[X] for X given as a bitmask over vertex positions."""
    return Hypergraph._trusted(
        H.vertices_of(mask), (e for e, m in zip(H.edges, H.masks) if m & mask == m)
    )


def merge(H1: Hypergraph, v1: Vertex, H2: Hypergraph, v2: Vertex, vstar: Vertex) -> Hypergraph:
    """Identify v1 in H1 with v2 in H2 as the fresh vertex vstar.

    Edges of H1 come first, then those of H2.  Edge ids are positional, so
    the edge sets are disjoint by construction.
    """
    if set(H1.vertices) & set(H2.vertices):
        raise DomainError("merge needs vertex-disjoint hypergraphs")
    if v1 not in H1.index or v2 not in H2.index:
        raise DomainError("merge vertices must belong to their hypergraphs")
    if vstar in H1.index or vstar in H2.index:
        raise DomainError(f"merge vertex {vstar!r} clashes with an existing vertex")

    def sub(e: Edge, old: Vertex) -> list[Vertex]:
        return [vstar if w == old else w for w in e]

    vs = [v for v in H1.vertices if v != v1] + [v for v in H2.vertices if v != v2] + [vstar]
    es = [sub(e, v1) for e in H1.edges] + [sub(e, v2) for e in H2.edges]
    return Hypergraph._trusted(vs, es)


def disjoint_union(H1: Hypergraph, H2: Hypergraph) -> Hypergraph:
    if set(H1.vertices) & set(H2.vertices):
        raise DomainError("disjoint union needs vertex-disjoint hypergraphs")
    return Hypergraph._trusted(H1.vertices + H2.vertices, H1.edges + H2.edges)


def replicate(H: Hypergraph, t: int) -> Hypergraph:
    """tH: replace every edge of a simple hypergraph by t parallel copies."""
    if t < 1:
        raise DomainError("replication factor must be at least 1")
    if not H.is_simple:
        raise DomainError("replicate needs a simple hypergraph")
    return Hypergraph._trusted(H.vertices, [e for e in H.edges for _ in range(t)])


def relabel(H: Hypergraph, mapping: Mapping[Vertex, Vertex]) -> Hypergraph:
    """Rename vertices through an injective mapping (missing keys stay)."""
    m = {v: mapping.get(v, v) for v in H.vertices}
    if len(set(m.values())) != len(m):
        raise DomainError("relabelling must be injective")
    return Hypergraph._trusted(m.values(), ([m[v] for v in e] for e in H.edges))


# Named small hypergraphs.  Vertex names default to "0", "1", ...


def _names(n: int, names: Sequence[Vertex] | None) -> list[Vertex]:
    if names is None:
        return [str(i) for i in range(n)]
    if len(names) != n:
        raise DomainError(f"expected {n} vertex names")
    return list(names)


def complete(n: int, names: Sequence[Vertex] | None = None) -> Hypergraph:
    vs = _names(n, names)
    return build(vs, [(vs[i], vs[j]) for i in range(n) for j in range(i + 1, n)])


def cycle(n: int, names: Sequence[Vertex] | None = None) -> Hypergraph:
    if n < 3:
        raise DomainError("a cycle needs at least 3 vertices")
    vs = _names(n, names)
    return build(vs, [(vs[i], vs[(i + 1) % n]) for i in range(n)])


def path(n: int, names: Sequence[Vertex] | None = None) -> Hypergraph:
    """The path on n vertices (n - 1 edges)."""
    vs = _names(n, names)
    return build(vs, [(vs[i], vs[i + 1]) for i in range(n - 1)])


def edgeless(n: int, names: Sequence[Vertex] | None = None) -> Hypergraph:
    return build(_names(n, names), [])


# JSON interchange


def to_dict(H: Hypergraph) -> dict[str, Any]:
    return {"vertices": list(H.vertices), "edges": [list(e) for e in sorted(H.edges)]}


def to_json(H: Hypergraph) -> str:
    """Canonical serialization: sorted vertices, sorted edges, duplicates kept."""
    return json.dumps(to_dict(H), separators=(",", ":"))


def from_dict(data: Mapping[str, Any]) -> Hypergraph:
    if not isinstance(data, Mapping) or "vertices" not in data or "edges" not in data:
        raise ConstructionError('hypergraph JSON needs "vertices" and "edges"')
    vs, es = data["vertices"], data["edges"]
    if not isinstance(vs, list) or not isinstance(es, list) or not all(isinstance(e, list) for e in es):
        raise ConstructionError('"vertices" must be an array and "edges" an array of arrays')
    for e in es:
        if len(set(e)) != len(e):
            raise ConstructionError(f"edge {e} repeats a vertex")
    return build(vs, es)


def from_json(text: str) -> Hypergraph:
    return from_dict(json.loads(text))
