"""Connectivity, blocks, bridges and bricks."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

import networkx as nx

from .core import Hypergraph, Vertex, delete_edge, delete_vertices, induced, shrink_delete
from .errors import DomainError


@dataclass(frozen=True)
class BlockDecomposition:
    """Blocks of a hypergraph.

    ``blocks[i]`` is the vertex set of block i and ``block_edges[i]`` the ids
    of the edges it contains.  ``block_adjacency`` maps every separating
    vertex to the ids of the blocks that contain it.
    """

    blocks: tuple[tuple[Vertex, ...], ...]
    block_edges: tuple[tuple[int, ...], ...]
    separating_vertices: frozenset[Vertex]
    block_adjacency: dict[Vertex, tuple[int, ...]]

    def __len__(self) -> int:
        return len(self.blocks)

    def is_end_block(self, b: int) -> bool:
        return sum(1 for v in self.blocks[b] if v in self.separating_vertices) <= 1


@dataclass(frozen=True)
class BrickClassification:
    kind: str  # "tKn", "tCn" or "not-brick"
    t: int = 0
    n: int = 0

    @property
    def is_brick(self) -> bool:
        return self.kind != "not-brick"


NOT_BRICK = BrickClassification("not-brick")


def components(H: Hypergraph) -> list[tuple[Vertex, ...]]:
    """Vertex sets of the components, ordered by smallest vertex."""
    parent = list(range(len(H.vertices)))

    def find(i: int) -> int:
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    idx = H.index
    for e in H.edges:
        r0 = find(idx[e[0]])
        for w in e[1:]:
            r = find(idx[w])
            if r != r0:
                parent[r] = r0
    groups: dict[int, list[Vertex]] = {}
    for i, v in enumerate(H.vertices):
        groups.setdefault(find(i), []).append(v)
    return sorted((tuple(g) for g in groups.values()), key=lambda g: g[0])


def is_connected(H: Hypergraph) -> bool:
    return len(components(H)) == 1


def separating_vertices(H: Hypergraph) -> frozenset[Vertex]:
    """Vertices v such that H ÷ v has more components than H."""
    base = len(components(H))
    return frozenset(v for v in H.vertices if len(components(shrink_delete(H, [v]))) > base)


def _two_section(H: Hypergraph) -> nx.Graph:
    G = nx.Graph()
    G.add_nodes_from(H.vertices)
    for e in H.edges:
        for i, u in enumerate(e):
            for w in e[i + 1 :]:
                G.add_edge(u, w)
    return G


def blocks(H: Hypergraph) -> BlockDecomposition:
    """Block decomposition.

    A hypergraph and its 2-section have the same separating vertices (shrinking
    away v keeps every other pair of a hyperedge adjacent), so the blocks are
    the biconnected pieces of the 2-section, each hyperedge going to the piece
    that contains all of its vertices.  Isolated vertices form K_1 blocks.
    """
    G = _two_section(H)
    vsets = [tuple(sorted(c)) for c in nx.biconnected_components(G)]
    vsets += [(v,) for v in H.vertices if G.degree(v) == 0]
    vsets.sort(key=lambda b: (b[0], b))

    edge_lists: list[list[int]] = [[] for _ in vsets]
    member = [set(b) for b in vsets]
    for eid, e in enumerate(H.edges):
        for bi, s in enumerate(member):
            if s.issuperset(e):
                edge_lists[bi].append(eid)
                break
        else:  # pragma: no cover - guaranteed by biconnectivity
            raise AssertionError(f"edge {e} lies in no block")

    where: dict[Vertex, list[int]] = {}
    for bi, b in enumerate(vsets):
        for v in b:
            where.setdefault(v, []).append(bi)
    seps = frozenset(v for v, bs in where.items() if len(bs) >= 2)
    return BlockDecomposition(
        blocks=tuple(vsets),
        block_edges=tuple(tuple(es) for es in edge_lists),
        separating_vertices=seps,
        block_adjacency={v: tuple(where[v]) for v in sorted(seps)},
    )


def block_hypergraph(H: Hypergraph, D: BlockDecomposition, b: int) -> Hypergraph:
    """The block with id b as a hypergraph (blocks are induced)."""
    return induced(H, D.blocks[b])


def is_block(H: Hypergraph) -> bool:
    """True iff H is connected and has no separating vertex."""
    return not H.is_empty and is_connected(H) and not separating_vertices(H)


def is_bridge(H: Hypergraph, eid: int) -> bool:
    """True iff H - e has |e| - 1 more components than H."""
    if not 0 <= eid < H.size:
        raise DomainError(f"unknown edge id {eid}")
    gained = len(components(delete_edge(H, eid))) - len(components(H))
    return gained == len(H.edges[eid]) - 1


def classify_brick(H: Hypergraph) -> BrickClassification:
    """Recognise tK_n and tC_n (n odd, n >= 5; C_3 is reported as K_3)."""
    if H.is_empty or not is_connected(H):
        raise DomainError("classify_brick needs a connected, non-empty hypergraph")
    n = H.order
    if n == 1:
        return BrickClassification("tKn", 1, 1)
    if any(len(e) != 2 for e in H.edges):
        return NOT_BRICK
    mult = Counter(H.edges)
    ts = set(mult.values())
    if len(ts) != 1:
        return NOT_BRICK
    (t,) = ts
    pairs = len(mult)
    if pairs == n * (n - 1) // 2:
        return BrickClassification("tKn", t, n)
    if n >= 5 and n % 2 == 1 and pairs == n and all(d == 2 * t for d in H.degrees.values()):
        # connected and 2-regular simple quotient: a single cycle
        return BrickClassification("tCn", t, n)
    return NOT_BRICK


def trim_end_block(T: Hypergraph, D: BlockDecomposition, b: int) -> Hypergraph:
    """T_B = T - (V(B) - {x}) for an end-block B with separating vertex x.

    When T is a single block, x is its smallest vertex.
    """
    if not 0 <= b < len(D.blocks):
        raise DomainError(f"unknown block id {b}")
    block = D.blocks[b]
    if len(D.blocks) == 1:
        x = block[0]
    else:
        seps = [v for v in block if v in D.separating_vertices]
        if len(seps) != 1:
            raise DomainError(f"block {b} is not an end-block")
        x = seps[0]
    return delete_vertices(T, [v for v in block if v != x])
