"""Executable statements of the structure theorems and the degree-sum bound.

Every verifier takes one instance, checks the hypotheses (rejecting inputs
that fall outside them), evaluates the conclusion clause by clause and
returns a report whose ``passed`` flag is False only for a genuine
counterexample.  All quantities of the degree-sum bound are exact
``Fraction`` values.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .coloring import ListAssignment, chi_list_P, find_PL_coloring, is_PL_critical
from .core import Hypergraph, complete, cycle, delete_vertices, induced, shrink
from .enumeration import EnumerationBounds, _canon_masks, _twin_classes, canonical_hypergraph, canonical_key, enum_hypergraphs
from .errors import DomainError, PreconditionError
from .property import Property, in_F
from .structure import blocks, classify_brick, components, is_block, is_connected, trim_end_block

# -- exact quantities -------------------------------------------------------


def _check_delta(delta: int) -> None:
    if delta < 2:
        raise DomainError(f"delta must be at least 2, got {delta}")


def r_delta(delta: int) -> Fraction:
    _check_delta(delta)
    return delta - 1 + Fraction(2, delta)


def a_coefficient(delta: int) -> Fraction:
    _check_delta(delta)
    return Fraction(delta - 2, delta * delta + 2 * delta - 2)


def a_bound(delta: int, n: int) -> Fraction:
    """a(delta, n) = delta n + (delta - 2) n / (delta^2 + 2 delta - 2)."""
    return delta * n + a_coefficient(delta) * n


def sigma(F: Hypergraph, delta: int) -> Fraction:
    """|V(F)| r_delta - d(F)."""
    return F.order * r_delta(delta) - F.degree_sum


@dataclass(frozen=True)
class GallaiQuantities:
    delta: int
    r_delta: Fraction
    a_coefficient: Fraction

    @classmethod
    def of(cls, delta: int) -> GallaiQuantities:
        return cls(delta, r_delta(delta), a_coefficient(delta))


# -- block alternatives -----------------------------------------------------

BRICK = "Brick"
F_REGULAR = "F(P)-regular"
SMALL = "SmallInP"
VIOLATION = "Violation"


@dataclass(frozen=True)
class BlockVerdict:
    vertices: tuple[str, ...]
    verdict: str
    brick: tuple[str, int, int] | None = None

    def to_dict(self) -> dict:
        out = {"vertices": list(self.vertices), "verdict": self.verdict}
        if self.brick:
            out["brick"] = {"kind": self.brick[0], "t": self.brick[1], "n": self.brick[2]}
        return out


def classify_block(B: Hypergraph, P: Property) -> BlockVerdict:
    """Which alternative of the block structure theorem B satisfies (first match)."""
    b = classify_brick(B)
    if b.is_brick:
        return BlockVerdict(B.vertices, BRICK, (b.kind, b.t, b.n))
    if B.is_regular(P.r) and in_F(P, B):
        return BlockVerdict(B.vertices, F_REGULAR)
    if B.max_degree <= P.r and P.member(B):
        return BlockVerdict(B.vertices, SMALL)
    return BlockVerdict(B.vertices, VIOLATION)


def _block_hypergraphs(H: Hypergraph) -> list[Hypergraph]:
    return [induced(H, b) for b in blocks(H).blocks]


@dataclass
class BlockStructureReport:
    blocks: list[BlockVerdict]
    low_vertex_hypergraph: Hypergraph | None = None

    @property
    def passed(self) -> bool:
        return all(b.verdict != VIOLATION for b in self.blocks)

    def to_dict(self) -> dict:
        out = {"passed": self.passed, "blocks": [b.to_dict() for b in self.blocks]}
        if self.low_vertex_hypergraph is not None:
            from .core import to_dict

            out["low_vertex_hypergraph"] = to_dict(self.low_vertex_hypergraph)
        return out


def block_structure(H: Hypergraph, P: Property) -> BlockStructureReport:
    return BlockStructureReport([classify_block(B, P) for B in _block_hypergraphs(H)])


# -- recognisers ------------------------------------------------------------


def _is_complete_graph(B: Hypergraph, n: int | None = None) -> bool:
    b = classify_brick(B)
    return b.kind == "tKn" and (b.t == 1 or b.n == 1) and (n is None or b.n == n)


def _is_odd_cycle(B: Hypergraph) -> bool:
    b = classify_brick(B)
    return b.kind == "tCn" and b.t == 1


def gallai_block_ok(B: Hypergraph, P: Property) -> bool:
    """The block-wise predicate of a Gallai tree."""
    return (
        _is_complete_graph(B)
        or _is_odd_cycle(B)
        or (in_F(P, B) and B.is_regular(P.r))
        or (P.member(B) and B.max_degree <= P.r)
    )


def is_gallai_tree(H: Hypergraph, P: Property) -> bool:
    if H.is_empty or not is_connected(H):
        raise DomainError("a Gallai tree is connected")
    if not H.is_simple:
        raise DomainError("a Gallai tree is simple")
    return all(gallai_block_ok(B, P) for B in _block_hypergraphs(H))


def is_epsilon_delta(H: Hypergraph, delta: int) -> bool:
    """Separating vertices lie in one K_delta and one single-edge block; others lie in a K_delta."""
    if H.is_empty or not is_connected(H):
        raise DomainError("is_epsilon_delta needs a connected hypergraph")
    D = blocks(H)
    parts = [induced(H, b) for b in D.blocks]
    is_kd = [_is_complete_graph(B, delta) for B in parts]
    is_edge = [B.size == 1 for B in parts]
    for v in H.vertices:
        mine = [i for i, b in enumerate(D.blocks) if v in b]
        if v in D.separating_vertices:
            if len(mine) != 2:
                return False
            i, j = mine
            if not ((is_kd[i] and is_edge[j]) or (is_kd[j] and is_edge[i])):
                return False
        elif not any(is_kd[i] for i in mine):
            return False
    return True


def in_T_delta(T: Hypergraph, P: Property, delta: int) -> bool:
    """Gallai tree with maximum degree at most delta, other than K_{delta+1}."""
    if T.is_empty or not is_connected(T) or not T.is_simple:
        return False
    return T.max_degree <= delta and not _is_complete_graph(T, delta + 1) and is_gallai_tree(T, P)


# -- theorem verifiers ------------------------------------------------------


def verify_theorem3(H: Hypergraph, P: Property, L: ListAssignment) -> BlockStructureReport:
    """Blocks of the low-vertex hypergraph of a critical H satisfy the structure alternatives."""
    if H.is_empty:
        raise DomainError("the block structure check needs a non-empty hypergraph")
    crit = is_PL_critical(H, P, L)
    if not crit.is_critical:
        raise DomainError("the block structure check needs a (P, L)-critical hypergraph")
    F = shrink(H, crit.low_vertices)
    if F.is_empty:
        raise DomainError("the block structure check needs a non-empty low-vertex hypergraph")
    rep = block_structure(F, P)
    rep.low_vertex_hypergraph = F
    return rep


@dataclass
class Report:
    """Generic verifier report: named clauses with boolean outcomes plus data."""

    name: str
    clauses: dict[str, bool] = field(default_factory=dict)
    data: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(self.clauses.values())

    def to_dict(self) -> dict:
        return {"name": self.name, "passed": self.passed, "clauses": dict(self.clauses), **self.data}


def brooks_clauses(H: Hypergraph, P: Property, chi: int) -> dict[str, bool]:
    """Which alternatives of the equality characterisation H satisfies."""
    b = classify_brick(H)
    r = P.r
    k = chi - 1
    return {
        "tK": b.kind == "tKn" and b.t * (b.n - 1) == k * r,
        "tC": b.kind in ("tKn", "tCn") and (b.kind == "tCn" or b.n == 3) and b.t == r and chi == 3,
        "r-regular F(P)": H.is_regular(r) and in_F(P, H),
    }


def verify_brooks(H: Hypergraph, P: Property, *, max_order: int = 6, max_k: int = 3) -> Report:
    """List-chromatic Brooks bound, its equality cases and the fractional bound."""
    if not P.additive:
        raise DomainError(f"property {P.name} is not additive")
    if H.is_empty or not is_connected(H):
        raise DomainError("the Brooks bound is stated for connected hypergraphs")
    chi = chi_list_P(H, P, max_order=max_order, max_k=max_k)
    r = P.r
    bound = math.ceil(Fraction(H.max_degree, r)) + 1
    rep = Report("brooks")
    rep.clauses["upper bound"] = chi <= bound
    rep.clauses["fractional bound"] = chi <= Fraction(H.max_degree, r) + 1
    equality = chi == bound
    matched = brooks_clauses(H, P, chi) if equality else {}
    rep.clauses["equality characterised"] = not equality or any(matched.values())
    rep.data = {
        "chi_list": chi,
        "bound": bound,
        "max_degree": H.max_degree,
        "r": r,
        "equality": equality,
        "matched": sorted(k for k, v in matched.items() if v),
    }
    return rep


def _list_sizes(H: Hypergraph, L: ListAssignment) -> dict[str, int]:
    missing = [v for v in H.vertices if v not in L]
    if missing:
        raise DomainError(f"list assignment undefined at {missing}")
    return {v: len(set(L[v])) for v in H.vertices}


def verify_theorem6(H: Hypergraph, P: Property, L: ListAssignment) -> Report:
    """Degree-list colouring: uncolourable implies every block is one of the alternatives."""
    if not P.additive:
        raise PreconditionError("additive", f"property {P.name} is not additive")
    if H.is_empty or not is_connected(H):
        raise PreconditionError("connected", "degree-list colouring needs a connected hypergraph")
    sizes = _list_sizes(H, L)
    short = [v for v in H.vertices if P.r * sizes[v] < H.degrees[v]]
    if short:
        raise PreconditionError("r|L(v)| >= d(v)", f"lists too short at {short}")
    phi = find_PL_coloring(H, P, L)
    rep = Report("theorem6")
    rep.data["colorable"] = phi is not None
    if phi is not None:
        rep.data["coloring"] = dict(sorted(phi.items()))
        rep.clauses["blocks"] = True
        return rep
    structure = block_structure(H, P)
    rep.clauses["blocks"] = structure.passed
    rep.data["blocks"] = [b.to_dict() for b in structure.blocks]
    return rep


def verify_gallai_bound(H: Hypergraph, P: Property, L: ListAssignment) -> Report:
    """Degree-sum bound for locally linear critical hypergraphs, with its proof chain.

    Raises PreconditionError naming the first failed hypothesis.
    """
    r = P.r
    if not P.additive:
        raise PreconditionError("additive", f"property {P.name} is not additive")
    if r < 1:
        raise PreconditionError("r >= 1")
    if H.is_empty:
        raise PreconditionError("non-empty")
    sizes = set(_list_sizes(H, L).values())
    if len(sizes) != 1:
        raise PreconditionError("|L(v)| = k", "list sizes differ")
    (k,) = sizes
    if k < 2:
        raise PreconditionError("k >= 2", f"k = {k}")
    delta = k * r
    if delta < 3:
        raise PreconditionError("delta = kr >= 3", f"delta = {delta}")
    if not is_connected(H):
        raise PreconditionError("connected", "disconnected instances are outside the verified contract")
    if _is_complete_graph(H, delta + 1):
        raise PreconditionError("H != K_{delta+1}")
    crit = is_PL_critical(H, P, L)
    if not crit.is_critical:
        raise PreconditionError("(P,L)-critical")
    F = shrink(H, crit.low_vertices)
    if not F.is_simple:
        raise PreconditionError("locally linear", "the low-vertex hypergraph has parallel edges")

    n = H.order
    dH = H.degree_sum
    U = [v for v in H.vertices if H.degrees[v] == delta]
    HU = shrink(H, U)
    rd = r_delta(delta)
    sig = len(U) * rd - HU.degree_sum
    d_rest = delete_vertices(H, U).degree_sum
    a = a_bound(delta, n)
    comps = [induced(HU, c) for c in components(HU)] if U else []
    comp_sigma = [sigma(C, delta) for C in comps]

    rep = Report("gallai-bound")
    rep.clauses["min degree >= delta"] = H.min_degree >= delta
    rep.clauses["U is the low-vertex set"] = tuple(U) == crit.low_vertices
    rep.clauses["U != V(H)"] = len(U) < n
    rep.clauses["components of H(U) in T_delta"] = all(in_T_delta(C, P, delta) for C in comps)
    rep.clauses["d(H) >= d(H-U) + 2 delta |U| - d(H(U))"] = dH >= d_rest + 2 * delta * len(U) - HU.degree_sum
    rep.clauses["d(H) >= d(H-U) + sigma + (delta+1-2/delta)|U|"] = (
        dH >= d_rest + sig + (delta + 1 - Fraction(2, delta)) * len(U)
    )
    rep.clauses["d(H) >= (delta+1) n - |U|"] = dH >= (delta + 1) * n - len(U)
    if delta >= 4:
        rep.clauses["sigma(C) >= 2 per component"] = all(s >= 2 for s in comp_sigma)
    rep.clauses["sigma >= 0"] = sig >= 0
    rep.clauses["d(H) >= a(delta, n)"] = dH >= a
    rep.data = {
        "k": k,
        "r": r,
        "delta": delta,
        "n": n,
        "degree_sum": dH,
        "U": U,
        "sigma": sig,
        "component_sigma": comp_sigma,
        "a": a,
    }
    return rep


def verify_sigma_lemmas(T: Hypergraph, P: Property, delta: int) -> Report:
    """Block values of sigma, end-block additivity and the lower bound on sigma(T)."""
    if delta < 3:
        raise DomainError("the sigma lemmas need delta >= 3")
    if T.is_empty or not is_connected(T) or not T.is_simple:
        raise DomainError("T must be connected and simple")
    if not in_T_delta(T, P, delta):
        raise DomainError(f"T is not a Gallai tree of maximum degree <= {delta} other than K_{delta + 1}")
    rd = r_delta(delta)
    D = blocks(T)
    parts = [induced(T, b) for b in D.blocks]
    s_T = sigma(T, delta)
    rep = Report("sigma-lemmas")
    block_ok = []
    for B in parts:
        s = sigma(B, delta)
        block_ok.append(s == 2 if _is_complete_graph(B, delta) else s >= rd)
    rep.clauses["block sigma values"] = all(block_ok)
    additivity = {}
    for i, b in enumerate(D.blocks):
        if len(D.blocks) == 1 or D.is_end_block(i):
            TB = trim_end_block(T, D, i)
            additivity[i] = s_T == sigma(TB, delta) + sigma(parts[i], delta) - rd
    rep.clauses["end-block additivity"] = all(additivity.values())
    eps = is_epsilon_delta(T, delta)
    if delta >= 4:
        rep.clauses["sigma lower bound"] = s_T >= (2 if eps else rd)
    rep.data = {
        "delta": delta,
        "sigma": s_T,
        "r_delta": rd,
        "epsilon_delta": eps,
        "blocks": len(parts),
        "end_blocks_checked": len(additivity),
    }
    return rep


# -- Gallai tree generation ---------------------------------------------------


def single_edge(size: int) -> Hypergraph:
    names = [str(i) for i in range(size)]
    return Hypergraph._trusted(names, [names])


def _bridgeless_duals(max_edges: int) -> list[tuple[int, tuple[int, ...]]]:
    """Multigraphs (order, edge masks) with minimum degree 2 and at most max_edges edges."""
    out = []
    for m in range(2, max_edges + 1):
        pairs = [(1 << a) | (1 << b) for a, b in itertools.combinations(range(m), 2)]
        level: list[tuple[int, ...]] = [()]
        for j in range(1, max_edges + 1):
            nxt = set()
            for masks in level:
                for t in pairs:
                    key, _ = _canon_masks(m, masks + (t,))
                    deficit = sum(max(0, 2 - sum(1 for x in key if x >> v & 1)) for v in range(m))
                    # each further edge lowers the deficit by at most two
                    if deficit <= 2 * (max_edges - j):
                        nxt.add(key)
            level = sorted(nxt)
            out += [(m, k) for k in level if j >= m and all(sum(1 for x in k if x >> v & 1) >= 2 for v in range(m))]
    return out


def _degree_two_blocks(max_order: int) -> list[Hypergraph]:
    """Connected simple hypergraphs of maximum degree 2 with at least two edges, up to max_order vertices.

    Such a block is determined by its dual: one node per edge, one dual edge
    per degree-2 vertex, plus degree-1 vertices hanging on single edges.  A
    block edge meeting the rest in one vertex would make that vertex
    separating, so the dual has minimum degree 2.
    """
    out = []
    for m, duals in _bridgeless_duals(max_order):
        k = len(duals)
        for pend in itertools.product(range(max_order - k + 1), repeat=m):
            if sum(pend) > max_order - k:
                continue
            edges: list[list[str]] = [[] for _ in range(m)]
            names = [f"e{j}" for j in range(k)]
            for j, d in enumerate(duals):
                for a in range(m):
                    if d >> a & 1:
                        edges[a].append(names[j])
            for a, c in enumerate(pend):
                for q in range(c):
                    names.append(f"p{a}_{q}")
                    edges[a].append(names[-1])
            if len({frozenset(e) for e in edges}) == m:
                out.append(Hypergraph._trusted(names, edges))
    return out


def gallai_blocks(P: Property, delta: int, max_order: int, *, small_order: int = 4) -> list[Hypergraph]:
    """Blocks usable in members of T_delta.

    All simple blocks of order at most ``small_order`` passing the block
    predicate, plus complete graphs, odd cycles and single edges up to
    ``max_order``.  When r >= 2 every block of maximum degree 2 is added as
    well, which makes the catalogue complete for r <= 2.  Blocks of maximum
    degree 3 or more beyond ``small_order`` that are neither complete graphs
    nor odd cycles are not generated.
    """
    found: dict = {}

    def add(B: Hypergraph) -> None:
        if B.max_degree <= delta and is_block(B) and gallai_block_ok(B, P):
            found.setdefault(canonical_key(B), canonical_hypergraph(B))

    so = min(small_order, max_order)
    edge_types = sum(math.comb(so, s) for s in range(2, so + 1))
    for B in enum_hypergraphs(
        EnumerationBounds(max_order=so, max_edges=edge_types, max_edge_size=so, simple_only=True, connected_only=True)
    ):
        add(B)
    for n in range(so + 1, max_order + 1):
        if n <= delta + 1:
            add(complete(n))
        if n % 2:
            add(cycle(n))
        add(single_edge(n))
    if P.r >= 2:
        for B in _degree_two_blocks(max_order):
            add(B)
    return [found[k] for k in sorted(found)]


def _glue(T: Hypergraph, x: str, B: Hypergraph, y: str) -> Hypergraph:
    names = {w: (x if w == y else f"g{i}") for i, w in enumerate(B.vertices)}
    edges = list(T.edges) + [[names[w] for w in e] for e in B.edges]
    verts = list(T.vertices) + [n for w, n in names.items() if w != y]
    return Hypergraph._trusted(verts, edges)


def gallai_trees(
    P: Property,
    delta: int,
    *,
    max_order: int = 9,
    max_blocks: int | None = None,
    catalog: Sequence[Hypergraph] | None = None,
) -> list[Hypergraph]:
    """Members of T_delta assembled from catalogue blocks, one per isomorphism class.

    Trees are grown by gluing one new block at one vertex, which keeps the
    block decomposition equal to the glued blocks.
    """
    cat = list(catalog) if catalog is not None else gallai_blocks(P, delta, max_order)
    seen: dict = {}
    frontier = []
    for B in cat:
        if B.order <= max_order and B.max_degree <= delta:
            key = canonical_key(B)
            if key not in seen:
                seen[key] = B
                frontier.append(B)
    # twins lie in one automorphism orbit, so one gluing point per twin class suffices
    glueable = []
    for B in sorted((B for B in cat if B.order >= 2), key=lambda B: B.order):
        reps = _twin_classes(B.order, B.masks)
        glueable.append((B, [y for i, y in enumerate(B.vertices) if reps[i] == i]))
    level = 1
    while frontier and (max_blocks is None or level < max_blocks):
        nxt = []
        for T in frontier:
            # fresh names must not clash with T's names
            T = canonical_hypergraph(T)
            reps = _twin_classes(T.order, T.masks)
            for i, x in enumerate(T.vertices):
                if reps[i] != i:
                    continue
                for B, ys in glueable:
                    if T.order + B.order - 1 > max_order:
                        break
                    for y in ys:
                        if T.degrees[x] + B.degrees[y] > delta:
                            continue
                        G = _glue(T, x, B, y)
                        key = canonical_key(G)
                        if key not in seen:
                            seen[key] = G
                            nxt.append(G)
        frontier = nxt
        level += 1
    out = [canonical_hypergraph(G) for key, G in sorted(seen.items(), key=lambda kv: kv[0])]
    return [T for T in out if not _is_complete_graph(T, delta + 1)]


__all__ = [
    "BRICK",
    "F_REGULAR",
    "SMALL",
    "VIOLATION",
    "BlockStructureReport",
    "BlockVerdict",
    "GallaiQuantities",
    "Report",
    "a_bound",
    "a_coefficient",
    "block_structure",
    "brooks_clauses",
    "classify_block",
    "gallai_block_ok",
    "gallai_blocks",
    "gallai_trees",
    "in_T_delta",
    "is_epsilon_delta",
    "is_gallai_tree",
    "r_delta",
    "sigma",
    "single_edge",
    "verify_brooks",
    "verify_gallai_bound",
    "verify_sigma_lemmas",
    "verify_theorem3",
    "verify_theorem6",
]
