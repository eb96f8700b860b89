"""Exhaustive generation of small hypergraphs and list assignments.

Hypergraphs are produced one isomorphism class at a time, using a canonical
form computed by individualisation and refinement: refine an ordered vertex
partition by incidence signatures, branch on every vertex of the first
non-trivial cell, and keep the smallest relabelled edge list over all
leaves.  Branches on vertices that are swapped by an automorphism
transposition lead to identical leaves and are skipped.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

from .core import Hypergraph, Vertex
from .errors import BudgetExceeded, DomainError

CanonKey = tuple[int, tuple[int, ...]]

DEFAULT_CANON_GUARD = 16


# -- canonical forms -------------------------------------------------------


def _refine(n: int, masks: Sequence[int], cells: list[list[int]]) -> list[list[int]]:
    inc: list[list[int]] = [[] for _ in range(n)]
    for m in masks:
        for v in range(n):
            if m >> v & 1:
                inc[v].append(m)
    while True:
        colour = [0] * n
        for ci, cell in enumerate(cells):
            for v in cell:
                colour[v] = ci
        new_cells: list[list[int]] = []
        for cell in cells:
            if len(cell) == 1:
                new_cells.append(cell)
                continue
            sigs = {}
            for v in cell:
                sig = []
                for m in inc[v]:
                    others = sorted(colour[w] for w in range(n) if m >> w & 1 and w != v)
                    sig.append((len(others), tuple(others)))
                sig.sort()
                sigs.setdefault(tuple(sig), []).append(v)
            for s in sorted(sigs):
                new_cells.append(sigs[s])
        if len(new_cells) == len(cells):
            return new_cells
        cells = new_cells


def _twin_classes(n: int, masks: Sequence[int]) -> list[int]:
    """Representative of each vertex under 'transposition is an automorphism'."""
    base = sorted(masks)
    rep = list(range(n))
    for u in range(n):
        if rep[u] != u:
            continue
        for w in range(u + 1, n):
            if rep[w] != w:
                continue
            swapped = sorted(
                (m & ~((1 << u) | (1 << w))) | ((m >> u & 1) << w) | ((m >> w & 1) << u) for m in masks
            )
            if swapped == base:
                rep[w] = u
    return rep


def _canon_masks(n: int, masks: Sequence[int]) -> tuple[tuple[int, ...], list[int]]:
    """Smallest relabelled mask tuple and one labelling (old index -> new) achieving it."""
    if n == 0:
        return (), []
    twins = _twin_classes(n, masks)
    best: list = [None, None]

    def leaf(cells: list[list[int]]) -> None:
        pos = [0] * n
        for i, cell in enumerate(cells):
            pos[cell[0]] = i
        key = tuple(sorted(sum(1 << pos[v] for v in range(n) if m >> v & 1) for m in masks))
        if best[0] is None or key < best[0]:
            best[0], best[1] = key, pos

    def search(cells: list[list[int]]) -> None:
        cells = _refine(n, masks, cells)
        target = next((i for i, c in enumerate(cells) if len(c) > 1), None)
        if target is None:
            leaf(cells)
            return
        seen = set()
        for v in cells[target]:
            if twins[v] in seen:
                continue
            seen.add(twins[v])
            rest = [w for w in cells[target] if w != v]
            search(cells[:target] + [[v], rest] + cells[target + 1 :])

    search([list(range(n))])
    return best[0], best[1]


def canonical_key(H: Hypergraph, guard: int = DEFAULT_CANON_GUARD) -> CanonKey:
    """Hashable isomorphism invariant that separates isomorphism classes."""
    if H.order > guard:
        raise BudgetExceeded(f"canonical form guard: order {H.order} > {guard}")
    key, _ = _canon_masks(H.order, H.masks)
    return H.order, key


def canonical_labelling(H: Hypergraph, guard: int = DEFAULT_CANON_GUARD) -> dict[Vertex, Vertex]:
    """Map each vertex to its name ("0", "1", ...) in the canonical relabelling."""
    if H.order > guard:
        raise BudgetExceeded(f"canonical form guard: order {H.order} > {guard}")
    _, pos = _canon_masks(H.order, H.masks)
    return {v: str(pos[i]) for i, v in enumerate(H.vertices)}


def _from_key(key: CanonKey) -> Hypergraph:
    n, masks = key
    names = [str(i) for i in range(n)]
    return Hypergraph._trusted(names, ([names[i] for i in range(n) if m >> i & 1] for m in masks))


def canonical_hypergraph(H: Hypergraph, guard: int = DEFAULT_CANON_GUARD) -> Hypergraph:
    return _from_key(canonical_key(H, guard))


def canonical_form(H: Hypergraph, guard: int = DEFAULT_CANON_GUARD) -> str:
    """Canonical JSON serialization: equal exactly for isomorphic inputs."""
    n, masks = canonical_key(H, guard)
    edges = [[str(i) for i in range(n) if m >> i & 1] for m in masks]
    return json.dumps({"vertices": [str(i) for i in range(n)], "edges": edges}, separators=(",", ":"))


def automorphisms(H: Hypergraph) -> list[tuple[int, ...]]:
    """All automorphisms as permutations of vertex positions."""
    n, masks = H.order, H.masks
    if n == 0:
        return [()]
    cells = _refine(n, masks, [list(range(n))])
    base = sorted(masks)
    found = []
    for images in itertools.product(*(itertools.permutations(c) for c in cells)):
        perm = [0] * n
        for cell, img in zip(cells, images):
            for v, w in zip(cell, img):
                perm[v] = w
        mapped = sorted(sum(1 << perm[v] for v in range(n) if m >> v & 1) for m in masks)
        if mapped == base:
            found.append(tuple(perm))
    return found


# -- hypergraph enumeration -------------------------------------------------


@dataclass(frozen=True)
class EnumerationBounds:
    max_order: int
    max_edges: int = 6
    max_edge_size: int = 2
    max_multiplicity: int = 1
    connected_only: bool = False
    simple_only: bool = False
    min_order: int = 0

    def __post_init__(self):
        if self.max_edge_size < 2:
            raise DomainError("max_edge_size must be at least 2")
        if min(self.max_order, self.max_edges, self.max_multiplicity, self.min_order) < 0:
            raise DomainError("enumeration bounds must be non-negative")
        if self.max_multiplicity < 1:
            raise DomainError("max_multiplicity must be at least 1")

    @property
    def multiplicity_cap(self) -> int:
        return 1 if self.simple_only else self.max_multiplicity


def _is_connected_masks(n: int, masks: Sequence[int]) -> bool:
    if n == 0:
        return False
    seen = 1
    grew = True
    while grew:
        grew = False
        for m in masks:
            if m & seen and m & ~seen:
                seen |= m
                grew = True
    return seen == (1 << n) - 1


@lru_cache(maxsize=None)
def _classes_of_order(n: int, max_edges: int, max_edge_size: int, cap: int) -> tuple[tuple[CanonKey, ...], ...]:
    """Canonical keys on exactly n vertices, grouped by edge count."""
    types = [
        sum(1 << i for i in c)
        for size in range(2, min(max_edge_size, n) + 1)
        for c in itertools.combinations(range(n), size)
    ]
    level: list[tuple[int, ...]] = [()]
    out = [((n, ()),)]
    for _ in range(max_edges):
        nxt = set()
        for masks in level:
            for t in types:
                if masks.count(t) >= cap:
                    continue
                key, _ = _canon_masks(n, masks + (t,))
                nxt.add(key)
        level = sorted(nxt)
        if not level:
            break
        out.append(tuple((n, k) for k in level))
    return tuple(out)


def enum_hypergraphs(b: EnumerationBounds) -> Iterator[Hypergraph]:
    """Every isomorphism class within the bounds exactly once.

    Order: by number of vertices, then number of edges, then canonical key.
    Vertices are named "0", "1", ....
    """
    for n in range(b.min_order, b.max_order + 1):
        for group in _classes_of_order(n, b.max_edges, b.max_edge_size, b.multiplicity_cap):
            for key in group:
                if b.connected_only and not _is_connected_masks(n, key[1]):
                    continue
                yield _from_key(key)


# -- list assignments ----------------------------------------------------------


def exact_covers(
    n: int, need: Sequence[int], allowed: Iterable[int]
) -> Iterator[tuple[int, ...]]:
    """Multisets of masks from ``allowed`` covering vertex i exactly need[i] times.

    Each multiset is produced once, as a sorted tuple.  Vertices are
    processed in order; the masks whose lowest vertex is v must supply all of
    v's remaining need, which makes the decomposition unique.
    """
    by_low: list[list[int]] = [[] for _ in range(n)]
    for m in sorted(set(allowed)):
        if m:
            by_low[(m & -m).bit_length() - 1].append(m)
    rem = list(need)
    chosen: list[int] = []

    def fits(m: int) -> bool:
        return all(rem[i] > 0 for i in range(n) if m >> i & 1)

    def take(m: int, s: int) -> None:
        for i in range(n):
            if m >> i & 1:
                rem[i] -= s

    def at_vertex(v: int) -> Iterator[None]:
        if v == n:
            yield
            return
        yield from fill(v, rem[v], 0)

    def fill(v: int, left: int, start: int) -> Iterator[None]:
        if left == 0:
            yield from at_vertex(v + 1)
            return
        opts = by_low[v]
        for j in range(start, len(opts)):
            m = opts[j]
            if not fits(m):
                continue
            take(m, 1)
            chosen.append(m)
            yield from fill(v, left - 1, j)
            chosen.pop()
            take(m, -1)

    if len(need) != n or any(k < 0 for k in need):
        raise DomainError("need must list a non-negative count per vertex")
    for _ in at_vertex(0):
        yield tuple(sorted(chosen))


def lists_from_classes(H: Hypergraph, classes: Sequence[int]) -> dict[Vertex, frozenset[int]]:
    """Turn colour classes (colour i+1 is available exactly on classes[i]) into lists."""
    L: dict[Vertex, set[int]] = {v: set() for v in H.vertices}
    for c, m in enumerate(classes, start=1):
        for v in H.vertices_of(m):
            L[v].add(c)
    return {v: frozenset(s) for v, s in L.items()}


def classes_from_lists(H: Hypergraph, L: dict[Vertex, Iterable[int]]) -> tuple[int, ...]:
    """Sorted multiset of colour classes (as vertex masks) of a list assignment.

    Two list assignments differ by a colour permutation iff these agree.
    """
    where: dict[int, int] = {}
    for v in H.vertices:
        for c in L[v]:
            where[c] = where.get(c, 0) | 1 << H.index[v]
    return tuple(sorted(where.values()))


def list_guard(H: Hypergraph, k: int, max_order: int, max_k: int) -> None:
    if H.order > max_order or k > max_k:
        raise BudgetExceeded(f"list enumeration guard: order {H.order} (max {max_order}), k {k} (max {max_k})")


def enum_list_assignments(
    H: Hypergraph, k: int, *, max_order: int = 6, max_k: int = 3
) -> Iterator[dict[Vertex, frozenset[int]]]:
    """All assignments with |L(v)| = k, one per colour-permutation orbit.

    An orbit is determined by the multiset of colour classes
    {v : c in L(v)}, so orbits are enumerated as exact k-fold covers of V(H)
    by non-empty vertex sets.  Colours are 1..m with m <= k|V(H)|.
    """
    if k < 0:
        raise DomainError("list size must be non-negative")
    list_guard(H, k, max_order, max_k)
    n = H.order
    for classes in exact_covers(n, [k] * n, range(1, 1 << n)):
        yield lists_from_classes(H, classes)


def permute_mask(m: int, perm: Sequence[int]) -> int:
    out = 0
    for v, w in enumerate(perm):
        if m >> v & 1:
            out |= 1 << w
    return out


# -- critical pairs -------------------------------------------------------------


def _orbit_key(classes: Sequence[int], auts: Sequence[Sequence[int]]) -> tuple[int, ...]:
    return min(tuple(sorted(permute_mask(m, g) for m in classes)) for g in auts)


def search_critical(P, k: int, b: EnumerationBounds, *, max_k: int = 3):
    """All connected (P, L)-critical pairs with |L(v)| = k, up to joint symmetry.

    Pairs are identified under vertex automorphisms of H acting together with
    colour renaming.  Only list assignments whose colour classes all induce
    non-members of P are examined: if a class A induces a member, a colouring
    of H - v (v in A) restricts to H - A without using that colour, and giving
    A the colour extends it to H, so H is not critical.
    """
    from .coloring import Colorer

    if k < 1 or k > max_k:
        raise BudgetExceeded(f"search_critical guard: k = {k} (max {max_k})")
    bounds = EnumerationBounds(**{**b.__dict__, "connected_only": True})
    for H in enum_hypergraphs(bounds):
        n = H.order
        col = Colorer(H, P)
        allowed = [m for m in range(1, 1 << n) if not col.good(m)]
        auts = automorphisms(H)
        seen = set()
        for classes in exact_covers(n, [k] * n, allowed):
            key = _orbit_key(classes, auts)
            if key in seen:
                continue
            seen.add(key)
            if col.color_classes(H.full_mask, classes) is not None:
                continue
            if all(col.color_classes(H.full_mask & ~(1 << i), classes) is not None for i in range(n)):
                yield H, lists_from_classes(H, key)
