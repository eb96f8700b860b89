"""P-colourings, list colourings, chromatic numbers and criticality.

A (P, L)-colouring picks a colour from each vertex's list so that every colour
class induces a member of P.  All searches are exhaustive backtracking; the
membership of candidate colour classes is memoised per vertex bitmask.

List assignments are handled up to colour renaming through their colour
classes: the colour c is described by the vertex set {v : c in L(v)}, and a
list assignment up to renaming is the multiset of these sets.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

from .core import Hypergraph, Vertex, induced, shrink
from .enumeration import canonical_form, exact_covers, list_guard
from .errors import DomainError
from .property import Property

ListAssignment = Mapping[Vertex, Iterable[int]]
Coloring = dict[Vertex, int]


class Colorer:
    """Colouring engine for one hypergraph and one property."""

    def __init__(self, H: Hypergraph, P: Property):
        self.H = H
        self.P = P
        self._good: dict[int, bool] = {0: True}
        n = H.order
        deg = [H.degrees[v] for v in H.vertices]
        # descending degree, ties by identifier
        self.order = sorted(range(n), key=lambda i: (-deg[i], i))

    def good(self, mask: int) -> bool:
        """Does the vertex set ``mask`` induce a member of P?"""
        g = self._good.get(mask)
        if g is None:
            g = self._good[mask] = self.P.member_mask(self.H, mask)
        return g

    def color(self, alive: int, lists: Sequence[Sequence[int]]) -> dict[int, int] | None:
        """Colour the vertices of ``alive``; ``lists[i]`` are the colours of vertex i."""
        verts = [i for i in self.order if alive >> i & 1]
        classes: dict[int, int] = {}
        chosen: dict[int, int] = {}
        good = self.good

        def go(k: int) -> bool:
            if k == len(verts):
                return True
            v = verts[k]
            bit = 1 << v
            for c in lists[v]:
                cls = classes.get(c, 0)
                if good(cls | bit):
                    classes[c] = cls | bit
                    chosen[v] = c
                    if go(k + 1):
                        return True
                    classes[c] = cls
            return False

        return chosen if go(0) else None

    def color_classes(self, alive: int, classes: Sequence[int]) -> dict[int, int] | None:
        """Colour ``alive`` where colour j is available exactly on ``classes[j]``."""
        lists = [[j for j, m in enumerate(classes) if m >> v & 1] for v in range(self.H.order)]
        return self.color(alive, lists)

    def all_colorable(self, sizes: Sequence[int]) -> tuple[bool, tuple[int, ...] | None]:
        """Is every list assignment with |L(v)| = sizes[v] colourable?

        Returns (answer, colour classes of a bad assignment).  Let Q(M) say
        that every such assignment on H[M] is colourable.  Q(M) holds iff
        Q(M - v) for all v in M and every assignment whose colour classes all
        induce non-members of P is colourable: if some class A induces a
        member, colour H[M - A] (possible by Q, which passes to subsets) and
        give all of A that colour.
        """
        n = self.H.order
        memo: dict[int, tuple[bool, tuple[int, ...] | None]] = {0: (True, None)}

        def Q(mask: int) -> tuple[bool, tuple[int, ...] | None]:
            if mask in memo:
                return memo[mask]
            for i in range(n):
                if mask >> i & 1:
                    sub = Q(mask & ~(1 << i))
                    if not sub[0]:
                        memo[mask] = sub
                        return sub
            allowed = [a for a in _submasks(mask) if not self.good(a)]
            need = [sizes[i] if mask >> i & 1 else 0 for i in range(n)]
            for classes in exact_covers(n, need, allowed):
                if self.color_classes(mask, classes) is None:
                    memo[mask] = (False, classes)
                    return memo[mask]
            memo[mask] = (True, None)
            return memo[mask]

        return Q(self.H.full_mask)


def _submasks(mask: int) -> Iterable[int]:
    s = mask
    while s:
        yield s
        s = (s - 1) & mask


def _check_total(H: Hypergraph, phi: Mapping[Vertex, object], what: str) -> None:
    missing = [v for v in H.vertices if v not in phi]
    if missing:
        raise DomainError(f"{what} undefined at {missing}")


def _lists(H: Hypergraph, L: ListAssignment) -> list[list[int]]:
    _check_total(H, L, "list assignment")
    extra = set(L) - set(H.vertices)
    if extra:
        raise DomainError(f"list assignment names unknown vertices {sorted(extra)}")
    return [sorted(set(L[v])) for v in H.vertices]


def is_P_coloring(H: Hypergraph, P: Property, phi: Mapping[Vertex, int]) -> bool:
    """Every colour class induces a member of P."""
    _check_total(H, phi, "colouring")
    classes: dict[int, int] = {}
    for i, v in enumerate(H.vertices):
        classes[phi[v]] = classes.get(phi[v], 0) | 1 << i
    return all(P.member_mask(H, m) for m in classes.values())


def is_PL_coloring(H: Hypergraph, P: Property, L: ListAssignment, phi: Mapping[Vertex, int]) -> bool:
    _check_total(H, phi, "colouring")
    return all(phi[v] in set(L[v]) for v in H.vertices) and is_P_coloring(H, P, phi)


def find_PL_coloring(H: Hypergraph, P: Property, L: ListAssignment) -> Coloring | None:
    """Some (P, L)-colouring of H, or None."""
    lists = _lists(H, L)
    got = Colorer(H, P).color(H.full_mask, lists)
    if got is None:
        return None
    return {H.vertices[i]: c for i, c in got.items()}


def is_PL_colorable(H: Hypergraph, P: Property, L: ListAssignment) -> bool:
    return find_PL_coloring(H, P, L) is not None


def chi_P(H: Hypergraph, P: Property) -> int:
    """Least k such that H has a P-colouring with colours 1..k."""
    if H.is_empty:
        return 0
    col = Colorer(H, P)
    for k in range(1, H.order + 1):
        if col.color(H.full_mask, [list(range(1, k + 1))] * H.order) is not None:
            return k
    raise AssertionError("singleton classes always give a P-colouring")  # pragma: no cover


def is_choosable(H: Hypergraph, P: Property, k: int) -> bool:
    """(P, L)-colourable for every L with |L(v)| = k."""
    return Colorer(H, P).all_colorable([k] * H.order)[0]


def chi_list_P(H: Hypergraph, P: Property, *, max_order: int = 6, max_k: int = 3) -> int:
    """Exact P-list-chromatic number.

    For each k below |H| all list assignments of size k are checked up to
    colour renaming (see :meth:`Colorer.all_colorable`); |H| colours always
    suffice since singletons are members of every smooth property.  Raises
    BudgetExceeded when a k above ``max_k`` or an order above ``max_order``
    would have to be examined.
    """
    if H.is_empty:
        return 0
    col = Colorer(H, P)
    for k in range(1, H.order):
        list_guard(H, k, max_order, max_k)
        if col.all_colorable([k] * H.order)[0]:
            return k
    return H.order


@dataclass
class CriticalityReport:
    is_critical: bool
    colorable: bool
    low_vertices: tuple[Vertex, ...] = ()
    witnesses: dict[Vertex, Coloring] = field(default_factory=dict)
    degree_bound_violations: list[Vertex] = field(default_factory=list)
    prop2_checks: dict[Vertex, dict] = field(default_factory=dict)

    @property
    def prop2_ok(self) -> bool:
        return not self.degree_bound_violations and all(c["ok"] for c in self.prop2_checks.values())

    def to_dict(self) -> dict:
        return {
            "is_critical": self.is_critical,
            "colorable": self.colorable,
            "low_vertices": list(self.low_vertices),
            "witnesses": {v: dict(sorted(phi.items())) for v, phi in sorted(self.witnesses.items())},
            "degree_bound_violations": list(self.degree_bound_violations),
            "prop2_checks": dict(sorted(self.prop2_checks.items())),
        }


def is_PL_critical(H: Hypergraph, P: Property, L: ListAssignment) -> CriticalityReport:
    """Decide (P, L)-criticality and, if critical, inspect the low vertices.

    For a critical H the report lists vertices with d(v) < r|L(v)| (there
    should be none) and, at each low vertex v (d(v) = r|L(v)|), the degrees
    d_c of v into each colour class c of L(v) under the witness colouring of
    H - v, which should all equal r, together with whether the edges at v are
    exactly covered by those classes.
    """
    if H.is_empty:
        raise DomainError("criticality needs a non-empty hypergraph")
    lists = _lists(H, L)
    col = Colorer(H, P)
    if col.color(H.full_mask, lists) is not None:
        return CriticalityReport(False, True)
    witnesses: dict[Vertex, Coloring] = {}
    for i, v in enumerate(H.vertices):
        got = col.color(H.full_mask & ~(1 << i), lists)
        if got is None:
            return CriticalityReport(False, False)
        witnesses[v] = {H.vertices[j]: c for j, c in got.items()}

    r = P.r
    rep = CriticalityReport(True, False, witnesses=witnesses)
    rep.degree_bound_violations = [v for i, v in enumerate(H.vertices) if H.degrees[v] < r * len(lists[i])]
    rep.low_vertices = tuple(v for i, v in enumerate(H.vertices) if H.degrees[v] == r * len(lists[i]))
    for v in rep.low_vertices:
        phi = witnesses[v]
        d_c = {}
        covered: set[int] = set()
        for c in sorted(set(L[v])):
            cls = {u for u, col_u in phi.items() if col_u == c} | {v}
            eids = [e for e in H.incidence[v] if cls.issuperset(H.edges[e])]
            d_c[c] = len(eids)
            covered.update(eids)
        cover_ok = covered == set(H.incidence[v])
        rep.prop2_checks[v] = {
            "d_c": d_c,
            "all_equal_r": all(d == r for d in d_c.values()),
            "edges_covered": cover_ok,
            "ok": cover_ok and all(d == r for d in d_c.values()),
        }
    return rep


def low_vertices(H: Hypergraph, P: Property, L: ListAssignment) -> tuple[Vertex, ...]:
    return tuple(v for v in H.vertices if H.degrees[v] == P.r * len(set(L[v])))


def low_vertex_hypergraph(H: Hypergraph, P: Property, L: ListAssignment) -> Hypergraph:
    """Shrink a (P, L)-critical hypergraph to its low vertices."""
    if H.is_empty or not is_PL_critical(H, P, L).is_critical:
        raise DomainError("low-vertex hypergraph needs a (P, L)-critical hypergraph")
    return shrink(H, low_vertices(H, P, L))


def critical_core(H: Hypergraph, P: Property, *, max_order: int = 6, max_k: int = 3) -> Hypergraph:
    """A smallest induced subhypergraph with the same P-list-chromatic number.

    Ties go to the smallest canonical form, then the smallest vertex tuple.
    """
    target = chi_list_P(H, P, max_order=max_order, max_k=max_k)
    for size in range(H.order + 1):
        found = []
        for xs in itertools.combinations(H.vertices, size):
            G = induced(H, xs)
            if chi_list_P(G, P, max_order=max_order, max_k=max_k) == target:
                found.append((canonical_form(G), xs, G))
        if found:
            return min(found, key=lambda t: (t[0], t[1]))[2]
    raise AssertionError("H itself qualifies")  # pragma: no cover


def lists_to_json(L: ListAssignment) -> dict[Vertex, list[int]]:
    return {v: sorted(set(L[v])) for v in sorted(L)}


def lists_from_json(H: Hypergraph, data: Mapping[str, Sequence[int]]) -> dict[Vertex, frozenset[int]]:
    if not isinstance(data, Mapping):
        raise DomainError("list assignment JSON must be an object")
    extra = set(data) - set(H.vertices)
    if extra:
        raise DomainError(f"list assignment names unknown vertices {sorted(extra)}")
    _check_total(H, data, "list assignment")
    out = {}
    for v, cs in data.items():
        if not isinstance(cs, list) or not all(isinstance(c, int) and not isinstance(c, bool) and c >= 0 for c in cs):
            raise DomainError(f"list of {v!r} must be an array of natural numbers")
        out[v] = frozenset(cs)
    return out


__all__ = [
    "Colorer",
    "Coloring",
    "CriticalityReport",
    "ListAssignment",
    "chi_P",
    "chi_list_P",
    "critical_core",
    "find_PL_coloring",
    "is_P_coloring",
    "is_PL_coloring",
    "is_PL_colorable",
    "is_PL_critical",
    "is_choosable",
    "lists_from_json",
    "lists_to_json",
    "low_vertex_hypergraph",
    "low_vertices",
]
