"""Hereditary hypergraph properties as plug-ins.

A property is a membership predicate plus two declared facts: whether it is
additive (closed under disjoint union) and its degeneracy constant r, the
least minimum degree of a minimal non-member.  The constant cannot be derived
from the predicate in general, so it is declared and then cross-checked by
bounded enumeration.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Callable, Iterable, Optional, Sequence

from .core import Hypergraph, edgeless, induced, induced_mask, to_json
from .degeneracy import _eliminate
from .errors import DomainError
from .structure import components

MaskMember = Callable[[Sequence[int], int, int], bool]


@dataclass(frozen=True)
class Property:
    """A hypergraph property.

    ``mask_member(masks, alive, n)`` is an optional fast path deciding
    membership of the subhypergraph induced by the vertex bitmask ``alive``
    given all edge masks of the host; it must agree with ``member``.
    """

    name: str
    member: Callable[[Hypergraph], bool] = field(compare=False)
    additive: bool
    r: int
    mask_member: Optional[MaskMember] = field(default=None, compare=False)

    def __call__(self, H: Hypergraph) -> bool:
        return self.member(H)

    def member_mask(self, H: Hypergraph, mask: int) -> bool:
        if self.mask_member is not None:
            return self.mask_member(H.masks, mask, H.order)
        return self.member(induced_mask(H, mask))


def _edgeless_masks(masks: Sequence[int], alive: int, n: int) -> bool:
    return not any(m & alive == m for m in masks)


def edgeless_property() -> Property:
    return Property("O", lambda H: H.size == 0, additive=True, r=1, mask_member=_edgeless_masks)


def max_degree_property(k: int) -> Property:
    """S_k: maximum degree at most k."""
    if k < 0:
        raise DomainError("S(k) needs k >= 0")

    def masks_ok(masks: Sequence[int], alive: int, n: int) -> bool:
        inside = [m for m in masks if m & alive == m]
        return all(sum(1 for m in inside if m >> v & 1) <= k for v in range(n) if alive >> v & 1)

    return Property(f"S:{k}", lambda H: H.max_degree <= k, additive=True, r=1, mask_member=masks_ok)


def degenerate_property(k: int) -> Property:
    """D_k: strictly (k+1)-degenerate."""
    if k < 0:
        raise DomainError("D(k) needs k >= 0")

    def member(H: Hypergraph) -> bool:
        return _eliminate(H.masks, H.full_mask, [k + 1] * H.order)

    def masks_ok(masks: Sequence[int], alive: int, n: int) -> bool:
        return _eliminate(masks, alive, [k + 1] * n)

    return Property(f"D:{k}", member, additive=True, r=k + 1, mask_member=masks_ok)


_REGISTRY: dict[str, Callable[..., Property]] = {}


def register(prefix: str, factory: Callable[..., Property]) -> None:
    """Register a property factory under ``prefix`` (``NAME`` or ``NAME:k``)."""
    _REGISTRY[prefix] = factory


register("O", edgeless_property)
register("S", max_degree_property)
register("D", degenerate_property)


def builtin(name: str) -> Property:
    """Look up a property by name: ``O``, ``S:k``/``S(k)`` or ``D:k``/``D(k)``."""
    m = re.fullmatch(r"\s*([A-Za-z_]\w*)\s*(?:[:(]\s*(\d+)\s*\)?)?\s*", name)
    if not m or m.group(1) not in _REGISTRY:
        raise DomainError(f"unknown property {name!r}")
    factory = _REGISTRY[m.group(1)]
    try:
        return factory(int(m.group(2))) if m.group(2) is not None else factory()
    except TypeError:
        raise DomainError(f"property {name!r}: wrong number of parameters") from None


def in_F(P: Property, H: Hypergraph) -> bool:
    """H is a minimal non-member: H not in P, but H - v in P for every v."""
    if P.member(H):
        return False
    return all(P.member_mask(H, H.full_mask & ~(1 << i)) for i in range(H.order))


def d_P_bounded(P: Property, max_order: int, **edge_bounds) -> int | None:
    """Least minimum degree over members of F(P) within the enumeration bounds.

    ``edge_bounds`` are passed to :class:`EnumerationBounds`.  Returns None
    when no minimal non-member is found.
    """
    from .enumeration import EnumerationBounds, enum_hypergraphs

    best = None
    for H in enum_hypergraphs(EnumerationBounds(max_order=max_order, **edge_bounds)):
        if in_F(P, H):
            best = H.min_degree if best is None else min(best, H.min_degree)
    return best


@dataclass
class SmoothnessReport:
    property: str
    instances: int = 0
    members: int = 0
    F_members: int = 0
    violations: list[dict] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_dict(self) -> dict:
        return {
            "property": self.property,
            "instances": self.instances,
            "members": self.members,
            "F_members": self.F_members,
            "violations": self.violations,
            "ok": self.ok,
        }


def verify_smooth(P: Property, instances: Iterable[Hypergraph]) -> SmoothnessReport:
    """Check smoothness consequences on every instance of a stream.

    Checks: K_0 and K_1 are members; hereditary closure over all induced
    subhypergraphs; minimal non-members are exactly the non-members all of
    whose proper induced subhypergraphs are members; a non-member contains an
    induced minimal non-member; a vertex whose deletion repairs membership has
    degree at least r; membership is decided by components when the property
    is declared additive; some instance is a non-member.
    """
    rep = SmoothnessReport(P.name)

    def bad(kind: str, H: Hypergraph, detail: str = "") -> None:
        rep.violations.append({"check": kind, "instance": to_json(H), "detail": detail})

    for n in (0, 1):
        if not P.member(edgeless(n)):
            bad("contains K_0 and K_1", edgeless(n))

    for H in instances:
        rep.instances += 1
        n = H.order
        full = H.full_mask
        mem = [P.member_mask(H, m) for m in range(1 << n)]
        if P.member(H) != mem[full]:
            bad("mask fast path", H)
        is_member = mem[full]
        rep.members += is_member

        if is_member:
            holes = [m for m in range(1 << n) if not mem[m]]
            if holes:
                bad("hereditary", H, f"induced non-member on {H.vertices_of(holes[0])}")

        minimal = [m for m in range(1, 1 << n) if not mem[m] and all(mem[m & ~(1 << i)] for i in range(n) if m >> i & 1)]
        proper_all = all(mem[m] for m in range(full)) if n else True
        f_direct = in_F(P, H)
        rep.F_members += f_direct
        if f_direct != (not is_member and proper_all):
            bad("F characterisation", H)
        if (not is_member) != bool(minimal):
            bad("non-member contains induced F member", H)

        if not is_member:
            for i, v in enumerate(H.vertices):
                if mem[full & ~(1 << i)] and H.degrees[v] < P.r:
                    bad("deletion degree bound", H, f"vertex {v} has degree {H.degrees[v]} < r = {P.r}")

        if P.additive and n:
            comps = components(H)
            if len(comps) > 1 and is_member != all(P.member(induced(H, c)) for c in comps):
                bad("additive", H, "membership differs from componentwise membership")

    if rep.instances and rep.members == rep.instances:
        rep.violations.append({"check": "non-trivial", "instance": None, "detail": "every instance is a member"})
    return rep


__all__ = [
    "Property",
    "SmoothnessReport",
    "builtin",
    "d_P_bounded",
    "degenerate_property",
    "edgeless_property",
    "in_F",
    "max_degree_property",
    "register",
    "verify_smooth",
]
