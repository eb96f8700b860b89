import itertools

import pytest

from hypercolor.core import build, complete, cycle, path, relabel, replicate
from hypercolor.enumeration import (
    EnumerationBounds,
    automorphisms,
    canonical_form,
    canonical_key,
    enum_hypergraphs,
    enum_list_assignments,
    exact_covers,
    search_critical,
)
from hypercolor.errors import BudgetExceeded, DomainError
from hypercolor.property import builtin


def brute_key(H):
    # minimum over all vertex bijections of the sorted relabelled edge masks
    n = H.order
    best = None
    for perm in itertools.permutations(range(n)):
        key = tuple(sorted(sum(1 << perm[i] for i in range(n) if m >> i & 1) for m in H.masks))
        best = key if best is None or key < best else best
    return n, best


def test_counts_from_hand_enumeration():
    got = list(enum_hypergraphs(EnumerationBounds(3, max_edges=3, connected_only=True)))
    assert len(got) == 4
    got = list(enum_hypergraphs(EnumerationBounds(2, max_edges=2, max_multiplicity=2, connected_only=True)))
    assert len(got) == 3
    assert [H.order for H in enum_hypergraphs(EnumerationBounds(0))] == [0]


def test_known_graph_counts():
    # unlabelled simple graphs on n vertices: 1, 1, 2, 4, 11, 34
    for n, count in [(1, 1), (2, 2), (3, 4), (4, 11), (5, 34)]:
        b = EnumerationBounds(n, max_edges=10, min_order=n)
        assert sum(1 for _ in enum_hypergraphs(b)) == count
    # connected simple graphs on 5 vertices: 21
    b = EnumerationBounds(5, max_edges=10, min_order=5, connected_only=True)
    assert sum(1 for _ in enum_hypergraphs(b)) == 21


def test_enumeration_matches_brute_force_classes():
    b = EnumerationBounds(4, max_edges=4, max_edge_size=3, max_multiplicity=2)
    got = [brute_key(H) for H in enum_hypergraphs(b)]
    assert len(got) == len(set(got))
    # every labelled hypergraph within bounds lands in an emitted class
    for n in range(5):
        types = [m for m in range(1 << n) if bin(m).count("1") in (2, 3)]
        for k in range(5):
            for combo in itertools.combinations_with_replacement(types, k):
                if max(combo.count(t) for t in combo) if combo else 0 > 2:
                    continue
                if combo and max(combo.count(t) for t in combo) > 2:
                    continue
                names = [str(i) for i in range(n)]
                H = build(names, [[names[i] for i in range(n) if m >> i & 1] for m in combo])
                assert brute_key(H) in set(got)


def test_canonical_form_matches_isomorphism():
    Hs = list(enum_hypergraphs(EnumerationBounds(5, max_edges=4, max_edge_size=3, max_multiplicity=2)))
    forms = [canonical_form(H) for H in Hs]
    assert len(forms) == len(set(forms))
    for H in Hs[::7]:
        for perm in list(itertools.permutations(H.vertices))[::11]:
            G = relabel(H, dict(zip(H.vertices, [f"x{p}" for p in perm])))
            assert canonical_form(G) == canonical_form(H)


def test_canonical_form_examples():
    C5 = cycle(5)
    assert canonical_form(C5) == canonical_form(relabel(C5, {"0": "z", "3": "q"}))
    assert canonical_form(complete(3)) != canonical_form(path(3))
    assert canonical_form(replicate(complete(2), 2)) != canonical_form(complete(2))
    with pytest.raises(BudgetExceeded):
        canonical_key(path(20), guard=16)


def test_automorphism_counts():
    assert len(automorphisms(cycle(5))) == 10
    assert len(automorphisms(complete(4))) == 24
    assert len(automorphisms(path(3))) == 2


def test_list_assignment_orbits():
    K2 = complete(2)
    assert len(list(enum_list_assignments(K2, 1))) == 2
    assert len(list(enum_list_assignments(complete(1), 2))) == 1
    orbits = list(enum_list_assignments(K2, 2))
    assert sorted(len(L["0"] & L["1"]) for L in orbits) == [0, 1, 2]
    with pytest.raises(BudgetExceeded):
        list(enum_list_assignments(K2, 4))


def test_list_orbits_against_brute_force():
    # orbits of labelled assignments over the colour universe {1..k n}
    H = path(3)
    k = 2
    n = H.order
    universe = range(1, k * n + 1)
    seen = set()
    for lists in itertools.product(itertools.combinations(universe, k), repeat=n):
        classes = {}
        for i, cs in enumerate(lists):
            for c in cs:
                classes[c] = classes.get(c, 0) | 1 << i
        seen.add(tuple(sorted(classes.values())))
    assert len(list(enum_list_assignments(H, k))) == len(seen)


def test_exact_covers_unique():
    covers = list(exact_covers(3, [2, 2, 2], range(1, 8)))
    assert len(covers) == len(set(covers))
    with pytest.raises(DomainError):
        list(exact_covers(2, [1], [1]))


def test_bounds_validation():
    with pytest.raises(DomainError):
        EnumerationBounds(3, max_edge_size=1)
    with pytest.raises(DomainError):
        EnumerationBounds(-1)
    with pytest.raises(DomainError):
        EnumerationBounds(3, max_multiplicity=0)


def _as_sorted_lists(L):
    return sorted(tuple(sorted(cs)) for cs in L.values())


def test_search_critical_examples():
    O, D1 = builtin("O"), builtin("D:1")
    got = list(search_critical(O, 2, EnumerationBounds(5, max_edges=10)))
    forms = {(canonical_form(H), tuple(_as_sorted_lists(L))) for H, L in got}
    assert (canonical_form(cycle(3)), ((1, 2),) * 3) in forms
    assert (canonical_form(cycle(5)), ((1, 2),) * 5) in forms
    got = list(search_critical(D1, 1, EnumerationBounds(5, max_edges=10)))
    cycles = {canonical_form(cycle(n)) for n in (3, 4, 5)}
    assert cycles <= {canonical_form(H) for H, _ in got}
    got = list(search_critical(O, 1, EnumerationBounds(2)))
    assert [(canonical_form(H), _as_sorted_lists(L)) for H, L in got] == [(canonical_form(complete(2)), [(1,), (1,)])]


def test_search_critical_against_full_orbit_scan():
    from hypercolor.coloring import is_PL_critical

    O = builtin("O")
    b = EnumerationBounds(4, max_edges=5, max_edge_size=3)
    fast = {(canonical_form(H), tuple(_as_sorted_lists(L))) for H, L in search_critical(O, 2, b)}
    slow = 0
    for H in enum_hypergraphs(EnumerationBounds(4, max_edges=5, max_edge_size=3, connected_only=True)):
        for L in enum_list_assignments(H, 2, max_order=4):
            slow += is_PL_critical(H, O, L).is_critical
    # the fast search reports each joint orbit once; the scan counts colour orbits only
    assert 0 < len(fast) <= slow


def test_deterministic_order():
    b = EnumerationBounds(4, max_edges=4, max_edge_size=3)
    assert [canonical_form(H) for H in enum_hypergraphs(b)] == [canonical_form(H) for H in enum_hypergraphs(b)]
