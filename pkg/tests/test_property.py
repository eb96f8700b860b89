import pytest

from hypercolor.core import build, complete, cycle, edgeless, path
from hypercolor.enumeration import EnumerationBounds, enum_hypergraphs
from hypercolor.errors import DomainError
from hypercolor.property import Property, builtin, d_P_bounded, in_F, verify_smooth

SMALL = EnumerationBounds(4, max_edges=6, max_edge_size=3, max_multiplicity=2)


@pytest.mark.parametrize("name, canonical, r", [("O", "O", 1), ("S(2)", "S:2", 1), ("D(1)", "D:1", 2), ("D:0", "D:0", 1)])
def test_builtin(name, canonical, r):
    P = builtin(name)
    assert P.name == canonical and P.r == r and P.additive


@pytest.mark.parametrize("name", ["X", "S", "D:a", ""])
def test_builtin_rejects(name):
    with pytest.raises(DomainError):
        builtin(name)


def test_minimal_forbidden_examples():
    O, D1, S1 = builtin("O"), builtin("D:1"), builtin("S:1")
    assert in_F(O, complete(2)) and not in_F(O, path(3))
    assert in_F(D1, cycle(5)) and in_F(D1, cycle(3)) and not in_F(D1, path(4))
    assert in_F(S1, path(3)) and in_F(S1, complete(3)) and not in_F(S1, path(4))
    assert in_F(O, build(["a", "b", "c"], [["a", "b", "c"]]))


@pytest.mark.parametrize("name, expected", [("O", 1), ("S:1", 1), ("S:2", 1), ("D:0", 1), ("D:1", 2)])
def test_declared_r_matches_enumeration(name, expected):
    P = builtin(name)
    assert d_P_bounded(P, 4, max_edges=6, max_edge_size=3, max_multiplicity=2) == expected == P.r


@pytest.mark.parametrize("name", ["O", "S:1", "S:2", "D:0", "D:1"])
def test_builtins_are_smooth(name):
    rep = verify_smooth(builtin(name), enum_hypergraphs(SMALL))
    assert rep.ok, rep.violations[:3]
    assert rep.F_members > 0


def test_mask_fast_path_agrees():
    for name in ("O", "S:1", "D:1"):
        P = builtin(name)
        for H in enum_hypergraphs(SMALL):
            for m in range(1 << H.order):
                from hypercolor.core import induced_mask

                assert P.member_mask(H, m) == P.member(induced_mask(H, m))


def test_non_hereditary_property_is_flagged():
    # "the number of edges is even" is not hereditary
    even = Property("even", lambda H: H.size % 2 == 0, additive=False, r=1)
    rep = verify_smooth(even, enum_hypergraphs(EnumerationBounds(3, max_edges=3)))
    assert any(v["check"] == "hereditary" for v in rep.violations)


def test_wrong_r_is_flagged():
    wrong = Property("O-wrong-r", builtin("O").member, additive=True, r=2)
    rep = verify_smooth(wrong, enum_hypergraphs(EnumerationBounds(3, max_edges=3)))
    assert any(v["check"] == "deletion degree bound" for v in rep.violations)


def test_trivial_property_is_flagged():
    everything = Property("all", lambda H: True, additive=True, r=1)
    rep = verify_smooth(everything, [edgeless(2), complete(3)])
    assert any(v["check"] == "non-trivial" for v in rep.violations)


def test_at_most_two_edges_is_actually_hereditary():
    # deleting a vertex never adds edges, so this control cannot trip heredity
    two = Property("le2", lambda H: H.size <= 2, additive=False, r=1)
    rep = verify_smooth(two, enum_hypergraphs(EnumerationBounds(3, max_edges=3)))
    assert not any(v["check"] == "hereditary" for v in rep.violations)
