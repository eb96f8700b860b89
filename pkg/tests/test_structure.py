import pytest
from hypothesis import given, settings

from hypercolor.core import build, complete, cycle, delete_vertices, edgeless, path, replicate
from hypercolor.enumeration import EnumerationBounds, enum_hypergraphs
from hypercolor.errors import DomainError
from hypercolor.structure import (
    BrickClassification,
    blocks,
    classify_brick,
    components,
    is_block,
    is_bridge,
    separating_vertices,
    trim_end_block,
)

from conftest import bowtie, hypergraphs


def test_components_and_separating_vertices():
    H = build(["a", "b", "c", "d"], [["a", "b"]])
    assert components(H) == [("a", "b"), ("c",), ("d",)]
    assert separating_vertices(bowtie()) == {"v"}
    assert separating_vertices(path(3)) == {"1"}
    assert separating_vertices(cycle(5)) == set()


def test_hyperedge_vertex_is_not_separating():
    H = build(["a", "b", "c"], [["a", "b", "c"]])
    assert separating_vertices(H) == set()
    assert is_block(H)


def test_blocks_of_bowtie():
    D = blocks(bowtie())
    assert D.blocks == (("b", "c", "v"), ("e", "f", "v"))
    assert D.separating_vertices == {"v"}
    assert D.block_adjacency == {"v": (0, 1)}
    assert all(D.is_end_block(i) for i in range(2))
    assert sorted(e for es in D.block_edges for e in es) == list(range(6))


@settings(max_examples=200)
@given(hypergraphs())
def test_blocks_agree_with_literal_separation(H):
    D = blocks(H)
    assert D.separating_vertices == separating_vertices(H)
    assert sorted(e for es in D.block_edges for e in es) == list(range(H.size))
    for b in D.blocks:
        assert len(b) == 1 or is_block(delete_vertices(H, [v for v in H.vertices if v not in b]))


def test_bridges():
    P = path(3)
    assert is_bridge(P, 0) and is_bridge(P, 1)
    assert not any(is_bridge(cycle(4), e) for e in range(4))
    star = build(["a", "b", "c"], [["a", "b", "c"]])
    assert is_bridge(star, 0)
    with pytest.raises(DomainError):
        is_bridge(P, 5)


@pytest.mark.parametrize(
    "H, expected",
    [
        (replicate(complete(3), 2), BrickClassification("tKn", 2, 3)),
        (cycle(5), BrickClassification("tCn", 1, 5)),
        (replicate(cycle(7), 3), BrickClassification("tCn", 3, 7)),
        (cycle(3), BrickClassification("tKn", 1, 3)),
        (edgeless(1), BrickClassification("tKn", 1, 1)),
    ],
)
def test_bricks(H, expected):
    assert classify_brick(H) == expected


def test_non_bricks():
    assert not classify_brick(cycle(4)).is_brick
    assert not classify_brick(build(["a", "b", "c"], [["a", "b", "c"]])).is_brick
    assert not classify_brick(build(["a", "b", "c"], [["a", "b"], ["a", "b"], ["b", "c"]])).is_brick
    with pytest.raises(DomainError):
        classify_brick(edgeless(2))


def test_brick_recognition_against_enumeration():
    # every connected multigraph on <= 5 vertices: brick iff uniform multiplicity on K_n or odd C_n
    for H in enum_hypergraphs(EnumerationBounds(5, max_edges=10, max_multiplicity=2, connected_only=True)):
        pairs = {}
        for e in H.edges:
            pairs[e] = pairs.get(e, 0) + 1
        uniform = len(set(pairs.values())) <= 1
        n = H.order
        complete_like = uniform and len(pairs) == n * (n - 1) // 2
        cycle_like = uniform and n >= 5 and n % 2 == 1 and len(pairs) == n and all(
            d == 2 * next(iter(pairs.values())) for d in H.degrees.values()
        )
        assert classify_brick(H).is_brick == (complete_like or cycle_like or n == 1)


def test_trim_end_block():
    B = bowtie()
    D = blocks(B)
    T = trim_end_block(B, D, 0)
    assert T.vertices == ("e", "f", "v")
    single = cycle(5)
    assert trim_end_block(single, blocks(single), 0).vertices == ("0",)
    P4 = path(4)
    D4 = blocks(P4)
    with pytest.raises(DomainError):
        trim_end_block(P4, D4, 1)
