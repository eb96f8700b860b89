import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hypercolor.core import build, complete, cycle, induced, path
from hypercolor.degeneracy import (
    CompleteCert,
    MergeCert,
    MonoblockCert,
    OddCycleCert,
    check_certificate,
    classify_hard_pair,
    degree_feasible,
    find_f_partition,
    is_f_partition,
    is_strictly_h_degenerate,
    is_strictly_k_degenerate,
    validate_certificate,
)
from hypercolor.errors import DomainError

from conftest import bowtie, hypergraphs


def subsets_oracle(H, h):
    # every non-empty induced subhypergraph has a vertex below its budget
    for r in range(1, H.order + 1):
        for X in itertools.combinations(H.vertices, r):
            G = induced(H, X)
            if all(G.degrees[v] >= h[v] for v in X):
                return False
    return True


def partition_oracle(H, f, p):
    for labels in itertools.product(range(p), repeat=H.order):
        parts = tuple(tuple(v for v, l in zip(H.vertices, labels) if l == i) for i in range(p))
        if all(subsets_oracle(induced(H, parts[i]), {v: f[v][i] for v in parts[i]}) for i in range(p)):
            return True
    return False


def test_degeneracy_examples():
    assert not is_strictly_k_degenerate(cycle(5), 2)
    assert is_strictly_k_degenerate(path(4), 2)
    assert is_strictly_k_degenerate(build([], []), 0)
    assert not is_strictly_k_degenerate(complete(1), 0)


@settings(max_examples=150)
@given(hypergraphs(), st.data())
def test_greedy_matches_subset_oracle(H, data):
    h = {v: data.draw(st.integers(0, 3)) for v in H.vertices}
    assert is_strictly_h_degenerate(H, h) == subsets_oracle(H, h)


@settings(max_examples=150)
@given(hypergraphs(max_order=4), st.data())
def test_partition_search_matches_oracle(H, data):
    f = {v: (data.draw(st.integers(0, 3)), data.draw(st.integers(0, 3))) for v in H.vertices}
    part = find_f_partition(H, f, 2)
    assert (part is not None) == partition_oracle(H, f, 2)
    if part is not None:
        assert is_f_partition(H, f, part)


def test_partition_examples():
    f = {v: (1, 1) for v in "01234"}
    assert find_f_partition(cycle(5), f) is None
    P3 = path(3)
    part = find_f_partition(P3, {"0": (1, 0), "1": (1, 1), "2": (1, 0)})
    assert part is not None and is_f_partition(P3, {"0": (1, 0), "1": (1, 1), "2": (1, 0)}, part)
    C4 = cycle(4)
    part = find_f_partition(C4, {v: (1, 1) for v in C4.vertices})
    assert sorted(map(sorted, part)) == [["0", "2"], ["1", "3"]]


def test_vector_function_validation():
    with pytest.raises(DomainError):
        find_f_partition(path(2), {"0": (1, 1)})
    with pytest.raises(DomainError):
        find_f_partition(path(2), {"0": (1, 1), "1": (1,)})
    with pytest.raises(DomainError):
        find_f_partition(path(2), {"0": (1, -1), "1": (1, 1)})


def test_hard_pair_examples():
    C5 = cycle(5)
    f = {v: (1, 1) for v in C5.vertices}
    cert = classify_hard_pair(C5, f)
    assert cert == OddCycleCert(C5.vertices, 1, 5, (1, 2))
    check_certificate(C5, f, cert)

    K4 = complete(4)
    f = {v: (1, 2) for v in K4.vertices}
    assert classify_hard_pair(K4, f) == CompleteCert(K4.vertices, 1, 4, (1, 2))

    B = bowtie()
    f = {v: (1, 1) for v in B.vertices}
    f["v"] = (2, 2)
    cert = classify_hard_pair(B, f)
    assert isinstance(cert, MergeCert) and cert.vertex == "v"
    assert validate_certificate(B, f, cert)

    P3 = path(3)
    g = {"0": (1, 0), "1": (1, 1), "2": (1, 0)}
    assert classify_hard_pair(P3, g) is None and find_f_partition(P3, g) is not None


def test_monoblock():
    C4 = cycle(4)
    f = {v: (2, 0) for v in C4.vertices}
    assert classify_hard_pair(C4, f) == MonoblockCert(C4.vertices, 1)


def test_loose_functions_are_not_hard():
    C5 = cycle(5)
    f = {v: (1, 1) for v in C5.vertices}
    f["0"] = (2, 1)
    assert degree_feasible(C5, f)
    assert classify_hard_pair(C5, f) is None
    assert find_f_partition(C5, f) is not None


def test_tampered_certificates_rejected():
    C5 = cycle(5)
    f = {v: (1, 1) for v in C5.vertices}
    assert not validate_certificate(C5, f, OddCycleCert(C5.vertices, 1, 5, (1, 1)))
    assert not validate_certificate(C5, f, MonoblockCert(C5.vertices, 1))
    assert not validate_certificate(C5, f, CompleteCert(C5.vertices, 1, 5, (2, 2)))
    B = bowtie()
    g = {v: (1, 1) for v in B.vertices}
    g["v"] = (2, 2)
    left = CompleteCert(("b", "c", "v"), 1, 3, (1, 1))
    assert not validate_certificate(B, g, left)
    bad = MergeCert(left, CompleteCert(("b", "e", "f"), 1, 3, (1, 1)), "v")
    assert not validate_certificate(B, g, bad)


def test_hard_pair_needs_connected():
    H = build(["a", "b", "c"], [["a", "b"]])
    with pytest.raises(DomainError):
        classify_hard_pair(H, {v: (1, 1) for v in H.vertices})


@settings(max_examples=200, deadline=None)
@given(hypergraphs(max_order=5), st.data())
def test_recognizer_equivalence_on_tight_functions(H, data):
    from hypercolor.structure import is_connected

    if H.is_empty or not is_connected(H) or H.max_degree > 6:
        return
    f = {}
    for v in H.vertices:
        d = H.degrees[v]
        a = data.draw(st.integers(max(0, d - 3), min(3, d)))
        f[v] = (a, d - a)
    cert = classify_hard_pair(H, f)
    assert (cert is None) == (find_f_partition(H, f) is not None)
    if cert is not None:
        check_certificate(H, f, cert)
