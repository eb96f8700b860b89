import itertools

import numpy as np

from hypercolor.core import cycle, induced
from hypercolor.degeneracy import find_f_partition, is_strictly_h_degenerate
from hypercolor.enumeration import EnumerationBounds, enum_hypergraphs
from hypercolor.sweeps import (
    SweepResult,
    _flat_index,
    degenerate_tables,
    partition_table,
    sweep_brooks,
    sweep_degeneracy,
    sweep_gallai,
    sweep_hard_pairs,
    sweep_monotonicity,
    sweep_sigma,
    sweep_theorem3,
    sweep_theorem6,
)

TINY = EnumerationBounds(3, max_edges=4, max_edge_size=3, max_multiplicity=2)
TINY_CONNECTED = EnumerationBounds(3, max_edges=4, max_edge_size=3, max_multiplicity=2, connected_only=True)


def test_degenerate_table_matches_direct_subset_search():
    cap = 2
    for H in enum_hypergraphs(EnumerationBounds(3, max_edges=3, max_edge_size=3, max_multiplicity=2)):
        full = degenerate_tables(H, cap)[(1 << H.order) - 1]
        for h in itertools.product(range(cap + 1), repeat=H.order):
            expected = all(
                any(induced(H, X).degrees[v] < h[H.index[v]] for v in X)
                for r in range(1, H.order + 1)
                for X in itertools.combinations(H.vertices, r)
            )
            assert bool(full[h]) == expected


def test_partition_table_matches_search():
    cap = 2
    for H in enum_hypergraphs(TINY):
        if H.order == 0:
            continue
        table = partition_table(H, cap)
        for a in itertools.product(range(cap + 1), repeat=H.order):
            for b in itertools.product(range(cap + 1), repeat=H.order):
                f = {v: (a[i], b[i]) for i, v in enumerate(H.vertices)}
                assert bool(table[_flat_index(a, cap), _flat_index(b, cap)]) == (find_f_partition(H, f) is not None)


def test_table_shape():
    t = partition_table(cycle(3), 1)
    assert t.shape == (8, 8) and t.dtype == np.bool_
    assert is_strictly_h_degenerate(cycle(3), {v: 2 for v in "012"}) is False


def test_small_sweeps_pass():
    for res in (
        sweep_hard_pairs(TINY_CONNECTED),
        sweep_degeneracy(TINY),
        sweep_theorem3(("O", "D:1"), (1, 2), TINY),
        sweep_brooks(("O", "D:1"), (TINY_CONNECTED,)),
        sweep_theorem6(("O", "D:1"), TINY),
        sweep_monotonicity(("O", "D:1"), TINY),
    ):
        assert res.passed, res.to_dict()
        assert res.instances > 0 and res.checks > 0


def test_sigma_and_gallai_small():
    res = sweep_sigma(deltas=(3, 4), tree_delta=4, max_order=6, props=("O",))
    assert res.passed and res.instances > 0
    res = sweep_gallai((("O", 3),), (EnumerationBounds(4, max_edges=6, max_edge_size=2),))
    assert res.passed, res.to_dict()


def test_result_merge_and_witness_cap():
    a, b = SweepResult("x"), SweepResult("x")
    for i in range(30):
        b.fail(i=i)
    b.instances, b.checks = 3, 4
    a.merge(b)
    assert a.violation_count == 30 and len(a.violations) == 20 and not a.passed
    assert a.to_dict()["instances"] == 3


def test_sweeps_are_deterministic():
    assert sweep_theorem6(("O",), TINY).to_dict() == sweep_theorem6(("O",), TINY).to_dict()
