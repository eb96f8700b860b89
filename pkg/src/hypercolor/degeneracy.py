"""Strict degeneracy, f-partitions and hard pairs.

A vector function assigns every vertex a tuple of p non-negative budgets.
An f-partition puts every vertex in one of p parts such that part i is
strictly f_i-degenerate.  For degree-feasible f (budgets summing to at least
the degree) a connected hypergraph has no f-partition exactly when (H, f) is
a hard pair: a vertex-merge of blocks of three kinds (monoblock, complete,
odd cycle).  Both sides are implemented here: an exhaustive partition search
and a block-wise recognizer that returns a checkable certificate.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterator, Mapping, Sequence, Union

from .core import Hypergraph, Vertex, induced
from .errors import DomainError
from .structure import BlockDecomposition, blocks, classify_brick, is_block, is_connected

VectorFunction = Mapping[Vertex, Sequence[int]]
Partition = tuple[tuple[Vertex, ...], ...]


# -- degeneracy ----------------------------------------------------------------


def _eliminate(masks: Sequence[int], alive: int, h: Sequence[int]) -> bool:
    """Greedy peeling on the vertex set ``alive``; True iff everything peels.

    Removes the lowest-index vertex whose degree (counting edges inside the
    surviving set) is below its threshold, until none is left or stuck.
    """
    inside = [m for m in masks if m & alive == m]
    while alive:
        for v in range(alive.bit_length()):
            bit = 1 << v
            if not alive & bit:
                continue
            d = 0
            for m in inside:
                if m & bit:
                    d += 1
            if d < h[v]:
                alive &= ~bit
                inside = [m for m in inside if not m & bit]
                break
        else:
            return False
    return True


def is_strictly_h_degenerate(H: Hypergraph, h: Mapping[Vertex, int] | int) -> bool:
    """Every non-empty subhypergraph has a vertex v of degree below h(v).

    Computed by greedy elimination; an integer h means the constant function.
    """
    hv = [h] * H.order if isinstance(h, int) else [h[v] for v in H.vertices]
    return _eliminate(H.masks, H.full_mask, hv)


def is_strictly_k_degenerate(H: Hypergraph, k: int) -> bool:
    return is_strictly_h_degenerate(H, k)


def degree_feasible(H: Hypergraph, f: VectorFunction) -> bool:
    """Budgets sum to at least the degree at every vertex."""
    return all(sum(f[v]) >= d for v, d in H.degrees.items())


def is_tight(H: Hypergraph, f: VectorFunction) -> bool:
    """Budgets sum to exactly the degree at every vertex."""
    return all(sum(f[v]) == d for v, d in H.degrees.items())


def _coordinate_count(H: Hypergraph, f: VectorFunction, p: int | None) -> int:
    missing = [v for v in H.vertices if v not in f]
    if missing:
        raise DomainError(f"vector function undefined at {missing}")
    lengths = {len(f[v]) for v in H.vertices}
    if p is not None:
        lengths.add(p)
    if len(lengths) > 1:
        raise DomainError(f"inconsistent coordinate counts {sorted(lengths)}")
    if not lengths:
        raise DomainError("p is required for the empty hypergraph")
    (q,) = lengths
    if q < 1:
        raise DomainError("vector functions need at least one coordinate")
    if any(x < 0 for v in H.vertices for x in f[v]):
        raise DomainError("vector function entries must be non-negative")
    return q


def find_f_partition(H: Hypergraph, f: VectorFunction, p: int | None = None) -> Partition | None:
    """Some f-partition of H, or None if there is none.

    Exhaustive backtracking over vertex -> part assignments in vertex order.
    A vertex can only join part i when f_i(v) >= 1 (otherwise the part
    restricted to that vertex alone already violates strict degeneracy), and a
    partial part that is not strictly f_i-degenerate is abandoned because the
    property passes to induced subhypergraphs.
    """
    p = _coordinate_count(H, f, p)
    n = H.order
    masks = H.masks
    budgets = [[f[v][i] for v in H.vertices] for i in range(p)]
    parts = [0] * p

    def place(v: int) -> bool:
        if v == n:
            return True
        bit = 1 << v
        for i in range(p):
            if budgets[i][v] < 1:
                continue
            trial = parts[i] | bit
            if not _eliminate(masks, trial, budgets[i]):
                continue
            parts[i] = trial
            if place(v + 1):
                return True
            parts[i] &= ~bit
        return False

    if not place(0):
        return None
    return tuple(tuple(H.vertices_of(m)) for m in parts)


def is_f_partition(H: Hypergraph, f: VectorFunction, parts: Partition) -> bool:
    p = _coordinate_count(H, f, len(parts))
    seen = [v for part in parts for v in part]
    if sorted(seen) != list(H.vertices) or len(parts) != p:
        return False
    for i, part in enumerate(parts):
        sub = induced(H, part)
        if not is_strictly_h_degenerate(sub, {v: f[v][i] for v in part}):
            return False
    return True


# -- hard pair certificates ---------------------------------------------------
# Coordinates inside certificates are 1-based, as in (n_1, ..., n_p).


@dataclass(frozen=True)
class MonoblockCert:
    """Type (M): a block with f = d_B at one coordinate and 0 elsewhere."""

    vertices: tuple[Vertex, ...]
    coordinate: int


@dataclass(frozen=True)
class CompleteCert:
    """Type (K): B = tK_n, n >= 3, f constant (t n_1, ..., t n_p)."""

    vertices: tuple[Vertex, ...]
    t: int
    n: int
    split: tuple[int, ...]


@dataclass(frozen=True)
class OddCycleCert:
    """Type (C): B = tC_n, n >= 5 odd, f = t at two coordinates."""

    vertices: tuple[Vertex, ...]
    t: int
    n: int
    pair: tuple[int, int]


@dataclass(frozen=True)
class MergeCert:
    """Two hard pairs glued at one vertex; budgets add there."""

    left: "Certificate"
    right: "Certificate"
    vertex: Vertex


Certificate = Union[MonoblockCert, CompleteCert, OddCycleCert, MergeCert]


def certificate_to_dict(cert: Certificate) -> dict:
    if isinstance(cert, MonoblockCert):
        return {"type": "M", "vertices": list(cert.vertices), "coordinate": cert.coordinate}
    if isinstance(cert, CompleteCert):
        return {"type": "K", "vertices": list(cert.vertices), "t": cert.t, "n": cert.n, "split": list(cert.split)}
    if isinstance(cert, OddCycleCert):
        return {"type": "C", "vertices": list(cert.vertices), "t": cert.t, "n": cert.n, "pair": list(cert.pair)}
    return {
        "type": "Merge",
        "vertex": cert.vertex,
        "left": certificate_to_dict(cert.left),
        "right": certificate_to_dict(cert.right),
    }


def _splits(total: int, p: int) -> Iterator[tuple[int, ...]]:
    if p == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _splits(total - first, p - 1):
            yield (first,) + rest


def _block_options(B: Hypergraph, p: int) -> list[tuple[Certificate, dict[Vertex, tuple[int, ...]]]]:
    """Every admissible (certificate, budget function) for a single block."""
    vs = B.vertices
    opts: list[tuple[Certificate, dict[Vertex, tuple[int, ...]]]] = []
    for j in range(p):
        g = {v: tuple(B.degrees[v] if i == j else 0 for i in range(p)) for v in vs}
        opts.append((MonoblockCert(vs, j + 1), g))
    brick = classify_brick(B)
    if brick.kind == "tKn" and brick.n >= 3:
        for split in _splits(brick.n - 1, p):
            if sum(1 for x in split if x) >= 2:
                val = tuple(brick.t * x for x in split)
                opts.append((CompleteCert(vs, brick.t, brick.n, split), {v: val for v in vs}))
    if brick.kind == "tCn" and brick.n >= 5:
        for k, l in combinations(range(p), 2):
            val = tuple(brick.t if i in (k, l) else 0 for i in range(p))
            opts.append((OddCycleCert(vs, brick.t, brick.n, (k + 1, l + 1)), {v: val for v in vs}))
    return opts


@lru_cache(maxsize=4096)
def _blocks_cached(H: Hypergraph) -> BlockDecomposition:
    return blocks(H)


@lru_cache(maxsize=4096)
def _options_cached(B: Hypergraph, p: int):
    return _block_options(B, p)


def _block_order(D: BlockDecomposition) -> list[tuple[int, Vertex | None]]:
    """Blocks in breadth-first order over the block tree, with the vertex
    each one shares with the blocks before it."""
    order = [(0, None)]
    done = {0}
    i = 0
    while i < len(order):
        b = order[i][0]
        for x in D.blocks[b]:
            for c in D.block_adjacency.get(x, ()):
                if c not in done:
                    done.add(c)
                    order.append((c, x))
        i += 1
    return order


def classify_hard_pair(H: Hypergraph, f: VectorFunction) -> Certificate | None:
    """A certificate that (H, f) is a hard pair, or None.

    Every hard pair is tight (budgets sum to the degree) and decomposes into
    its blocks, each of type M, K or C, with budgets adding up at separating
    vertices.  The search picks one admissible option per block so that the
    per-vertex sums equal f, then folds the blocks into a merge tree.
    """
    if H.is_empty or not is_connected(H):
        raise DomainError("classify_hard_pair needs a connected, non-empty hypergraph")
    p = _coordinate_count(H, f, None)
    fv = {v: tuple(f[v]) for v in H.vertices}
    if not is_tight(H, fv):
        return None

    D = _blocks_cached(H)
    order = _block_order(D)
    seps = D.separating_vertices
    # blocks still to be chosen that contain each separating vertex
    pending = {x: len(D.block_adjacency[x]) for x in seps}

    choices: list[list[tuple[Certificate, dict]]] = []
    for b, _ in order:
        B = induced(H, D.blocks[b])
        opts = [
            (cert, g)
            for cert, g in _options_cached(B, p)
            if all(g[v] == fv[v] for v in D.blocks[b] if v not in seps)
        ]
        if not opts:
            return None
        choices.append(opts)

    acc = {x: [0] * p for x in seps}
    picked: list[Certificate] = []

    def search(i: int) -> bool:
        if i == len(order):
            return True
        b = order[i][0]
        bseps = [v for v in D.blocks[b] if v in seps]
        for cert, g in choices[i]:
            ok = True
            for x in bseps:
                tot = [a + c for a, c in zip(acc[x], g[x])]
                if any(t > w for t, w in zip(tot, fv[x])) or (pending[x] == 1 and tuple(tot) != fv[x]):
                    ok = False
                    break
            if not ok:
                continue
            for x in bseps:
                acc[x] = [a + c for a, c in zip(acc[x], g[x])]
                pending[x] -= 1
            picked.append(cert)
            if search(i + 1):
                return True
            picked.pop()
            for x in bseps:
                acc[x] = [a - c for a, c in zip(acc[x], g[x])]
                pending[x] += 1
        return False

    if not search(0):
        return None
    cert = picked[0]
    for (_, x), nxt in zip(order[1:], picked[1:]):
        cert = MergeCert(cert, nxt, x)
    return cert


def check_certificate(H: Hypergraph, f: VectorFunction, cert: Certificate) -> None:
    """Raise ValueError unless ``cert`` proves that (H, f) is a hard pair.

    Independent of the recognizer: every base piece is re-derived from the
    induced subhypergraph it names, merges must share exactly one vertex and
    no edge, and the assembled budgets must equal f on all of H.
    """
    p = _coordinate_count(H, f, None)

    def carrier(cert: Certificate) -> tuple[set[Vertex], set[int], dict[Vertex, tuple[int, ...]]]:
        if isinstance(cert, MergeCert):
            lv, le, lg = carrier(cert.left)
            rv, re_, rg = carrier(cert.right)
            if lv & rv != {cert.vertex}:
                raise ValueError(f"merge at {cert.vertex!r}: carriers share {sorted(lv & rv)}")
            if le & re_:
                raise ValueError(f"merge at {cert.vertex!r}: carriers share edges")
            g = {**lg, **rg}
            g[cert.vertex] = tuple(a + b for a, b in zip(lg[cert.vertex], rg[cert.vertex]))
            return lv | rv, le | re_, g

        vs = set(cert.vertices)
        if not vs <= set(H.vertices):
            raise ValueError("certificate names unknown vertices")
        B = induced(H, vs)
        eids = {i for i, e in enumerate(H.edges) if vs.issuperset(e)}
        if isinstance(cert, MonoblockCert):
            if not is_block(B):
                raise ValueError(f"{sorted(vs)} is not a block")
            if not 1 <= cert.coordinate <= p:
                raise ValueError("monoblock coordinate out of range")
            j = cert.coordinate - 1
            return vs, eids, {v: tuple(B.degrees[v] if i == j else 0 for i in range(p)) for v in vs}
        brick = classify_brick(B) if is_connected(B) else None
        if isinstance(cert, CompleteCert):
            if brick is None or (brick.kind, brick.t, brick.n) != ("tKn", cert.t, cert.n) or cert.n < 3:
                raise ValueError(f"{sorted(vs)} is not {cert.t}K_{cert.n} with n >= 3")
            s = cert.split
            if len(s) != p or min(s) < 0 or sum(s) != cert.n - 1 or sum(1 for x in s if x) < 2:
                raise ValueError(f"bad split {s}")
            val = tuple(cert.t * x for x in s)
            return vs, eids, {v: val for v in vs}
        if isinstance(cert, OddCycleCert):
            if brick is None or (brick.kind, brick.t, brick.n) != ("tCn", cert.t, cert.n) or cert.n < 5:
                raise ValueError(f"{sorted(vs)} is not {cert.t}C_{cert.n} with n >= 5 odd")
            k, l = cert.pair
            if k == l or not (1 <= k <= p and 1 <= l <= p):
                raise ValueError(f"bad coordinate pair {cert.pair}")
            val = tuple(cert.t if i + 1 in (k, l) else 0 for i in range(p))
            return vs, eids, {v: val for v in vs}
        raise ValueError(f"unknown certificate type {type(cert).__name__}")

    vs, eids, g = carrier(cert)
    if vs != set(H.vertices) or eids != set(range(H.size)):
        raise ValueError("certificate does not cover H")
    for v in H.vertices:
        if g[v] != tuple(f[v]):
            raise ValueError(f"budgets differ at {v!r}: {g[v]} != {tuple(f[v])}")


def validate_certificate(H: Hypergraph, f: VectorFunction, cert: Certificate) -> bool:
    try:
        check_certificate(H, f, cert)
    except (ValueError, DomainError):
        return False
    return True
