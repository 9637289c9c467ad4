"""Exhaustive scans over orientations, mixed orientations and signings.

Assignments are indexed 0 .. space-1 (bit or trit strings over the edge
list), enumerated in fixed-size chunks and certified in bulk.  For
k in {3, 4, 6} the two-eigenvalue filter is the integer quadratic identity
evaluated with batched integer matrix products, so a 2^20-point scan needs
no eigensolver calls.  Float filtering (other orders) batches LAPACK
eigensolves; the module's own Jacobi solver cross-checks hits in the tests.

The index space splits into contiguous prefix ranges that can be scanned
independently and merged; results are deterministic regardless of the
partitioning (hits are re-sorted by canonical encoding).
"""

from __future__ import annotations

import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations

import numpy as np

from .certify import two_ev_candidates
from .cyclotomic import EXACT_ORDERS, RootOfUnity, _CONJ_CONST, _CONJ_LIN, _SQ_CONST, _SQ_LIN
from .graphs import (
    Graph,
    MixedGraph,
    OrientedGraph,
    SignedGraph,
    are_isomorphic,
    is_connected,
)
from . import io as graph_io

MAX_SPACE = 1 << 24
DEFAULT_CHUNK = 4096


class SearchError(ValueError):
    pass


@dataclass(frozen=True)
class SearchReport:
    underlying_id: str
    mode: str  # oriented | mixed | signed | connected-oriented
    k: int | None
    space_size: int
    skipped_disconnected: int
    hits: tuple
    hits_up_to_iso: tuple
    elapsed: float

    def to_json_obj(self):
        return {
            "underlying": self.underlying_id,
            "mode": self.mode,
            "k": self.k,
            "space_size": self.space_size,
            "skipped_disconnected": self.skipped_disconnected,
            "hit_count": len(self.hits),
            "hits": [_encode_hit(h) for h in self.hits],
            "hits_up_to_iso": [_encode_hit(h) for h in self.hits_up_to_iso],
            "elapsed": self.elapsed,
        }


def _encode_hit(h):
    return graph_io.dump_graph(h).strip()


def _canonical_sort(graphs):
    if not graphs:
        return ()
    if isinstance(graphs[0], SignedGraph):
        return tuple(sorted(graphs, key=lambda S: (S.n, S.signed_edges)))
    return tuple(sorted(graphs, key=lambda D: D.canonical_key()))


def dedup_up_to_iso(graphs):
    """Greedy isomorphism deduplication; input order is preserved."""
    reps = []
    for g in graphs:
        if isinstance(g, SignedGraph):
            # signed hits are deduplicated on exact equality only
            if g not in reps:
                reps.append(g)
            continue
        if not any(are_isomorphic(g, r) for r in reps):
            reps.append(g)
    return tuple(reps)


def _graph_id(G: Graph):
    return f"graph(n={G.n},m={len(G.edges)})"


def _regular_degree(G: Graph):
    degs = {G.degree(v) for v in range(G.n)}
    return degs.pop() if len(degs) == 1 else None


def _candidate_pq(G: Graph):
    """(p, q) candidates for the exact two-eigenvalue identity, or [] when
    the underlying graph is irregular (its H^2 diagonal, the degree
    sequence, can then never be constant)."""
    d = _regular_degree(G)
    if d is None or d == 0:
        return []
    pairs = []
    for r_desc, s_desc, p, q in two_ev_candidates(d):
        r, s = r_desc.value, s_desc.value
        m = G.n * (-s) / (r - s)
        if abs(m - round(m)) > 1e-9 or not 0 < round(m) < G.n:
            continue  # trace can never balance for this pair
        pairs.append((p, q))
    return pairs


def _ranges(space, partitions):
    bounds = np.linspace(0, space, partitions + 1, dtype=np.int64)
    return [(int(a), int(b)) for a, b in zip(bounds[:-1], bounds[1:]) if a < b]


def _run_partitions(space, scan_range, threads, partitions):
    if partitions is None:
        partitions = max(threads, 1)
    ranges = _ranges(space, partitions)
    if threads > 1 and len(ranges) > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            parts = list(pool.map(lambda r: scan_range(*r), ranges))
    else:
        parts = [scan_range(lo, hi) for lo, hi in ranges]
    hits = [h for part in parts for h in part]
    return hits


def _exact_stamps(edges, n, k, mode):
    """Per-edge component stamps for each assignment state.

    mode 'oriented'/'signed' has 2 states per edge, 'mixed' has 3
    (arc u->v, arc v->u, undirected edge).
    """
    cc, cl = _CONJ_CONST[k], _CONJ_LIN[k]
    states = 3 if mode == "mixed" else 2
    SA = np.zeros((len(edges), states, n, n), dtype=np.int64)
    SB = np.zeros_like(SA)
    for e, (u, v) in enumerate(edges):
        if mode == "signed":
            SA[e, 0, u, v] = SA[e, 0, v, u] = 1
            SA[e, 1, u, v] = SA[e, 1, v, u] = -1
            continue
        # state 0: arc u -> v
        SB[e, 0, u, v] = 1
        SA[e, 0, v, u] = cc
        SB[e, 0, v, u] = cl
        # state 1: arc v -> u
        SB[e, 1, v, u] = 1
        SA[e, 1, u, v] = cc
        SB[e, 1, u, v] = cl
        if mode == "mixed":
            SA[e, 2, u, v] = SA[e, 2, v, u] = 1
    return SA, SB


def _float_stamps(edges, n, mode):
    """Stamps for float scans: B holds +1 where H = sigma and -1 where
    H = conj(sigma); A holds real unit entries (undirected edges)."""
    states = 3 if mode == "mixed" else 2
    SA = np.zeros((len(edges), states, n, n), dtype=np.int64)
    SB = np.zeros_like(SA)
    for e, (u, v) in enumerate(edges):
        SB[e, 0, u, v] = 1
        SB[e, 0, v, u] = -1
        SB[e, 1, v, u] = 1
        SB[e, 1, u, v] = -1
        if mode == "mixed":
            SA[e, 2, u, v] = SA[e, 2, v, u] = 1
    return SA, SB


def _assignments_to_components(idx, edges, n, SA, SB, base):
    """Component matrices (A, B) for a vector of assignment indices."""
    m = len(edges)
    states = SA.shape[1]
    C = len(idx)
    digits = (idx[:, None] // base ** np.arange(m)) % base
    onehot = np.zeros((C, m * states), dtype=np.int64)
    onehot[np.arange(C)[:, None], np.arange(m) * states + digits] = 1
    A = (onehot @ SA.reshape(m * states, n * n)).reshape(C, n, n)
    B = (onehot @ SB.reshape(m * states, n * n)).reshape(C, n, n)
    return digits, A, B


def _exact_two_ev_mask(A, B, k, pq_pairs):
    """Boolean mask: which batch members satisfy H^2 - pH + qI = 0 for some
    candidate (p, q).  H = A + B*zeta decomposed over the power basis."""
    c0, c1 = _SQ_CONST[k], _SQ_LIN[k]
    n = A.shape[1]
    A2 = np.matmul(A, A)
    B2 = np.matmul(B, B)
    cross = np.matmul(A, B) + np.matmul(B, A)
    real_base = A2 + c0 * B2
    imag_base = cross + c1 * B2
    eye = np.eye(n, dtype=np.int64)
    mask = np.zeros(A.shape[0], dtype=bool)
    for p, q in pq_pairs:
        res_r = real_base - p * A + q * eye
        res_i = imag_base - p * B
        mask |= (np.abs(res_r).max(axis=(1, 2)) == 0) & (np.abs(res_i).max(axis=(1, 2)) == 0)
    return mask


def _float_two_ev_mask(H, tol):
    """Cluster count == 2 via batched eigensolves."""
    eigs = np.linalg.eigvalsh(H)
    gaps = np.diff(eigs, axis=1) > tol
    return gaps.sum(axis=1) == 1


def _decode_oriented(digits_row, edges, n):
    arcs = [(u, v) if d == 0 else (v, u) for (u, v), d in zip(edges, digits_row)]
    return OrientedGraph(n, arcs)


def _decode_mixed(digits_row, edges, n):
    arcs, und = [], []
    for (u, v), d in zip(edges, digits_row):
        if d == 0:
            arcs.append((u, v))
        elif d == 1:
            arcs.append((v, u))
        else:
            und.append((u, v))
    return MixedGraph(n, tuple(arcs), tuple(und))


def _decode_signed(digits_row, edges, n):
    signed = [(u, v, 1 if d == 0 else -1) for (u, v), d in zip(edges, digits_row)]
    return SignedGraph(n, tuple(signed))


def _scan_fixed_underlying(G, k, mode, filter, tol, threads, partitions, chunk):
    edges = list(G.edges)
    m = len(edges)
    base = 3 if mode == "mixed" else 2
    space = base ** m
    if space > MAX_SPACE:
        raise SearchError(f"assignment space {space} exceeds limit {MAX_SPACE}")
    start = time.perf_counter()

    if not is_connected(G):
        return SearchReport(_graph_id(G), mode, k, space, space, (), (),
                            time.perf_counter() - start)

    decode = {"oriented": _decode_oriented, "mixed": _decode_mixed,
              "signed": _decode_signed}[mode]

    if filter == "two-ev":
        exact = mode == "signed" or k in EXACT_ORDERS
        pq_pairs = _candidate_pq(G) if exact else None
        if exact and not pq_pairs:
            return SearchReport(_graph_id(G), mode, k, space, 0, (), (),
                                time.perf_counter() - start)
        if exact:
            SA, SB = _exact_stamps(edges, G.n, 6 if mode == "signed" else k, mode)
            sigma = None
        else:
            SA, SB = _float_stamps(edges, G.n, mode)
            sigma = RootOfUnity(k).value

        def scan_range(lo, hi):
            found = []
            for clo in range(lo, hi, chunk):
                idx = np.arange(clo, min(clo + chunk, hi), dtype=np.int64)
                digits, A, B = _assignments_to_components(idx, edges, G.n, SA, SB, base)
                if exact:
                    if mode == "signed":
                        mask = _exact_signed_mask(A, pq_pairs)
                    else:
                        mask = _exact_two_ev_mask(A, B, k, pq_pairs)
                else:
                    H = A.astype(np.complex128)
                    H += np.where(B > 0, sigma, 0) + np.where(B < 0, sigma.conjugate(), 0)
                    mask = _float_two_ev_mask(H, tol)
                for row in digits[mask]:
                    found.append(decode(row, edges, G.n))
            return found

        hits = _run_partitions(space, scan_range, threads, partitions)
    else:
        # custom predicate: plain per-assignment loop
        hits = []
        for t in range(space):
            digits = []
            x = t
            for _ in range(m):
                digits.append(x % base)
                x //= base
            D = decode(digits, edges, G.n)
            if filter(D):
                hits.append(D)

    hits = _canonical_sort(hits)
    reps = dedup_up_to_iso(hits)
    return SearchReport(_graph_id(G), mode, k, space, 0, hits, reps,
                        time.perf_counter() - start)


def _exact_signed_mask(S, pq_pairs):
    n = S.shape[1]
    S2 = np.matmul(S, S)
    eye = np.eye(n, dtype=np.int64)
    mask = np.zeros(S.shape[0], dtype=bool)
    for p, q in pq_pairs:
        mask |= np.abs(S2 - p * S + q * eye).max(axis=(1, 2)) == 0
    return mask


def search_orientations(G: Graph, k: int, filter="two-ev", tol=1e-6, threads=1,
                        partitions=None, chunk=DEFAULT_CHUNK) -> SearchReport:
    """Scan all 2^|E| orientations of G for the given eigenvalue filter."""
    return _scan_fixed_underlying(G, k, "oriented", filter, tol, threads, partitions, chunk)


def search_mixed_orientations(G: Graph, k: int, filter="two-ev", tol=1e-6, threads=1,
                              partitions=None, chunk=DEFAULT_CHUNK) -> SearchReport:
    """Scan all 3^|E| mixed orientations (arc, reversed arc, undirected edge)."""
    return _scan_fixed_underlying(G, k, "mixed", filter, tol, threads, partitions, chunk)


def search_signings(G: Graph, filter="two-ev", tol=1e-6, threads=1,
                    partitions=None, chunk=DEFAULT_CHUNK) -> SearchReport:
    """Scan all 2^|E| signings of G; two-eigenvalue filtering is done with
    the exact integer quadratic identity on the signed adjacency matrix."""
    return _scan_fixed_underlying(G, None, "signed", filter, tol, threads, partitions, chunk)


def connected_edge_subsets(n):
    """All edge subsets of K_n that form a connected graph on all n vertices."""
    pairs = list(combinations(range(n), 2))
    for bits in range(1 << len(pairs)):
        edges = [pairs[i] for i in range(len(pairs)) if bits >> i & 1]
        if len(edges) < n - 1:
            continue
        G = Graph(n, tuple(edges))
        if is_connected(G):
            yield G


def scan_connected_oriented_graphs(k: int, n_max: int, tol=1e-6, allow_low_k=False,
                                   chunk=DEFAULT_CHUNK) -> SearchReport:
    """Scan every orientation of every connected graph on 2..n_max vertices
    for exactly two distinct eigenvalues at the primitive k-th root with
    maximal real part.  Orders k <= 8 need allow_low_k=True."""
    if k <= 8 and not allow_low_k:
        raise SearchError("this desk check is meant for k > 8 (pass allow_low_k to override)")
    if n_max > 6:
        raise SearchError("desk scale is n_max <= 6")
    start = time.perf_counter()
    hits = []
    space = 0
    skipped = 0
    for n in range(2, n_max + 1):
        for G in connected_edge_subsets(n):
            rep = search_orientations(G, k, tol=tol, chunk=chunk)
            space += rep.space_size
            skipped += rep.skipped_disconnected
            hits.extend(rep.hits)
    hits = _canonical_sort(hits)
    reps = dedup_up_to_iso(hits)
    return SearchReport(f"connected graphs n<={n_max}", "connected-oriented", k,
                        space, skipped, hits, reps, time.perf_counter() - start)
