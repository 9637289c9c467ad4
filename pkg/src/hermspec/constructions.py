"""Generators for the named extremal graphs, skew-Hadamard matrices, the
tournament correspondence, the bipartite signed/oriented transform, and the
signed hypercube family.

Every constructor validates its output (exact quadratic identity or exact
integer matrix identity) before returning it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .certify import CertifyError, certify_two_ev
from .cyclotomic import signed_adjacency
from .graphs import (
    Graph,
    GraphError,
    MixedGraph,
    OrientedGraph,
    SignedGraph,
    complete_graph,
    cube_graph,
    is_bipartite,
    underlying,
)
from .spectra import Spectrum


class ConstructionError(ValueError):
    pass


# ---------------------------------------------------------------------------
# Named graphs


def directed_edge() -> OrientedGraph:
    return OrientedGraph(2, [(0, 1)])


def directed_triangle() -> OrientedGraph:
    return OrientedGraph(3, [(0, 1), (1, 2), (2, 0)])


def oriented_k33() -> OrientedGraph:
    """The unique (up to isomorphism) orientation of K_{3,3} whose Hermitian
    adjacency matrix squares to 3I.  Parts {0,1,2} = {u,v,w} and
    {3,4,5} = {x,y,z}."""
    u, v, w, x, y, z = range(6)
    arcs = [(u, x), (x, v), (v, z), (z, u), (u, y), (v, y), (w, z), (w, x), (y, w)]
    return OrientedGraph(6, arcs)


def oriented_k55_minus_matching() -> OrientedGraph:
    """The unique regular two-eigenvalue orientation of K_{5,5} minus a
    perfect matching.  Vertices 0..4 are v1,w1,x1,y1,z1 and 5..9 are
    v2,w2,x2,y2,z2, with i non-adjacent to i+5."""
    v1, w1, x1, y1, z1, v2, w2, x2, y2, z2 = range(10)
    arcs = [
        (v1, w2), (v1, x2), (y2, v1), (z2, v1),
        (x2, w1), (w2, x1), (y1, z2), (z1, y2),
        (w2, y1), (y1, x2), (x2, z1), (z1, w2),
        (v2, y1), (v2, z1),
        (y2, w1), (x1, y2), (z2, x1), (w1, z2),
        (w1, v2), (x1, v2),
    ]
    return OrientedGraph(10, arcs)


def mixed_c4() -> MixedGraph:
    """4-cycle carrying a directed path of length three plus one undirected
    edge; the mixed graph with eigenvalues +/- sqrt(2)."""
    return MixedGraph(4, arcs=[(0, 1), (1, 2), (2, 3)], edges=[(0, 3)])


def complete_mixed(n) -> MixedGraph:
    """All-undirected K_n as a mixed graph."""
    G = complete_graph(n)
    return MixedGraph(n, (), G.edges)


def cube_mixed() -> MixedGraph:
    """The 3-cube with all edges undirected (search substrate)."""
    G = cube_graph(3)
    return MixedGraph(8, (), G.edges)


def regular_tournament(n) -> OrientedGraph:
    """Circulant regular tournament on odd n: i -> i+j (mod n) for
    j = 1..(n-1)/2."""
    if n % 2 == 0:
        raise ConstructionError("regular tournaments have odd order")
    arcs = [(i, (i + j) % n) for i in range(n) for j in range(1, (n - 1) // 2 + 1)]
    return OrientedGraph(n, arcs)


_EXPECTED_CERTS = {
    "directed-edge": (1.0, -1.0, (1, 1)),
    "directed-triangle": (1.0, -2.0, (2, 1)),
    "oriented-K33": (math.sqrt(3), -math.sqrt(3), (3, 3)),
    "oriented-K55-M": (2.0, -2.0, (5, 5)),
    "mixed-C4": (math.sqrt(2), -math.sqrt(2), (2, 2)),
}


def named_graph(name: str) -> MixedGraph:
    """Construct a fixture by name; two-eigenvalue fixtures are re-certified
    on every construction."""
    builders = {
        "directed-edge": directed_edge,
        "directed-triangle": directed_triangle,
        "oriented-K33": oriented_k33,
        "oriented-K55-M": oriented_k55_minus_matching,
        "mixed-C4": mixed_c4,
        "cube": cube_mixed,
        "regular-tournament-5": lambda: regular_tournament(5),
    }
    if name.startswith("complete-K"):
        n = int(name[len("complete-K"):])
        D = complete_mixed(n)
    elif name in builders:
        D = builders[name]()
    else:
        raise ConstructionError(f"unknown graph name {name!r}")
    if name in _EXPECTED_CERTS:
        r, s, mult = _EXPECTED_CERTS[name]
        cert = certify_two_ev(D, 6)
        if not cert.verdict or abs(cert.r - r) > 1e-12 or abs(cert.s - s) > 1e-12 \
                or cert.multiplicities != mult:
            raise ConstructionError(f"fixture {name} failed its certificate")
    return D


NAMED_GRAPHS = (
    "directed-edge",
    "directed-triangle",
    "oriented-K33",
    "oriented-K55-M",
    "mixed-C4",
    "complete-K<n>",
    "cube",
    "regular-tournament-5",
)


# ---------------------------------------------------------------------------
# Skew-Hadamard matrices and the tournament correspondence


@dataclass(frozen=True)
class SkewHadamard:
    """A (+1,-1)-matrix A of order n with A A^T = nI and A - I skew-symmetric."""

    entries: tuple  # tuple of row tuples

    def __post_init__(self):
        M = self.matrix()
        n = self.n
        if M.shape != (n, n) or not np.all(np.abs(M) == 1):
            raise ConstructionError("entries must be +/-1 and square")
        if not np.array_equal(M @ M.T, n * np.eye(n, dtype=np.int64)):
            raise ConstructionError("A A^T != nI")
        if not np.array_equal(M + M.T, 2 * np.eye(n, dtype=np.int64)):
            raise ConstructionError("A - I is not skew-symmetric")

    @property
    def n(self):
        return len(self.entries)

    def matrix(self) -> np.ndarray:
        return np.array(self.entries, dtype=np.int64)

    def to_text(self) -> str:
        return "\n".join("".join("+" if x > 0 else "-" for x in row) for row in self.entries) + "\n"

    @classmethod
    def from_matrix(cls, M):
        M = np.asarray(M, dtype=np.int64)
        return cls(tuple(tuple(int(x) for x in row) for row in M))

    @classmethod
    def from_text(cls, text):
        rows = [line.strip() for line in text.strip().splitlines() if line.strip()]
        return cls(tuple(tuple(1 if ch == "+" else -1 for ch in row) for row in rows))


def _is_prime(q):
    if q < 2:
        return False
    for p in range(2, math.isqrt(q) + 1):
        if q % p == 0:
            return False
    return True


def paley_skew_hadamard(q: int) -> SkewHadamard:
    """Skew-Hadamard matrix of order q+1 from the quadratic-residue character
    of GF(q), for primes q = 3 (mod 4)."""
    if not _is_prime(q):
        raise ConstructionError(f"{q} is not prime")
    if q % 4 != 3:
        raise ConstructionError(f"{q} is not 3 mod 4")
    residues = {(x * x) % q for x in range(1, q)}
    chi = [0] + [1 if x in residues else -1 for x in range(1, q)]
    n = q + 1
    M = np.ones((n, n), dtype=np.int64)
    M[1:, 0] = -1
    for i in range(q):
        for j in range(q):
            M[1 + i, 1 + j] = 1 if i == j else chi[(j - i) % q]
    return SkewHadamard.from_matrix(M)


def _normalize_first_row(M):
    """Negate column j together with row j wherever the first row is -1,
    which preserves both Hadamard and skew properties."""
    M = M.copy()
    for j in range(1, M.shape[0]):
        if M[0, j] == -1:
            M[:, j] *= -1
            M[j, :] *= -1
    return M


def tournament_from_skew_hadamard(A: SkewHadamard) -> OrientedGraph:
    """Delete the first row and column (after normalizing the first row to
    all ones); the remaining core B gives the regular tournament with
    u -> v exactly when (B - I)_{uv} = +1."""
    M = _normalize_first_row(A.matrix())
    B = M[1:, 1:]
    n = B.shape[0]
    core = B - np.eye(n, dtype=np.int64)
    if not np.array_equal(core, -core.T):
        raise ConstructionError("normalized core is not skew-symmetric")
    arcs = [(u, v) for u in range(n) for v in range(n) if core[u, v] == 1]
    return OrientedGraph(n, arcs)


def skew_hadamard_from_tournament(T: OrientedGraph, tol=1e-6) -> SkewHadamard:
    """Border the tournament's skew core with a column of -1 and a row of 1.

    Requires a regular tournament whose spectrum clusters to exactly three
    distinct values; anything else is rejected with the violated clause.
    """
    from .certify import certify_three_ev_tournament

    try:
        report = certify_three_ev_tournament(T, tol)
    except CertifyError as exc:
        raise ConstructionError(f"precondition failed: {exc}") from exc
    if not report.verdict and not report.collapsed:
        raise ConstructionError(
            f"precondition failed: tournament does not have three distinct "
            f"eigenvalues ({report.failure_reason})"
        )
    n = T.n
    core = np.zeros((n, n), dtype=np.int64)
    arcs = set(T.arcs)
    for u in range(n):
        for v in range(n):
            if u != v:
                core[u, v] = 1 if (u, v) in arcs else -1
    B = core + np.eye(n, dtype=np.int64)
    M = np.ones((n + 1, n + 1), dtype=np.int64)
    M[1:, 0] = -1
    M[1:, 1:] = B
    return SkewHadamard.from_matrix(M)


# ---------------------------------------------------------------------------
# Bipartite signed <-> oriented transform (fourth root of unity)


def _bipartition(G: Graph):
    color = is_bipartite(G)
    if color is None:
        raise ConstructionError("underlying graph is not bipartite")
    return color


def signed_to_oriented(S: SignedGraph) -> OrientedGraph:
    """Orientation of the same bipartite graph whose Hermitian adjacency
    matrix at the fourth root of unity is similar to the signed adjacency
    matrix: positive edges point from the 0-side of the bipartition to the
    1-side, negative edges the other way."""
    color = _bipartition(S.underlying())
    arcs = []
    for u, v, sign in S.signed_edges:
        lo, hi = (u, v) if color[u] == 0 else (v, u)
        arcs.append((lo, hi) if sign > 0 else (hi, lo))
    return OrientedGraph(S.n, arcs)


def oriented_to_signed(D: OrientedGraph) -> SignedGraph:
    """Inverse transform on the same bipartition: an arc leaving the 0-side
    becomes a positive edge, an arc leaving the 1-side a negative edge."""
    if not D.is_oriented:
        raise ConstructionError("input must be oriented")
    color = _bipartition(underlying(D))
    signed = [(u, v, 1 if color[u] == 0 else -1) for u, v in D.arcs]
    return SignedGraph(D.n, tuple(signed))


def signed_hypercube(n: int) -> SignedGraph:
    """Recursive signing of the n-cube with S^2 = nI, hence adjacency
    spectrum +/- sqrt(n), each of multiplicity 2^(n-1):

        S_1 = [[0, 1], [1, 0]],   S_{m+1} = [[S_m, I], [I, -S_m]].
    """
    if n < 1:
        raise ConstructionError("dimension must be >= 1")
    S = np.array([[0, 1], [1, 0]], dtype=np.int64)
    for _ in range(n - 1):
        m = S.shape[0]
        eye = np.eye(m, dtype=np.int64)
        S = np.block([[S, eye], [eye, -S]])
    size = 1 << n
    if not np.array_equal(S @ S, n * np.eye(size, dtype=np.int64)):
        raise ConstructionError("signed hypercube failed S^2 = nI")
    signed = [
        (u, v, int(S[u, v]))
        for u in range(size)
        for v in range(u + 1, size)
        if S[u, v] != 0
    ]
    return SignedGraph(size, tuple(signed))


def signed_spectrum(S: SignedGraph, tol=1e-6) -> Spectrum:
    return Spectrum.of_matrix(signed_adjacency(S).astype(np.complex128), tol)
