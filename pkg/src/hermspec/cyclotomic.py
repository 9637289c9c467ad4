"""Exact arithmetic in Z[zeta_k] for k in {3, 4, 6}, and exact Hermitian matrices.

An element is a + b*zeta where zeta = exp(2*pi*i/k).  For these three
orders zeta satisfies an integer quadratic, so products reduce back to the
same form and matrix identities can be decided with no rounding:

    k=6:  zeta^2 =  zeta - 1      conj(zeta) =  1 - zeta
    k=4:  zeta^2 = -1             conj(zeta) =    - zeta
    k=3:  zeta^2 = -zeta - 1      conj(zeta) = -1 - zeta

For any other order the constant term of small characteristic polynomials
is already irrational, so only the floating-point representation exists.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

EXACT_ORDERS = (3, 4, 6)

# zeta^2 = _SQ_CONST[k] + _SQ_LIN[k] * zeta
_SQ_CONST = {3: -1, 4: -1, 6: -1}
_SQ_LIN = {3: -1, 4: 0, 6: 1}
# conj(zeta) = _CONJ_CONST[k] + _CONJ_LIN[k] * zeta
_CONJ_CONST = {3: -1, 4: 0, 6: 1}
_CONJ_LIN = {3: -1, 4: -1, 6: -1}


class CycError(ValueError):
    pass


@dataclass(frozen=True)
class RootOfUnity:
    """A primitive k-th root of unity sigma_1 = cos(2*pi/k) + i*sin(2*pi/k)."""

    k: int

    def __post_init__(self):
        if self.k < 3:
            raise CycError("root order must be >= 3")

    @property
    def exact(self):
        return self.k in EXACT_ORDERS

    @property
    def real_part(self):
        return math.cos(2 * math.pi / self.k)

    @property
    def value(self):
        return cmath.exp(2j * math.pi / self.k)


@dataclass(frozen=True)
class CycInt:
    """a + b*zeta_k with integer a, b and k in {3, 4, 6}."""

    a: int
    b: int
    k: int

    def __post_init__(self):
        if self.k not in EXACT_ORDERS:
            raise CycError(f"no exact arithmetic for k={self.k}; use floats")

    def _coerce(self, other):
        if isinstance(other, int):
            return CycInt(other, 0, self.k)
        if isinstance(other, CycInt):
            if other.k != self.k:
                raise CycError(f"mixed orders k={self.k} and k={other.k}")
            return other
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return CycInt(self.a + other.a, self.b + other.b, self.k)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return CycInt(self.a - other.a, self.b - other.b, self.k)

    def __rsub__(self, other):
        return self._coerce(other).__sub__(self)

    def __neg__(self):
        return CycInt(-self.a, -self.b, self.k)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        # (a1 + b1 z)(a2 + b2 z) = a1 a2 + (a1 b2 + a2 b1) z + b1 b2 z^2
        cross = self.b * other.b
        return CycInt(
            self.a * other.a + cross * _SQ_CONST[self.k],
            self.a * other.b + self.b * other.a + cross * _SQ_LIN[self.k],
            self.k,
        )

    __rmul__ = __mul__

    def conj(self):
        return CycInt(
            self.a + self.b * _CONJ_CONST[self.k],
            self.b * _CONJ_LIN[self.k],
            self.k,
        )

    @property
    def is_zero(self):
        return self.a == 0 and self.b == 0

    def embed(self) -> complex:
        """Image under zeta -> exp(2*pi*i/k) in double precision."""
        return self.a + self.b * cmath.exp(2j * math.pi / self.k)

    def __repr__(self):
        return f"CycInt({self.a}, {self.b}, k={self.k})"


def zeta(k) -> CycInt:
    return CycInt(0, 1, k)


def one(k) -> CycInt:
    return CycInt(1, 0, k)


class ExactHermitianMatrix:
    """Square matrix over Z[zeta_k] with M = M*.

    Internally a pair of integer component matrices (A, B) with M = A + B*zeta,
    so products reduce to a handful of integer matrix multiplications.
    Entries stay bounded by the graph order at desk scale; object dtype
    (arbitrary-width Python ints) is used so overflow cannot wrap.
    """

    def __init__(self, comp_a, comp_b, k, check=True):
        if k not in EXACT_ORDERS:
            raise CycError(f"no exact matrices for k={k}")
        self.k = k
        self.A = np.asarray(comp_a, dtype=object)
        self.B = np.asarray(comp_b, dtype=object)
        if self.A.shape != self.B.shape or self.A.ndim != 2 or self.A.shape[0] != self.A.shape[1]:
            raise CycError("component matrices must be square and same shape")
        if check and not self._is_hermitian():
            raise CycError("matrix is not Hermitian under the conjugation rule")

    @property
    def n(self):
        return self.A.shape[0]

    def _is_hermitian(self):
        # conj(a + b z) = (a + cc*b) + cl*b*z
        cc, cl = _CONJ_CONST[self.k], _CONJ_LIN[self.k]
        conj_a = (self.A + cc * self.B).T
        conj_b = (cl * self.B).T
        return bool(np.all(conj_a == self.A) and np.all(conj_b == self.B))

    def entry(self, u, v) -> CycInt:
        return CycInt(int(self.A[u, v]), int(self.B[u, v]), self.k)

    @classmethod
    def zero(cls, n, k):
        z = np.zeros((n, n), dtype=object)
        return cls(z, z.copy(), k, check=False)

    @classmethod
    def identity(cls, n, k):
        return cls(np.eye(n, dtype=object), np.zeros((n, n), dtype=object), k, check=False)

    @classmethod
    def all_ones(cls, n, k):
        return cls(np.ones((n, n), dtype=object), np.zeros((n, n), dtype=object), k, check=False)

    def embed(self) -> np.ndarray:
        z = cmath.exp(2j * math.pi / self.k)
        return self.A.astype(np.complex128) + z * self.B.astype(np.complex128)

    def to_json_obj(self):
        return {
            "k": self.k,
            "entries": [
                [[int(self.A[i, j]), int(self.B[i, j])] for j in range(self.n)]
                for i in range(self.n)
            ],
        }

    @classmethod
    def from_json_obj(cls, obj):
        ent = obj["entries"]
        A = [[e[0] for e in row] for row in ent]
        B = [[e[1] for e in row] for row in ent]
        return cls(A, B, obj["k"])

    def __eq__(self, other):
        if not isinstance(other, ExactHermitianMatrix):
            return NotImplemented
        return (
            self.k == other.k
            and bool(np.all(self.A == other.A))
            and bool(np.all(self.B == other.B))
        )


def exact_matmul(X: ExactHermitianMatrix, Y: ExactHermitianMatrix):
    """Exact product; returned components may no longer be Hermitian."""
    if X.k != Y.k:
        raise CycError("mixed orders")
    if X.n != Y.n:
        raise CycError("dimension mismatch")
    k = X.k
    cross = X.B @ Y.B
    comp_a = X.A @ Y.A + _SQ_CONST[k] * cross
    comp_b = X.A @ Y.B + X.B @ Y.A + _SQ_LIN[k] * cross
    return comp_a, comp_b


def exact_quadratic_check(H: ExactHermitianMatrix, p: int, q: int) -> bool:
    """Decide H^2 - p*H + q*I = 0 exactly over Z[zeta_k]."""
    sq_a, sq_b = exact_matmul(H, H)
    res_a = sq_a - p * H.A + q * np.eye(H.n, dtype=object)
    res_b = sq_b - p * H.B
    return bool(np.all(res_a == 0) and np.all(res_b == 0))


def build_exact_H(D, k) -> ExactHermitianMatrix:
    """Hermitian adjacency matrix of a mixed graph over Z[zeta_k].

    Entry (u, v) is zeta for an arc u->v, conj(zeta) for an arc v->u,
    1 for an undirected edge, and 0 otherwise.
    """
    if k not in EXACT_ORDERS:
        raise CycError(f"no exact arithmetic for order {k}; use build_float_H")
    n = D.n
    A = np.zeros((n, n), dtype=object)
    B = np.zeros((n, n), dtype=object)
    cc, cl = _CONJ_CONST[k], _CONJ_LIN[k]
    for u, v in D.arcs:
        B[u, v] = 1
        A[v, u] = cc
        B[v, u] = cl
    for u, v in D.edges:
        A[u, v] = 1
        A[v, u] = 1
    return ExactHermitianMatrix(A, B, k)


def build_float_H(D, sigma: RootOfUnity | int) -> np.ndarray:
    """Complex Hermitian adjacency matrix in double precision, any k >= 3."""
    if isinstance(sigma, int):
        sigma = RootOfUnity(sigma)
    z = sigma.value
    H = np.zeros((D.n, D.n), dtype=np.complex128)
    for u, v in D.arcs:
        H[u, v] = z
        H[v, u] = z.conjugate()
    for u, v in D.edges:
        H[u, v] = 1.0
        H[v, u] = 1.0
    return H


def signed_adjacency(S) -> np.ndarray:
    """Integer adjacency matrix of a signed graph."""
    M = np.zeros((S.n, S.n), dtype=np.int64)
    for u, v, sign in S.signed_edges:
        M[u, v] = sign
        M[v, u] = sign
    return M
