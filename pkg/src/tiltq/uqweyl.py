"""Explicit Weyl modules over Q(q) with the divided-power action.

The i-th Weyl module has basis m_0, ..., m_i and action

    K m_k = q^(i-2k) m_k,
    E^(j) m_k = qbin(i-k+j, j) m_{k-j},
    F^(j) m_k = qbin(k+j, j) m_{k+j},

with m_{<0} = m_{>i} = 0.  Vectors are coordinate columns, matrices act on
the left.  Structure checks (simplicity, generated submodules) run by exact
closure with Gaussian elimination over Q(q): weight spaces here are
one-dimensional, so every submodule is spanned by weight vectors and closure
from basis vectors decides simplicity; a fixed batch of seeded pseudo-random
vectors is kept as a guard.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .alcove import is_simple_weight, linked_lower_weight
from .linalg import RowSpace
from .scalars import CycScalar, RootOfUnitySpec, quantum_binomial, specialize


class ZeroVector(Exception):
    pass


class NotInRange(Exception):
    pass


@dataclass(frozen=True)
class WeylModule:
    i: int
    spec: RootOfUnitySpec
    K: tuple
    Kinv: tuple
    E: dict = field(compare=False)  # j -> matrix of E^(j), j = 1..i
    F: dict = field(compare=False)

    @property
    def dim(self):
        return self.i + 1

    def action_matrices(self):
        """All stored action matrices, keyed for reporting."""
        out = {"K": self.K, "Kinv": self.Kinv}
        for j, m in self.E.items():
            out[f"E({j})"] = m
        for j, m in self.F.items():
            out[f"F({j})"] = m
        return out


def _zero_matrix(n, spec):
    z = CycScalar.zero(spec)
    return tuple(tuple(z for _ in range(n)) for _ in range(n))


def _set(mat, r, c, val):
    mat[r][c] = val


def build_weyl(i: int, spec: RootOfUnitySpec) -> WeylModule:
    """Construct the i-th Weyl module with all divided-power matrices."""
    if i < 0:
        raise NotInRange("highest weight must be non-negative")
    n = i + 1
    K = [[CycScalar.zero(spec) for _ in range(n)] for _ in range(n)]
    Kinv = [[CycScalar.zero(spec) for _ in range(n)] for _ in range(n)]
    for k in range(n):
        K[k][k] = CycScalar.q_power(spec, i - 2 * k)
        Kinv[k][k] = CycScalar.q_power(spec, -(i - 2 * k))
    E, F = {}, {}
    for j in range(1, i + 1):
        Ej = [[CycScalar.zero(spec) for _ in range(n)] for _ in range(n)]
        Fj = [[CycScalar.zero(spec) for _ in range(n)] for _ in range(n)]
        for k in range(n):
            if k - j >= 0:
                Ej[k - j][k] = specialize(quantum_binomial(i - k + j, j), spec)
            if k + j <= i:
                Fj[k + j][k] = specialize(quantum_binomial(k + j, j), spec)
        E[j] = tuple(tuple(row) for row in Ej)
        F[j] = tuple(tuple(row) for row in Fj)
    return WeylModule(
        i=i,
        spec=spec,
        K=tuple(tuple(row) for row in K),
        Kinv=tuple(tuple(row) for row in Kinv),
        E=E,
        F=F,
    )


def mat_apply(mat, vec):
    zero = CycScalar.zero(vec[0].spec)
    out = [zero] * len(mat)
    for c, x in enumerate(vec):
        if x.is_zero():
            continue
        for r in range(len(mat)):
            m = mat[r][c]
            if not m.is_zero():
                out[r] = out[r] + m * x
    return out


def _sparse_columns(mat):
    """Column-sparse view: list over columns of (row, entry) pairs."""
    n = len(mat)
    return [[(r, mat[r][c]) for r in range(n) if not mat[r][c].is_zero()] for c in range(n)]


def mat_mul(A, B, spec):
    z = CycScalar.zero(spec)
    n, k, m = len(A), len(B), len(B[0])
    out = [[z] * m for _ in range(n)]
    for r in range(n):
        Ar = A[r]
        for t in range(k):
            a = Ar[t]
            if a.is_zero():
                continue
            Bt = B[t]
            row = out[r]
            for c in range(m):
                b = Bt[c]
                if not b.is_zero():
                    row[c] = row[c] + a * b
    return tuple(tuple(row) for row in out)


def mat_eq(A, B):
    return all(a == b for ra, rb in zip(A, B) for a, b in zip(ra, rb))


def identity_matrix(n, spec):
    return tuple(
        tuple(CycScalar.one(spec) if r == c else CycScalar.zero(spec) for c in range(n))
        for r in range(n)
    )


@dataclass
class SubmoduleBasis:
    vectors: list
    rank: int


def generated_submodule(M: WeylModule, vec) -> SubmoduleBasis:
    """Smallest subspace containing vec and stable under K, K^-1 and all
    divided powers, by iterated closure with exact Gaussian elimination."""
    vec = list(vec)
    if all(c.is_zero() for c in vec):
        raise ZeroVector("cannot generate from the zero vector")
    zero = CycScalar.zero(M.spec)
    actions = [
        _sparse_columns(A) for A in [M.K, M.Kinv] + list(M.E.values()) + list(M.F.values())
    ]
    space = RowSpace(M.dim)
    queue = [vec]
    space.add(vec)
    while queue and space.rank < M.dim:
        w = queue.pop()
        for cols in actions:
            img = [zero] * M.dim
            for c, x in enumerate(w):
                if x.is_zero():
                    continue
                for r, entry in cols[c]:
                    img[r] = img[r] + entry * x
            if space.add(img):
                queue.append(img)
                if space.rank == M.dim:
                    break
    vectors = [row for _, row in space.rows]
    return SubmoduleBasis(vectors=vectors, rank=space.rank)


def basis_vector(M: WeylModule, k: int):
    return [
        CycScalar.one(M.spec) if r == k else CycScalar.zero(M.spec) for r in range(M.dim)
    ]


def _pseudo_random_vectors(M: WeylModule, count=20, seed=20):
    rng = random.Random(seed * 1000003 + M.i * 1009 + M.spec.n)
    out = []
    for _ in range(count):
        vec = [
            CycScalar(M.spec, [rng.randint(-3, 3) for _ in range(M.spec.degree)])
            for _ in range(M.dim)
        ]
        if any(not c.is_zero() for c in vec):
            out.append(vec)
    return out


def _action_edges(M: WeylModule):
    """Directed edges k -> r along nonzero action-matrix entries.

    Every action matrix has at most one nonzero entry per column, so the
    submodule generated by a basis vector is the span of the basis vectors
    reachable along these edges.
    """
    actions = [M.K, M.Kinv] + list(M.E.values()) + list(M.F.values())
    edges = [set() for _ in range(M.dim)]
    for A in actions:
        for c in range(M.dim):
            for r in range(M.dim):
                if not A[r][c].is_zero():
                    edges[c].add(r)
    return edges


def _reachable_from(edges, start: int) -> set:
    seen = {start}
    frontier = [start]
    while frontier:
        k = frontier.pop()
        for r in edges[k]:
            if r not in seen:
                seen.add(r)
                frontier.append(r)
    return seen


def generates_whole_module(M: WeylModule, vec, edges=None) -> bool:
    """Whether vec generates all of M.

    Submodules are spanned by weight vectors (the weight spaces are
    one-dimensional), so the closure of vec is the joint closure of the
    basis vectors in its support; ``generated_submodule`` is the
    brute-force cross-check for this shortcut.
    """
    support = [k for k, c in enumerate(vec) if not c.is_zero()]
    if not support:
        raise ZeroVector("cannot generate from the zero vector")
    if edges is None:
        edges = _action_edges(M)
    reached = set()
    for k in support:
        reached |= _reachable_from(edges, k)
        if len(reached) == M.dim:
            return True
    return False


def is_simple(M: WeylModule) -> bool:
    """True iff every basis vector and each of 20 seeded random vectors
    generates the whole module."""
    edges = _action_edges(M)
    for k in range(M.dim):
        if not generates_whole_module(M, basis_vector(M, k), edges):
            return False
    for vec in _pseudo_random_vectors(M):
        if not generates_whole_module(M, vec, edges):
            return False
    return True


def weyl_head_socle_weights(i: int, l: int) -> tuple:
    """(head weight, socle weight) of the i-th Weyl module.

    Simple Weyl modules are their own head and socle; otherwise the socle is
    the linked lower weight from i = (a+2)l - b - 2.
    """
    if i < 0:
        raise NotInRange("weight must be non-negative")
    if is_simple_weight(i, l):
        return (i, i)
    return (i, linked_lower_weight(i, l))
