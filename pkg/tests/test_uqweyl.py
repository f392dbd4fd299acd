"""Tests for the explicit Weyl-module matrices and structure checks."""

import pytest

from tiltq.alcove import is_simple_weight
from tiltq.scalars import (
    CycScalar,
    RootOfUnitySpec,
    quantum_factorial,
    specialize,
)
from tiltq.uqweyl import (
    NotInRange,
    ZeroVector,
    basis_vector,
    build_weyl,
    generated_submodule,
    identity_matrix,
    is_simple,
    mat_eq,
    mat_mul,
    weyl_head_socle_weights,
)

SPEC3 = RootOfUnitySpec.from_l(3, odd=True)  # q = (-1+sqrt(-3))/2, as in the l=3 examples


def scalar_mul(c, A):
    return tuple(tuple(c * x for x in row) for row in A)


def mat_sub(A, B):
    return tuple(tuple(a - b for a, b in zip(ra, rb)) for ra, rb in zip(A, B))


def test_weyl3_arrow_labels():
    # E acts on the 4-dimensional module with coefficients [1],[2],[3] read
    # off the divided-power formula; at l = 3 the middle labels are -1 and 0.
    M = build_weyl(3, SPEC3)
    E = M.E[1]
    minus_one = CycScalar.from_int(SPEC3, -1)
    assert E[1][2] == minus_one  # E m_2 = -1 m_1
    assert E[0][1].is_zero()  # E m_1 = 0
    assert E[2][3] == CycScalar.one(SPEC3)  # E m_3 = +1 m_2
    F = M.F[1]
    assert F[2][1] == minus_one
    assert F[3][2].is_zero()


def test_weyl0_trivial():
    M = build_weyl(0, SPEC3)
    assert M.dim == 1
    assert M.K[0][0] == CycScalar.one(SPEC3)
    assert not M.E and not M.F


def test_weyl4_K_eigenvalues():
    M = build_weyl(4, SPEC3)
    for k in range(5):
        assert M.K[k][k] == CycScalar.q_power(SPEC3, 4 - 2 * k)


def test_divided_power_top_maps():
    M = build_weyl(3, SPEC3)
    assert M.E[3][0][3] == CycScalar.one(SPEC3)  # E^(3) m_3 = m_0
    assert M.F[3][3][0] == CycScalar.one(SPEC3)


@pytest.mark.parametrize("l,odd", [(3, True), (3, False), (5, True)])
def test_defining_relations(l, odd):
    spec = RootOfUnitySpec.from_l(l, odd=odd)
    q2 = CycScalar.q_power(spec, 2)
    q2inv = CycScalar.q_power(spec, -2)
    denom = CycScalar.q_power(spec, 1) - CycScalar.q_power(spec, -1)
    for i in range(0, 11):
        M = build_weyl(i, spec)
        n = M.dim
        eye = identity_matrix(n, spec)
        assert mat_eq(mat_mul(M.K, M.Kinv, spec), eye)
        if i == 0:
            continue
        E, F = M.E[1], M.F[1]
        assert mat_eq(mat_mul(M.K, E, spec), scalar_mul(q2, mat_mul(E, M.K, spec)))
        assert mat_eq(mat_mul(M.K, F, spec), scalar_mul(q2inv, mat_mul(F, M.K, spec)))
        lhs = mat_sub(mat_mul(E, F, spec), mat_mul(F, E, spec))
        rhs = scalar_mul(denom.inverse(), mat_sub(M.K, M.Kinv))
        assert mat_eq(lhs, rhs)


@pytest.mark.parametrize("l,odd", [(3, True), (5, True), (4, False)])
def test_nilpotency_and_divided_powers(l, odd):
    spec = RootOfUnitySpec.from_l(l, odd=odd)
    for i in range(1, 9):
        M = build_weyl(i, spec)
        E, F = M.E[1], M.F[1]
        El = identity_matrix(M.dim, spec)
        Fl = identity_matrix(M.dim, spec)
        for _ in range(l):
            El = mat_mul(El, E, spec)
            Fl = mat_mul(Fl, F, spec)
        zero = tuple(tuple(CycScalar.zero(spec) for _ in range(M.dim)) for _ in range(M.dim))
        assert mat_eq(El, zero)
        assert mat_eq(Fl, zero)
        # E^j = [j]! E^(j)
        Ej = E
        for j in range(2, i + 1):
            Ej = mat_mul(Ej, E, spec)
            fact = specialize(quantum_factorial(j), spec)
            assert mat_eq(Ej, scalar_mul(fact, M.E[j]))


def test_submodule_examples():
    M4 = build_weyl(4, SPEC3)
    sub = generated_submodule(M4, basis_vector(M4, 2))
    assert sub.rank == 1
    M3 = build_weyl(3, SPEC3)
    assert generated_submodule(M3, basis_vector(M3, 0)).rank == 4
    sub = generated_submodule(M3, basis_vector(M3, 1))
    assert sub.rank == 2
    # the rank-2 submodule is the span of m_1, m_2
    for _, row in [(None, v) for v in sub.vectors]:
        assert row[0].is_zero() and row[3].is_zero()


def test_trivial_submodule_of_weyl4_is_trivial_module():
    M4 = build_weyl(4, SPEC3)
    # K fixes m_2 (eigenvalue q^0 = 1), E and F kill it
    assert M4.K[2][2] == CycScalar.one(SPEC3)
    for r in range(5):
        assert M4.E[1][r][2].is_zero()
        assert M4.F[1][r][2].is_zero()


def test_zero_vector_rejected():
    M = build_weyl(2, SPEC3)
    with pytest.raises(ZeroVector):
        generated_submodule(M, [CycScalar.zero(SPEC3)] * 3)


@pytest.mark.parametrize("l,odd", [(3, True), (4, False), (5, True)])
def test_simplicity_matches_closed_form(l, odd):
    spec = RootOfUnitySpec.from_l(l, odd=odd)
    for i in range(0, 16):
        assert is_simple(build_weyl(i, spec)) == is_simple_weight(i, l)


@pytest.mark.parametrize("l,odd", [(3, True), (3, False), (4, False)])
def test_reachability_shortcut_against_exact_closure(l, odd):
    # the support/reachability route in is_simple must agree with honest
    # Gaussian-elimination closure, basis vectors and random vectors alike
    spec = RootOfUnitySpec.from_l(l, odd=odd)
    from tiltq.uqweyl import _pseudo_random_vectors, generates_whole_module

    for i in range(0, 7):
        M = build_weyl(i, spec)
        for k in range(M.dim):
            v = basis_vector(M, k)
            assert generates_whole_module(M, v) == (generated_submodule(M, v).rank == M.dim)
        for v in _pseudo_random_vectors(M, count=5, seed=3):
            assert generates_whole_module(M, v) == (generated_submodule(M, v).rank == M.dim)


def test_head_socle():
    assert weyl_head_socle_weights(4, 3) == (4, 0)
    assert weyl_head_socle_weights(1, 3) == (1, 1)
    assert weyl_head_socle_weights(10, 3) == (10, 6)
    with pytest.raises(NotInRange):
        weyl_head_socle_weights(-1, 3)
