from fractions import Fraction

import numpy as np
import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from maxcone.maxcore import DimensionError, as_matrix, identity, leq, mat_vec_otimes, scale_at, support
from maxcone.residuation import (
    brute_force_member,
    covering_sets,
    principal_solution,
    residuate,
    solve_exact,
    spanit_condition,
)

quarter = st.integers(0, 8).map(lambda t: t / 4)


def exact_principal(U, v):
    """Rational evaluation of x_i = min_j v_j / U[j, i] over the support of column i."""
    Uq = [[Fraction(float(t)) for t in row] for row in np.asarray(U)]
    vq = [Fraction(float(t)) for t in v]
    n, k = len(Uq), len(Uq[0])
    return [
        min((vq[j] / Uq[j][i] for j in range(n) if Uq[j][i] > 0), default=Fraction(0))
        for i in range(k)
    ]


def test_residuate_basis_columns(A):
    U, v = A[:, [0, 3, 4]], A[:, 2]
    assert exact_principal(U, v) == [4, 2, 1]
    r = residuate(U, v)
    assert r.x.tolist() == [4, 2, 1]
    assert r.image.tolist() == [10, 10, 14, 16]
    assert r.exact


def test_residuate_identity():
    v = np.array([0.3, 0.0, 7.0])
    r = residuate(identity(3), v)
    assert r.x.tolist() == v.tolist() and r.exact


def test_residuate_non_member(A):
    U, v = A[:, [0, 1]], A[:, 2]
    assert exact_principal(U, v) == [4, Fraction(4, 5)]
    r = residuate(U, v)
    assert r.x == pytest.approx([4, 0.8], abs=0)
    assert r.image == pytest.approx([7.2, 8, 12, 16], rel=1e-15)
    assert not r.exact


def test_zero_column_gets_zero_coefficient():
    U = np.array([[0.0, 1.0], [0.0, 2.0]])
    r = residuate(U, [3, 6])
    assert r.x.tolist() == [0, 3] and r.exact


def test_zero_target_coordinate_forces_zero():
    r = residuate([[1.0], [1.0]], [0, 5])
    assert r.x.tolist() == [0.0]
    assert not r.exact


def test_dimension_mismatch():
    with pytest.raises(DimensionError):
        residuate(np.ones((3, 2)), [1, 2])


def test_solve_exact(A):
    U, v = A[:, [0, 2, 3, 4]], A[:, 1]
    assert exact_principal(U, v) == [5, Fraction(9, 10), Fraction(9, 5), 1]
    x = solve_exact(U, v)
    assert x is not None
    assert x == pytest.approx([5, 0.9, 1.8, 1], rel=1e-15)
    assert mat_vec_otimes(U, x) == pytest.approx(v, rel=1e-15)
    u = np.array([1.0, 2.0, 0.5])
    assert solve_exact(u[:, None], 3 * u).tolist() == [3]
    assert solve_exact(A[:, [0, 1]], A[:, 2]) is None


def test_covering_sets(A):
    c = covering_sets(A[:, [0, 3, 4]], A[:, 2])
    assert c.sets == ((3,), (0, 2, 3), (1,))
    assert c.target_support == (0, 1, 2, 3)
    assert c.covered

    c = covering_sets(A[:, [0, 1]], A[:, 2])
    # x = (4, 0.8); 10/10 = 1 at coordinate 2 does not attain 0.8
    assert c.sets == ((3,), (3,))
    assert not c.covered

    c = covering_sets(A, np.zeros(4))
    assert c.sets == ((),) * 5
    assert c.target_support == () and c.covered


def test_covering_sets_within_support(A):
    c = covering_sets(A, A[:, 2] * 0.5)
    for i, s in enumerate(c.sets):
        assert set(s) <= set(support(A[:, i]))


def test_brute_force_member(A):
    assert brute_force_member(A[:, [0, 3, 4]], A[:, 2])
    assert brute_force_member(A[:, [0, 3, 4]], np.zeros(4))
    assert not brute_force_member([[1.0], [2.0]], [1, 3])
    with pytest.raises(ValueError):
        brute_force_member(A, A[:, 0])  # 5 columns


def test_brute_force_is_exact():
    # 3 * fl(0.1) rounds to fl(0.1 * 3) but is not equal to it as a rational
    v = [0.1, 0.1 * 3]
    assert not brute_force_member([[1.0], [3.0]], v)
    assert residuate([[1.0], [3.0]], v).exact  # within tolerance
    assert brute_force_member([[3.0]], [0.1])


small_instance = st.integers(1, 4).flatmap(
    lambda n: st.integers(1, 3).flatmap(
        lambda k: st.tuples(
            arrays(np.float64, (n, k), elements=st.sampled_from([0.0, 1.0, 2.0, 3.0])),
            arrays(np.float64, n, elements=st.sampled_from([0.0, 1.0, 2.0, 3.0])),
        )
    )
)


@settings(max_examples=500)
@given(small_instance)
def test_oracle_equivalence(inst):
    U, v = inst
    expect = brute_force_member(U, v)
    assert residuate(U, v).exact == expect
    assert covering_sets(U, v).covered == expect
    assert spanit_condition(U, v) == expect


def _pos_instance(n=4, k=3):
    return st.tuples(
        arrays(np.float64, (n, k), elements=quarter),
        arrays(np.float64, n, elements=quarter),
        arrays(np.float64, k, elements=st.one_of(st.just(0.0), st.floats(1e-3, 10))),
    )


def feasible(U, v, z):
    """Shrink ``z`` until ``U (x) z <= v``."""
    w = mat_vec_otimes(U, z)
    pos = w > 0
    t = min(1.0, float(np.min(v[pos] / w[pos]))) if pos.any() else 1.0
    return z * t


def below(a, b):
    return np.all(a <= b * (1 + 1e-12))


@settings(max_examples=300)
@given(_pos_instance())
def test_e1_e2_e3(inst):
    U, v, z = inst
    r = residuate(U, v)
    assert np.all(r.image <= np.nextafter(v, np.inf))
    z = feasible(U, v, z)
    assert below(mat_vec_otimes(U, z), r.image)
    nz = U.max(axis=0) > 0
    assert below(z[nz], r.x[nz])


@settings(max_examples=300)
@given(_pos_instance(), st.floats(0.1, 10), st.integers(0, 2), st.floats(0.1, 10))
def test_scaling_invariance(inst, lam, i, mu):
    U, v, _ = inst
    r = residuate(U, v)
    rv = residuate(U, lam * v)
    assert rv.exact == r.exact
    assert rv.x == pytest.approx(lam * r.x, rel=1e-12)
    assume(U[:, i].max() > 0)
    U2 = U.copy()
    U2[:, i] *= mu
    r2 = residuate(U2, v)
    assert r2.exact == r.exact
    assert r2.x[i] == pytest.approx(r.x[i] / mu, rel=1e-12)
    assert covering_sets(U2, v).sets[i] == covering_sets(U, v).sets[i]


def test_spanit_direct_statement(A):
    # v = column 3 over columns 1, 4, 5: each support coordinate has a column
    # whose rescaling there lies below v's
    U, v = A[:, [0, 3, 4]], A[:, 2]
    for j in support(v):
        assert any(
            U[j, i] > 0 and leq(scale_at(U[:, i], j), scale_at(v, j)) for i in range(3)
        )
    assert spanit_condition(U, v)
    assert not spanit_condition(A[:, [0, 1]], v)


def test_principal_solution_empty():
    assert principal_solution(as_matrix(np.zeros((2, 0))), [1, 1]).tolist() == []
