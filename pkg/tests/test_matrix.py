from itertools import permutations, product
from math import factorial

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from semicayley import core
from semicayley import matrix as M
from semicayley.matrix import Matrix

from conftest import BUILTINS, SMALL

B = core.boolean()


def rand_matrix(s, k):
    return st.lists(st.integers(0, s.n - 1), min_size=k * k, max_size=k * k).map(
        lambda xs: Matrix(tuple(tuple(xs[i * k:(i + 1) * k]) for i in range(k))))


def test_perm_matrix_swap_over_boolean():
    P = M.perm_matrix(B, (1, 0))
    assert P.entries == ((0, 1), (1, 0))
    assert M.mat_mul(B, P, M.transpose(P)) == M.identity(B, 2)


def test_perm_matrix_rejects_non_permutations():
    with pytest.raises(ValueError):
        M.perm_matrix(B, (0, 0))


@pytest.mark.parametrize("k", [2, 3, 4])
def test_perm_matrix_orthogonal(k):
    for sg in permutations(range(k)):
        P = M.perm_matrix(B, sg)
        assert all(P[i, sg[i]] == 1 for i in range(k))
        assert M.mat_mul(B, P, M.transpose(P)) == M.identity(B, k)


def test_cycle_power():
    assert M.cycle_power(3, 1) == (1, 2, 0)
    assert M.cycle_power(3, 3) == (0, 1, 2)


def test_trunc3_diag_sum():
    s = core.trunc(3)
    assert M.mat_add(s, M.diag(s, [2, 1]), M.diag(s, [2, 3])) == M.diag(s, [3, 3])


def test_dimension_mismatch():
    with pytest.raises(M.DimensionError):
        M.mat_add(B, M.identity(B, 2), M.identity(B, 3))
    with pytest.raises(M.DimensionError):
        Matrix(((0, 1), (1,)))


def test_elementary_and_constant():
    E = M.e_ij(B, 2, 0, 1)
    assert E.entries == ((0, 1), (0, 0))
    assert M.constant(B, 2, 1).entries == ((1, 1), (1, 1))
    assert M.zero_matrix(B, 2).encode(2) == 0


def test_orth_decompositions():
    assert M.orth_decompositions(B, 1) == [M.OrthDecomposition((1,))]
    assert M.orth_decompositions(B, 2) == []
    # 3 + 4 = 1 and 3·4 = 0 in Z_6
    assert M.orth_decompositions(core.zmod(6), 2) == [M.OrthDecomposition((3, 4))]
    bb = core.product(B, B)
    assert [d.parts for d in M.orth_decompositions(bb, 2)] == [(1, 2)]


def test_boolean_2x2_units():
    us = M.matrix_units(B, 2)
    assert us.provenance is M.Provenance.THEOREM1
    assert {u.entries for u in us} == {((1, 0), (0, 1)), ((0, 1), (1, 0))}


ENTIRE_ANTIRINGS = [(B, 2), (B, 3), (core.example_bounds(1), 2),
                    (core.example_bounds(2), 2), (core.trunc(2), 2)]


@pytest.mark.parametrize("s,k", ENTIRE_ANTIRINGS, ids=lambda x: getattr(x, "name", x))
def test_theorem1_equals_brute_force(s, k):
    a = M.matrix_units(s, k, "theorem1")
    b = M.matrix_units(s, k, "brute_force")
    assert a.elements == b.elements
    assert len(a) == factorial(k) * len(core.units(s)) ** k
    for U in a:
        assert a.inverse[U] == b.inverse[U]


@pytest.mark.parametrize("s", [core.bool_x2(), core.product(B, B),
                               core.product(B, core.trunc(2))], ids=lambda s: s.name)
def test_theorem1_equals_brute_force_non_entire(s):
    assert M.matrix_units(s, 2, "theorem1").elements == \
        M.matrix_units(s, 2, "brute_force").elements


def test_theorem1_refuses_rings():
    with pytest.raises(ValueError):
        M.units_theorem1(core.zmod(5), 2)
    with pytest.raises(ValueError):
        M.matrix_units(B, 2, "cramer")


def _det2(A, p):
    return (A[0, 0] * A[1, 1] - A[0, 1] * A[1, 0]) % p


def test_zmod5_units_match_determinant_oracle():
    s = core.zmod(5)
    us = M.matrix_units(s, 2)
    assert us.provenance is M.Provenance.BRUTE_FORCE
    assert len(us) == 480 == (25 - 1) * (25 - 5)
    oracle = {Matrix.decode(v, 5, 2) for v in range(625)}
    oracle = {A for A in oracle if _det2(A, 5)}
    assert us.elements == oracle


def test_brute_force_guard():
    with pytest.raises(M.GuardExceeded):
        M.units_brute_force(core.zmod(5), 3)
    with pytest.raises(M.GuardExceeded):
        M.is_invertible(core.zmod(5), M.identity(core.zmod(5), 3))


def test_is_invertible():
    s = core.zmod(5)
    A = Matrix(((1, 2), (3, 4)))
    ok, inv = M.is_invertible(s, A)
    assert ok and M.mat_mul(s, A, inv) == M.identity(s, 2)
    assert M.is_invertible(s, Matrix(((1, 2), (2, 4)))) == (False, None)
    assert M.is_invertible(B, M.constant(B, 2, 1)) == (False, None)
    ok, inv = M.is_invertible(B, M.perm_matrix(B, (1, 0)))
    assert ok and inv == M.perm_matrix(B, (1, 0))


@pytest.mark.parametrize("s", [B, core.bool_x2(), core.zmod(3), core.example_bounds(1)],
                         ids=lambda s: s.name)
def test_unit_group_closed(s):
    us = M.matrix_units(s, 2)
    I = M.identity(s, 2)
    assert I in us
    for U in us:
        V = us.inverse[U]
        assert M.mat_mul(s, U, V) == I == M.mat_mul(s, V, U)
        assert V in us
    sample = list(us)[:12]
    for U, V in product(sample, sample):
        assert M.mat_mul(s, U, V) in us


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(BUILTINS[:14] + SMALL).flatmap(
    lambda s: st.tuples(st.just(s), *(rand_matrix(s, 2) for _ in range(3)))))
def test_matrix_semiring_axioms(args):
    s, A, Bm, C = args
    add = lambda X, Y: M.mat_add(s, X, Y)
    mul = lambda X, Y: M.mat_mul(s, X, Y)
    Z, I = M.zero_matrix(s, 2), M.identity(s, 2)
    assert add(A, Bm) == add(Bm, A)
    assert add(add(A, Bm), C) == add(A, add(Bm, C))
    assert mul(mul(A, Bm), C) == mul(A, mul(Bm, C))
    assert mul(A, add(Bm, C)) == add(mul(A, Bm), mul(A, C))
    assert mul(add(A, Bm), C) == add(mul(A, C), mul(Bm, C))
    assert add(A, Z) == A and mul(A, I) == A == mul(I, A)
    assert mul(A, Z) == Z == mul(Z, A)
    assert M.transpose(M.transpose(A)) == A


@settings(max_examples=80, deadline=None)
@given(st.integers(1, 5), st.integers(1, 3), st.data())
def test_encode_decode(n, k, data):
    vid = data.draw(st.integers(0, n ** (k * k) - 1))
    A = Matrix.decode(vid, n, k)
    assert A.encode(n) == vid
    arr = M.all_matrices_array(n, k, [vid])
    assert arr[0].tolist() == [list(r) for r in A.entries]
    assert int(M.encode_array(arr, n)[0]) == vid


def test_encoding_most_significant_first():
    assert Matrix(((1, 0), (0, 0))).encode(2) == 8
    assert Matrix(((0, 0), (0, 1))).encode(2) == 1
    with pytest.raises(ValueError):
        Matrix.decode(16, 2, 2)


def test_batch_mul_matches_scalar():
    s = core.example_bounds(1)
    arr = M.all_matrices_array(s.n, 2)
    rng = np.random.default_rng(7)
    idx = rng.integers(0, len(arr), size=(40, 2))
    out = M._batch_mul(np.array(s.add), np.array(s.mul), arr[idx[:, 0]], arr[idx[:, 1]])
    for (i, j), got in zip(idx, out):
        expect = M.mat_mul(s, Matrix(arr[i].tolist()), Matrix(arr[j].tolist()))
        assert got.tolist() == [list(r) for r in expect.entries]


def test_pretty():
    s = core.example_bounds(1)
    assert Matrix(((0, 2), (1, 0))).pretty(s) == "[0 x; 1 0]"
