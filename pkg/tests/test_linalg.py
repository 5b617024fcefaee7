"""Exact matrices, RREF, kernels, and the subspace lattice."""

import random
from fractions import Fraction

import pytest

from bihomcheck.errors import AmbientMismatch, Singular
from bihomcheck.linalg import Matrix, Subspace, invert, kernel, kron, rref, subspace_ops
from bihomcheck.scalars import Scalar, parse_scalar

P = ("b",)


def mat(rows, params=()):
    return Matrix.from_rows(
        [[parse_scalar(str(x), params) for x in r] for r in rows], params
    )


def test_rref_identity():
    m = Matrix.identity(2)
    red, rank = rref(m)
    assert red == m and rank == 2


def test_rref_rank_one():
    m = mat([[1, 2], [2, 4]])
    red, rank = rref(m)
    assert rank == 1
    assert red == mat([[1, 2], [0, 0]])


def test_rref_parameter_pivot():
    m = mat([["b", 0], [0, "b"]], P)
    red, rank = rref(m)
    assert rank == 2
    assert red == Matrix.identity(2, P)


def test_invert_alpha_beta_of_parametric_example():
    alpha = mat([[1, 0], [0, -1]], P)
    assert invert(alpha) == alpha
    beta = mat([[1, 0], [0, "b"]], P)
    assert invert(beta) == mat([[1, 0], [0, "1/b"]], P)


def test_invert_singular():
    with pytest.raises(Singular):
        invert(mat([[0]]))


def test_kernel_identity_and_zero():
    assert kernel(Matrix.identity(3)).dim == 0
    full = kernel(Matrix.zero(3, 3))
    assert full == Subspace.full_space(3)


def test_kernel_of_heisenberg_ad_stack():
    # stacked maps v -> [v, x_j] for the symmetric Heisenberg bracket
    # [x1,x2] = [x2,x1] = x3; solving [v, x_i] = 0 by hand leaves span(x3)
    rows = [
        [0, 0, 0], [0, 0, 0], [0, 1, 0],  # v -> [v, x1]
        [0, 0, 0], [0, 0, 0], [1, 0, 0],  # v -> [v, x2]
        [0, 0, 0], [0, 0, 0], [0, 0, 0],  # v -> [v, x3]
    ]
    ker = kernel(mat(rows))
    assert ker == Subspace.from_rows(3, mat([[0, 0, 1]]).row_list())


def test_subspace_sum_and_intersection():
    v = Subspace.from_rows(2, mat([[1, 0]]).row_list())
    zero = Subspace.zero_space(2)
    assert subspace_ops(v, zero, "sum") == v
    assert subspace_ops(v, v, "intersect") == v
    span_sum = Subspace.from_rows(2, mat([[1, 1]]).row_list())
    big = Subspace.from_rows(2, mat([[1, 0], [0, 1]]).row_list())
    assert subspace_ops(big, span_sum, "contains") is True
    assert subspace_ops(span_sum, big, "contains") is False
    assert subspace_ops(big, Subspace.full_space(2), "equals") is True


def test_ambient_mismatch():
    a = Subspace.zero_space(2)
    b = Subspace.zero_space(3)
    with pytest.raises(AmbientMismatch):
        a + b


def _random_matrix(rng, rows, cols):
    return Matrix.from_rows(
        [
            [Scalar.of((), Fraction(rng.randint(-3, 3))) for _ in range(cols)]
            for _ in range(rows)
        ],
        (),
    )


def test_rref_idempotent_and_kernel_exact():
    rng = random.Random(77)
    for _ in range(25):
        m = _random_matrix(rng, rng.randint(1, 4), rng.randint(1, 4))
        red, rank = rref(m)
        again, rank2 = rref(red)
        assert again == red and rank2 == rank
        ker = kernel(m)
        assert ker.dim == m.cols - rank
        for v in ker.vectors():
            assert all(x.is_zero() for x in m.apply(v))


def test_random_inverses():
    rng = random.Random(78)
    produced = 0
    while produced < 15:
        m = _random_matrix(rng, 3, 3)
        try:
            inv = invert(m)
        except Singular:
            continue
        produced += 1
        assert inv @ m == Matrix.identity(3)
        assert m @ inv == Matrix.identity(3)


def _random_subspace(rng, ambient, max_dim):
    k = rng.randint(0, max_dim)
    return Subspace.from_rows(
        ambient,
        [
            [Scalar.of((), Fraction(rng.randint(-2, 2))) for _ in range(ambient)]
            for _ in range(k)
        ],
        (),
    )


def test_modular_law_spot_check():
    # A cap (B + (A cap C)) == (A cap B) + (A cap C) whenever C <= A
    rng = random.Random(79)
    for _ in range(20):
        a = _random_subspace(rng, 4, 3)
        b = _random_subspace(rng, 4, 3)
        # build C inside A from random combinations of A's basis
        combos = []
        for _ in range(rng.randint(0, 2)):
            vec = [Scalar.of((), 0)] * 4
            for row in a.vectors():
                c = Scalar.of((), Fraction(rng.randint(-2, 2)))
                vec = [x + c * y for x, y in zip(vec, row)]
            combos.append(vec)
        c_space = Subspace.from_rows(4, combos, ())
        assert a.contains(c_space)
        lhs = a.intersect(b + a.intersect(c_space))
        rhs = a.intersect(b) + a.intersect(c_space)
        assert lhs == rhs


def test_kron_shapes_and_values():
    a = mat([[1, 2], [0, 1]])
    b = mat([[0, 1], [1, 0]])
    k = kron(a, b)
    assert (k.rows, k.cols) == (4, 4)
    # (a tensor b)[(i,k),(j,l)] = a[i,j] b[k,l]
    assert k.at(0 * 2 + 0, 1 * 2 + 1) == a.at(0, 1) * b.at(0, 1)
    assert kron(Matrix.identity(2), Matrix.identity(3)) == Matrix.identity(6)
