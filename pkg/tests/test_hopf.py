"""Hopf axiom suite, group algebras, and quasitriangular/triangular checks."""

from fractions import Fraction

import pytest

from bihomcheck.errors import NotAGroup, NotInvertible
from bihomcheck.hopf import (
    HopfAlgebra,
    RMatrix,
    check_hopf_axioms,
    check_quasitriangular,
    group_algebra,
    is_triangular,
)
from bihomcheck.linalg import Matrix
from bihomcheck.scalars import Scalar

Z2 = [[0, 1], [1, 0]]
Z4 = [[(i + j) % 4 for j in range(4)] for i in range(4)]


def kz2():
    return group_algebra(Z2, 0, names=["e", "g"])


def r_half():
    """R0 = (1/2)(e(x)e + e(x)g + g(x)e - g(x)g)."""
    h = Fraction(1, 2)
    return RMatrix(
        Matrix.from_rows(
            [[Scalar.of((), h), Scalar.of((), h)], [Scalar.of((), h), Scalar.of((), -h)]],
            (),
        )
    )


def trivial_r(hopf):
    """R = 1 (x) 1 on any Hopf algebra."""
    return RMatrix(
        Matrix.from_rows(
            [[a * b for b in hopf.unit] for a in hopf.unit], hopf.params
        )
    )


def test_kz2_passes_all_axioms():
    rep = check_hopf_axioms(kz2())
    assert rep.ok
    assert [e.check_id for e in rep.entries] == [
        "hopf.assoc",
        "hopf.unit",
        "hopf.coassoc",
        "hopf.counit",
        "hopf.bialgebra",
        "hopf.antipode",
    ]


def test_zero_antipode_fails_with_witness():
    h = kz2()
    broken = HopfAlgebra(
        h.basis_names, h.mult, h.unit, h.comult, h.counit, Matrix.zero(2, 2), ()
    )
    rep = check_hopf_axioms(broken)
    entry = rep.entry("hopf.antipode")
    assert entry.status == "fail"
    assert entry.witness.basis == ("e",)
    assert not rep.ok


def test_trivial_hopf_algebra():
    rep = check_hopf_axioms(group_algebra([[0]], 0, names=["e"]))
    assert rep.ok


def test_z4_group_algebra_passes():
    rep = check_hopf_axioms(group_algebra(Z4, 0))
    assert rep.ok


def test_not_a_group_errors():
    with pytest.raises(NotAGroup, match="identity"):
        group_algebra([[1, 0], [0, 1]], 0)
    with pytest.raises(NotAGroup, match="associativity|inverse|identity"):
        # left-identity holds, but row 1 is not cancellative
        group_algebra([[0, 1, 2], [1, 1, 1], [2, 1, 0]], 0)
    with pytest.raises(NotAGroup, match="element index"):
        group_algebra([[0, 5], [1, 0]], 0)


def test_quasitriangular_kz2_r0():
    rep = check_quasitriangular(kz2(), r_half())
    assert rep.ok


def test_quasitriangular_trivial_r():
    for h in (kz2(), group_algebra(Z4, 0)):
        assert check_quasitriangular(h, trivial_r(h)).ok
        assert is_triangular(h, trivial_r(h))


def test_qt1_fails_for_e_tensor_g():
    # e(x)g is invertible in kZ2 (x) kZ2 (self-inverse, g^2 = e), but
    # (coproduct (x) id)(e(x)g) = e(x)e(x)g while R13 R23 = e(x)e(x)e
    h = kz2()
    one = Scalar.of((), 1)
    zero = Scalar.of((), 0)
    r = RMatrix(Matrix.from_rows([[zero, one], [zero, zero]], ()))
    inv = r.inverse_in(h)
    assert inv[0][1] == one
    rep = check_quasitriangular(h, r)
    assert rep.entry("qt.1").status == "fail"
    assert not rep.ok


def test_noninvertible_r_is_refused():
    # g(x)g - e(x)e squares to zero, so it has no inverse
    h = kz2()
    one = Scalar.of((), 1)
    zero = Scalar.of((), 0)
    r = RMatrix(Matrix.from_rows([[-one, zero], [zero, one]], ()))
    with pytest.raises(NotInvertible):
        check_quasitriangular(h, r)


def test_triangularity_of_r0():
    assert is_triangular(kz2(), r_half())


def klein_function_hopf():
    """Functions on Z2 x Z2: basis of point idempotents, convolution
    coproduct, R from the bicharacter (x, y) -> (-1)^(x1 y2)."""
    elems = [(0, 0), (0, 1), (1, 0), (1, 1)]
    idx = {e: i for i, e in enumerate(elems)}
    names = [f"f{a}{b}" for a, b in elems]
    zero = Scalar.of((), 0)
    one = Scalar.of((), 1)
    d = 4
    mult = [[[zero] * d for _ in range(d)] for _ in range(d)]
    comult = [[[zero] * d for _ in range(d)] for _ in range(d)]
    for i, x in enumerate(elems):
        mult[i][i][i] = one
        for j, y in enumerate(elems):
            s = idx[((x[0] + y[0]) % 2, (x[1] + y[1]) % 2)]
            comult[s][i][j] = one
    unit = [one] * d
    counit = [one if e == (0, 0) else zero for e in elems]
    antipode = Matrix.identity(d)  # every element is 2-torsion
    h = HopfAlgebra(names, mult, unit, comult, counit, antipode, ())
    r = RMatrix(
        Matrix.from_rows(
            [
                [Scalar.of((), (-1) ** (x[0] * y[1])) for y in elems]
                for x in elems
            ],
            (),
        )
    )
    return h, r


def test_quasitriangular_but_not_triangular_dim4():
    h, r = klein_function_hopf()
    assert check_hopf_axioms(h).ok
    rep = check_quasitriangular(h, r)
    assert rep.ok
    # R is its own inverse but not symmetric under the flip
    assert not is_triangular(h, r)


def test_counit_is_algebra_map_and_antipode_antihomomorphism():
    for h in (kz2(), group_algebra(Z4, 0), klein_function_hopf()[0]):
        d = h.dim
        for i in range(d):
            for j in range(d):
                eps = h.zero
                for k in range(d):
                    eps = eps + h.mult[i][j][k] * h.counit[k]
                assert (eps - h.counit[i] * h.counit[j]).is_zero()
                # S(ab) = S(b) S(a)
                lhs = [h.zero] * d
                for k in range(d):
                    c = h.mult[i][j][k]
                    if not c.is_zero():
                        sk = h.antipode_vec(k)
                        lhs = [x + c * y for x, y in zip(lhs, sk)]
                rhs = h.product_vec(h.antipode_vec(j), h.antipode_vec(i))
                assert all((a - b).is_zero() for a, b in zip(lhs, rhs))


def test_qt_normalization_consequences():
    # (counit (x) id)(R) = 1 and (id (x) counit)(R) = 1 for accepted pairs
    cases = [(kz2(), r_half()), (kz2(), trivial_r(kz2())), klein_function_hopf()]
    for h, r in cases:
        assert check_quasitriangular(h, r).ok
        d = h.dim
        left = [h.zero] * d
        right = [h.zero] * d
        for i in range(d):
            for j in range(d):
                c = r.entry(i, j)
                if c.is_zero():
                    continue
                left[j] = left[j] + c * h.counit[i]
                right[i] = right[i] + c * h.counit[j]
        assert all((a - b).is_zero() for a, b in zip(left, h.unit))
        assert all((a - b).is_zero() for a, b in zip(right, h.unit))


def test_group_algebra_is_cocommutative():
    for h in (kz2(), group_algebra(Z4, 0)):
        d = h.dim
        for i in range(d):
            for a in range(d):
                for b in range(d):
                    assert (h.comult[i][a][b] - h.comult[i][b][a]).is_zero()
