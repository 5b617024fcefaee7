"""Finite-dimensional Hopf algebras by structure constants, and R-matrices.

Conventions: mult[i][j][k] is the coefficient of basis k in e_i e_j;
comult[i][j][k] is the coefficient of e_j (x) e_k in the coproduct of e_i;
an R-matrix is the dim x dim coefficient matrix of R = sum R1 (x) R2 on the
tensor-square basis, so all braided-category formulas become contractions.
"""

from __future__ import annotations

from .errors import DimensionMismatch, NotAGroup, NotInvertible, Singular
from .linalg import Matrix, invert
from .report import CheckReport, Witness, residual_from_vector
from .scalars import Scalar


def _tensor3(dim, fill):
    return [[[fill for _ in range(dim)] for _ in range(dim)] for _ in range(dim)]


class HopfAlgebra:
    """Hopf algebra data; run ``check_hopf_axioms`` to verify the laws."""

    def __init__(self, basis_names, mult, unit, comult, counit, antipode, params=()):
        self.basis_names = list(basis_names)
        self.dim = len(self.basis_names)
        self.params = tuple(params)
        self.mult = mult
        self.unit = list(unit)
        self.comult = comult
        self.counit = list(counit)
        self.antipode = antipode
        self._validate_shapes()
        self.zero = Scalar.of(self.params, 0)
        self.one = Scalar.of(self.params, 1)

    def _validate_shapes(self):
        d = self.dim
        for tensor, name in ((self.mult, "mult"), (self.comult, "comult")):
            if len(tensor) != d or any(
                len(plane) != d or any(len(row) != d for row in plane)
                for plane in tensor
            ):
                raise DimensionMismatch(f"{name} tensor is not {d}x{d}x{d}")
        if len(self.unit) != d or len(self.counit) != d:
            raise DimensionMismatch("unit/counit vectors have wrong length")
        if (self.antipode.rows, self.antipode.cols) != (d, d):
            raise DimensionMismatch("antipode matrix has wrong shape")

    def product_vec(self, u, v):
        """Product of two element vectors in the basis."""
        out = [self.zero] * self.dim
        for i, a in enumerate(u):
            if a.is_zero():
                continue
            for j, b in enumerate(v):
                if b.is_zero():
                    continue
                ab = a * b
                for k in range(self.dim):
                    c = self.mult[i][j][k]
                    if not c.is_zero():
                        out[k] = out[k] + ab * c
        return out

    def basis_vector(self, i):
        return [self.one if j == i else self.zero for j in range(self.dim)]

    def antipode_vec(self, i):
        return self.antipode.col(i)

    def tensor_square_product(self, x, y):
        """Componentwise product of H (x) H elements given as coefficient
        matrices on the tensor-square basis."""
        d = self.dim
        out = [[self.zero] * d for _ in range(d)]
        for i in range(d):
            for j in range(d):
                a = x[i][j]
                if a.is_zero():
                    continue
                for k in range(d):
                    for l in range(d):
                        b = y[k][l]
                        if b.is_zero():
                            continue
                        ab = a * b
                        for p in range(d):
                            m1 = self.mult[i][k][p]
                            if m1.is_zero():
                                continue
                            for q in range(d):
                                m2 = self.mult[j][l][q]
                                if not m2.is_zero():
                                    out[p][q] = out[p][q] + ab * m1 * m2
        return out

    def tensor_square_unit(self):
        return [[a * b for b in self.unit] for a in self.unit]


class RMatrix:
    """Coefficient matrix of an element R of H (x) H."""

    def __init__(self, coefficients: Matrix):
        if coefficients.rows != coefficients.cols:
            raise DimensionMismatch("R-matrix coefficients must be square")
        self.coefficients = coefficients
        self.dim = coefficients.rows

    def entry(self, i, j) -> Scalar:
        return self.coefficients.at(i, j)

    def flip(self) -> "RMatrix":
        return RMatrix(self.coefficients.transpose())

    def table(self):
        return self.coefficients.row_list()

    def inverse_in(self, hopf: HopfAlgebra):
        """Two-sided inverse of R in the algebra H (x) H, as a coefficient
        table; raises NotInvertible when none exists."""
        d = hopf.dim
        if d != self.dim:
            raise DimensionMismatch("R-matrix dimension differs from the Hopf algebra")
        # left multiplication by R as an operator on the d^2-dim tensor square
        rows = []
        for a in range(d):
            for b in range(d):
                row = []
                for k in range(d):
                    for l in range(d):
                        s = hopf.zero
                        for i in range(d):
                            mi = hopf.mult[i][k][a]
                            if mi.is_zero():
                                continue
                            for j in range(d):
                                rc = self.entry(i, j)
                                if rc.is_zero():
                                    continue
                                mj = hopf.mult[j][l][b]
                                if not mj.is_zero():
                                    s = s + rc * mi * mj
                        row.append(s)
                rows.append(row)
        op = Matrix.from_rows(rows, hopf.params)
        target = [x for row in hopf.tensor_square_unit() for x in row]
        try:
            sol = invert(op).apply(target)
        except Singular:
            raise NotInvertible("R has no inverse in the tensor-square algebra") from None
        inv = [[sol[k * d + l] for l in range(d)] for k in range(d)]
        # one-sided suffices in a finite-dimensional unital algebra, but the
        # input may not satisfy the unit laws, so confirm both sides
        uu = hopf.tensor_square_unit()
        for prod in (
            self.tensor_product_with(hopf, inv),
            hopf.tensor_square_product(inv, self.table()),
        ):
            ok = all(
                (prod[a][b] - uu[a][b]).is_zero() for a in range(d) for b in range(d)
            )
            if not ok:
                raise NotInvertible("R has only a one-sided inverse candidate")
        return inv

    def tensor_product_with(self, hopf, other_table):
        return hopf.tensor_square_product(self.table(), other_table)


def group_algebra(cayley, identity, names=None, params=()) -> HopfAlgebra:
    """Group algebra kG as a Hopf algebra from a Cayley table.

    The table is validated as a group (closure, identity, inverses,
    associativity) before any tensors are built; basis = group elements,
    coproduct is diagonal, counit is 1, antipode permutes to inverses.
    """
    n = len(cayley)
    if names is None:
        names = [f"g{i}" for i in range(n)]
    if len(names) != n:
        raise NotAGroup("name list length differs from table size")
    for i, row in enumerate(cayley):
        if len(row) != n:
            raise NotAGroup(f"row {i} has length {len(row)}, expected {n}")
        for j, v in enumerate(row):
            if not isinstance(v, int) or not 0 <= v < n:
                raise NotAGroup(f"cell ({i},{j}) = {v!r} is not an element index")
    if not 0 <= identity < n:
        raise NotAGroup(f"identity index {identity} out of range")
    for i in range(n):
        if cayley[identity][i] != i:
            raise NotAGroup(f"cell ({identity},{i}) breaks the left identity law")
        if cayley[i][identity] != i:
            raise NotAGroup(f"cell ({i},{identity}) breaks the right identity law")
    inverse = [None] * n
    for i in range(n):
        for j in range(n):
            if cayley[i][j] == identity and cayley[j][i] == identity:
                inverse[i] = j
                break
        if inverse[i] is None:
            raise NotAGroup(f"row {i} has no inverse element")
    for i in range(n):
        for j in range(n):
            for k in range(n):
                if cayley[cayley[i][j]][k] != cayley[i][cayley[j][k]]:
                    raise NotAGroup(
                        f"associativity fails at cells (({i},{j}),{k}) vs ({i},({j},{k}))"
                    )
    zero = Scalar.of(params, 0)
    one = Scalar.of(params, 1)
    mult = _tensor3(n, zero)
    comult = _tensor3(n, zero)
    for i in range(n):
        for j in range(n):
            mult[i][j][cayley[i][j]] = one
        comult[i][i][i] = one
    unit = [one if i == identity else zero for i in range(n)]
    counit = [one] * n
    antipode = Matrix.from_rows(
        [[one if inverse[j] == i else zero for j in range(n)] for i in range(n)],
        params,
    )
    return HopfAlgebra(names, mult, unit, comult, counit, antipode, params)


def check_hopf_axioms(h: HopfAlgebra) -> CheckReport:
    """One report entry per Hopf axiom, with a witness on first failure."""
    rep = CheckReport("hopf")
    d = h.dim
    names = h.basis_names

    def find_assoc():
        for i in range(d):
            for j in range(d):
                for k in range(d):
                    lhs = h.product_vec(h.product_vec(h.basis_vector(i), h.basis_vector(j)), h.basis_vector(k))
                    rhs = h.product_vec(h.basis_vector(i), h.product_vec(h.basis_vector(j), h.basis_vector(k)))
                    diff = [a - b for a, b in zip(lhs, rhs)]
                    if any(not x.is_zero() for x in diff):
                        return Witness((names[i], names[j], names[k]), residual_from_vector(names, diff))
        return None

    w = find_assoc()
    rep.add("hopf.assoc", "(ab)c = a(bc)", w is None, w)

    def find_unit():
        for i in range(d):
            left = h.product_vec(h.unit, h.basis_vector(i))
            right = h.product_vec(h.basis_vector(i), h.unit)
            for got in (left, right):
                diff = [a - b for a, b in zip(got, h.basis_vector(i))]
                if any(not x.is_zero() for x in diff):
                    return Witness((names[i],), residual_from_vector(names, diff))
        return None

    w = find_unit()
    rep.add("hopf.unit", "1a = a = a1", w is None, w)

    def find_coassoc():
        for i in range(d):
            for a in range(d):
                for b in range(d):
                    for c in range(d):
                        lhs = h.zero
                        rhs = h.zero
                        for m in range(d):
                            lhs = lhs + h.comult[i][m][c] * h.comult[m][a][b]
                            rhs = rhs + h.comult[i][a][m] * h.comult[m][b][c]
                        if not (lhs - rhs).is_zero():
                            return Witness(
                                (names[i],),
                                ((f"{names[a]}(x){names[b]}(x){names[c]}", str(lhs - rhs)),),
                            )
        return None

    w = find_coassoc()
    rep.add("hopf.coassoc", "(coproduct (x) id) o coproduct = (id (x) coproduct) o coproduct", w is None, w)

    def find_counit():
        for i in range(d):
            for k in range(d):
                left = h.zero
                right = h.zero
                for j in range(d):
                    left = left + h.comult[i][j][k] * h.counit[j]
                    right = right + h.comult[i][k][j] * h.counit[j]
                want = h.one if i == k else h.zero
                if not (left - want).is_zero() or not (right - want).is_zero():
                    bad = left - want if not (left - want).is_zero() else right - want
                    return Witness((names[i],), ((names[k], str(bad)),))
        return None

    w = find_counit()
    rep.add("hopf.counit", "(counit (x) id) o coproduct = id = (id (x) counit) o coproduct", w is None, w)

    def find_bialgebra():
        for i in range(d):
            for j in range(d):
                lhs = [[h.zero] * d for _ in range(d)]
                for k in range(d):
                    mk = h.mult[i][j][k]
                    if mk.is_zero():
                        continue
                    for a in range(d):
                        for b in range(d):
                            lhs[a][b] = lhs[a][b] + mk * h.comult[k][a][b]
                rhs = h.tensor_square_product(h.comult[i], h.comult[j])
                for a in range(d):
                    for b in range(d):
                        if not (lhs[a][b] - rhs[a][b]).is_zero():
                            return Witness(
                                (names[i], names[j]),
                                ((f"{names[a]}(x){names[b]}", str(lhs[a][b] - rhs[a][b])),),
                            )
                eps = h.zero
                for k in range(d):
                    eps = eps + h.mult[i][j][k] * h.counit[k]
                if not (eps - h.counit[i] * h.counit[j]).is_zero():
                    return Witness((names[i], names[j]), (("counit", str(eps - h.counit[i] * h.counit[j])),))
        # coproduct and counit of the unit element
        for a in range(d):
            for b in range(d):
                got = h.zero
                for i in range(d):
                    got = got + h.unit[i] * h.comult[i][a][b]
                want = h.unit[a] * h.unit[b]
                if not (got - want).is_zero():
                    return Witness(("1",), ((f"{names[a]}(x){names[b]}", str(got - want)),))
        eps1 = h.zero
        for i in range(d):
            eps1 = eps1 + h.unit[i] * h.counit[i]
        if not (eps1 - h.one).is_zero():
            return Witness(("1",), (("counit", str(eps1 - h.one)),))
        return None

    w = find_bialgebra()
    rep.add("hopf.bialgebra", "coproduct and counit are algebra maps", w is None, w)

    def find_antipode():
        for i in range(d):
            left = [h.zero] * d
            right = [h.zero] * d
            for j in range(d):
                for k in range(d):
                    c = h.comult[i][j][k]
                    if c.is_zero():
                        continue
                    sj_ek = h.product_vec(h.antipode_vec(j), h.basis_vector(k))
                    ej_sk = h.product_vec(h.basis_vector(j), h.antipode_vec(k))
                    left = [x + c * y for x, y in zip(left, sj_ek)]
                    right = [x + c * y for x, y in zip(right, ej_sk)]
            want = [h.counit[i] * u for u in h.unit]
            for got in (left, right):
                diff = [a - b for a, b in zip(got, want)]
                if any(not x.is_zero() for x in diff):
                    return Witness((names[i],), residual_from_vector(names, diff))
        return None

    w = find_antipode()
    rep.add(
        "hopf.antipode",
        "m o (S (x) id) o coproduct = unit o counit = m o (id (x) S) o coproduct",
        w is None,
        w,
    )
    return rep


def _qt1_residuals(h, r):
    d = h.dim
    for a in range(d):
        for b in range(d):
            for c in range(d):
                lhs = h.zero
                for i in range(d):
                    lhs = lhs + r.entry(i, c) * h.comult[i][a][b]
                rhs = h.zero
                for i in range(d):
                    for j in range(d):
                        rij = r.entry(i, j)
                        if rij.is_zero():
                            continue
                        for k in range(d):
                            for l in range(d):
                                rkl = r.entry(k, l)
                                if rkl.is_zero():
                                    continue
                                for u in range(d):
                                    if h.unit[u].is_zero():
                                        continue
                                    for v in range(d):
                                        if h.unit[v].is_zero():
                                            continue
                                        m1 = h.mult[i][v][a]
                                        if m1.is_zero():
                                            continue
                                        m2 = h.mult[u][k][b]
                                        if m2.is_zero():
                                            continue
                                        m3 = h.mult[j][l][c]
                                        if m3.is_zero():
                                            continue
                                        rhs = rhs + rij * rkl * h.unit[u] * h.unit[v] * m1 * m2 * m3
                if not (lhs - rhs).is_zero():
                    yield (a, b, c), lhs - rhs


def _qt2_residuals(h, r):
    d = h.dim
    for a in range(d):
        for b in range(d):
            for c in range(d):
                lhs = h.zero
                for j in range(d):
                    lhs = lhs + r.entry(a, j) * h.comult[j][b][c]
                rhs = h.zero
                for i in range(d):
                    for j in range(d):
                        rij = r.entry(i, j)
                        if rij.is_zero():
                            continue
                        for k in range(d):
                            for l in range(d):
                                rkl = r.entry(k, l)
                                if rkl.is_zero():
                                    continue
                                for u in range(d):
                                    if h.unit[u].is_zero():
                                        continue
                                    for v in range(d):
                                        if h.unit[v].is_zero():
                                            continue
                                        m1 = h.mult[i][k][a]
                                        if m1.is_zero():
                                            continue
                                        m2 = h.mult[u][l][b]
                                        if m2.is_zero():
                                            continue
                                        m3 = h.mult[j][v][c]
                                        if m3.is_zero():
                                            continue
                                        rhs = rhs + rij * rkl * h.unit[u] * h.unit[v] * m1 * m2 * m3
                if not (lhs - rhs).is_zero():
                    yield (a, b, c), lhs - rhs


def check_quasitriangular(h: HopfAlgebra, r: RMatrix) -> CheckReport:
    """QT axioms for (H, R); raises NotInvertible when R is not a unit."""
    rep = CheckReport("quasitriangular")
    r.inverse_in(h)  # precondition: R invertible in H (x) H
    d = h.dim
    names = h.basis_names

    w = None
    for (a, b, c), res in _qt1_residuals(h, r):
        w = Witness((), ((f"{names[a]}(x){names[b]}(x){names[c]}", str(res)),))
        break
    rep.add("qt.1", "(coproduct (x) id)(R) = R13 R23", w is None, w)

    w = None
    for (a, b, c), res in _qt2_residuals(h, r):
        w = Witness((), ((f"{names[a]}(x){names[b]}(x){names[c]}", str(res)),))
        break
    rep.add("qt.2", "(id (x) coproduct)(R) = R13 R12", w is None, w)

    w = None
    for t in range(d):
        if w is not None:
            break
        for x in range(d):
            if w is not None:
                break
            for y in range(d):
                lhs = h.zero
                rhs = h.zero
                for i in range(d):
                    for j in range(d):
                        rij = r.entry(i, j)
                        if rij.is_zero():
                            continue
                        for a in range(d):
                            for b in range(d):
                                cab = h.comult[t][a][b]
                                if cab.is_zero():
                                    continue
                                lhs = lhs + rij * cab * h.mult[i][a][x] * h.mult[j][b][y]
                                rhs = rhs + cab * rij * h.mult[b][i][x] * h.mult[a][j][y]
                if not (lhs - rhs).is_zero():
                    w = Witness((names[t],), ((f"{names[x]}(x){names[y]}", str(lhs - rhs)),))
                    break
    rep.add("qt.3", "R coproduct(h) = coproduct-op(h) R for every basis h", w is None, w)
    return rep


def is_triangular(h: HopfAlgebra, r: RMatrix) -> bool:
    """True iff the flip of R equals its inverse in H (x) H."""
    inv = r.inverse_in(h)
    flip = r.flip().table()
    d = h.dim
    return all(
        (inv[i][j] - flip[i][j]).is_zero() for i in range(d) for j in range(d)
    )
