"""Built-in example instances, reachable by name from the CLI and tests.

Catalog names: trivial-hopf (2x2 matrix algebra over the trivial Hopf
algebra), kz2 (the order-2 group algebra with its nontrivial triangular
R-matrix), example24 (the 2-dimensional parametric BiHom-associative
algebra over kZ2), example25-heisenberg (the Heisenberg product and its
braided-commutator bracket over kZ2), example25-twisted (the same bracket
twisted by commuting diagonal endomorphisms with parameters l1, l2, l1p,
l2p), and cross-product-classical (the 3-dimensional cross-product Lie
algebra over the trivial Hopf algebra).
"""

from __future__ import annotations

from fractions import Fraction

from .bihom import BiHomAlgebra, BiHomLie
from .hmod import HModule, ModuleMap
from .hopf import HopfAlgebra, RMatrix, group_algebra
from .linalg import Matrix
from .scalars import Scalar

HEISENBERG_PARAMS = ("l1", "l2", "l1p", "l2p")


def sc(params, value):
    return Scalar.of(params, value)


def diagonal(params, values):
    d = len(values)
    zero = sc(params, 0)
    return Matrix.from_rows(
        [[values[i] if i == j else zero for j in range(d)] for i in range(d)], params
    )


def trivial_hopf(params=()) -> HopfAlgebra:
    return group_algebra([[0]], 0, names=["e"], params=params)


def kz2_hopf(params=()) -> HopfAlgebra:
    return group_algebra([[0, 1], [1, 0]], 0, names=["e", "g"], params=params)


def r_triangular_kz2(params=()) -> RMatrix:
    """R0 = (1/2)(e(x)e + e(x)g + g(x)e - g(x)g)."""
    h = Fraction(1, 2)
    return RMatrix(
        Matrix.from_rows(
            [[sc(params, h), sc(params, h)], [sc(params, h), sc(params, -h)]], params
        )
    )


def trivial_rmatrix(hopf: HopfAlgebra) -> RMatrix:
    return RMatrix(
        Matrix.from_rows([[a * b for b in hopf.unit] for a in hopf.unit], hopf.params)
    )


def _sign_action_module(hopf, basis_names, signs) -> HModule:
    """Module over kZ2 where g acts diagonally by the given signs."""
    params = hopf.params
    dim = len(basis_names)
    ident = Matrix.identity(dim, params)
    gmat = diagonal(params, [sc(params, s) for s in signs])
    return HModule(hopf, basis_names, [ident, gmat])


def _tensor3(dim, zero):
    return [[[zero] * dim for _ in range(dim)] for _ in range(dim)]


def example24_algebra() -> BiHomAlgebra:
    """Two-dimensional BiHom-associative algebra over kZ2 with parameter b:
    x1 x1 = x1, x1 x2 = b x2, x2 x1 = -x2, x2 x2 = 0; alpha = diag(1,-1),
    beta = diag(1,b); g fixes x1 and negates x2; x1 is the BiHom unit."""
    params = ("b",)
    hopf = kz2_hopf(params)
    module = _sign_action_module(hopf, ["x1", "x2"], [1, -1])
    zero = sc(params, 0)
    one = sc(params, 1)
    b = Scalar.param(params, "b")
    mult = _tensor3(2, zero)
    mult[0][0][0] = one
    mult[0][1][1] = b
    mult[1][0][1] = -one
    alpha = ModuleMap(module, module, diagonal(params, [one, -one]))
    beta = ModuleMap(module, module, diagonal(params, [one, b]))
    return BiHomAlgebra(module, mult, alpha, beta, unit=[one, zero])


EXAMPLE24_PRINTED_BRACKET = (
    (0, 1, 1, "2*b"),
    (1, 0, 0, "b"),
    (1, 0, 1, "-1"),
)


def matrix_algebra_2x2() -> BiHomAlgebra:
    """Full 2x2 matrix algebra over the trivial Hopf algebra, identity maps."""
    params = ()
    hopf = trivial_hopf(params)
    names = ["E11", "E12", "E21", "E22"]
    module = HModule(hopf, names, [Matrix.identity(4, params)])
    zero = sc(params, 0)
    one = sc(params, 1)
    mult = _tensor3(4, zero)
    pos = {(1, 1): 0, (1, 2): 1, (2, 1): 2, (2, 2): 3}
    for (i, j), a in pos.items():
        for (k, l), b in pos.items():
            if j == k:
                mult[a][b][pos[(i, l)]] = one
    ident = ModuleMap.identity(module)
    return BiHomAlgebra(module, mult, ident, ident, unit=[one, zero, zero, one])


def heisenberg_assoc(params=HEISENBERG_PARAMS) -> BiHomAlgebra:
    """Strictly upper-triangular 3x3 matrices under the matrix product:
    x1 x2 = x3 is the only nonzero product. g negates x1 and x2.

    The printed module action in the source example fixes x2, but the
    braiding table and the H-linearity of the bracket force g.x2 = -x2;
    see the check_module tests for the as-printed variant.
    """
    hopf = kz2_hopf(params)
    module = _sign_action_module(hopf, ["x1", "x2", "x3"], [-1, -1, 1])
    zero = sc(params, 0)
    one = sc(params, 1)
    mult = _tensor3(3, zero)
    mult[0][1][2] = one
    ident = ModuleMap.identity(module)
    return BiHomAlgebra(module, mult, ident, ident)


def heisenberg_lie(params=HEISENBERG_PARAMS) -> BiHomLie:
    """Generalized Lie algebra [x1,x2] = [x2,x1] = x3 (all other brackets
    zero) with identity maps; the braided commutator of heisenberg_assoc."""
    hopf = kz2_hopf(params)
    module = _sign_action_module(hopf, ["x1", "x2", "x3"], [-1, -1, 1])
    zero = sc(params, 0)
    one = sc(params, 1)
    bracket = _tensor3(3, zero)
    bracket[0][1][2] = one
    bracket[1][0][2] = one
    ident = ModuleMap.identity(module)
    return BiHomLie(module, bracket, ident, ident, r_triangular_kz2(params))


def heisenberg_twist_maps(params=HEISENBERG_PARAMS):
    """alpha = diag(l1, l2, l1 l2), beta = diag(l1p, l2p, l1p l2p)."""
    lie = heisenberg_lie(params)
    l1, l2, l1p, l2p = (Scalar.param(params, n) for n in HEISENBERG_PARAMS)
    alpha = ModuleMap(lie.module, lie.module, diagonal(params, [l1, l2, l1 * l2]))
    beta = ModuleMap(lie.module, lie.module, diagonal(params, [l1p, l2p, l1p * l2p]))
    return alpha, beta


def twisted_heisenberg(params=HEISENBERG_PARAMS) -> BiHomLie:
    """[x1,x2]' = l1 l2p x3, [x2,x1]' = l1p l2 x3, all other brackets zero."""
    base = heisenberg_lie(params)
    alpha, beta = heisenberg_twist_maps(params)
    zero = sc(params, 0)
    bracket = _tensor3(3, zero)
    bracket[0][1][2] = Scalar.param(params, "l1") * Scalar.param(params, "l2p")
    bracket[1][0][2] = Scalar.param(params, "l1p") * Scalar.param(params, "l2")
    return BiHomLie(base.module, bracket, alpha, beta, base.rmatrix)


def cross_product_lie() -> BiHomLie:
    """[e1,e2] = e3, [e2,e3] = e1, [e3,e1] = e2, antisymmetric, classical."""
    params = ()
    hopf = trivial_hopf(params)
    module = HModule(hopf, ["e1", "e2", "e3"], [Matrix.identity(3, params)])
    zero = sc(params, 0)
    one = sc(params, 1)
    bracket = _tensor3(3, zero)
    for i, j, k in ((0, 1, 2), (1, 2, 0), (2, 0, 1)):
        bracket[i][j][k] = one
        bracket[j][i][k] = -one
    ident = ModuleMap.identity(module)
    return BiHomLie(module, bracket, ident, ident, trivial_rmatrix(hopf))


# -- catalog files -----------------------------------------------------------

GROUP_Z1 = {"group": {"names": ["e"], "table": [[0]], "identity": 0}}
GROUP_Z2 = {"group": {"names": ["e", "g"], "table": [[0, 1], [1, 0]], "identity": 0}}


def _object_entry(name, structure, kind, **extras):
    from .algfile import AlgebraObject

    module = structure.module
    return AlgebraObject(
        name=name,
        basis=list(module.basis_names),
        module=module,
        kind=kind,
        tensor=structure.tensor,
        alpha=structure.alpha.matrix,
        beta=structure.beta.matrix,
        unit=getattr(structure, "unit", None),
        **extras,
    )


def _reference_bracket_tensor():
    from .scalars import parse_scalar

    params = ("b",)
    zero = sc(params, 0)
    tensor = _tensor3(2, zero)
    for i, j, k, text in EXAMPLE24_PRINTED_BRACKET:
        tensor[i][j][k] = parse_scalar(text, params)
    return tensor


def catalog_names():
    return [
        "trivial-hopf",
        "kz2",
        "example24",
        "example25-heisenberg",
        "example25-twisted",
        "cross-product-classical",
    ]


CATALOG_DESCRIPTIONS = {
    "trivial-hopf": "2x2 matrix algebra over the trivial Hopf algebra, identity maps",
    "kz2": "order-2 group algebra with the nontrivial triangular R-matrix",
    "example24": "2-dim parametric BiHom-associative algebra over kZ2 (parameter b)",
    "example25-heisenberg": "Heisenberg product and its braided commutator bracket over kZ2",
    "example25-twisted": "Heisenberg bracket twisted by diagonal maps in l1, l2, l1p, l2p",
    "cross-product-classical": "3-dim cross-product Lie algebra over the trivial Hopf algebra",
}


def catalog_file(name):
    """Built-in instance as a validated AlgebraFile, reachable without input
    files; unknown names raise KeyError."""
    from .algfile import AlgebraFile

    if name == "trivial-hopf":
        a = matrix_algebra_2x2()
        return AlgebraFile(
            name=name,
            parameters=(),
            hopf_spec=GROUP_Z1,
            hopf=a.module.hopf,
            rmatrix=trivial_rmatrix(a.module.hopf),
            objects={"A": _object_entry("A", a, "mult")},
        )
    if name == "kz2":
        hopf = kz2_hopf()
        return AlgebraFile(
            name=name,
            parameters=(),
            hopf_spec=GROUP_Z2,
            hopf=hopf,
            rmatrix=r_triangular_kz2(),
            objects={},
        )
    if name == "example24":
        a = example24_algebra()
        obj = _object_entry("A", a, "mult")
        obj.reference_bracket = _reference_bracket_tensor()
        return AlgebraFile(
            name=name,
            parameters=("b",),
            hopf_spec=GROUP_Z2,
            hopf=a.module.hopf,
            rmatrix=r_triangular_kz2(("b",)),
            objects={"A": obj},
        )
    if name == "example25-heisenberg":
        a = heisenberg_assoc()
        lie = heisenberg_lie()
        alpha, beta = heisenberg_twist_maps()
        lobj = _object_entry("L", lie, "bracket")
        lobj.twist_alpha = alpha.matrix
        lobj.twist_beta = beta.matrix
        return AlgebraFile(
            name=name,
            parameters=HEISENBERG_PARAMS,
            hopf_spec=GROUP_Z2,
            hopf=a.module.hopf,
            rmatrix=r_triangular_kz2(HEISENBERG_PARAMS),
            objects={"A": _object_entry("A", a, "mult"), "L": lobj},
        )
    if name == "example25-twisted":
        lie = twisted_heisenberg()
        return AlgebraFile(
            name=name,
            parameters=HEISENBERG_PARAMS,
            hopf_spec=GROUP_Z2,
            hopf=lie.module.hopf,
            rmatrix=lie.rmatrix,
            objects={"L": _object_entry("L", lie, "bracket")},
        )
    if name == "cross-product-classical":
        lie = cross_product_lie()
        return AlgebraFile(
            name=name,
            parameters=(),
            hopf_spec=GROUP_Z1,
            hopf=lie.module.hopf,
            rmatrix=lie.rmatrix,
            objects={"L": _object_entry("L", lie, "bracket")},
        )
    raise KeyError(f"unknown catalog name {name!r}")
