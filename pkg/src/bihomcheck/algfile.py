"""Self-describing JSON file format for algebra instances.

One file declares the parameter names, the Hopf algebra (a validated group
table or raw structure tensors), an R-matrix, and any number of named
objects, each carrying an H-action, a mult or bracket tensor as sparse
(i, j, k, scalar) triples, the twisting maps, and optional extras (unit,
twist maps for the twist construction, a published reference bracket for
informational diffs). Parsing either returns a fully validated model or
raises with every located finding; it never returns a partial object.

The printer emits a canonical form (fixed key order, sorted triples,
canonical scalar strings), and parse-then-print is the identity on it.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .bihom import BiHomAlgebra, BiHomLie
from .errors import NotAGroup, ParseError, ValidationError
from .hmod import HModule, ModuleMap
from .hopf import HopfAlgebra, RMatrix, group_algebra
from .linalg import Matrix
from .scalars import Scalar, parse_scalar

FORMAT = "bihom-algebra-file/1"


@dataclass
class AlgebraObject:
    name: str
    basis: list
    module: HModule
    kind: str  # "mult" or "bracket"
    tensor: list
    alpha: Matrix
    beta: Matrix
    unit: list | None = None
    multiplicative: bool = True
    twist_alpha: Matrix | None = None
    twist_beta: Matrix | None = None
    reference_bracket: list | None = None  # sparse (i, j, k, Scalar) rows

    @property
    def dim(self):
        return len(self.basis)

    def as_bihom_algebra(self) -> BiHomAlgebra:
        if self.kind != "mult":
            raise ValidationError([f"object '{self.name}' carries a bracket, not a product"])
        return BiHomAlgebra(
            self.module,
            self.tensor,
            ModuleMap(self.module, self.module, self.alpha),
            ModuleMap(self.module, self.module, self.beta),
            unit=self.unit,
            multiplicative=self.multiplicative,
        )

    def as_bihom_lie(self, rmatrix: RMatrix) -> BiHomLie:
        if self.kind != "bracket":
            raise ValidationError([f"object '{self.name}' carries a product, not a bracket"])
        return BiHomLie(
            self.module,
            self.tensor,
            ModuleMap(self.module, self.module, self.alpha),
            ModuleMap(self.module, self.module, self.beta),
            rmatrix,
        )

    def twist_maps(self):
        if self.twist_alpha is None or self.twist_beta is None:
            raise ValidationError(
                [f"object '{self.name}' has no twist_alpha/twist_beta maps"]
            )
        return (
            ModuleMap(self.module, self.module, self.twist_alpha),
            ModuleMap(self.module, self.module, self.twist_beta),
        )


@dataclass
class AlgebraFile:
    name: str
    parameters: tuple
    hopf_spec: dict
    hopf: HopfAlgebra
    rmatrix: RMatrix
    objects: dict = field(default_factory=dict)


class _Findings:
    def __init__(self):
        self.items = []

    def add(self, path, message):
        self.items.append(f"{path}: {message}")

    def raise_if_any(self):
        if self.items:
            raise ValidationError(self.items)


def _parse_scalar_at(text, params, path, findings):
    if not isinstance(text, (str, int)):
        findings.add(path, f"expected a scalar string, got {type(text).__name__}")
        return None
    try:
        return parse_scalar(str(text), params)
    except ParseError as exc:
        findings.add(path, f"bad scalar {text!r}: {exc}")
        return None


def _parse_matrix(data, dim_rows, dim_cols, params, path, findings):
    if not isinstance(data, list) or len(data) != dim_rows:
        findings.add(path, f"expected {dim_rows} rows")
        return None
    rows = []
    ok = True
    for i, row in enumerate(data):
        if not isinstance(row, list) or len(row) != dim_cols:
            findings.add(f"{path}[{i}]", f"expected {dim_cols} entries")
            ok = False
            continue
        out = []
        for j, cell in enumerate(row):
            s = _parse_scalar_at(cell, params, f"{path}[{i}][{j}]", findings)
            if s is None:
                ok = False
            out.append(s)
        rows.append(out)
    if not ok:
        return None
    return Matrix.from_rows(rows, params)


def _parse_vector(data, dim, params, path, findings):
    if not isinstance(data, list) or len(data) != dim:
        findings.add(path, f"expected a vector of length {dim}")
        return None
    out = []
    ok = True
    for i, cell in enumerate(data):
        s = _parse_scalar_at(cell, params, f"{path}[{i}]", findings)
        if s is None:
            ok = False
        out.append(s)
    return out if ok else None


def _parse_triples(data, dim, params, path, findings):
    """Sparse rank-3 tensor rows (i, j, k, scalar) into a dense tensor."""
    zero = Scalar.of(params, 0)
    tensor = [[[zero] * dim for _ in range(dim)] for _ in range(dim)]
    if not isinstance(data, list):
        findings.add(path, "expected a list of (i, j, k, scalar) rows")
        return None
    ok = True
    for n, row in enumerate(data):
        if not isinstance(row, list) or len(row) != 4:
            findings.add(f"{path}[{n}]", "expected [i, j, k, scalar]")
            ok = False
            continue
        i, j, k, cell = row
        if not all(isinstance(t, int) and 0 <= t < dim for t in (i, j, k)):
            findings.add(
                f"{path}[{n}]", f"triple ({i},{j},{k}) out of range for dimension {dim}"
            )
            ok = False
            continue
        s = _parse_scalar_at(cell, params, f"{path}[{n}][3]", findings)
        if s is None:
            ok = False
            continue
        tensor[i][j][k] = tensor[i][j][k] + s
    return tensor if ok else None


def _build_hopf(spec, params, findings):
    if not isinstance(spec, dict) or len(spec) != 1 or next(iter(spec)) not in ("group", "raw"):
        findings.add("hopf", "expected exactly one of 'group' or 'raw'")
        return None
    if "group" in spec:
        g = spec["group"]
        if not isinstance(g, dict):
            findings.add("hopf.group", "expected an object")
            return None
        table = g.get("table")
        identity = g.get("identity")
        names = g.get("names")
        if not isinstance(table, list) or not isinstance(identity, int):
            findings.add("hopf.group", "needs 'table' (list of rows) and 'identity' (index)")
            return None
        try:
            return group_algebra(table, identity, names=names, params=params)
        except NotAGroup as exc:
            findings.add("hopf.group", str(exc))
            return None
    raw = spec["raw"]
    if not isinstance(raw, dict):
        findings.add("hopf.raw", "expected an object")
        return None
    names = raw.get("names")
    if not isinstance(names, list) or not names:
        findings.add("hopf.raw.names", "expected a nonempty list of basis names")
        return None
    d = len(names)
    mult = _parse_triples(raw.get("mult"), d, params, "hopf.raw.mult", findings)
    comult = _parse_triples(raw.get("comult"), d, params, "hopf.raw.comult", findings)
    unit = _parse_vector(raw.get("unit"), d, params, "hopf.raw.unit", findings)
    counit = _parse_vector(raw.get("counit"), d, params, "hopf.raw.counit", findings)
    antipode = _parse_matrix(raw.get("antipode"), d, d, params, "hopf.raw.antipode", findings)
    if None in (mult, comult, unit, counit, antipode):
        return None
    return HopfAlgebra(names, mult, unit, comult, counit, antipode, params)


def _build_object(name, data, hopf, params, findings):
    path = f"objects.{name}"
    if not isinstance(data, dict):
        findings.add(path, "expected an object")
        return None
    basis = data.get("basis")
    if not isinstance(basis, list) or not basis or not all(isinstance(b, str) for b in basis):
        findings.add(f"{path}.basis", "expected a nonempty list of basis names")
        return None
    dim = len(basis)
    declared = data.get("dim")
    if declared is not None and declared != dim:
        findings.add(f"{path}.dim", f"declared {declared} but basis has {dim} names")
    action_spec = data.get("action")
    action = None
    if not isinstance(action_spec, dict):
        findings.add(f"{path}.action", "expected a map from Hopf basis names to matrices")
    else:
        action = []
        for hname in hopf.basis_names:
            if hname not in action_spec:
                findings.add(
                    f"{path}.action", f"missing action matrix for Hopf element '{hname}'"
                )
                action = None
                continue
            mat = _parse_matrix(
                action_spec[hname], dim, dim, params, f"{path}.action.{hname}", findings
            )
            if mat is None:
                action = None
            elif action is not None:
                action.append(mat)
        extra = sorted(set(action_spec) - set(hopf.basis_names))
        if extra:
            findings.add(f"{path}.action", f"unknown Hopf element names {extra}")

    has_mult = "mult" in data
    has_bracket = "bracket" in data
    tensor = None
    kind = "mult"
    if has_mult == has_bracket:
        findings.add(path, "exactly one of 'mult' or 'bracket' is required")
    else:
        kind = "mult" if has_mult else "bracket"
        tensor = _parse_triples(data[kind], dim, params, f"{path}.{kind}", findings)

    if "alpha" not in data:
        findings.add(f"{path}.alpha", "alpha required")
        return None
    if "beta" not in data:
        findings.add(f"{path}.beta", "beta required")
        return None
    alpha = _parse_matrix(data["alpha"], dim, dim, params, f"{path}.alpha", findings)
    beta = _parse_matrix(data["beta"], dim, dim, params, f"{path}.beta", findings)

    unit = None
    if data.get("unit") is not None:
        unit = _parse_vector(data["unit"], dim, params, f"{path}.unit", findings)
    multiplicative = data.get("multiplicative", True)
    if not isinstance(multiplicative, bool):
        findings.add(f"{path}.multiplicative", "expected true or false")
        multiplicative = True
    twist_alpha = twist_beta = None
    if data.get("twist_alpha") is not None:
        twist_alpha = _parse_matrix(
            data["twist_alpha"], dim, dim, params, f"{path}.twist_alpha", findings
        )
    if data.get("twist_beta") is not None:
        twist_beta = _parse_matrix(
            data["twist_beta"], dim, dim, params, f"{path}.twist_beta", findings
        )
    reference = None
    if data.get("reference_bracket") is not None:
        reference = _parse_triples(
            data["reference_bracket"], dim, params, f"{path}.reference_bracket", findings
        )
    if action is None or None in (tensor, alpha, beta):
        return None
    module = HModule(hopf, basis, action)
    return AlgebraObject(
        name=name,
        basis=list(basis),
        module=module,
        kind=kind,
        tensor=tensor,
        alpha=alpha,
        beta=beta,
        unit=unit,
        multiplicative=multiplicative,
        twist_alpha=twist_alpha,
        twist_beta=twist_beta,
        reference_bracket=reference,
    )


def parse_algebra_file(text: str) -> AlgebraFile:
    """Parse and validate; raises ParseError (syntax) or ValidationError
    (semantics, with every located finding), never returns a partial file."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, exc.lineno, exc.colno) from None
    findings = _Findings()
    if not isinstance(data, dict):
        findings.add("$", "top level must be an object")
        findings.raise_if_any()
    if data.get("format") != FORMAT:
        findings.add("format", f"expected {FORMAT!r}, got {data.get('format')!r}")
    name = data.get("name", "")
    if not isinstance(name, str):
        findings.add("name", "expected a string")
        name = ""
    raw_params = data.get("parameters", [])
    if not isinstance(raw_params, list) or not all(isinstance(p, str) for p in raw_params):
        findings.add("parameters", "expected a list of identifiers")
        raw_params = []
    if len(set(raw_params)) != len(raw_params):
        findings.add("parameters", "duplicate parameter names")
    params = tuple(raw_params)

    hopf = _build_hopf(data.get("hopf"), params, findings)
    findings.raise_if_any()

    rmx = data.get("rmatrix")
    rmatrix = None
    mat = _parse_matrix(rmx, hopf.dim, hopf.dim, params, "rmatrix", findings)
    if mat is not None:
        rmatrix = RMatrix(mat)

    objects = {}
    objs = data.get("objects", {})
    if not isinstance(objs, dict):
        findings.add("objects", "expected a map of named objects")
        objs = {}
    for oname, odata in objs.items():
        obj = _build_object(oname, odata, hopf, params, findings)
        if obj is not None:
            objects[oname] = obj
    findings.raise_if_any()
    return AlgebraFile(
        name=name,
        parameters=params,
        hopf_spec=data["hopf"],
        hopf=hopf,
        rmatrix=rmatrix,
        objects=objects,
    )


# -- canonical printing ------------------------------------------------------


def _tensor_triples(tensor, dim):
    out = []
    for i in range(dim):
        for j in range(dim):
            for k in range(dim):
                c = tensor[i][j][k]
                if not c.is_zero():
                    out.append([i, j, k, str(c)])
    return out


def _matrix_rows(mat: Matrix):
    return [[str(x) for x in mat.row(r)] for r in range(mat.rows)]


def _object_json(o: AlgebraObject):
    out = {
        "dim": o.dim,
        "basis": list(o.basis),
        "action": {
            hname: _matrix_rows(o.module.action[i])
            for i, hname in enumerate(o.module.hopf.basis_names)
        },
        o.kind: _tensor_triples(o.tensor, o.dim),
        "alpha": _matrix_rows(o.alpha),
        "beta": _matrix_rows(o.beta),
    }
    if o.unit is not None:
        out["unit"] = [str(x) for x in o.unit]
    if not o.multiplicative:
        out["multiplicative"] = False
    if o.twist_alpha is not None:
        out["twist_alpha"] = _matrix_rows(o.twist_alpha)
    if o.twist_beta is not None:
        out["twist_beta"] = _matrix_rows(o.twist_beta)
    if o.reference_bracket is not None:
        out["reference_bracket"] = _tensor_triples(o.reference_bracket, o.dim)
    return out


def print_algebra_file(f: AlgebraFile) -> str:
    doc = {
        "format": FORMAT,
        "name": f.name,
        "parameters": list(f.parameters),
        "hopf": f.hopf_spec,
        "rmatrix": _matrix_rows(f.rmatrix.coefficients),
        "objects": {name: _object_json(obj) for name, obj in sorted(f.objects.items())},
    }
    return json.dumps(doc, indent=2) + "\n"


def substitute_file(f: AlgebraFile, bindings) -> AlgebraFile:
    """Apply a full parameter substitution to every scalar in the file.

    Binding names must be declared parameters; every parameter occurring
    anywhere in the file must be bound (UnboundParameter otherwise), and
    bindings may not hit a pole (DenominatorVanishes)."""
    unknown = sorted(set(bindings) - set(f.parameters))
    if unknown:
        raise ValidationError([f"--set: unknown parameter names {unknown}"])
    text = print_algebra_file(f)
    new = json.loads(text)
    remaining = [p for p in f.parameters if p not in bindings]

    def sub_scalar(s):
        v = parse_scalar(str(s), f.parameters).substitute(bindings)
        return str(v.reparametrize(tuple(remaining)))

    def walk(node, in_scalar_position):
        if isinstance(node, dict):
            return {k: walk(v, k not in ("format", "name", "parameters", "basis", "names")) for k, v in node.items()}
        if isinstance(node, list):
            return [walk(v, in_scalar_position) for v in node]
        if isinstance(node, str) and in_scalar_position:
            return sub_scalar(node)
        return node

    new = walk(new, False)
    new["parameters"] = remaining
    return parse_algebra_file(json.dumps(new))
