"""Command-line surface: check / construct / structure / catalog / print.

Exit codes are a stable contract: 0 all checks passed, 1 at least one
axiom failed, 2 input error (unreadable/invalid file, bad flags), 3
precondition refusal (singular twisting maps, non-triangular R-matrix,
and friends). Reports print as text by default or as versioned JSON with
--json; output is deterministic for a given input and seed.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import __version__
from .algfile import (
    AlgebraFile,
    parse_algebra_file,
    print_algebra_file,
    substitute_file,
)
from .bihom import check_bihom_associative, check_generalized_bihom_lie, check_lemma31, commutator_bracket, twist_bracket
from .catalog import CATALOG_DESCRIPTIONS, catalog_file, catalog_names
from .errors import (
    BihomError,
    ConstructionError,
    DenominatorVanishes,
    NotAGroup,
    NotBijective,
    NotEndomorphism,
    NotInvertible,
    NotTriangular,
    ParseError,
    Singular,
    UnboundParameter,
    ValidationError,
)
from .hmod import check_module, check_module_algebra
from .hopf import check_hopf_axioms, check_quasitriangular, is_triangular
from .linalg import Subspace
from .report import CheckReport, format_combination, format_subspace
from .scalars import parse_scalar
from .structure import (
    center,
    derived_series,
    ideal_closure,
    is_H_bihom_ideal,
    is_H_bihom_lie_ideal,
    lower_central_series,
    simplicity_certificate,
)

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_INPUT = 2
EXIT_REFUSED = 3

INPUT_ERRORS = (ParseError, ValidationError, NotAGroup, UnboundParameter, DenominatorVanishes)
REFUSALS = (NotBijective, NotTriangular, NotEndomorphism, NotInvertible, Singular, ConstructionError)

SUITES = ("hopf", "module", "module-algebra", "bihom-assoc", "bihom-lie", "lemma31", "all")


def load_file(ref: str) -> AlgebraFile:
    """Resolve a catalog name or a path to a validated AlgebraFile."""
    if ref in catalog_names():
        return catalog_file(ref)
    try:
        with open(ref, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise ValidationError([f"cannot read {ref!r}: {exc}"]) from None
    return parse_algebra_file(text)


def _parse_bindings(pairs):
    bindings = {}
    for item in pairs or ():
        name, sep, value = item.partition("=")
        if not sep or not name:
            raise ValidationError([f"--set expects NAME=RATIONAL, got {item!r}"])
        try:
            bindings[name] = Fraction(value)
        except (ValueError, ZeroDivisionError):
            raise ValidationError([f"--set {name}: {value!r} is not a rational"]) from None
    return bindings


def _prefixed(rep_into: CheckReport, prefix: str, rep: CheckReport):
    for e in rep.entries:
        e.check_id = f"{prefix}:{e.check_id}"
    rep_into.extend(rep)


def _bracket_diff_notes(f: AlgebraFile, obj, rep: CheckReport):
    """Informational diff of the computed commutator against a published
    reference table; discrepancies never fail the run."""
    try:
        lie = commutator_bracket(obj.as_bihom_algebra(), f.rmatrix)
    except BihomError as exc:
        rep.note(f"{obj.name}: reference diff skipped ({exc})")
        return
    names = obj.basis
    d = obj.dim
    diffs = []
    for i in range(d):
        for j in range(d):
            got = lie.bracket[i][j]
            want = obj.reference_bracket[i][j]
            if any(not (x - y).is_zero() for x, y in zip(got, want)):
                diffs.append(
                    f"[{names[i]},{names[j]}]: computed {format_combination(names, got)}, "
                    f"reference {format_combination(names, want)}"
                )
    if diffs:
        rep.note(
            f"{obj.name}: computed commutator differs from the stored reference "
            f"table (suspected typo in the published values); formula output is "
            f"authoritative"
        )
        for dtext in diffs:
            rep.note(f"{obj.name}: {dtext}")
    else:
        rep.note(f"{obj.name}: computed commutator matches the stored reference table")


def run_suite(f: AlgebraFile, suite: str) -> CheckReport:
    """Aggregate the requested axiom suites over every applicable object."""
    if suite not in SUITES:
        raise ValidationError([f"unknown suite {suite!r} (choose from {', '.join(SUITES)})"])
    rep = CheckReport(suite)
    tolerant = suite == "all"

    def guarded(fn, label):
        try:
            fn()
        except REFUSALS as exc:
            if not tolerant:
                raise
            rep.skip(label, "suite skipped", f"precondition refused: {exc}")

    if suite in ("hopf", "all"):
        _prefixed(rep, "H", check_hopf_axioms(f.hopf))

        def qt():
            sub = check_quasitriangular(f.hopf, f.rmatrix)
            tri = is_triangular(f.hopf, f.rmatrix)
            sub.add(
                "qt.triangular",
                "flip(R) equals the inverse of R in H (x) H",
                tri,
                None,
                "" if tri else "R is quasitriangular at most",
            )
            _prefixed(rep, "R", sub)

        guarded(qt, "R:qt")
    if suite in ("module", "all"):
        for name, obj in sorted(f.objects.items()):
            _prefixed(rep, name, check_module(obj.module))
    if suite in ("module-algebra", "all"):
        for name, obj in sorted(f.objects.items()):
            if obj.kind == "mult":
                _prefixed(rep, name, check_module_algebra(obj.as_bihom_algebra()))
    if suite in ("bihom-assoc", "all"):
        for name, obj in sorted(f.objects.items()):
            if obj.kind == "mult":
                _prefixed(rep, name, check_bihom_associative(obj.as_bihom_algebra()))
    if suite in ("bihom-lie", "all"):
        for name, obj in sorted(f.objects.items()):
            if obj.kind == "bracket":
                _prefixed(rep, name, check_generalized_bihom_lie(obj.as_bihom_lie(f.rmatrix)))
    if suite in ("lemma31", "all"):
        for name, obj in sorted(f.objects.items()):
            if obj.kind == "mult":
                guarded(
                    lambda obj=obj, name=name: _prefixed(
                        rep, name, check_lemma31(obj.as_bihom_algebra(), f.rmatrix)
                    ),
                    f"{name}:lemma31",
                )
    if suite == "all":
        for name, obj in sorted(f.objects.items()):
            if obj.kind == "mult" and obj.reference_bracket is not None:
                _bracket_diff_notes(f, obj, rep)
    return rep


def _pick_object(f: AlgebraFile, wanted: str | None, kind: str | None = None):
    pool = {
        name: obj
        for name, obj in f.objects.items()
        if kind is None or obj.kind == kind
    }
    if wanted is not None:
        if wanted not in pool:
            raise ValidationError(
                [f"no {kind or 'algebra'} object named {wanted!r}; have {sorted(pool) or 'none'}"]
            )
        return pool[wanted]
    if len(pool) != 1:
        raise ValidationError(
            [f"choose one of the {kind or ''} objects {sorted(pool)} with --object"]
        )
    return next(iter(pool.values()))


def run_construction(f: AlgebraFile, what: str, object_name: str | None = None) -> AlgebraFile:
    """Derive a new instance file: the braided commutator of a product
    object, or the twist of a bracket object by its stored twist maps."""
    from .catalog import _object_entry  # same conversion the catalog uses

    if what == "commutator":
        obj = _pick_object(f, object_name, "mult")
        lie = commutator_bracket(obj.as_bihom_algebra(), f.rmatrix)
        new_obj = _object_entry(obj.name, lie, "bracket")
    elif what == "twist":
        obj = _pick_object(f, object_name, "bracket")
        alpha, beta = obj.twist_maps()
        lie = twist_bracket(obj.as_bihom_lie(f.rmatrix), alpha, beta)
        new_obj = _object_entry(obj.name, lie, "bracket")
    else:
        raise ValidationError([f"unknown construction {what!r}"])
    return AlgebraFile(
        name=f"{f.name}-{what}" if f.name else what,
        parameters=f.parameters,
        hopf_spec=f.hopf_spec,
        hopf=f.hopf,
        rmatrix=f.rmatrix,
        objects={obj.name or "A": new_obj},
    )


def _parse_space(spec: str | None, dim, params, default=None) -> Subspace:
    if spec is None:
        if default is not None:
            return default
        raise ValidationError(["--space is required for this computation"])
    rows = []
    text = spec.strip()
    if text in ("0", ""):
        return Subspace.zero_space(dim, params)
    if text == "full":
        return Subspace.full_space(dim, params)
    for rtext in text.split(";"):
        cells = [c.strip() for c in rtext.split(",")]
        if len(cells) != dim:
            raise ValidationError(
                [f"--space row {rtext!r} has {len(cells)} coordinates, expected {dim}"]
            )
        try:
            rows.append([parse_scalar(c, params) for c in cells])
        except ParseError as exc:
            raise ValidationError([f"--space: {exc}"]) from None
    return Subspace.from_rows(dim, rows, params)


STRUCTURE_WHAT = ("center", "derived-series", "lcs", "ideal-check", "closure", "certificate")


def run_structure(
    f: AlgebraFile,
    what: str,
    object_name: str | None = None,
    space: str | None = None,
    max_steps: int = 16,
    probe_seed: int = 0,
) -> CheckReport:
    """Structure-theory computations rendered into a report; subspaces are
    printed as RREF bases over the object's named basis."""
    rep = CheckReport(f"structure:{what}")
    if what not in STRUCTURE_WHAT:
        raise ValidationError(
            [f"unknown computation {what!r} (choose from {', '.join(STRUCTURE_WHAT)})"]
        )
    if what in ("center", "derived-series", "lcs"):
        obj = _pick_object(f, object_name, "bracket")
        lie = obj.as_bihom_lie(f.rmatrix)
        names = obj.basis
        if what == "center":
            z = center(lie)
            rep.note(f"center = {format_subspace(names, z)}")
        elif what == "derived-series":
            res = derived_series(lie, max_steps)
            chain = ", ".join(format_subspace(names, t) for t in res.terms)
            rep.note(f"derived series: [{chain}]")
            rep.note(f"verdict: {res.verdict} at step {res.step}")
            rep.note(f"solvable: {'yes' if res.reaches_zero else 'no'}")
        else:
            start = _parse_space(
                space, obj.dim, f.parameters, Subspace.full_space(obj.dim, f.parameters)
            )
            res = lower_central_series(lie, start, max_steps)
            chain = ", ".join(format_subspace(names, t) for t in res.terms)
            rep.note(f"lower central series: [{chain}]")
            rep.note(f"verdict: {res.verdict} at step {res.step}")
            rep.note(f"nilpotent: {'yes' if res.reaches_zero else 'no'}")
    elif what in ("ideal-check", "closure"):
        obj = _pick_object(f, object_name)
        names = obj.basis
        sub = _parse_space(space, obj.dim, f.parameters)
        if obj.kind == "bracket":
            ambient = obj.as_bihom_lie(f.rmatrix)
            if what == "ideal-check":
                verdict = is_H_bihom_lie_ideal(ambient, sub)
                law = "U is an H-BiHom-Lie ideal (alpha, beta, H-stable and [U,L] <= U)"
            else:
                verdict = None
        else:
            ambient = obj.as_bihom_algebra()
            if what == "ideal-check":
                verdict = is_H_bihom_ideal(ambient, sub)
                law = (
                    "U is an H-BiHom-ideal (alpha, beta, H-stable and AU + UA <= U; "
                    "two-sided form, strictly implies the one-sided (AU)A = A(UA))"
                )
            else:
                verdict = None
        if what == "ideal-check":
            from .report import Witness, residual_from_vector

            w = None
            if not verdict:
                w = Witness((verdict.reason,), residual_from_vector(names, verdict.witness))
            rep.add("structure.ideal", law, bool(verdict), w)
        else:
            closed = ideal_closure(ambient, sub)
            rep.note(f"closure kind: {'lie' if obj.kind == 'bracket' else 'associative'}")
            rep.note(f"seed = {format_subspace(names, sub)}")
            rep.note(f"closure = {format_subspace(names, closed)}")
    else:  # certificate
        obj = _pick_object(f, object_name)
        names = obj.basis
        ambient = (
            obj.as_bihom_lie(f.rmatrix) if obj.kind == "bracket" else obj.as_bihom_algebra()
        )
        cert = simplicity_certificate(ambient, probe_seed=probe_seed)
        rep.probe_seed = probe_seed
        if cert.nonsimple_ideal is not None:
            rep.note(
                f"certified-nonsimple: proper nonzero ideal "
                f"{format_subspace(names, cert.nonsimple_ideal)}"
            )
        else:
            rep.note("simplicity: no-counterexample-found (NOT a simplicity proof)")
        if cert.nonprime_pair is not None:
            a, b = cert.nonprime_pair
            rep.note(
                f"certified-nonprime: {format_subspace(names, a)} and "
                f"{format_subspace(names, b)} have zero product"
            )
        else:
            rep.note("primality: no-counterexample-found")
        if cert.nonsemiprime_ideal is not None:
            rep.note(
                f"certified-nonsemiprime: nilpotent ideal "
                f"{format_subspace(names, cert.nonsemiprime_ideal)}"
            )
        else:
            rep.note("semiprimality: no-counterexample-found")
    return rep


def _emit(text: str, output: str | None):
    if output:
        with open(output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _emit_report(rep: CheckReport, as_json: bool, output: str | None) -> int:
    if as_json:
        _emit(json.dumps(rep.to_json(), indent=2) + "\n", output)
    else:
        _emit(rep.render_text() + "\n", output)
    return EXIT_OK if rep.ok else EXIT_FAIL


def build_parser():
    p = argparse.ArgumentParser(
        prog="bihomcheck",
        description="Exact axiom checking and structure theory for BiHom "
        "algebras over quasitriangular Hopf algebras.",
    )
    p.add_argument("--version", action="version", version=f"bihomcheck {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    cat = sub.add_parser("catalog", help="list the built-in instances")
    cat.add_argument("--json", action="store_true")

    pr = sub.add_parser("print", help="canonical file text for an instance")
    pr.add_argument("ref", help="catalog name or path to an algebra file")
    pr.add_argument("--output", default=None)

    ch = sub.add_parser("check", help="run axiom suites and report pass/fail")
    ch.add_argument("ref")
    ch.add_argument("--suite", default="all", choices=SUITES)
    ch.add_argument("--set", dest="bindings", action="append", metavar="NAME=RATIONAL")
    ch.add_argument("--json", action="store_true")
    ch.add_argument("--output", default=None)

    co = sub.add_parser("construct", help="derive the commutator or twist instance")
    co.add_argument("ref")
    co.add_argument("--what", required=True, choices=("commutator", "twist"))
    co.add_argument("--object", dest="object_name", default=None)
    co.add_argument("--set", dest="bindings", action="append", metavar="NAME=RATIONAL")
    co.add_argument("--output", required=True)
    co.add_argument("--json", action="store_true", help="also print the suite report for the result")

    st = sub.add_parser("structure", help="center, series, ideals, closures, certificates")
    st.add_argument("ref")
    st.add_argument("--what", required=True, choices=STRUCTURE_WHAT)
    st.add_argument("--object", dest="object_name", default=None)
    st.add_argument("--space", default=None, help="basis rows 'c1,c2,...;d1,d2,...' or '0' or 'full'")
    st.add_argument("--set", dest="bindings", action="append", metavar="NAME=RATIONAL")
    st.add_argument("--max-steps", type=int, default=16)
    st.add_argument("--probe-seed", type=int, default=0)
    st.add_argument("--json", action="store_true")
    st.add_argument("--output", default=None)
    return p


def _dispatch(args) -> int:
    if args.command == "catalog":
        if args.json:
            doc = [
                {"name": n, "description": CATALOG_DESCRIPTIONS[n]} for n in catalog_names()
            ]
            sys.stdout.write(json.dumps(doc, indent=2) + "\n")
        else:
            for n in catalog_names():
                sys.stdout.write(f"{n}: {CATALOG_DESCRIPTIONS[n]}\n")
        return EXIT_OK

    f = load_file(args.ref)
    bindings = _parse_bindings(getattr(args, "bindings", None))
    if bindings:
        f = substitute_file(f, bindings)

    if args.command == "print":
        _emit(print_algebra_file(f), args.output)
        return EXIT_OK
    if args.command == "check":
        rep = run_suite(f, args.suite)
        return _emit_report(rep, args.json, args.output)
    if args.command == "construct":
        derived = run_construction(f, args.what, args.object_name)
        _emit(print_algebra_file(derived), args.output)
        rep = run_suite(derived, "bihom-lie")
        if args.json:
            sys.stdout.write(json.dumps(rep.to_json(), indent=2) + "\n")
        return EXIT_OK if rep.ok else EXIT_FAIL
    if args.command == "structure":
        rep = run_structure(
            f,
            args.what,
            object_name=args.object_name,
            space=args.space,
            max_steps=args.max_steps,
            probe_seed=args.probe_seed,
        )
        return _emit_report(rep, args.json, args.output)
    raise AssertionError(f"unhandled command {args.command}")


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _dispatch(args)
    except INPUT_ERRORS as exc:
        if isinstance(exc, ValidationError):
            for item in exc.findings:
                sys.stderr.write(f"error: {item}\n")
        else:
            sys.stderr.write(f"error: {exc}\n")
        return EXIT_INPUT
    except REFUSALS as exc:
        sys.stderr.write(f"refused: {exc}\n")
        return EXIT_REFUSED


if __name__ == "__main__":
    sys.exit(main())
