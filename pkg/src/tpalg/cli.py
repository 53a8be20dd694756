"""Command-line front end over workspace files.

Exit codes: 0 when every check holds, 1 when a mathematical check or
precondition fails, 2 for unreadable input or missing objects.
"""

from __future__ import annotations

import argparse
import json
import sys
from collections.abc import Sequence

from . import __version__
from .algebra import (
    CLASSES,
    AlgebraClass,
    check_class,
    check_derivation,
    commutator,
    zinbiel_symmetrization,
)
from .coalgebra import (
    BialgebraKind,
    CoalgebraClass,
    check_bialgebra,
    check_coalgebra,
    dual_algebra,
)
from .data import load_examples
from .errors import AlgebraError, PreconditionError
from .forms import (
    FormPredicate,
    ManinKind,
    check_form,
    check_manin_triple,
    induce_anti_pre_lie,
)
from .identities import IdentityReport
from .matched_pairs import build_double, standard_pair_from_dual
from .operators import (
    apl_from_derivation,
    canonical_r,
    pre_apl_from_zinbiel,
    pre_aplp_from_zinbiel,
    witt_lie,
)
from .representations import (
    RepKind,
    adjoint,
    check_representation,
    check_tpa_dual_condition,
    dualize,
    semidirect_product,
    tpa_dual,
)
from .tensor import format_scalar
from .workspace import Workspace, WorkspaceError, dumps, load, to_data
from .yang_baxter import coboundary_coproducts, yang_baxter_report

SCHEMA_VERSION = 1
EXIT_PASS, EXIT_FAIL, EXIT_INPUT = 0, 1, 2
EXAMPLES = "@examples"

RECIPES = (
    "witt-lie",
    "apl-from-derivation",
    "pre-apl-from-zinbiel",
    "pre-aplp-from-zinbiel",
    "induce-from-2cocycle",
    "semidirect",
    "double-from-matched-pair",
    "canonical-r",
    "coboundary-coproducts",
    "dualize",
)


class InputError(AlgebraError):
    """A command line that names something unusable."""


# ---------------------------------------------------------------------------
# report rendering


def report_dict(report: IdentityReport, labels: Sequence[str] = ()) -> dict:
    out = {"id": report.identity_id, "holds": report.holds}
    if report.description:
        out["description"] = report.description
    if not report.holds:
        out["variables"] = list(report.variables)
        out["witness"] = list(report.witness)
        if labels and all(i < len(labels) for i in report.witness):
            out["witness_labels"] = [labels[i] for i in report.witness]
        out["defect"] = [format_scalar(v) for v in report.defect]
    return out


def report_line(report: IdentityReport, labels: Sequence[str] = ()) -> str:
    if report.holds:
        return f"PASS {report.identity_id}"
    d = report_dict(report, labels)
    shown = d.get("witness_labels", d["witness"])
    return f"FAIL {report.identity_id}  witness ({', '.join(map(str, shown))})  defect [{', '.join(d['defect'])}]"


class Output:
    """Collects report lines and the structured payload of one command."""

    def __init__(self, args, command: str):
        self.args = args
        self.payload: dict = {"schema_version": SCHEMA_VERSION, "command": command}
        self.lines: list[str] = []

    def reports(self, key: str, reports: Sequence[IdentityReport], labels: Sequence[str] = ()) -> bool:
        self.payload.setdefault(key, []).extend(report_dict(r, labels) for r in reports)
        self.lines.extend(report_line(r, labels) for r in reports)
        return all(r.holds for r in reports)

    def text(self, line: str) -> None:
        self.lines.append(line)

    def render(self) -> str:
        if self.args.format == "structured":
            return json.dumps(self.payload, indent=2) + "\n"
        return "\n".join(self.lines) + "\n"


def _write(path: str | None, text: str) -> None:
    if path:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


# ---------------------------------------------------------------------------
# helpers


def _load(path: str) -> Workspace:
    return load_examples() if path == EXAMPLES else load(path)


def _enum(enum_cls, text: str, what: str):
    for member in enum_cls:
        if text.lower() in (member.value.lower(), member.name.lower()):
            return member
    choices = ", ".join(m.value for m in enum_cls)
    raise InputError(f"unknown {what} {text!r}; expected one of {choices}")


def _need(value, option: str, context: str):
    if value is None:
        raise InputError(f"{context} needs {option}")
    return value


def _with_dot(a):
    """Symmetrize a Zinbiel product when no commutative product is present."""
    return a if a.has("dot") or not a.has("star") else zinbiel_symmetrization(a)


def _manin_input(a):
    return commutator(a) if a.has("circ") and not a.has("bracket") else a


# ---------------------------------------------------------------------------
# verify


def _verify_reports(ws: Workspace, args) -> tuple[list[IdentityReport], Sequence[str]]:
    check = args.check
    family, _, detail = check.partition(":")
    family = family.lower()
    if family == "coalgebra":
        cls = _enum(CoalgebraClass, detail, "coalgebra class")
        role = "Delta" if cls is CoalgebraClass.COCOMM_COASSOC else "delta"
        cop = {role: ws.get("coproducts", args.object)}
        if cls is CoalgebraClass.APLP_COALG:
            cop["Delta"] = ws.get("coproducts", _need(args.Delta, "--Delta", check))
        return check_coalgebra(cop, cls), ()
    a = ws.get("algebras", args.object)
    labels = a.basis_labels
    if family == "derivation":
        P = ws.get("maps", _need(args.map, "--map", check))
        product = args.product or (next(iter(a.products)) if len(a.products) == 1 else None)
        return [check_derivation(a, _need(product, "--product", check), P)], labels
    if family == "form":
        B = ws.get("forms", _need(args.form, "--form", check))
        return [check_form(_manin_input(a), B, _enum(FormPredicate, detail, "form predicate"))], labels
    if family == "rep":
        kind = _enum(RepKind, detail, "representation kind")
        return check_representation(adjoint(_manin_input(a), kind)), ()
    if family == "dual-rep":
        kind = _enum(RepKind, detail, "representation kind")
        rep = adjoint(_manin_input(a), kind)
        if kind is RepKind.TPA:
            condition = check_tpa_dual_condition(rep)
            return [condition] + (check_representation(tpa_dual(rep)) if condition.holds else []), ()
        return check_representation(dualize(rep)), ()
    if family == "bialgebra":
        kind = _enum(BialgebraKind, detail, "bialgebra kind")
        cop = {}
        if args.delta:
            cop["delta"] = ws.get("coproducts", args.delta)
        if args.Delta:
            cop["Delta"] = ws.get("coproducts", args.Delta)
        if not cop:
            raise InputError(f"{check} needs --delta and/or --Delta")
        return check_bialgebra(a, cop, kind, preconditions="report"), labels
    if family == "manin":
        kind = _enum(ManinKind, detail, "Manin triple kind")
        if a.dim % 2:
            raise InputError(f"a Manin triple needs even dimension, got {a.dim}")
        return check_manin_triple(_manin_input(a), (a.dim // 2, a.dim // 2), kind), labels
    if detail:
        raise InputError(f"unknown check family {family!r}")
    return check_class(a, _enum(AlgebraClass, check, "algebra class")), labels


def cmd_verify(args) -> int:
    ws = _load(args.file)
    out = Output(args, "verify")
    out.payload.update(object=args.object, check=args.check)
    reports, labels = _verify_reports(ws, args)
    holds = out.reports("reports", reports, labels)
    out.payload["holds"] = holds
    out.text(f"{'PASS' if holds else 'FAIL'} {args.object} {args.check}")
    _write(args.out, out.render())
    return EXIT_PASS if holds else EXIT_FAIL


# ---------------------------------------------------------------------------
# construct


def _construct(ws: Workspace, args) -> list[tuple[str, str, object]]:
    """Objects created by the recipe as ``(section, default name, object)``."""
    recipe = args.recipe
    name = _need(args.algebra, "--algebra", recipe)
    a = ws.get("algebras", name)
    if recipe in ("witt-lie", "apl-from-derivation", "pre-apl-from-zinbiel", "pre-aplp-from-zinbiel"):
        P = ws.get("maps", _need(args.map, "--map", recipe))
        build = {
            "witt-lie": lambda: witt_lie(_with_dot(a), P),
            "apl-from-derivation": lambda: apl_from_derivation(_with_dot(a), P),
            "pre-apl-from-zinbiel": lambda: pre_apl_from_zinbiel(a, P),
            "pre-aplp-from-zinbiel": lambda: pre_aplp_from_zinbiel(a, P),
        }[recipe]
        suffix = {"witt-lie": "witt", "apl-from-derivation": "apl", "pre-apl-from-zinbiel": "preapl",
                  "pre-aplp-from-zinbiel": "preaplp"}[recipe]
        return [("algebras", f"{name}_{suffix}", build())]
    if recipe == "induce-from-2cocycle":
        B = ws.get("forms", _need(args.form, "--form", recipe))
        return [("algebras", f"{name}_induced", induce_anti_pre_lie(a, B))]
    if recipe in ("semidirect", "dualize"):
        kind = _enum(RepKind, _need(args.kind, "--kind", recipe), "representation kind")
        rep = adjoint(_manin_input(a), kind)
        if recipe == "dualize" or args.dual:
            rep = tpa_dual(rep) if kind is RepKind.TPA else dualize(rep)
            labels = a.basis_labels + tuple(f"{b}*" for b in a.basis_labels)
            suffix = "dual_semidirect"
        else:
            labels = a.basis_labels + tuple(f"{b}'" for b in a.basis_labels)
            suffix = "semidirect"
        s = semidirect_product(rep)
        return [("algebras", f"{name}_{suffix}", type(s)(s.dim, s.products, labels))]
    if recipe == "double-from-matched-pair":
        kind = _enum(RepKind, _need(args.kind, "--kind", recipe), "representation kind")
        if args.dual_algebra:
            a_star = ws.get("algebras", args.dual_algebra)
        else:
            cop = {}
            if args.delta:
                cop["delta"] = ws.get("coproducts", args.delta)
            if args.Delta:
                cop["Delta"] = ws.get("coproducts", args.Delta)
            if not cop:
                raise InputError("double-from-matched-pair needs --dual-algebra or --delta/--Delta")
            a_star = dual_algebra(cop)
        return [("algebras", f"{name}_double", build_double(standard_pair_from_dual(a, a_star, kind)))]
    if recipe == "canonical-r":
        ambient, r = canonical_r(a)
        return [("algebras", f"{name}_ambient", ambient), ("two_tensors", f"{name}_r", r)]
    if recipe == "coboundary-coproducts":
        tname = _need(args.tensor, "--tensor", recipe)
        delta, Delta = coboundary_coproducts(a, ws.get("two_tensors", tname))
        made = []
        if delta is not None:
            made.append(("coproducts", f"{tname}_delta", delta))
        if Delta is not None:
            made.append(("coproducts", f"{tname}_Delta", Delta))
        return made
    raise InputError(f"unknown recipe {recipe!r}")


def cmd_construct(args) -> int:
    ws = _load(args.file)
    made = _construct(ws, args)
    if args.name and len(made) > 1:
        raise InputError(f"recipe {args.recipe} creates {len(made)} objects; --name applies to single results")
    inputs = {k: v for k, v in (("algebra", args.algebra), ("map", args.map), ("form", args.form),
                                ("tensor", args.tensor), ("kind", args.kind), ("dual_algebra", args.dual_algebra),
                                ("delta", args.delta), ("Delta", args.Delta)) if v}
    if args.dual:
        inputs["dual"] = True
    created = []
    for section, default, obj in made:
        name = args.name or default
        ws.add(section, name, obj, {"recipe": args.recipe, "inputs": inputs})
        created.append({"section": section, "name": name})
    out = Output(args, "construct")
    out.payload.update(recipe=args.recipe, created=created)
    for c in created:
        out.text(f"created {c['section']}.{c['name']} by {args.recipe}")
    if args.out:
        _write(args.out, dumps(ws))
        sys.stdout.write(out.render())
    elif args.format == "structured":
        out.payload["document"] = to_data(ws)
        sys.stdout.write(out.render())
    else:
        sys.stdout.write(dumps(ws))
    return EXIT_PASS


# ---------------------------------------------------------------------------
# check-ybe, dualize, report


def cmd_check_ybe(args) -> int:
    ws = _load(args.file)
    a = ws.get("algebras", args.algebra)
    r = ws.get("two_tensors", args.tensor)
    tensors = {"apl": ("T",), "aybe": ("A",), "aplp": ("T", "A")}[args.kind]
    if "T" in tensors:
        a.require("circ")
    if "A" in tensors:
        a.require("dot")
    out = Output(args, "check-ybe")
    out.payload.update(algebra=args.algebra, tensor=args.tensor, kind=args.kind)
    holds = True
    for name in tensors:
        report = yang_baxter_report(a, r, name)
        holds &= out.reports("reports", [report], a.basis_labels)
        if report.holds:
            out.text(f"{name}(r) vanishes")
        else:
            out.text(f"{name}(r) has entry {report.defect[0]} at {report.witness}")
    out.payload["holds"] = holds
    _write(args.out, out.render())
    return EXIT_PASS if holds else EXIT_FAIL


def cmd_dualize(args) -> int:
    ws = _load(args.file)
    a = ws.get("algebras", args.algebra)
    kind = _enum(RepKind, args.kind, "representation kind")
    rep = adjoint(_manin_input(a), kind)
    out = Output(args, "dualize")
    out.payload.update(algebra=args.algebra, kind=kind.value)
    if kind is RepKind.TPA:
        condition = check_tpa_dual_condition(rep)
        holds = out.reports("reports", [condition])
        dual = tpa_dual(rep) if holds else None
    else:
        dual = dualize(rep)
        holds = True
    if dual is not None:
        holds &= out.reports("reports", check_representation(dual))
    out.payload["holds"] = holds
    out.text(f"{'PASS' if holds else 'FAIL'} dual of the adjoint {kind.value} representation of {args.algebra}")
    if holds and args.out:
        s = semidirect_product(dual)
        labels = a.basis_labels + tuple(f"{b}*" for b in a.basis_labels)
        name = args.name or f"{args.algebra}_dual_semidirect"
        ws.add("algebras", name, type(s)(s.dim, s.products, labels),
               {"recipe": "dualize", "inputs": {"algebra": args.algebra, "kind": kind.value}})
        _write(args.out, dumps(ws))
        out.text(f"created algebras.{name}")
    sys.stdout.write(out.render())
    return EXIT_PASS if holds else EXIT_FAIL


def _applicable_classes(a):
    for cls in AlgebraClass:
        needs, _ = CLASSES[cls]
        if a.has(*needs):
            yield cls


def cmd_report(args) -> int:
    ws = _load(args.file)
    names = args.names or sorted(ws.algebras)
    out = Output(args, "report")
    algebras = []
    for name in names:
        a = ws.get("algebras", name)
        a = a if a.has("bracket") or not a.has("circ") else commutator(a)
        entry = {"name": name, "dim": a.dim, "products": sorted(a.products), "classes": {}}
        out.text(f"{name}: dim {a.dim}, products {', '.join(sorted(a.products))}")
        for cls in _applicable_classes(a):
            reports = check_class(a, cls)
            ok = all(r.holds for r in reports)
            entry["classes"][cls.value] = [report_dict(r, a.basis_labels) for r in reports]
            out.text(f"  {'PASS' if ok else 'FAIL'} {cls.value}")
            out.lines.extend(f"    {report_line(r, a.basis_labels)}" for r in reports if not r.holds)
        algebras.append(entry)
    out.payload["algebras"] = algebras
    _write(args.out, out.render())
    return EXIT_PASS


# ---------------------------------------------------------------------------
# argument parsing


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "structured"), default="text")
    common.add_argument("--out", metavar="FILE", help="write the report (or the new workspace) to FILE")

    parser = argparse.ArgumentParser(prog="tpalg", description="Exact checks for anti-pre-Lie and transposed Poisson structures.")
    parser.add_argument("--version", action="version", version=f"tpalg {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)
    file_help = f"workspace file, or {EXAMPLES} for the shipped examples"

    p = sub.add_parser("verify", parents=[common], help="run a class, form, representation or (co/bi)algebra check")
    p.add_argument("file", help=file_help)
    p.add_argument("object", help="algebra name (coproduct name for coalgebra:* checks)")
    p.add_argument("check", help="class name, derivation, form:PRED, rep:KIND, dual-rep:KIND, coalgebra:CLASS, bialgebra:KIND or manin:KIND")
    p.add_argument("--map")
    p.add_argument("--product")
    p.add_argument("--form")
    p.add_argument("--delta")
    p.add_argument("--Delta")
    p.set_defaults(run=cmd_verify)

    p = sub.add_parser("construct", parents=[common], help="build a new object and add it to the workspace")
    p.add_argument("file", help=file_help)
    p.add_argument("recipe", choices=RECIPES)
    for opt in ("--algebra", "--map", "--form", "--tensor", "--kind", "--dual-algebra", "--delta", "--Delta", "--name"):
        p.add_argument(opt)
    p.add_argument("--dual", action="store_true", help="semidirect: use the dual of the adjoint representation")
    p.set_defaults(run=cmd_construct)

    p = sub.add_parser("check-ybe", parents=[common], help="whether T(r) and/or A(r) vanish")
    p.add_argument("file", help=file_help)
    p.add_argument("algebra")
    p.add_argument("tensor")
    p.add_argument("--kind", choices=("apl", "aybe", "aplp"), default="apl")
    p.set_defaults(run=cmd_check_ybe)

    p = sub.add_parser("dualize", parents=[common], help="dual of an adjoint representation, checked")
    p.add_argument("file", help=file_help)
    p.add_argument("algebra")
    p.add_argument("--kind", required=True)
    p.add_argument("--name")
    p.set_defaults(run=cmd_dualize)

    p = sub.add_parser("report", parents=[common], help="every applicable class check for the algebras")
    p.add_argument("file", help=file_help)
    p.add_argument("names", nargs="*")
    p.set_defaults(run=cmd_report)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.run(args)
    except PreconditionError as exc:
        sys.stderr.write(f"precondition failed: {exc}\n")
        for report in exc.reports:
            sys.stderr.write(f"  {report_line(report)}\n")
        return EXIT_FAIL
    except (WorkspaceError, InputError) as exc:
        sys.stderr.write(f"input error: {exc}\n")
        return EXIT_INPUT
    except AlgebraError as exc:
        sys.stderr.write(f"input error: {exc}\n")
        return EXIT_INPUT


if __name__ == "__main__":
    raise SystemExit(main())
