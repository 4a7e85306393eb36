"""Command-line front end.

Subcommands: validate, classify, verify, curvature, report.  Exit codes are
a stable contract for CI use: 0 on success, 1 when a check or identity
fails, 2 on unreadable or invalid input.  The default float tolerance can be
set through the BCONTACT_EPS environment variable and overridden per run
with --eps.
"""
from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from . import modelfile, scalars, zoo
from .checks import run_checks
from .curvature import (
    DegeneratePlaneError,
    SectionPlane,
    section_type,
    sectional,
    svk_sectional_formula,
)
from .modelfile import ModelFileError
from .pipeline import Workspace
from .scalars import DEFAULT_EPS, FLOAT, RATIONAL
from .structure import ALL_FLAGS, InvariantError

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_INPUT_ERROR = 2


def _add_common(p: argparse.ArgumentParser):
    p.add_argument(
        "--mode",
        choices=[RATIONAL, FLOAT],
        default=RATIONAL,
        help="scalar backend (default: rational, exact)",
    )
    p.add_argument(
        "--eps",
        type=float,
        default=DEFAULT_EPS,
        help="absolute tolerance for float mode (default from BCONTACT_EPS or 1e-9)",
    )
    p.add_argument("--json", action="store_true", help="machine-readable output")


def _load_workspace(path: str, mode: str, eps: float):
    doc = modelfile.load_path(path)
    s = modelfile.to_structure(doc, mode)
    return doc, Workspace(s, eps)


def _fmt(x) -> str:
    return scalars.format_scalar(x)


def cmd_validate(args) -> int:
    doc = modelfile.load_path(args.path)
    s = modelfile.to_structure(doc, args.mode)
    from .structure import validate_structure

    report = validate_structure(s, args.eps)
    if args.json:
        payload = {
            "model": doc.get("name", args.path),
            "passed": report.passed,
            "checks": [
                {
                    "identity": c.name,
                    "passed": c.passed,
                    "residual": c.residual,
                    "worst_index": list(c.worst_index) if c.worst_index else None,
                }
                for c in report.checks
            ],
        }
        print(json.dumps(payload, indent=2))
    else:
        for c in report.checks:
            print(str(c))
    return EXIT_OK if report.passed else EXIT_CHECK_FAILED


def cmd_classify(args) -> int:
    doc, ws = _load_workspace(args.path, args.mode, args.eps)
    if not ws.validation.passed:
        print("structure validation failed:", file=sys.stderr)
        for c in ws.validation.failures():
            print(f"  {c}", file=sys.stderr)
        return EXIT_CHECK_FAILED
    view = ws.view("g" if args.metric == "g" else "gtilde")
    rep = view.classification
    if args.json:
        payload = {
            "model": doc.get("name", args.path),
            "metric": rep.metric_role,
            "membership": rep.membership,
            "residuals": rep.residuals,
            "scalars": {k: _fmt(v) for k, v in rep.scalars.items()},
        }
        print(json.dumps(payload, indent=2))
    else:
        print(f"classification with respect to {rep.metric_role}:")
        for flag in ALL_FLAGS:
            mark = "yes" if rep.membership[flag] else "no"
            print(f"  {flag}: {mark}")
        for k, v in rep.scalars.items():
            print(f"  {k} = {_fmt(v)}")
    return EXIT_OK


def _verify_one(name: str, ws: Workspace, seed: int, as_json: bool) -> tuple[bool, list]:
    results = run_checks(ws, seed=seed)
    ok = all(r.passed for r in results)
    lines = []
    for r in results:
        if as_json:
            lines.append(
                {
                    "model": name,
                    "check": r.name,
                    "passed": r.passed,
                    "residual": r.residual,
                    "detail": r.detail,
                }
            )
        else:
            lines.append(f"{name}: {r.line()}")
    return ok, lines


def cmd_verify(args) -> int:
    targets: list[tuple[str, Workspace]] = []
    try:
        if args.zoo:
            for entry in zoo.all_entries():
                targets.append((entry.name, entry.workspace(args.mode, args.eps)))
            if args.seed is not None:
                for n in (1, 2):
                    entry = zoo.random_structure(args.seed + n - 1, n)
                    targets.append((entry.name, entry.workspace(args.mode, args.eps)))
        else:
            if not args.path:
                print("verify needs a model file or --zoo", file=sys.stderr)
                return EXIT_INPUT_ERROR
            doc, ws = _load_workspace(args.path, args.mode, args.eps)
            targets.append((doc.get("name", args.path), ws))
    except (InvariantError, ArithmeticError) as exc:
        # the model parsed but its derived invariants are inconsistent
        print(f"FAIL  structure-invariants  [{exc}]")
        return EXIT_CHECK_FAILED

    all_ok = True
    json_rows = []
    for name, ws in sorted(targets, key=lambda t: t[0]):
        ok, lines = _verify_one(name, ws, args.seed or 0, args.json)
        all_ok = all_ok and ok
        if args.json:
            json_rows.extend(lines)
        else:
            for line in lines:
                print(line)
    if args.json:
        print(json.dumps({"passed": all_ok, "results": json_rows}, indent=2))
    elif not all_ok:
        print("verification FAILED", file=sys.stderr)
    return EXIT_OK if all_ok else EXIT_CHECK_FAILED


def _parse_plane(args, ws: Workspace):
    if args.plane:
        try:
            i, j = (int(t) for t in args.plane.split(","))
        except ValueError:
            raise ModelFileError("--plane expects two comma-separated indices")
        dim = ws.s.dim
        if not (0 <= i < dim and 0 <= j < dim and i != j):
            raise ModelFileError(f"--plane indices must be distinct and < {dim}")
        x = scalars.zeros((dim,), ws.mode)
        x[i] = scalars.one(ws.mode)
        y = scalars.zeros((dim,), ws.mode)
        y[j] = scalars.one(ws.mode)
        return SectionPlane(x, y)
    if args.plane_vectors:
        try:
            xs, ys = args.plane_vectors.split(";")
            x = scalars.array([t.strip() for t in xs.split(",")], ws.mode)
            y = scalars.array([t.strip() for t in ys.split(",")], ws.mode)
        except Exception as exc:
            raise ModelFileError(f"bad --plane-vectors: {exc}")
        return SectionPlane(x, y)
    return None


def cmd_curvature(args) -> int:
    doc, ws = _load_workspace(args.path, args.mode, args.eps)
    payload = {"model": doc.get("name", args.path), "scalars": {}}
    rows = []
    for view in (ws.g, ws.gt):
        tag = view.role
        payload["scalars"][f"tau[{tag}]"] = view.curv.tau
        payload["scalars"][f"tau_svk[{tag}]"] = view.curv.tau_svk
        payload["scalars"][f"rho(xi,xi)[{tag}]"] = view.rho_xi_xi
        rd = view.curv.r04_svk.data
        measured = {
            "first-pair-antisymmetric": scalars.is_zero(
                rd + np.einsum("ijkl->jikl", rd), args.eps, rd
            ),
            "last-pair-antisymmetric": scalars.is_zero(
                rd + np.einsum("ijkl->ijlk", rd), args.eps, rd
            ),
            "pair-exchange-symmetric": scalars.is_zero(
                rd - np.einsum("ijkl->klij", rd), args.eps, rd
            ),
        }
        payload.setdefault("svk_curvature_symmetries", {})[tag] = measured

    plane = _parse_plane(args, ws)
    if plane is not None:
        kind, ortho = section_type(plane, ws.s, ws.s.metric, args.eps)
        payload["plane"] = {"type": kind, "orthogonal_to_xi": ortho}
        for view in (ws.g, ws.gt):
            tag = view.role
            try:
                k_base = sectional(view.curv.r04, view.metric, plane, args.eps)
                k_svk = sectional(view.curv.r04_svk, view.metric, plane, args.eps)
                k_formula = svk_sectional_formula(
                    plane, view.curv.r04, view.shape, ws.s, view.metric, args.eps
                )
            except DegeneratePlaneError:
                payload["plane"][f"k[{tag}]"] = "degenerate"
                continue
            payload["plane"][f"k[{tag}]"] = k_base
            payload["plane"][f"k_svk[{tag}]"] = k_svk
            payload["plane"][f"relation_residual[{tag}]"] = scalars.residual(
                np.asarray(k_svk - k_formula)
            )

    if args.json:
        out = json.loads(json.dumps(payload, default=_fmt))
        print(json.dumps(out, indent=2))
    else:
        for k, v in payload["scalars"].items():
            print(f"{k} = {_fmt(v)}")
        for tag, measured in payload.get("svk_curvature_symmetries", {}).items():
            flags = ", ".join(f"{k}={v}" for k, v in measured.items())
            print(f"svk curvature symmetries [{tag}]: {flags}")
        if "plane" in payload:
            for k, v in payload["plane"].items():
                print(f"plane {k} = {v if isinstance(v, (str, bool)) else _fmt(v)}")
    return EXIT_OK


def cmd_report(args) -> int:
    doc, ws = _load_workspace(args.path, args.mode, args.eps)
    code = EXIT_OK if ws.validation.passed else EXIT_CHECK_FAILED
    if args.json:
        payload = {
            "model": doc.get("name", args.path),
            "valid": ws.validation.passed,
            "classification": {
                view.role: {
                    "membership": view.classification.membership,
                    "scalars": {
                        k: _fmt(v) for k, v in view.classification.scalars.items()
                    },
                }
                for view in (ws.g, ws.gt)
            },
            "scalars": {k: v for k, v in ws.reported_scalars().items()},
        }
        print(json.dumps(payload, indent=2))
        return code
    print(f"model: {doc.get('name', args.path)} (dim {ws.s.dim})")
    print(f"valid: {ws.validation.passed}")
    for view in (ws.g, ws.gt):
        rep = view.classification
        yes = [f for f in ALL_FLAGS if rep.membership[f]]
        print(f"classes[{view.role}]: {', '.join(yes) if yes else '(none)'}")
        for k, v in rep.scalars.items():
            print(f"  {k} = {_fmt(v)}")
    for k, v in sorted(ws.reported_scalars().items()):
        print(f"{k} = {v:.12g}")
    return code


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bcontact",
        description="Validate, classify and verify almost contact B-metric "
        "models and their adapted connection pair.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check the structure axioms of a model file")
    p.add_argument("path")
    _add_common(p)
    p.set_defaults(fn=cmd_validate)

    p = sub.add_parser("classify", help="basic-class membership report")
    p.add_argument("path")
    p.add_argument("--metric", choices=["g", "gtilde"], default="g")
    _add_common(p)
    p.set_defaults(fn=cmd_classify)

    p = sub.add_parser("verify", help="run the full identity suite")
    p.add_argument("path", nargs="?")
    p.add_argument("--zoo", action="store_true", help="verify every builtin entry")
    p.add_argument("--seed", type=int, default=None, help="seed for sampled planes "
                   "and, with --zoo, two extra generated entries")
    _add_common(p)
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("curvature", help="curvature scalars and sectional values")
    p.add_argument("path")
    p.add_argument("--plane", help="two basis indices i,j spanning a section")
    p.add_argument("--plane-vectors", help="'x1,..,xn;y1,..,yn' spanning a section")
    _add_common(p)
    p.set_defaults(fn=cmd_curvature)

    p = sub.add_parser("report", help="validation + classification summary")
    p.add_argument("path")
    _add_common(p)
    p.set_defaults(fn=cmd_report)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except ModelFileError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR
    except DegeneratePlaneError as exc:
        print(f"degenerate plane: {exc}", file=sys.stderr)
        return EXIT_CHECK_FAILED
    except zoo.UnknownEntryError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR
    except (InvariantError, ArithmeticError) as exc:
        print(f"invariant failure: {exc}", file=sys.stderr)
        return EXIT_CHECK_FAILED


if __name__ == "__main__":
    sys.exit(main())
