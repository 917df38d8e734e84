"""Command-line front end: ``hbl check | enumerate-braces | verify | dualize | export``."""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import formats
from .errors import HBLError, NoAntipode, ParseError
from .hopf import (Bialgebra, HopfAlgebra, check_bialgebra, check_hopf, dual_hopf,
                   solve_antipode)
from .hopfbrace import HopfBrace, check_hopf_brace
from .laws import LawReport
from .linalg import QQ, field_from_name
from .modules import BraceModule, check_brace_module, check_zhu
from .skewbrace import SkewBrace, check_skew_brace, enumerate_skew_braces, linearize
from .structures import Algebra, Coalgebra, Module, check_algebra, check_coalgebra, check_module
from .suites import SUITES, RunReport, run_suite

LAWS = ("algebra", "coalgebra", "bialgebra", "hopf", "brace", "module", "zhu")
EXIT_FAIL, EXIT_ERROR = 1, 2


def _emit(report_path, payload) -> None:
    if report_path:
        formats.write(report_path, payload)


def _law_check(obj, laws: str) -> LawReport:
    if laws == "algebra" and isinstance(obj, (Algebra, Bialgebra)):
        return check_algebra(obj)
    if laws == "coalgebra" and isinstance(obj, (Coalgebra, Bialgebra)):
        return check_coalgebra(obj)
    if laws == "bialgebra" and isinstance(obj, Bialgebra):
        return check_bialgebra(obj)
    if laws == "hopf" and isinstance(obj, HopfAlgebra):
        return check_hopf(obj)
    if laws == "hopf" and isinstance(obj, Bialgebra):
        rep = LawReport("hopf (antipode solved)")
        try:
            h = solve_antipode(obj)
        except NoAntipode as exc:
            rep.flag("antipode_exists", False, str(exc))
            return rep
        rep.flag("antipode_exists", True)
        rep.extend(check_hopf(h))
        return rep
    if laws == "brace" and isinstance(obj, HopfBrace):
        return check_hopf_brace(obj)
    if laws == "brace" and isinstance(obj, SkewBrace):
        rep = LawReport(f"skew brace {obj.name}".strip())
        if rep.flag("skew_brace_law", check_skew_brace(obj)):
            rep.extend(check_hopf_brace(linearize(obj)), "linearized.")
        return rep
    if laws == "module" and isinstance(obj, Module):
        return check_module(obj)
    if laws == "module" and isinstance(obj, BraceModule):
        return check_brace_module(obj)
    if laws == "zhu" and isinstance(obj, BraceModule):
        rep = LawReport(f"zhu {obj.name}".strip())
        pre = check_brace_module(obj)
        rep.extend(pre)
        if pre.ok:
            zhu, cond, cc = check_zhu(obj, strict=False)
            rep.flag("zhu_condition", zhu)
            rep.flag("split_condition", cond)
            rep.flag("gamma_in_cc_class", cc)
        return rep
    raise ParseError(f"--laws {laws} does not apply to a {type(obj).__name__}")


def cmd_check(args) -> int:
    fld = field_from_name(args.field) if args.field else None
    obj = formats.load(args.file, fld)
    rep = _law_check(obj, args.laws)
    print(rep.summary())
    run = RunReport(f"check:{args.laws}")
    run.add(str(args.file), [(r.law, r.witness) for r in rep.failures()])
    _emit(args.report, {**run.as_dict(), "laws": rep.as_dict()})
    return 0 if run.ok else EXIT_FAIL


def cmd_enumerate(args) -> int:
    braces = enumerate_skew_braces(args.order)
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    files = []
    run = RunReport("enumerate-braces")
    for s in braces:
        name = f"{s.name}.json"
        formats.write(out / name, formats.skew_brace_to_json(s))
        files.append(name)
        run.add(s.name, [] if check_skew_brace(s) else [("skew_brace_law", None)])
    formats.write(out / f"index{args.order}.json",
                  {"order": args.order, "count": len(files), "files": files})
    print(f"order {args.order}: {len(files)} skew braces written to {out}")
    _emit(args.report, run.as_dict())
    return 0 if run.ok else EXIT_FAIL


def load_catalog(directory, field=None) -> list:
    """Every brace (skew or Hopf) in a directory of JSON files, sorted by name."""
    braces = []
    for path in sorted(Path(directory).glob("*.json")):
        if path.name.startswith("index"):
            continue
        obj = formats.load(path, field)
        if isinstance(obj, SkewBrace):
            obj = linearize(obj, field or QQ)
            obj = HopfBrace(obj.h1, obj.h2, name=path.stem, source=obj.source)
        if isinstance(obj, HopfBrace):
            braces.append(obj)
    if not braces:
        raise ParseError(f"{directory}: no brace files found")
    return braces


def cmd_verify(args) -> int:
    fld = field_from_name(args.field) if args.field else QQ
    names = list(SUITES) if args.theorem == "all" else [args.theorem]
    braces = load_catalog(args.catalog, fld) if args.catalog else None
    reports = []
    for name in names:
        kwargs = {"field": fld, "braces": braces}
        if args.order is not None:
            kwargs["order"] = args.order
        rep = run_suite(name, **kwargs)
        print(rep.summary())
        reports.append(rep)
    payload = [r.as_dict(timing=args.timing) for r in reports]
    _emit(args.report, payload[0] if len(payload) == 1 else payload)
    return 0 if all(r.ok for r in reports) else EXIT_FAIL


def cmd_dualize(args) -> int:
    fld = field_from_name(args.field) if args.field else None
    h = formats.load(args.file, fld)
    if not isinstance(h, HopfAlgebra):
        raise ParseError(f"{args.file}: dualize needs a Hopf algebra (with an antipode)")
    d = dual_hopf(h)
    text = formats.dumps(formats.structure_to_json(d))
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return 0


def cmd_export(args) -> int:
    """Write the built-in catalog (Hopf algebras, braces, modules) as JSON."""
    from .catalog import braces, hopf_algebras, monoid_bialgebra
    from .modules import standard_modules

    fld = field_from_name(args.field) if args.field else QQ
    out = Path(args.out)
    (out / "hopf").mkdir(parents=True, exist_ok=True)
    (out / "braces").mkdir(exist_ok=True)
    (out / "modules").mkdir(exist_ok=True)
    safe = str.maketrans({"[": "_", "]": "", "*": "dual", "(": "_", ")": ""})
    for h in hopf_algebras(8, fld):
        formats.write(out / "hopf" / f"{h.name.translate(safe)}.json", formats.structure_to_json(h))
    formats.write(out / "hopf" / "monoid_10.json",
                  formats.structure_to_json(monoid_bialgebra(fld), name="monoid {1,0}"))
    for b in braces(args.order, fld):
        bname = b.name.translate(safe)
        formats.write(out / "braces" / f"{bname}.json", formats.brace_to_json(b))
        for m in standard_modules(b):
            formats.write(out / "modules" / f"{bname}--{m.name}.json",
                          formats.brace_module_to_json(m, brace=f"../braces/{bname}.json"))
    print(f"catalog written to {out}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="hbl", description="Exact Hopf algebra and Hopf brace checks.")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--field", help="q (default) or gf:<p>")
        sp.add_argument("--report", help="write a JSON report to this file")

    c = sub.add_parser("check", help="run a law checker on a JSON structure file")
    c.add_argument("file")
    c.add_argument("--laws", choices=LAWS, required=True)
    common(c)
    c.set_defaults(func=cmd_check)

    e = sub.add_parser("enumerate-braces", help="enumerate skew braces of one order")
    e.add_argument("--order", type=int, required=True)
    e.add_argument("--out", required=True)
    common(e)
    e.set_defaults(func=cmd_enumerate)

    v = sub.add_parser("verify", help="run a theorem suite")
    v.add_argument("--theorem", choices=["all", *SUITES], required=True)
    v.add_argument("--catalog", help="directory of brace files (default: built-in catalog)")
    v.add_argument("--order", type=int, help="largest skew brace order from the built-in catalog")
    v.add_argument("--timing", action="store_true", help="include wall time in the JSON report")
    common(v)
    v.set_defaults(func=cmd_verify)

    d = sub.add_parser("dualize", help="write the dual Hopf algebra")
    d.add_argument("file")
    d.add_argument("--out")
    d.add_argument("--field")
    d.set_defaults(func=cmd_dualize)

    x = sub.add_parser("export", help="write the built-in catalog as JSON files")
    x.add_argument("--out", required=True)
    x.add_argument("--order", type=int, default=4)
    x.add_argument("--field")
    x.set_defaults(func=cmd_export)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except HBLError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
