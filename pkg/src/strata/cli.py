"""Command line entry points: check documents, render projections, run the
metatheory fuzzer, and serve the interactive session API."""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .errors import KernelError
from .proofdoc import check_document, parse_document
from .render import project, scene_to_svg


def _load(path: str):
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as err:
        sys.exit(f"cannot read {path}: {err}")
    try:
        return parse_document(text)
    except KernelError as err:
        sys.exit(f"{path}: {err}")


def cmd_check(args) -> int:
    doc = _load(args.document)
    report = check_document(doc)
    if args.json:
        print(json.dumps(report.to_json(), indent=2, ensure_ascii=False))
    else:
        print(f"checking {args.document}")
        print(report.text())
    return 0 if report.ok else 1


def cmd_render(args) -> int:
    doc = _load(args.document)
    if args.diagram not in doc.diagrams:
        sys.exit(f"no diagram named {args.diagram!r}; available: {sorted(doc.diagrams)}")
    svg = scene_to_svg(project(doc.diagrams[args.diagram], doc.signature))
    if args.output == "-":
        sys.stdout.write(svg)
    else:
        Path(args.output).write_text(svg, encoding="utf-8")
        print(f"wrote {args.output}")
    return 0


def cmd_fuzz(args) -> int:
    from .fuzz import PROPERTIES, run_property
    failures = 0
    for name in PROPERTIES:
        try:
            summary = run_property(name, args.cases, args.seed, max_dim=args.max_dim)
        except AssertionError as err:
            print(f"FAIL {name}: {err}")
            failures += 1
            continue
        print(f"ok   {summary['name']:40s} {summary['cases']:5d} cases "
              f"{summary['seconds']:6.2f}s")
    return 1 if failures else 0


def cmd_serve(args) -> int:
    import uvicorn

    from .service import create_app
    default = None
    if args.doc:
        default = Path(args.doc).read_text(encoding="utf-8")
    frontend = args.ui if args.ui and Path(args.ui).is_dir() else None
    app = create_app(default_document=default, frontend_dir=frontend)
    uvicorn.run(app, host=args.host, port=args.port, log_level="warning")
    return 0


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(prog="strata",
                                     description="layered diagram rewriting toolkit")
    sub = parser.add_subparsers(dest="command", required=True)

    p_check = sub.add_parser("check", help="replay a proof document")
    p_check.add_argument("document")
    p_check.add_argument("--json", action="store_true", help="structured report")
    p_check.set_defaults(func=cmd_check)

    p_render = sub.add_parser("render", help="render a named diagram to SVG")
    p_render.add_argument("document")
    p_render.add_argument("--diagram", required=True)
    p_render.add_argument("-o", "--output", default="-")
    p_render.set_defaults(func=cmd_render)

    p_fuzz = sub.add_parser("fuzz", help="run the metatheory property fuzzer")
    p_fuzz.add_argument("--max-dim", type=int, default=3)
    p_fuzz.add_argument("--cases", type=int, default=500)
    p_fuzz.add_argument("--seed", type=int, default=0)
    p_fuzz.set_defaults(func=cmd_fuzz)

    p_serve = sub.add_parser("serve", help="serve the session API")
    p_serve.add_argument("--port", type=int, default=8787)
    p_serve.add_argument("--host", default="127.0.0.1")
    p_serve.add_argument("--doc", help="default document for empty session bodies")
    p_serve.add_argument("--ui", help="directory of built frontend assets")
    p_serve.set_defaults(func=cmd_serve)

    args = parser.parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
