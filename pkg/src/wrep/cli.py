"""``wrep`` command line: generate meshes, verify minimality, evaluate points.

Exit status: 0 success (and verify pass), 1 verify fail, 2 usage error,
3 numerical error.
"""

import argparse
import json
import sys

import numpy as np

from .catalog import catalog_entries, get_entry
from .errors import ExprSyntaxError, NumericalError
from .geometry import sample_at
from .mesh import ParamDomain, export_obj, export_ply, sample_grid, triangulate
from .verification import DEFAULT_TOLERANCES, verify
from .weierstrass import from_phi, make_phi

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_NUMERIC = 0, 1, 2, 3

# flags that may appear in a config file, with their argparse dest names
_CONFIG_KEYS = (
    "f", "g", "phi1", "phi2", "phi3", "surface", "domain", "res", "basepoint",
    "out", "format", "report", "tol", "exclude", "at", "workers", "no_normals",
)


class UsageError(Exception):
    def __init__(self, flag, message):
        self.flag = flag
        super().__init__(f"{flag}: {message}")


def _add_data_flags(p):
    g = p.add_argument_group("surface data (exactly one source)")
    g.add_argument("--f", metavar="EXPR", help="Weierstrass f(z), used with --g")
    g.add_argument("--g", metavar="EXPR", help="Weierstrass g(z), used with --f")
    g.add_argument("--phi1", metavar="EXPR", help="first phi component (direct-phi mode)")
    g.add_argument("--phi2", metavar="EXPR", help="second phi component (direct-phi mode)")
    g.add_argument("--phi3", metavar="EXPR", help="third phi component (direct-phi mode)")
    g.add_argument("--surface", metavar="NAME", help="catalog surface name")
    p.add_argument("--basepoint", metavar="RE,IM", help="integration basepoint (default 0,0)")


def _add_domain_flags(p):
    p.add_argument("--domain", metavar="SPEC",
                   help="rect:u0,u1,v0,v1 or disk:R (default: catalog domain or rect:-1,1,-1,1)")
    p.add_argument("--res", metavar="NUxNV", help="grid resolution (default 64x64)")
    p.add_argument("--exclude", metavar="RE,IM,RADIUS", action="append",
                   help="skip samples within RADIUS of RE+i*IM (repeatable)")
    p.add_argument("--workers", metavar="N", type=int, help="sampling threads (default 1)")


def _add_tol_flag(p):
    names = ", ".join(DEFAULT_TOLERANCES)
    p.add_argument("--tol", metavar="CHECK=VALUE", action="append",
                   help=f"override a check tolerance (repeatable); checks: {names}")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="wrep",
        description="Minimal surfaces from Weierstrass data: meshes and verification.",
    )
    parser.add_argument("--config", metavar="PATH",
                        help="JSON file whose keys mirror the long flag names; "
                             "command-line flags take precedence")
    sub = parser.add_subparsers(dest="mode", metavar="COMMAND")

    gen = sub.add_parser("generate", help="sample a surface and write a mesh")
    _add_data_flags(gen)
    _add_domain_flags(gen)
    gen.add_argument("--out", metavar="PATH", help="mesh output file (required)")
    gen.add_argument("--format", choices=("obj", "ply"),
                     help="mesh format (default: from --out suffix, else obj)")
    gen.add_argument("--no-normals", action="store_true", default=None,
                     help="omit vertex normals")
    gen.add_argument("--report", metavar="PATH", help="also verify and write a JSON report")
    _add_tol_flag(gen)

    ver = sub.add_parser("verify", help="check every minimality identity over a grid")
    _add_data_flags(ver)
    _add_domain_flags(ver)
    ver.add_argument("--report", metavar="PATH",
                     help="JSON report path (default: standard output)")
    _add_tol_flag(ver)

    ev = sub.add_parser("eval", help="print x, x_u, x_v and H at one point as JSON")
    _add_data_flags(ev)
    ev.add_argument("--at", metavar="RE,IM", help="parameter value z (required)")

    sub.add_parser("catalog", help="list catalog surfaces as JSON")
    return parser


def _floats(flag, text, count=None):
    try:
        vals = [float(t) for t in text.split(",")]
    except ValueError:
        raise UsageError(flag, f"expected comma-separated numbers, got {text!r}") from None
    if count is not None and len(vals) not in (count if isinstance(count, tuple) else (count,)):
        raise UsageError(flag, f"expected {count} numbers, got {len(vals)}")
    return vals


def _complex(flag, text):
    re, im = _floats(flag, text, 2)
    return complex(re, im)


def _resolution(text):
    try:
        nu, nv = (int(t) for t in text.lower().split("x"))
    except ValueError:
        raise UsageError("--res", f"expected NUxNV, got {text!r}") from None
    if nu < 2 or nv < 2:
        raise UsageError("--res", "both counts must be at least 2")
    return nu, nv


def _domain(text, res, default):
    if text is None:
        dom = default
    elif text.startswith("rect:"):
        vals = _floats("--domain", text[5:], 4)
        if not (vals[0] < vals[1] and vals[2] < vals[3]):
            raise UsageError("--domain", "rectangle needs u0 < u1 and v0 < v1")
        dom = ParamDomain.rectangle(*vals)
    elif text.startswith("disk:"):
        vals = _floats("--domain", text[5:], (1, 3))
        if vals[0] <= 0:
            raise UsageError("--domain", "disk radius must be positive")
        center = complex(vals[1], vals[2]) if len(vals) == 3 else 0j
        dom = ParamDomain.disk(vals[0], center=center)
    else:
        raise UsageError("--domain", f"expected rect:... or disk:..., got {text!r}")
    if res is not None:
        dom = dom.with_resolution(*res)
    return dom


def _parse_expr_flag(flag, text):
    from .expr import parse

    try:
        return parse(text)
    except ExprSyntaxError as exc:
        raise UsageError(flag, str(exc)) from None


def _data(args):
    """Resolve the data source; returns (WeierstrassData, default domain, label)."""
    fg = args.f is not None or args.g is not None
    direct = any(getattr(args, k) is not None for k in ("phi1", "phi2", "phi3"))
    named = args.surface is not None
    if fg + direct + named != 1:
        raise UsageError("--f/--g, --phi1..3, --surface", "give exactly one data source")
    basepoint = _complex("--basepoint", args.basepoint) if args.basepoint else 0j
    default_dom = ParamDomain.rectangle(-1, 1, -1, 1)
    if named:
        try:
            entry = get_entry(args.surface)
        except KeyError as exc:
            raise UsageError("--surface", exc.args[0]) from None
        return entry.data.with_basepoint(basepoint), entry.default_domain, entry.name
    if fg:
        if args.f is None or args.g is None:
            raise UsageError("--f/--g", "both --f and --g are required")
        f = _parse_expr_flag("--f", args.f)
        g = _parse_expr_flag("--g", args.g)
        return make_phi(f, g, basepoint=basepoint), default_dom, f"f={args.f}, g={args.g}"
    missing = [k for k in ("phi1", "phi2", "phi3") if getattr(args, k) is None]
    if missing:
        raise UsageError("--" + missing[0], "direct-phi mode needs --phi1, --phi2 and --phi3")
    phi = [_parse_expr_flag("--" + k, getattr(args, k)) for k in ("phi1", "phi2", "phi3")]
    return from_phi(*phi, basepoint=basepoint), default_dom, "direct phi"


def _tol_overrides(items):
    out = {}
    for item in items or ():
        name, sep, value = item.partition("=")
        if not sep or name not in DEFAULT_TOLERANCES:
            raise UsageError("--tol", f"expected CHECK=VALUE with a known check, got {item!r}")
        try:
            out[name] = float(value)
        except ValueError:
            raise UsageError("--tol", f"bad value in {item!r}") from None
    return out


def _grid_domain(args, default):
    dom = _domain(args.domain, _resolution(args.res) if args.res else None, default)
    excl = []
    for item in args.exclude or ():
        re, im, r = _floats("--exclude", item, 3)
        if r <= 0:
            raise UsageError("--exclude", "radius must be positive")
        excl.append((complex(re, im), r))
    return dom.with_excluded(excl) if excl else dom


def _vec(v):
    return [float(c) for c in np.asarray(v).ravel()]


def _cmd_catalog(args, out):
    rows = [{"name": e.name, "f": e.f_text, "g": e.g_text,
             "mode": e.data.mode, "phi": [str(p) for p in e.data.phi],
             "note": e.data.note, "closed_form": e.closed_form}
            for e in catalog_entries()]
    json.dump(rows, out, indent=2)
    out.write("\n")
    return EXIT_OK


def _cmd_eval(args, out):
    d, _, _ = _data(args)
    if args.at is None:
        raise UsageError("--at", "required for eval")
    z = _complex("--at", args.at)
    s = sample_at(d, z)
    regular = not bool(s.degenerate)
    doc = {
        "z": [z.real, z.imag],
        "x": _vec(s.x),
        "x_u": _vec(s.x_u),
        "x_v": _vec(s.x_v),
        "H": _vec(s.H_vec) if regular else None,
        "H_scalar": float(s.H_scalar) if regular else None,
        "degenerate": not regular,
    }
    json.dump(doc, out, indent=2)
    out.write("\n")
    return EXIT_OK


def _run_verify(args, d, dom, label, err):
    report = verify(d, dom, _tol_overrides(args.tol), workers=args.workers or 1, name=label)
    for line in report.summary_lines():
        print(line, file=err)
    return report


def _cmd_verify(args, out, err):
    d, default_dom, label = _data(args)
    dom = _grid_domain(args, default_dom)
    report = _run_verify(args, d, dom, label, err)
    text = report.to_json() + "\n"
    if args.report:
        with open(args.report, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        out.write(text)
    return EXIT_OK if report.overall else EXIT_FAIL


def _cmd_generate(args, out, err):
    d, default_dom, label = _data(args)
    if not args.out:
        raise UsageError("--out", "required for generate")
    fmt = args.format or ("ply" if str(args.out).lower().endswith(".ply") else "obj")
    dom = _grid_domain(args, default_dom)
    grid = sample_grid(d, dom, workers=args.workers or 1)
    mesh = triangulate(grid, normals=not args.no_normals)
    (export_ply if fmt == "ply" else export_obj)(mesh, args.out)
    print(f"wrote {args.out}: {len(mesh.vertices)} vertices, {len(mesh.faces)} faces, "
          f"{len(mesh.skipped)} samples skipped", file=err)
    if args.report:
        report = _run_verify(args, d, dom, label, err)
        with open(args.report, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(report.to_json() + "\n")
    return EXIT_OK


def _merge_config(parser, args):
    if not args.config:
        return args
    try:
        with open(args.config, encoding="utf-8") as fh:
            cfg = json.load(fh)
    except (OSError, ValueError) as exc:
        raise UsageError("--config", str(exc)) from None
    if not isinstance(cfg, dict):
        raise UsageError("--config", "top level must be a JSON object")
    for key, value in cfg.items():
        dest = key.lstrip("-").replace("-", "_")
        if dest not in _CONFIG_KEYS:
            raise UsageError("--config", f"unknown key {key!r}")
        if hasattr(args, dest) and getattr(args, dest) is None:
            if dest in ("tol", "exclude") and isinstance(value, str):
                value = [value]
            setattr(args, dest, value)
    return args


def main(argv=None, out=None, err=None):
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    if args.mode is None:
        parser.print_usage(err)
        print("wrep: error: a COMMAND is required", file=err)
        return EXIT_USAGE
    try:
        args = _merge_config(parser, args)
        if args.mode == "catalog":
            return _cmd_catalog(args, out)
        if args.mode == "eval":
            return _cmd_eval(args, out)
        if args.mode == "verify":
            return _cmd_verify(args, out, err)
        return _cmd_generate(args, out, err)
    except UsageError as exc:
        print(f"wrep {args.mode}: error: {exc}", file=err)
        return EXIT_USAGE
    except NumericalError as exc:
        print(f"wrep {args.mode}: numerical error: {exc}", file=err)
        return EXIT_NUMERIC
    except OSError as exc:
        print(f"wrep {args.mode}: error: {exc}", file=err)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
