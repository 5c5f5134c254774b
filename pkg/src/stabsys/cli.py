"""Command-line front end. Every command prints one JSON report on stdout."""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from pathlib import Path

from . import __version__
from .bounds import bounds_report
from .charges import ChargeFamily, phase_display, slope, z_alpha, z_alpha_beta, z_tilt
from .core import ClassVector, Q, StabError, fmt_q
from .formal import OP, V1, FormalCategory, destabilizer_constraints_minimal, hn_filtration
from .plot import write_svg
from .quadratic import support_certificate
from .regions import bg_solve, orbit_compare, region_report, t_window
from .walls import annotate_walls, chamber_scan, minimal_candidates_via_system

BG_NOTES = (
    "p is computed as (alpha+1-u)/alpha^2; the variant (alpha-u+1)/alpha does not solve the coefficient system",
    "Re coefficients use t(A+p*beta) on d and 1+A*alpha-(p*alpha-1)*beta on k; "
    "the sign variants t(A-p*beta) and (p*alpha+1)*beta do not reconstruct the tilted charge",
)


def _charge_json(z) -> dict:
    return {"re": fmt_q(z.re), "im": fmt_q(z.im)}


def _need(args, *names):
    for name in names:
        if getattr(args, name) is None:
            raise StabError(f"--{name.replace('_', '-')} is required here")


# -- subcommands ---------------------------------------------------------------


def cmd_eval(args):
    c = ClassVector.of(args.cls)
    if args.charge == "standard":
        _need(args, "alpha")
        z = z_alpha(c, Q(args.alpha))
    elif args.charge == "standard_beta":
        _need(args, "alpha", "beta")
        z = z_alpha_beta(c, Q(args.alpha), Q(args.beta))
    else:
        _need(args, "alpha", "beta", "gamma")
        z = z_tilt(c, Q(args.alpha), Q(args.beta), Q(args.gamma))
    out = {"charge": _charge_json(z), "slope": str(slope(z))}
    if not z.is_zero():
        out["phase_display"] = round(phase_display(z), 12)
    return out, []


def cmd_region(args):
    rep = region_report(Q(args.alpha), Q(args.beta), Q(args.gamma))
    return rep, list(rep["notes"])


def cmd_bg(args):
    alpha, beta, gamma = Q(args.alpha), Q(args.beta), Q(args.gamma)
    warnings = list(BG_NOTES)
    if args.t is not None:
        t = Q(args.t)
    else:
        w = t_window(alpha, beta, gamma)
        if w is None:
            raise StabError("t window is empty for these parameters")
        t = w.midpoint()
        warnings.extend(w.notes)
        warnings.append(f"t chosen as window midpoint {fmt_q(t)}")
    return bg_solve(alpha, beta, gamma, t).to_json(), warnings


def cmd_support(args):
    cert = support_certificate(Q(args.alpha), Q(args.beta), args.bound, workers=args.workers)
    return cert.to_json(), []


def cmd_bounds(args):
    c = ClassVector.of(args.cls)
    return bounds_report(c, Q(args.alpha) if args.alpha else None, args.genus), []


def cmd_formal_hn(args):
    cat = FormalCategory.load(args.fixture)
    hn = hn_filtration(cat, args.object, Q(args.alpha))
    return hn.to_json(), list(cat.warnings)


def cmd_formal_scan(args):
    alpha, beta, gamma = Q(args.alpha), Q(args.beta), Q(args.gamma)
    out = {}
    kinds = [OP, V1] if args.kind == "both" else [args.kind]
    for kind in kinds:
        system = destabilizer_constraints_minimal(kind, alpha, beta, gamma, stable=args.stable)
        pts = minimal_candidates_via_system(kind, alpha, beta, gamma, args.bound, weak=args.stable)
        out[kind] = {
            "system": system.lines(),
            "solutions": [list(p) for p in pts],
            "all_extremal": all(k == d + n for n, d, k in pts),
        }
    return out, []


def cmd_walls(args):
    c = ClassVector.of(args.cls)
    scan = chamber_scan(
        c,
        Q(args.alpha),
        Q(args.beta),
        (Q(args.gamma_min), Q(args.gamma_max)),
        args.bound,
        mode=args.mode,
        exclude_extremal=not args.include_extremal,
        complete=args.complete,
        workers=args.workers,
    )
    result = scan.to_json()
    warnings = [f"verdicts are relative to the box bound {args.bound}"]
    if args.fixture:
        if not args.object:
            raise StabError("--fixture needs --object")
        cat = FormalCategory.load(args.fixture)
        walls = annotate_walls(scan, cat, args.object)
        result["walls"] = [w.to_json() for w in walls]
        warnings.extend(cat.warnings)
    if args.out:
        write_svg(result, args.out)
        result["svg"] = str(args.out)
    return result, warnings


def cmd_orbit(args):
    src, dst = ChargeFamily.parse(args.source), ChargeFamily.parse(args.target)
    return orbit_compare(src, dst).to_json(), []


def cmd_plot(args):
    report = json.loads(Path(args.report).read_text())
    payload = report.get("results", report)
    write_svg(payload, args.out)
    return {"svg": str(args.out)}, []


# -- parser --------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="stabsys", description="Exact stability computations for coherent systems.")
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", required=True)

    e = sub.add_parser("eval", help="evaluate a central charge and its slope")
    e.add_argument("--charge", choices=["standard", "standard_beta", "tilted"], required=True)
    e.add_argument("--class", dest="cls", required=True)
    e.add_argument("--alpha")
    e.add_argument("--beta")
    e.add_argument("--gamma")
    e.set_defaults(fn=cmd_eval)

    r = sub.add_parser("region", help="region membership")
    rs = r.add_subparsers(dest="action", required=True)
    rc = rs.add_parser("check")
    for name in ("alpha", "beta", "gamma"):
        rc.add_argument(f"--{name}", required=True)
    rc.set_defaults(fn=cmd_region)

    b = sub.add_parser("bg", help="BG coefficient solver")
    bs = b.add_subparsers(dest="action", required=True)
    bsolve = bs.add_parser("solve")
    for name in ("alpha", "beta", "gamma"):
        bsolve.add_argument(f"--{name}", required=True)
    bsolve.add_argument("--t")
    bsolve.set_defaults(fn=cmd_bg)

    s = sub.add_parser("support", help="support-property certificate")
    ss = s.add_subparsers(dest="action", required=True)
    sc = ss.add_parser("certify")
    sc.add_argument("--alpha", required=True)
    sc.add_argument("--beta", default="0")
    sc.add_argument("--bound", type=int, default=30)
    sc.add_argument("--workers", type=int)
    sc.set_defaults(fn=cmd_support)

    bo = sub.add_parser("bounds", help="section and Clifford bounds")
    bos = bo.add_subparsers(dest="action", required=True)
    bc = bos.add_parser("check")
    bc.add_argument("--class", dest="cls", required=True)
    bc.add_argument("--alpha")
    bc.add_argument("--genus", type=int)
    bc.set_defaults(fn=cmd_bounds)

    f = sub.add_parser("formal", help="formal fixture computations")
    fs = f.add_subparsers(dest="action", required=True)
    fh = fs.add_parser("hn")
    fh.add_argument("--fixture", required=True)
    fh.add_argument("--object", required=True)
    fh.add_argument("--alpha", required=True)
    fh.set_defaults(fn=cmd_formal_hn)
    fm = fs.add_parser("scan-minimal")
    for name in ("alpha", "beta", "gamma"):
        fm.add_argument(f"--{name}", required=True)
    fm.add_argument("--bound", type=int, default=40)
    fm.add_argument("--kind", choices=[OP, V1, "both"], default="both")
    fm.add_argument("--stable", action="store_true", help="weak slope inequality (stability rather than semistability)")
    fm.set_defaults(fn=cmd_formal_scan)

    w = sub.add_parser("walls", help="walls and chambers in gamma")
    ws = w.add_subparsers(dest="action", required=True)
    wsc = ws.add_parser("scan")
    wsc.add_argument("--class", dest="cls", required=True)
    wsc.add_argument("--alpha", required=True)
    wsc.add_argument("--beta", required=True)
    wsc.add_argument("--gamma-min", required=True)
    wsc.add_argument("--gamma-max", required=True)
    wsc.add_argument("--bound", type=int, default=10)
    wsc.add_argument("--mode", choices=["MinimalObject", "PointSystem", "ShiftedStable"])
    wsc.add_argument("--include-extremal", action="store_true")
    wsc.add_argument("--complete", action="store_true")
    wsc.add_argument("--fixture")
    wsc.add_argument("--object")
    wsc.add_argument("--format", choices=["json", "csv"], default="json")
    wsc.add_argument("--out")
    wsc.add_argument("--workers", type=int)
    wsc.set_defaults(fn=cmd_walls)

    o = sub.add_parser("orbit", help="GL+(2) orbit comparison of two charges")
    o.add_argument("--from", dest="source", required=True)
    o.add_argument("--to", dest="target", required=True)
    o.set_defaults(fn=cmd_orbit)

    pl = sub.add_parser("plot", help="render a walls report as SVG")
    pl.add_argument("--report", required=True)
    pl.add_argument("--out", required=True)
    pl.set_defaults(fn=cmd_plot)
    return p


def _params(args) -> dict:
    skip = {"fn", "command", "action"}
    out = {}
    for k, v in sorted(vars(args).items()):
        if k in skip or v is None:
            continue
        out["class" if k == "cls" else k] = v
    return out


def walls_csv(result: dict) -> str:
    buf = io.StringIO()
    wr = csv.writer(buf, lineterminator="\n")
    wr.writerow(["gamma0", "n'", "d'", "k'", "monotonicity", "kind"])
    for w in result["walls"]:
        n, d, k = w["pair"][0]
        wr.writerow([w["gamma0"], n, d, k, w["monotonicity"], w["kind"]])
    return buf.getvalue()


def run(argv: list[str] | None = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    command = args.command + (f" {args.action}" if getattr(args, "action", None) else "")
    try:
        results, warnings = args.fn(args)
    except (StabError, KeyError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=stderr)
        return 1
    if getattr(args, "format", "json") == "csv":
        stdout.write(walls_csv(results))
        return 0
    report = {
        "command": command,
        "parameters": _params(args),
        "results": results,
        "warnings": warnings,
        "version": __version__,
    }
    stdout.write(json.dumps(report, sort_keys=True, indent=2, ensure_ascii=False) + "\n")
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
