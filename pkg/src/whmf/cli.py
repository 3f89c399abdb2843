"""Command-line interface: dimension tables, gap sets, canonical bases,
duality sweeps, generating-function checks, and trace tables.

Reports use the JSON schema {command, config, results, pass}; rationals are
serialized as "num/den" strings (denominator omitted when 1).  The exit
code is 0 iff every check in the invoked command passes.  CSV output is
available for the tabular commands (dims, gaps, trace) only.
"""

import argparse
import csv
import io
import json
import sys

from .classical import lambda_p
from .duality import duality_check
from .genfun import genfun_check, genfun_params, _gap_residue_test
from .qseries import rat_str, qs_json
from .spaces import (genus, dim_S, dim_E, dim_M, gap_sets, default_prec_cap,
                     separation_prec_cap)
from .trace import trace_tn
from .weak import weak_basis, index_set_predicted


class UsageError(Exception):
    pass


def _parse_k_range(text):
    try:
        a, b = text.split(":")
        a, b = int(a), int(b)
    except ValueError:
        raise UsageError("--k-range expects LOW:HIGH") from None
    if b < a:
        raise UsageError("--k-range expects LOW <= HIGH")
    return [k for k in range(a, b + 1) if k % 2 == 0]


def _k_list(args, default=None):
    if args.k_range is not None:
        return _parse_k_range(args.k_range)
    if args.k is not None:
        return [args.k]
    if default is not None:
        return default
    raise UsageError("--k or --k-range is required")


def _resolve_prec(args, floor):
    """Effective precision: the module floor, raised (never lowered) by
    --prec."""
    if args.prec is None:
        return floor
    if args.prec < floor:
        raise UsageError(
            "--prec may only raise the default precision (minimum %d)"
            % floor)
    return args.prec


def _require_p(args):
    if args.p is None:
        raise UsageError("--p is required")
    if args.p < 5:
        raise UsageError("--p must be a prime >= 5")
    return args.p


def cmd_dims(args):
    p = _require_p(args)
    ks = _k_list(args, default=list(range(2, p, 2)))
    g = genus(p)
    rows = [{"k": k, "dimS": dim_S(p, k), "dimE": dim_E(p, k),
             "dimM": dim_M(p, k)} for k in ks]
    results = {"genus": g, "lambda": lambda_p(p), "rows": rows}
    if g == 0:
        results["note"] = "genus-0 guard"
    return results, True


def cmd_gaps(args):
    p = _require_p(args)
    ks = _k_list(args, default=list(range(2, p, 2)))
    rows = []
    for k in ks:
        rep = gap_sets(p, k)
        rows.append({"k": k, "missM": sorted(rep.missM),
                     "missS": sorted(rep.missS), "cM": rep.cM, "cS": rep.cS,
                     "mMax": rep.mMax, "sMax": rep.sMax})
    return {"rows": rows}, True


def cmd_basis(args):
    p = _require_p(args)
    ks = _k_list(args)
    if len(ks) != 1:
        raise UsageError("basis expects a single --k")
    k = ks[0]
    if args.mmax is None:
        raise UsageError("--mmax is required for basis")
    prec = None if args.prec is None else _resolve_prec(
        args, separation_prec_cap(p, max(abs(k), 2)))
    basis = weak_basis(p, k, args.space, args.mmax, prec)
    results = {"indexSet": list(basis.index_set),
               "precCap": basis.prec_cap,
               "elements": [{"m": m, "series": qs_json(e)}
                            for m, e in zip(basis.index_set, basis.elements)]}
    ok = True
    try:
        first, excluded, extra = index_set_predicted(p, k, args.space)
        predicted = sorted(set(extra) | {
            m for m in range(first, args.mmax + 1) if m not in excluded})
        results["indexSetPredicted"] = predicted
        ok = predicted == list(basis.index_set)
    except ValueError:
        results["indexSetPredicted"] = None
    return results, ok


def cmd_duality(args):
    p = _require_p(args)
    ks = _k_list(args)
    rows = []
    ok = True
    for k in ks:
        rep = duality_check(p, k, args.box, args.box)
        rows.append({"k": k, "box": args.box, "checked": rep.checked,
                     "violations": [list(v) for v in rep.violations],
                     "passed": rep.passed})
        ok = ok and rep.passed
    return {"rows": rows}, ok


def cmd_genfun(args):
    p = _require_p(args)
    ks = _k_list(args)
    if len(ks) != 1:
        raise UsageError("genfun expects a single --k")
    k = ks[0]
    params = genfun_params(p, k)
    J, I = args.window, args.window
    rows = []
    ok = True
    for variant in ("f", "g"):
        rep = genfun_check(p, k, J, I, variant)
        rows.append({"variant": variant, "window": [J, I],
                     "passed": rep.passed})
        ok = ok and rep.passed
    results = {"n0": params.n0, "gapCase": params.gap_case,
               "gapCaseResidues": _gap_residue_test(p, k),
               "variants": rows}
    return results, ok


def cmd_trace(args):
    p = _require_p(args)
    ks = _k_list(args)
    n_max = args.window if args.window is not None else 20
    rows = []
    for k in ks:
        for n in range(1, n_max + 1):
            rows.append({"k": k, "n": n, "trace": rat_str(trace_tn(p, k, n))})
    return {"rows": rows}, True


_COMMANDS = {"dims": cmd_dims, "gaps": cmd_gaps, "basis": cmd_basis,
             "duality": cmd_duality, "genfun": cmd_genfun,
             "trace": cmd_trace}
_TABULAR = {"dims", "gaps", "trace"}


def _build_parser():
    ap = argparse.ArgumentParser(
        prog="whmf",
        description="weakly holomorphic modular form bases for prime level")
    ap.add_argument("command", choices=sorted(_COMMANDS))
    ap.add_argument("--p", type=int)
    ap.add_argument("--k", type=int)
    ap.add_argument("--k-range", dest="k_range")
    ap.add_argument("--space", choices=("M", "S"), default="M")
    ap.add_argument("--mmax", type=int)
    ap.add_argument("--box", type=int, default=40)
    ap.add_argument("--window", type=int)
    ap.add_argument("--prec", type=int)
    ap.add_argument("--format", dest="fmt",
                    choices=("json", "csv", "pretty"), default="json")
    ap.add_argument("--out")
    return ap


def _config_dict(args):
    out = {}
    for key in ("p", "k", "k_range", "space", "mmax", "box", "window",
                "prec"):
        v = getattr(args, key)
        if v is not None:
            out[key.replace("_", "-")] = v
    return out


def _csv_render(results):
    rows = results["rows"]
    buf = io.StringIO()
    fields = list(rows[0].keys()) if rows else []
    w = csv.DictWriter(buf, fieldnames=fields)
    w.writeheader()
    for r in rows:
        w.writerow({f: (" ".join(map(str, v)) if isinstance(v, list) else v)
                    for f, v in r.items()})
    return buf.getvalue()


def _pretty_render(report):
    buf = io.StringIO()
    print("command:", report["command"], file=buf)
    print("config:", json.dumps(report["config"]), file=buf)
    results = report["results"]
    for key, val in results.items():
        if key == "rows":
            continue
        print("%s: %s" % (key, json.dumps(val)), file=buf)
    for row in results.get("rows", []):
        print("  " + json.dumps(row), file=buf)
    print("pass:", report["pass"], file=buf)
    return buf.getvalue()


def main(argv=None):
    ap = _build_parser()
    args = ap.parse_args(argv)
    try:
        if args.fmt == "csv" and args.command not in _TABULAR:
            raise UsageError("csv output is available for tabular commands "
                             "only (dims, gaps, trace)")
        results, ok = _COMMANDS[args.command](args)
    except UsageError as exc:
        print("usage error: %s" % exc, file=sys.stderr)
        return 2
    report = {"command": args.command, "config": _config_dict(args),
              "results": results, "pass": ok}
    if args.fmt == "json":
        text = json.dumps(report, indent=2) + "\n"
    elif args.fmt == "csv":
        text = _csv_render(results)
    else:
        text = _pretty_render(report)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
