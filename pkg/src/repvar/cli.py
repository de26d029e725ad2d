"""Command-line driver.

    repvar generate "SL2 g=2 strict seed=7" > rep.json
    repvar analyze --generate "GL2 g=2 schottky seed=3"
    repvar analyze --input rep.json --form hermitian
    repvar dim-table --grid SL2:2,SL2:3,SL3:2,GL2:2 --seeds 20 --out csv
    repvar obstruction --input lifts.json

Exit codes: 0 success, 1 input error, 2 mathematical precondition violated.
"""

import argparse
import csv
import io
import json
import re
import sys
import time
from collections import Counter

import numpy as np

from . import serialization as ser
from .cohomology import dims_report, formula_dims, schottky_tangent, z1, b1, h1
from .errors import (GenerationError, InvalidElementError, NotPSLRepresentationError,
                     PreconditionError, RelatorError, UnsupportedError)
from .group_core import Family, GroupDescriptor, center_component_count
from .representation import (is_good, is_schottky, is_strict_schottky, random_good_schottky,
                             relator_residual)
from .symplectic import FormKind, pairing_matrix, verify_lagrangian
from .topology import obstruction_class

EXIT_OK, EXIT_INPUT, EXIT_MATH = 0, 1, 2

_SPEC = re.compile(r"^\s*([A-Za-z]+\d+)\s+g=(\d+)(?:\s+(strict|schottky))?\s+seed=(\d+)\s*$")


class InputError(Exception):
    pass


def parse_generate(spec):
    """``"SL2 g=2 strict seed=7"`` -> (descriptor, genus, strict, seed)."""
    m = _SPEC.match(spec)
    if not m:
        raise InputError(f"cannot parse generation spec {spec!r}; "
                         "expected 'FAMILYn g=G [strict|schottky] seed=S'")
    try:
        desc = GroupDescriptor.parse(m.group(1))
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    return desc, int(m.group(2)), m.group(3) != "schottky", int(m.group(4))


def parse_grid(text):
    cells = []
    for item in filter(None, (t.strip() for t in text.split(","))):
        try:
            name, genus = item.split(":")
            cells.append((GroupDescriptor.parse(name), int(genus)))
        except ValueError as exc:
            raise InputError(f"bad grid cell {item!r}: expected FAMILYn:genus") from exc
    return cells


def _load_rep(args, validate):
    if args.generate:
        desc, genus, strict, seed = parse_generate(args.generate)
        return random_good_schottky(desc, genus, strict, seed)
    if not args.input:
        raise InputError("one of --input or --generate is required")
    try:
        with open(args.input) as fh:
            data = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError(f"cannot read {args.input}: {exc}") from exc
    try:
        return ser.rep_from_json(data, validate=validate)
    except (ValueError, InvalidElementError) as exc:
        raise InputError(str(exc)) from exc


def _rep_echo(rep):
    return {
        "descriptor": ser.descriptor_to_json(rep.descriptor),
        "genus": rep.genus,
        "relator_residual": relator_residual(rep),
        "schottky": is_schottky(rep),
        "strict": is_strict_schottky(rep),
        "unitary": rep.is_unitary(),
    }


def _pairing_summary(rep, kind):
    pm = pairing_matrix(rep, form_kind=kind)
    e = pm.entries
    partner = -e.T if pm.form_kind is FormKind.BILINEAR else e.conj().T
    return {"dim": pm.dim, "rank": pm.rank,
            "symmetry_defect": float(np.abs(e - partner).max() / pm.scale) if e.size else 0.0}


def analyze(rep, forms):
    """Run every check that applies to ``rep``; returns (report, exit code)."""
    report = {"rep": _rep_echo(rep)}
    code = EXIT_OK
    if report["rep"]["relator_residual"] > rep.tol:
        report["error"] = "relator violated"
        return report, EXIT_MATH
    try:
        st = is_good(rep)
        report["stabilizer"] = vars(st).copy()
    except UnsupportedError as exc:
        report["stabilizer"] = vars(exc.partial).copy()
        report["stabilizer"]["note"] = str(exc)
        st = None
    report["dims"] = ser.dims_to_json(dims_report(rep))
    pairing = {}
    for kind in forms:
        if kind is FormKind.HERMITIAN and not rep.is_unitary():
            pairing["hermitian"] = {"error": "representation is not unitary"}
            if forms == (FormKind.HERMITIAN,):
                code = EXIT_MATH
            continue
        pairing[kind.value] = _pairing_summary(rep, kind)
    report["pairing"] = pairing
    if st is not None and st.is_good and rep.is_unitary() and report["rep"]["strict"]:
        report["lagrangian"] = vars(verify_lagrangian(rep)).copy()
    if rep.descriptor.family is Family.PSL:
        report["obstruction"] = ser.obstruction_to_json(obstruction_class(rep))
    return report, code


def cmd_generate(args):
    desc, genus, strict, seed = parse_generate(args.spec)
    return ser.rep_to_json(random_good_schottky(desc, genus, strict, seed)), EXIT_OK


def cmd_analyze(args):
    start = time.perf_counter()
    rep = _load_rep(args, validate=False)
    forms = (FormKind(args.form),) if args.form else (FormKind.BILINEAR, FormKind.HERMITIAN)
    report, code = analyze(rep, forms)
    if args.timing:
        report["wall_ms"] = (time.perf_counter() - start) * 1e3
    return report, code


def dim_table_cell(desc, genus, seeds):
    f = formula_dims(desc, genus)
    row = {"group": str(desc), "genus": genus, "components": center_component_count(desc, genus),
           "formula": {"Z1": f["Z1"], "B1": f["B1"], "H1": f["H1"],
                       "schottky_strict": f["schottky_strict"], "schottky": f["schottky"]}}
    if genus < 2:
        row.update(agree=False, observed=None, note="good representations need genus >= 2")
        return row
    seen = {k: [] for k in row["formula"]}
    try:
        for s in range(seeds):
            rep = random_good_schottky(desc, genus, True, s)
            seen["Z1"].append(z1(rep).dim)
            seen["B1"].append(b1(rep).dim)
            seen["H1"].append(h1(rep).dim)
            seen["schottky_strict"].append(schottky_tangent(rep, True).dim)
            seen["schottky"].append(schottky_tangent(
                random_good_schottky(desc, genus, False, s), False).dim)
    except (GenerationError, UnsupportedError) as exc:
        row.update(agree=False, observed=None, note=str(exc))
        return row
    row["observed"] = {k: Counter(v).most_common(1)[0][0] if v else None for k, v in seen.items()}
    row["agree"] = all(x == row["formula"][k] for k, v in seen.items() for x in v)
    return row


def cmd_dim_table(args):
    rows = [dim_table_cell(desc, g, args.seeds) for desc, g in parse_grid(args.grid or "")]
    return {"cells": rows, "all_agree": all(r["agree"] for r in rows), "seeds": args.seeds}, EXIT_OK


def _dim_table_csv(table):
    keys = ["Z1", "B1", "H1", "schottky_strict", "schottky"]
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["group", "genus", "components", "agree"]
               + [f"formula_{k}" for k in keys] + [f"observed_{k}" for k in keys])
    for r in table["cells"]:
        obs = r["observed"] or {}
        w.writerow([r["group"], r["genus"], r["components"], r["agree"]]
                   + [r["formula"][k] for k in keys] + [obs.get(k, "") for k in keys])
    return buf.getvalue()


def cmd_obstruction(args):
    rep = _load_rep(args, validate=False)
    return ser.obstruction_to_json(obstruction_class(rep)), EXIT_OK


def build_parser():
    p = argparse.ArgumentParser(prog="repvar", description=__doc__.split("\n")[0])
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("generate", help="write a random good Schottky rep as JSON")
    g.add_argument("spec", help="e.g. 'SL2 g=2 strict seed=7'")
    g.set_defaults(func=cmd_generate)

    a = sub.add_parser("analyze", help="full analysis of one representation")
    a.add_argument("--input", help="rep JSON file")
    a.add_argument("--generate", help="generation spec instead of a file")
    a.add_argument("--form", choices=[k.value for k in FormKind],
                   help="only compute this pairing (default: both where defined)")
    a.add_argument("--timing", action="store_true", help="add wall-clock milliseconds")
    a.set_defaults(func=cmd_analyze)

    d = sub.add_parser("dim-table", help="compare computed dimensions with the formulas")
    d.add_argument("--grid", default="", help="comma list of FAMILYn:genus")
    d.add_argument("--seeds", type=int, default=20)
    d.add_argument("--out", choices=["json", "csv"], default="json")
    d.set_defaults(func=cmd_dim_table)

    o = sub.add_parser("obstruction", help="topological type of a PSL rep given by lifts")
    o.add_argument("--input")
    o.add_argument("--generate")
    o.set_defaults(func=cmd_obstruction)
    return p


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        result, code = args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (RelatorError, NotPSLRepresentationError) as exc:
        out = {"error": str(exc), "residual": exc.residual}
        print(ser.dumps(out))
        return EXIT_MATH
    except (PreconditionError, GenerationError) as exc:
        print(ser.dumps({"error": str(exc)}))
        return EXIT_MATH
    if getattr(args, "out", "json") == "csv":
        sys.stdout.write(_dim_table_csv(result))
    else:
        print(ser.dumps(result))
    return code


if __name__ == "__main__":
    sys.exit(main())
