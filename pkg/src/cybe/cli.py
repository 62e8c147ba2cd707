"""Command-line front end: evaluate, verify, classify, transform, export.

Output is JSON by default (CSV opt-in for weight tables).  Runs are
deterministic: identical spec, flags and seed produce byte-identical
output.  YBE_THREADS caps worker threads for residual sweeps; output
assembly is always single-threaded and ordered by sample index.

Exit codes: 0 success (verify: median within tolerance; classify: a
solution verdict), 1 verification failure or non-solution verdict,
2 invalid spec / size limit, 3 pole at a requested point,
4 NOT_EIGHT_VERTEX, 5 INDETERMINATE.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor

import numpy as np

from .classify import ClassifyPlan, Verdict, classify, hamiltonian_coeffs
from .errors import CybeError, InvalidSpec, PoleProximity, SizeLimit
from .families import (WeightFamily, make_family, spec_from_json,
                       validate_spec)
from .sampling import SamplePlan, draw_points, draw_triples
from .transforms import Pipeline, apply, transform_diagnostics
from .weights import WeightVector, unitarity_residual, ybe_residual

_EXIT_VERDICT = {
    Verdict.BAXTER: 0, Verdict.FREE_FERMION: 0,
    Verdict.TRIVIAL_A: 0, Verdict.TRIVIAL_B: 0,
    Verdict.NOT_A_SOLUTION: 1, Verdict.NOT_EIGHT_VERTEX: 4,
    Verdict.INDETERMINATE: 5,
}


def _threads() -> int:
    try:
        return max(1, int(os.environ.get("YBE_THREADS", "1")))
    except ValueError:
        return 1


def _pmap(fn, items):
    n = _threads()
    if n <= 1:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=n) as pool:
        return list(pool.map(fn, items))


def _load_json_arg(value: str):
    text = value.strip()
    if text.startswith(("{", "[")):
        return json.loads(text)
    with open(value, encoding="utf-8") as fh:
        return json.load(fh)


def _load_family(args) -> WeightFamily:
    doc = _load_json_arg(args.spec)
    spec = spec_from_json(doc)
    diags = [d for d in validate_spec(spec) if not d.startswith("warning:")]
    if diags:
        raise InvalidSpec("; ".join(diags))
    fam = make_family(spec)
    if getattr(args, "transform", None):
        pipe = Pipeline.from_json(_load_json_arg(args.transform))
        for step in pipe.steps:
            for diag in transform_diagnostics(step):
                print(f"warning: {diag}", file=sys.stderr)
        fam = apply(pipe, fam)
    if getattr(args, "perturb", None):
        field, delta = args.perturb
        fam = _perturbed(fam, field, complex(float(delta)))
    return fam


_FIELD_INDEX = {f"a{i+1}": i for i in range(8)}


def _perturbed(fam: WeightFamily, field: str, delta: complex) -> WeightFamily:
    if field not in _FIELD_INDEX:
        raise InvalidSpec(f"cannot perturb unknown field {field!r}")
    idx = _FIELD_INDEX[field]
    base = fam.evaluate

    def ev(u, xi, eta):
        a = base(u, xi, eta).a.copy()
        a[idx] += delta
        return WeightVector(a)

    return WeightFamily(spec=None, evaluate=ev,
                        label=f"perturb_{field}({fam.label})",
                        gauge=False)


def _emit(doc, args) -> None:
    text = json.dumps(doc, indent=2, sort_keys=True)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def _grid(spec: str) -> np.ndarray:
    try:
        lo, hi, n = spec.split(":")
        return np.linspace(float(lo), float(hi), int(n))
    except ValueError:
        raise InvalidSpec(f"grid must be 'start:stop:count', got {spec!r}")


def _weight_rows(fam: WeightFamily, points):
    rows = []
    for (u, xi, eta) in points:
        w = fam.eval(u, xi, eta)
        row = {"u": u, "xi": xi, "eta": eta}
        for i in range(8):
            row[f"a{i+1}_re"] = w.a[i].real
            row[f"a{i+1}_im"] = w.a[i].imag
        rows.append(row)
    return rows


def _write_rows(rows, args) -> None:
    if args.format == "csv":
        header = list(rows[0].keys()) if rows else []
        lines = [",".join(header)]
        lines += [",".join(repr(r[k]) for k in header) for r in rows]
        text = "\n".join(lines) + "\n"
        if args.out:
            with open(args.out, "w", encoding="utf-8") as fh:
                fh.write(text)
        else:
            sys.stdout.write(text)
    else:
        _emit({"rows": rows}, args)


def cmd_eval(args) -> int:
    fam = _load_family(args)
    points = [(u, xi, eta)
              for u in _grid(args.grid_u)
              for xi in _grid(args.grid_xi)
              for eta in _grid(args.grid_eta)]
    _write_rows(_weight_rows(fam, points), args)
    return 0


def cmd_verify(args) -> int:
    fam = _load_family(args)
    plan = SamplePlan(n=args.samples, seed=args.seed,
                      u_span=(-args.u_span, args.u_span),
                      color_span=(-args.color_span, args.color_span),
                      max_weight=args.max_weight)
    triples = draw_triples(fam, plan)

    def one(t):
        u, v, xi, eta, lam = t
        rep = ybe_residual(fam.eval(u, xi, eta), fam.eval(u + v, xi, lam),
                           fam.eval(v, eta, lam))
        return rep.relative, rep.component_norms

    results = _pmap(one, triples)
    rels = np.array([r for r, _ in results])
    worst: dict[str, float] = {}
    for _, comp in results:
        for key, val in comp.items():
            worst[key] = max(worst.get(key, 0.0), val)
    offenders = sorted(worst.items(), key=lambda kv: -kv[1])[:5]

    unit = None
    if fam.gauge:
        pts = draw_points(fam, SamplePlan(n=min(args.samples, 50),
                                          seed=plan.seed, u_span=plan.u_span,
                                          color_span=plan.color_span,
                                          max_weight=plan.max_weight))
        unit = max(_pmap(lambda p: unitarity_residual(fam.eval, *p), pts))

    ok = bool(np.median(rels) <= args.tol)
    _emit({
        "samples": args.samples,
        "seed": args.seed,
        "tolerance": args.tol,
        "relative_residual": {
            "min": float(rels.min()), "median": float(np.median(rels)),
            "max": float(rels.max()),
        },
        "worst_components": [{"id": k, "max_residual": v}
                             for k, v in offenders],
        "unitarity_max": unit,
        "pass": ok,
    }, args)
    return 0 if ok else 1


def cmd_classify(args) -> int:
    fam = _load_family(args)
    plan = ClassifyPlan(n_ybe=args.samples, seed=args.seed,
                        tol_solution=args.tol,
                        u_span=(-args.u_span, args.u_span),
                        color_span=(-args.color_span, args.color_span),
                        max_weight=args.max_weight)
    report = classify(fam, plan)
    _emit(report.to_json(), args)
    return _EXIT_VERDICT[report.verdict]


def cmd_transform(args) -> int:
    return cmd_eval(args)


def cmd_couplings(args) -> int:
    from .spinchain import build_chain, couplings_from_coeffs, export_matrix

    fam = _load_family(args)
    coeffs = hamiltonian_coeffs(fam, np.array([args.xi]), h=args.h)
    c = couplings_from_coeffs(coeffs.at(0))
    doc = {"xi": args.xi, "couplings": c.to_json(),
           "coefficients": [[v.real, v.imag] for v in coeffs.at(0)]}
    if args.sites:
        op = build_chain(c, args.sites, periodic=args.periodic)
        doc["sites"] = args.sites
        doc["periodic"] = args.periodic
        doc["hermiticity_defect"] = op.hermiticity_defect()
        if args.matrix_out:
            export_matrix(op, args.matrix_out,
                          "csv" if args.format == "csv" else "npy")
            doc["matrix_file"] = args.matrix_out
    _emit(doc, args)
    return 0


def _add_common(p, with_transform=True):
    p.add_argument("--spec", required=True,
                   help="family spec: JSON file path or inline JSON")
    if with_transform:
        p.add_argument("--transform",
                       help="transform pipeline: JSON file path or inline JSON")
    p.add_argument("--perturb", nargs=2, metavar=("FIELD", "DELTA"),
                   help="additive perturbation of one weight, e.g. a7 0.1")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--tol", type=float, default=1e-9)
    p.add_argument("--samples", type=int, default=100)
    p.add_argument("--u-span", type=float, default=0.35)
    p.add_argument("--color-span", type=float, default=0.5)
    p.add_argument("--max-weight", type=float, default=15.0)
    p.add_argument("--out", help="output file (default stdout)")
    p.add_argument("--format", choices=("json", "csv"), default="json")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="cybe",
        description="eight-vertex families of the colored Yang-Baxter "
                    "equation: evaluation, verification, classification, "
                    "spin-chain export")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", help="tabulate weights over a grid")
    _add_common(p)
    p.add_argument("--grid-u", default="-0.3:0.3:5")
    p.add_argument("--grid-xi", default="-0.4:0.4:5")
    p.add_argument("--grid-eta", default="-0.4:0.4:5")
    p.set_defaults(fn=cmd_eval)

    p = sub.add_parser("verify", help="matrix-identity residual sweep")
    _add_common(p)
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("classify", help="decide the solution type")
    _add_common(p)
    p.set_defaults(fn=cmd_classify)

    p = sub.add_parser("transform",
                       help="tabulate weights of a transformed family")
    _add_common(p)
    p.add_argument("--grid-u", default="-0.3:0.3:5")
    p.add_argument("--grid-xi", default="-0.4:0.4:5")
    p.add_argument("--grid-eta", default="-0.4:0.4:5")
    p.set_defaults(fn=cmd_transform)

    p = sub.add_parser("couplings",
                       help="spin-chain couplings and optional matrix dump")
    _add_common(p)
    p.add_argument("--xi", type=float, default=0.3)
    p.add_argument("--h", type=float, default=1e-5)
    p.add_argument("--sites", type=int, default=0)
    p.add_argument("--periodic", action="store_true")
    p.add_argument("--matrix-out", help="file for the dense matrix dump")
    p.set_defaults(fn=cmd_couplings)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except (InvalidSpec, SizeLimit, json.JSONDecodeError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except PoleProximity as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except CybeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
