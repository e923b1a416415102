"""Command-line front end: ``gmorder eval|check|verify|counterexample``.

Exit codes: 0 success/HOLDS, 1 violated or regression, 2 inconclusive or
exhausted generation, 64 usage error, 65 invalid input file.
"""

import argparse
import json
import sys

import jsonschema
import numpy as np

from . import archimedean, extremes, gm, stochorder
from .errors import EvaluationError
from .gm import GMParams
from .harness import runner, theorems
from .harness.counterexamples import COUNTEREXAMPLES
from .verdicts import Status

EXIT_OK, EXIT_VIOLATED, EXIT_INCONCLUSIVE, EXIT_USAGE, EXIT_DATAERR = 0, 1, 2, 64, 65


class UsageError(Exception):
    pass


class InputError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


_NUM = {"type": "number"}
_POS = {"type": "number", "exclusiveMinimum": 0}
_NONNEG = {"type": "number", "minimum": 0}

POPULATION_SCHEMA = {
    "type": "object",
    "required": ["members"],
    "additionalProperties": False,
    "properties": {
        "members": {
            "type": "array",
            "minItems": 1,
            "items": {
                "type": "object",
                "required": ["alpha", "beta"],
                "additionalProperties": False,
                "properties": {"alpha": _POS, "beta": _NONNEG, "lambda": _NONNEG},
            },
        },
        "shock_p": {"type": "array", "items": {"type": "number", "minimum": 0, "maximum": 1}},
        "copula": {
            "type": "object",
            "required": ["family"],
            "additionalProperties": False,
            "properties": {
                "family": {"enum": ["independence", "clayton", "gumbel", "gumbel-hougaard"]},
                "theta": _NUM,
            },
        },
        "lambda_scalar": _NONNEG,
    },
}

SCENARIO_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "required": ["A", "B", "relation", "extreme"],
    "additionalProperties": False,
    "properties": {
        "A": POPULATION_SCHEMA,
        "B": POPULATION_SCHEMA,
        "relation": {"enum": list(stochorder.RELATIONS)},
        "extreme": {"enum": ["min", "max"]},
        "grid": {
            "type": "object",
            "additionalProperties": False,
            "properties": {
                "x_min": _NONNEG,
                "x_max": _POS,
                "points": {"type": "integer", "minimum": 16},
                "spacing": {"enum": ["linear", "log"]},
            },
        },
    },
}

_VEC = {"oneOf": [_NUM, {"type": "array", "items": _NUM}]}
THEOREM_SCENARIO_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "required": ["theorem", "n", "params"],
    "properties": {
        "theorem": {"type": "string"},
        "n": {"type": "integer", "minimum": 2},
        "params": {"type": "object", "additionalProperties": _VEC},
        "generators": {"oneOf": [{"type": "null"}, {"type": "array", "minItems": 2, "maxItems": 2}]},
        "h": {"oneOf": [{"type": "null"}, {"enum": list(theorems.H_FUNCS)}]},
    },
}


def _load_json(path, schema):
    try:
        with open(path) as fh:
            doc = json.load(fh)
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: malformed JSON: {exc}") from exc
    try:
        jsonschema.validate(doc, schema)
    except jsonschema.ValidationError as exc:
        where = "/".join(str(p) for p in exc.absolute_path) or "<root>"
        raise InputError(f"{path}: {where}: {exc.message}") from exc
    return doc


def population_from_json(d, label="population"):
    """Build a PopulationSpec from a validated ScenarioFile population, expanding ``lambda_scalar``."""
    lam_scalar = d.get("lambda_scalar")
    members = []
    for i, m in enumerate(d["members"]):
        lam = m.get("lambda", lam_scalar)
        if lam is None:
            raise InputError(f"{label}/members/{i}: 'lambda' missing and no lambda_scalar given")
        if "lambda" in m and lam_scalar is not None and m["lambda"] != lam_scalar:
            raise InputError(f"{label}/members/{i}: 'lambda' conflicts with lambda_scalar")
        members.append(GMParams(m["alpha"], m["beta"], lam))
    shock = d.get("shock_p")
    if shock is not None and len(shock) != len(members):
        raise InputError(f"{label}/shock_p: expected {len(members)} entries, got {len(shock)}")
    copula = d.get("copula")
    try:
        cop = archimedean.from_dict(copula) if copula is not None else None
        return extremes.PopulationSpec(tuple(members), shock_p=shock, copula=cop)
    except (TypeError, ValueError) as exc:
        raise InputError(f"{label}: {exc}") from exc


def _floats(text, name):
    try:
        return [float(t) for t in text.split(",") if t.strip()]
    except ValueError as exc:
        raise UsageError(f"--{name}: expected comma-separated numbers") from exc


def _fmt(v):
    return f"{float(v):.17g}"


def _add_grid_flags(p):
    g = p.add_argument_group("grid")
    g.add_argument("--grid-min", type=float, default=None)
    g.add_argument("--grid-max", type=float, default=None)
    g.add_argument("--grid-points", type=int, default=None)
    g.add_argument("--grid-log", action="store_true", help="log spacing (0 is kept as first point)")
    p.add_argument("--tol", type=float, default=1e-9, help="absolute and relative tolerance (default 1e-9)")


def _grid(args, base=None, x_hi=None):
    """Grid from file settings overridden by flags; None if no upper bound is known yet."""
    base = dict(base or {})
    if args.grid_min is not None:
        base["x_min"] = args.grid_min
    if args.grid_max is not None:
        base["x_max"] = args.grid_max
    if args.grid_points is not None:
        base["points"] = args.grid_points
    if args.grid_log:
        base["spacing"] = "log"
    if "x_max" not in base:
        if x_hi is None:
            return None
        base["x_max"] = x_hi
    try:
        return stochorder.Grid(**base)
    except ValueError as exc:
        raise UsageError(f"bad grid: {exc}") from exc


def write_csv(fh, header, rows, trimmed=None):
    fh.write(",".join(header) + "\n")
    for row in rows:
        fh.write(",".join(_fmt(v) for v in row) + "\n")
    if trimmed is not None:
        fh.write(f"# trimmed: [{_fmt(trimmed[0])},{_fmt(trimmed[1])}]\n")


def _emit_text(text, out):
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _json(obj):
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def _status_exit(status):
    if status in (Status.HOLDS, Status.HOLDS_REVERSED):
        return EXIT_OK
    if status is Status.VIOLATED:
        return EXIT_VIOLATED
    return EXIT_INCONCLUSIVE


# -- commands ---------------------------------------------------------------

def cmd_eval(args):
    try:
        p = GMParams(args.alpha, args.beta, args.lam)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    if (args.at is None) == (args.quantile is None):
        raise UsageError("give exactly one of --at or --quantile")
    if args.at is not None:
        x = np.asarray(_floats(args.at, "at"))
        if np.any(~np.isfinite(x)) or np.any(x < 0):
            raise UsageError("--at: points must be finite and >= 0")
        cols = [gm.hazard(p, x), gm.survival(p, x), gm.cdf(p, x), gm.pdf(p, x)]
        lines = ["x,hazard,survival,cdf,pdf"]
        for i, xi in enumerate(x):
            lines.append(",".join(repr(float(v)) for v in (xi, *(c[i] for c in cols))))
    else:
        q = np.asarray(_floats(args.quantile, "quantile"))
        if np.any(~np.isfinite(q)) or np.any(q < 0) or np.any(q >= 1):
            raise UsageError("--quantile: levels must lie in [0, 1)")
        xs = gm.quantile(p, q)
        lines = ["q,x"] + [f"{float(a)!r},{float(b)!r}" for a, b in zip(q, xs)]
    sys.stdout.write("\n".join(lines) + "\n")
    return EXIT_OK


def cmd_check(args):
    doc = _load_json(args.scenario, SCENARIO_SCHEMA)
    A = population_from_json(doc["A"], "A")
    B = population_from_json(doc["B"], "B")
    ext, rel = doc["extreme"], doc["relation"]
    if rel == "R-hr" and ext == "max":
        raise InputError("R-hr is only supported for minima")
    try:
        x_hi = max(extremes.default_x_hi(A, ext), extremes.default_x_hi(B, ext))
    except EvaluationError:
        x_hi = None
    grid = _grid(args, doc.get("grid"), x_hi)
    if grid is None:
        raise InputError("grid.x_max is required for this population")
    verdict = stochorder.compare(rel, A, B, ext, grid, args.tol, args.tol)
    report = {"relation": rel, "extreme": ext, "grid": grid.to_dict(), "verdict": verdict.to_dict()}
    if args.emit:
        header, rows, trimmed = stochorder.curve_table(rel, A, B, ext, grid)
        with open(args.emit, "w") as fh:
            write_csv(fh, header, rows, trimmed)
    sys.stdout.write(_json(report))
    return _status_exit(verdict.status)


def _theorem_ids(values):
    if not values:
        return list(theorems.DEFAULT_IDS)
    ids = []
    for v in values:
        for tid in v.split(","):
            tid = tid.strip()
            if tid == "all":
                ids.extend(theorems.DEFAULT_IDS)
            elif tid in theorems.REGISTRY:
                ids.append(tid)
            else:
                raise UsageError(f"unknown theorem id {tid!r}")
    return list(dict.fromkeys(ids))


def cmd_verify(args):
    if args.scenario:
        doc = _load_json(args.scenario, THEOREM_SCENARIO_SCHEMA)
        if doc["theorem"] not in theorems.REGISTRY:
            raise InputError(f"unknown theorem id {doc['theorem']!r}")
        try:
            scn = theorems.Scenario.from_dict(doc)
            spec = theorems.get(scn.theorem_id)
            grid = _grid(args)
            rep = runner.run_theorem(spec, scn, grid=grid, points=args.grid_points or 2000,
                                     tol_abs=args.tol, tol_rel=args.tol)
        except (KeyError, ValueError, TypeError) as exc:
            raise InputError(f"{args.scenario}: {exc}") from exc
        _emit_text(_json(rep.to_dict()), args.out)
        return {"HOLDS": EXIT_OK, "VIOLATED": EXIT_VIOLATED}.get(rep.outcome, EXIT_INCONCLUSIVE)
    ids = _theorem_ids(args.theorem)
    if args.trials < 1:
        raise UsageError("--trials must be >= 1")
    ns = tuple(args.n) if args.n else (2, 3, 5)
    if any(not 2 <= n <= 8 for n in ns):
        raise UsageError("--n must lie in [2, 8]")
    grid = _grid(args)
    summary = runner.batch_verify(ids, args.trials, args.seed, ns, points=args.grid_points or 2000,
                                  tol=args.tol, threads=args.threads, grid=grid)
    _emit_text(runner.dumps(summary), args.out)
    counts = [e["counts"] for e in summary["theorems"].values()]
    if summary["all_hold"]:
        return EXIT_OK
    if any(c["VIOLATED"] for c in counts):
        return EXIT_VIOLATED
    return EXIT_INCONCLUSIVE


def cmd_counterexample(args):
    if args.id not in COUNTEREXAMPLES:
        raise UsageError(f"unknown counterexample id {args.id!r}; known: {', '.join(COUNTEREXAMPLES)}")
    ce = COUNTEREXAMPLES[args.id]
    X, Y = ce.populations()
    x_hi = max(extremes.default_x_hi(X, ce.extreme), extremes.default_x_hi(Y, ce.extreme))
    grid = _grid(args, None, x_hi)
    rep = runner.run_counterexample(ce, grid, tol_abs=args.tol, tol_rel=args.tol)
    if args.out:
        with open(args.out, "w") as fh:
            write_csv(fh, rep.header, rep.rows, rep.trimmed)
        sys.stdout.write(_json(rep.to_dict()))
    else:
        write_csv(sys.stdout, rep.header, rep.rows, rep.trimmed)
    if not rep.reproduced:
        sys.stderr.write(f"{ce.id}: expected VIOLATED in both directions, got "
                         f"{rep.verdict.forward.value}/{rep.verdict.reverse.value}\n")
        return EXIT_VIOLATED
    return EXIT_OK


def build_parser():
    ap = _Parser(prog="gmorder", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("eval", help="GM hazard, survival, cdf and pdf, or quantiles")
    p.add_argument("--alpha", type=float, required=True)
    p.add_argument("--beta", type=float, required=True)
    p.add_argument("--lambda", dest="lam", type=float, required=True)
    p.add_argument("--at", help="comma-separated x values")
    p.add_argument("--quantile", help="comma-separated levels in [0, 1)")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("check", help="compare the extremes of two populations")
    p.add_argument("scenario", help="ScenarioFile JSON")
    p.add_argument("--emit", metavar="CSV", help="write both curves and the diagnostic series")
    _add_grid_flags(p)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("verify", help="run generated scenarios against registered theorems")
    p.add_argument("--theorem", action="append", help="theorem id(s), comma-separated or 'all'")
    p.add_argument("--scenario", help="run one theorem scenario JSON instead of generating")
    p.add_argument("--trials", type=int, default=200)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--n", type=int, action="append", help="sample size (repeatable; default 2,3,5)")
    p.add_argument("--threads", type=int, default=None, help="worker threads (default GM_ORDER_THREADS or 1)")
    p.add_argument("--out", help="write the JSON report here instead of stdout")
    _add_grid_flags(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("counterexample", help="reproduce a registered counterexample")
    p.add_argument("--id", required=True)
    p.add_argument("--out", metavar="CSV")
    _add_grid_flags(p)
    p.set_defaults(func=cmd_counterexample)
    return ap


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        sys.stderr.write(f"gmorder: {exc}\n")
        return EXIT_USAGE
    except InputError as exc:
        sys.stderr.write(f"gmorder: {exc}\n")
        return EXIT_DATAERR
    except EvaluationError as exc:
        sys.stderr.write(f"gmorder: {exc}\n")
        return EXIT_INCONCLUSIVE


if __name__ == "__main__":
    sys.exit(main())
