"""Running theorems and counterexamples, and batch verification."""

import hashlib
import json
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from .. import extremes, stochorder
from ..errors import EvaluationError, GenerationExhausted
from ..rng import keyed_seed, substream
from ..stochorder import Grid
from ..verdicts import Status
from . import theorems
from .counterexamples import COUNTEREXAMPLES
from .generate import gen_scenario

SKIPPED = "SKIPPED_CONCLUSION"
EXHAUSTED = "GENERATION_EXHAUSTED"
OUTCOMES = ("HOLDS", "VIOLATED", "INCONCLUSIVE", SKIPPED, EXHAUSTED)


def scenario_digest(scn):
    blob = json.dumps(scn.to_dict(), sort_keys=True).encode()
    return hashlib.sha256(blob).hexdigest()[:16]


@dataclass
class TheoremReport:
    theorem_id: str
    digest: str
    n: int
    hypotheses: dict
    outcome: str
    direction: str | None
    branch: str | None
    conclusion: stochorder.OrderingVerdict | None
    grid: dict | None
    scenario: dict
    discrepancy: str | None = None

    @property
    def passed(self):
        return self.outcome == "HOLDS"

    def to_dict(self):
        return {
            "theorem": self.theorem_id,
            "digest": self.digest,
            "n": self.n,
            "hypotheses": self.hypotheses,
            "outcome": self.outcome,
            "claimed_direction": self.direction,
            "branch": self.branch,
            "conclusion": self.conclusion.to_dict() if self.conclusion is not None else None,
            "grid": self.grid,
            "scenario": self.scenario,
        }


def _grid_for(spec, X, Y, points):
    ext = spec.extreme
    hi = max(extremes.default_x_hi(X, ext), extremes.default_x_hi(Y, ext))
    return Grid(0.0, hi, points, "linear")


def run_theorem(spec, scn, grid=None, points=2000, tol_abs=1e-9, tol_rel=1e-9, predicate_cache=None):
    """Check the hypotheses of ``spec`` on ``scn`` and, if they all pass, its conclusion.

    The conclusion is checked as ``X <=_rel Y``; the claimed direction of the
    scenario's branch decides which of the forward/reverse statuses counts.
    """
    if isinstance(spec, str):
        spec = theorems.get(spec)
    hyps = theorems.evaluate_hypotheses(spec, scn, predicate_cache)
    digest = scenario_digest(scn)
    if not all(hyps.values()):
        return TheoremReport(spec.id, digest, scn.n, hyps, SKIPPED, None, None, None, None,
                             scn.to_dict(), spec.discrepancy)
    direction = theorems.claimed_direction(spec, scn)
    branch = theorems.cone_branch(spec, scn)
    X, Y = theorems.build_populations(spec, scn)
    try:
        g = grid if grid is not None else _grid_for(spec, X, Y, points)
        verdict = stochorder.compare(spec.relation, X, Y, spec.extreme, g, tol_abs, tol_rel)
    except EvaluationError as exc:
        verdict = stochorder._inconclusive(spec.relation, tol_abs, tol_rel, str(exc))
        g = grid
    status = verdict.direction_status(direction)
    outcome = status.value if status is not Status.HOLDS_REVERSED else "HOLDS"
    return TheoremReport(spec.id, digest, scn.n, hyps, outcome, direction, branch, verdict,
                         g.to_dict() if isinstance(g, Grid) else None, scn.to_dict(), spec.discrepancy)


@dataclass
class CounterexampleReport:
    ce_id: str
    relation: str
    extreme: str
    verdict: stochorder.OrderingVerdict
    reproduced: bool
    header: list
    rows: object
    trimmed: tuple | None
    grid: dict

    def to_dict(self):
        return {
            "id": self.ce_id,
            "relation": self.relation,
            "extreme": self.extreme,
            "reproduced": self.reproduced,
            "verdict": self.verdict.to_dict(),
            "grid": self.grid,
        }


def run_counterexample(ce, grid=None, points=2000, tol_abs=1e-9, tol_rel=1e-9):
    """Evaluate a registered counterexample; ``reproduced`` needs both directions VIOLATED."""
    if isinstance(ce, str):
        if ce not in COUNTEREXAMPLES:
            raise KeyError(f"unknown counterexample id {ce!r}")
        ce = COUNTEREXAMPLES[ce]
    X, Y = ce.populations()
    if grid is None:
        hi = max(extremes.default_x_hi(X, ce.extreme), extremes.default_x_hi(Y, ce.extreme))
        grid = Grid(0.0, hi, points, "linear")
    verdict = stochorder.compare(ce.relation, X, Y, ce.extreme, grid, tol_abs, tol_rel)
    ok = verdict.forward is Status.VIOLATED and verdict.reverse is Status.VIOLATED
    header, rows, trimmed = stochorder.curve_table(ce.relation, X, Y, ce.extreme, grid)
    return CounterexampleReport(ce.id, ce.relation, ce.extreme, verdict, ok, header, rows, trimmed,
                                grid.to_dict())


def _threads(threads):
    if threads is None:
        env = os.environ.get("GM_ORDER_THREADS", "")
        threads = int(env) if env.strip().isdigit() else 1
    return max(1, int(threads))


def trial_seed(seed, theorem_id, n, trial):
    return substream(keyed_seed(seed, theorem_id, n), trial)


def _one(task):
    spec, n, tseed, points, tol, grid = task
    try:
        scn = gen_scenario(spec, n, tseed)
    except GenerationExhausted as exc:
        return {"outcome": EXHAUSTED, "n": n, "seed": tseed, "error": str(exc)}
    rep = run_theorem(spec, scn, grid=grid, points=points, tol_abs=tol, tol_rel=tol)
    return {"outcome": rep.outcome, "report": rep}


def batch_verify(ids=None, trials=200, seed=0, ns=(2, 3, 5), points=2000, tol=1e-9, threads=None,
                 grid=None):
    """Run ``trials`` generated scenarios per theorem and summarize the outcomes.

    Trial ``t`` uses ``n = ns[t % len(ns)]`` and the seed
    ``substream(keyed_seed(seed, id, n), t)``, so results do not depend on the
    number of worker threads. Every scenario whose outcome is not HOLDS is
    included in full. ``grid`` fixes the evaluation grid; by default each
    scenario gets ``points`` linear points on ``[0, x_hi]``.
    """
    if trials < 1:
        raise ValueError("trials must be >= 1")
    ids = list(ids) if ids else list(theorems.DEFAULT_IDS)
    specs = [theorems.get(i) for i in ids]
    tasks = []
    for spec in specs:
        for t in range(trials):
            n = ns[t % len(ns)]
            tasks.append((spec, n, trial_seed(seed, spec.id, n, t), points, tol, grid))
    workers = _threads(threads)
    if workers == 1:
        results = [_one(t) for t in tasks]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_one, tasks))
    summary = {
        "seed": seed,
        "trials": trials,
        "ns": list(ns),
        "grid": grid.to_dict() if grid is not None else {"points": points, "spacing": "linear"},
        "tol": tol,
        "theorems": {},
    }
    k = 0
    all_hold = True
    for spec in specs:
        counts = {o: 0 for o in OUTCOMES}
        failures = []
        for t in range(trials):
            res = results[k]
            k += 1
            counts[res["outcome"]] += 1
            if res["outcome"] != "HOLDS":
                failures.append(res["report"].to_dict() if "report" in res else
                                {k2: v for k2, v in res.items() if k2 != "report"})
        entry = {
            "statement": spec.statement,
            "counts": counts,
            "holds": counts["HOLDS"],
            "total": trials,
            "failures": failures,
        }
        if spec.discrepancy:
            entry["discrepancy"] = spec.discrepancy
        if spec.reading:
            entry["reading"] = spec.reading
        summary["theorems"][spec.id] = entry
        all_hold &= counts["HOLDS"] == trials
    summary["all_hold"] = all_hold
    return summary


def dumps(summary):
    """Canonical JSON text of a summary (byte-stable)."""
    return json.dumps(summary, sort_keys=True, indent=2) + "\n"
