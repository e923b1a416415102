"""Random scenarios satisfying a theorem's hypotheses.

Draws are constructive (sorted vectors for cone membership, order-preserving
Robin-Hood transfers for majorization, scaled transfers for weak
majorization) and every candidate is still re-checked with
:func:`evaluate_hypotheses`; candidates that fail are rejected.
"""

import numpy as np

from .. import archimedean
from ..errors import GenerationExhausted
from ..majorize import robin_hood
from ..rng import SplitMix64
from .theorems import (
    GENERATOR_PAIRS, H_FUNCS, OPPOSITE, RANGES, Scenario, _prod_ok, evaluate_hypotheses,
)

MAX_ATTEMPTS = 100_000


def _draw(stream, key, n, cone=None, hi=None):
    lo, top = RANGES[key]
    if hi is not None:
        top = min(top, hi)
    v = np.array([stream.uniform(lo, top) for _ in range(n)])
    if cone == "D+":
        return np.sort(v)[::-1].copy()
    if cone == "E+":
        return np.sort(v)
    return v


def _scaled_transfer(stream, v, lo, hi):
    return stream.uniform(lo, hi) * robin_hood(stream, v)


def _perturb(stream, spec, v, h=None):
    order = spec.order
    if order == "majorizes":
        return robin_hood(stream, v)
    if order == "weak_sub":
        return _scaled_transfer(stream, v, 0.5, 1.0)
    if order == "weak_super":
        return _scaled_transfer(stream, v, 1.0, 1.5)
    if order == "weak_sub_recip":
        return 1.0 / _scaled_transfer(stream, 1.0 / v, 0.5, 1.0)
    if order == "weak_sub_h":
        fwd, inv, _ = H_FUNCS[h]
        return inv(_scaled_transfer(stream, fwd(v), 0.5, 1.0))
    if order == "sum_ge":
        w = _draw(stream, spec.varied, v.size)
        return w * (stream.uniform(0.5, 1.0) * v.sum() / w.sum())
    raise ValueError(order)  # pragma: no cover


def _draw_params(spec, n, stream, generators):
    P = {}
    cone = stream.choice(("D+", "E+"))
    h = stream.choice(spec.h_choices) if spec.shock else None
    pmax = H_FUNCS[h][2] if h else None
    if spec.order == "block_majorizes":
        return _draw_blocks(spec, n, stream), None, None
    fixed = dict(spec.fixed)
    for key in ("alpha", "beta", "lam"):
        if key in spec.scalars:
            P[key] = stream.uniform(*RANGES[key])
        elif key in spec.cone:
            P[key] = _draw(stream, key, n, cone)
        else:
            P[key] = _draw(stream, key, n, fixed.get(key))
    if spec.shock:
        pc = OPPOSITE[cone] if "p" in spec.opposite else None
        P["p"] = _draw(stream, "p", n, pc, pmax)
        if spec.shock == "pair" and spec.varied != "p":
            P["p_s"] = _draw(stream, "p", n, None, pmax)
    v = spec.varied
    P[v + "_s"] = _perturb(stream, spec, P[v], h)
    if spec.prod_rule is not None:
        if not _prod_ok(spec.prod_rule, cone, P["p"], P["p_s"]):
            P["p"], P["p_s"] = P["p_s"], P["p"]
    gens = None
    if spec.copula:
        pair = stream.choice(generators or GENERATOR_PAIRS)
        gens = tuple(g if isinstance(g, archimedean.GeneratorSpec) else archimedean.from_dict(g) for g in pair)
    return P, gens, h


def _draw_blocks(spec, n, stream):
    n1 = stream.integers(1, n)
    a = np.array([stream.uniform(*RANGES["alpha"]) for _ in range(2)])
    b = np.sort([stream.uniform(*RANGES["beta"]) for _ in range(2)])[::-1]
    lam = np.array([stream.uniform(*RANGES["lam"]) for _ in range(2)])
    if "alpha_desc" in spec.block_rules:
        a = np.sort(a)[::-1]
    blocks = {"alpha": a, "beta": b, "lam": lam}
    v = blocks[spec.varied]
    mu = (n1 * v[0] + (n - n1) * v[1]) / n
    t = stream.random()
    blocks[spec.varied + "_s"] = v + t * (mu - v)
    P = {k: np.repeat(val, [n1, n - n1]) for k, val in blocks.items()}
    P["n1"] = n1
    return P


def gen_scenario(spec, n, seed, generators=None, max_attempts=MAX_ATTEMPTS, predicate_cache=None):
    """Draw a scenario for ``spec`` with ``n`` members per sample.

    Deterministic in ``(spec.id, n, seed)``. ``generators`` overrides the
    copula pairs offered to dependent-regime theorems. Raises
    :class:`GenerationExhausted` after ``max_attempts`` rejections.
    """
    if not 2 <= n <= 8:
        raise ValueError("n must lie in [2, 8]")
    stream = SplitMix64(seed)
    failing = []
    for _ in range(max_attempts):
        P, gens, h = _draw_params(spec, n, stream, generators)
        scn = Scenario(spec.id, n, P, gens, h)
        hyps = evaluate_hypotheses(spec, scn, predicate_cache)
        if all(hyps.values()):
            return scn
        failing = [k for k, ok in hyps.items() if not ok]
    raise GenerationExhausted(spec.id, max_attempts, failing)
