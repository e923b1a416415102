"""Theorem registry, scenario generation and batch verification."""

from .counterexamples import COUNTEREXAMPLES, CounterexampleSpec
from .generate import gen_scenario
from .runner import (
    CounterexampleReport, TheoremReport, batch_verify, dumps, run_counterexample, run_theorem,
)
from .theorems import ALL_IDS, DEFAULT_IDS, REGISTRY, Scenario, TheoremSpec, get

__all__ = [
    "ALL_IDS", "COUNTEREXAMPLES", "CounterexampleReport", "CounterexampleSpec", "DEFAULT_IDS",
    "REGISTRY", "Scenario", "TheoremReport", "TheoremSpec", "batch_verify", "dumps", "gen_scenario",
    "get", "run_counterexample", "run_theorem",
]
