"""Frozen parameter sets for which no ordering holds in either direction."""

from dataclasses import dataclass

from ..extremes import from_vectors


@dataclass(frozen=True)
class CounterexampleSpec:
    id: str
    relation: str
    extreme: str
    x: dict
    y: dict
    expected: str = "VIOLATED"
    description: str = ""

    @property
    def curve_kind(self):
        from ..stochorder import curve_kind
        return curve_kind(self.relation, self.extreme)

    def populations(self):
        return (from_vectors(self.x["alpha"], self.x["beta"], self.x["lam"]),
                from_vectors(self.y["alpha"], self.y["beta"], self.y["lam"]))

    def to_dict(self):
        def enc(v):
            return list(v) if isinstance(v, tuple) else v
        return {
            "id": self.id,
            "relation": self.relation,
            "extreme": self.extreme,
            "expected": self.expected,
            "x": {k: enc(v) for k, v in self.x.items()},
            "y": {k: enc(v) for k, v in self.y.items()},
        }


def _ce(id, relation, extreme, x, y, description):
    return CounterexampleSpec(id, relation, extreme, x, y, description=description)


_ALL = (
    _ce("CE-MIN-LR-A", "lr", "min",
        {"alpha": (0.1, 20.0), "beta": (0.2, 0.1), "lam": (0.6, 0.5)},
        {"alpha": (2.1, 18.0), "beta": (0.2, 0.1), "lam": (0.6, 0.5)},
        "minima, alpha majorized, alpha in E+, beta in D+"),
    _ce("CE-MIN-LR-B", "lr", "min",
        {"alpha": (20.0, 0.1), "beta": (0.8, 0.2), "lam": (0.5, 0.6)},
        {"alpha": (20.0, 0.1), "beta": (0.7, 0.3), "lam": (0.5, 0.6)},
        "minima, beta majorized, alpha and beta in D+"),
    _ce("CE-MAX-ST-1", "st", "max",
        {"alpha": (0.2, 0.1), "beta": (2.0, 1.0), "lam": 0.6},
        {"alpha": (0.18, 0.12), "beta": (2.0, 1.0), "lam": 0.6},
        "maxima, alpha majorized, all in D+"),
    _ce("CE-MAX-ST-2", "st", "max",
        {"alpha": (0.1, 0.2), "beta": (1 / 2, 1.0), "lam": 0.02},
        {"alpha": (0.1, 0.2), "beta": (1 / 1.6, 1 / 1.4), "lam": 0.02},
        "maxima, reciprocal beta majorized, all in E+"),
    _ce("CE-MAX-RH-1", "rh", "max",
        {"alpha": (20.0, 0.1), "beta": 2.0, "lam": (0.6, 0.5)},
        {"alpha": (18.0, 2.1), "beta": 2.0, "lam": (0.6, 0.5)},
        "maxima, alpha majorized, common beta"),
    _ce("CE-MAX-RH-2", "rh", "max",
        {"alpha": (0.02, 0.01), "beta": 0.2, "lam": (0.07, 0.05)},
        {"alpha": (0.02, 0.01), "beta": 0.2, "lam": (0.06, 0.06)},
        "maxima, lambda majorized, common beta"),
    _ce("CE-MAX-RH-3", "rh", "max",
        {"alpha": 0.02, "beta": (0.2, 0.1), "lam": (0.07, 0.05)},
        {"alpha": 0.02, "beta": (0.2, 0.1), "lam": (0.06, 0.06)},
        "maxima, lambda majorized, common alpha"),
    _ce("CE-MAX-RH-4", "rh", "max",
        {"alpha": 0.02, "beta": (1 / 0.3, 1 / 0.1), "lam": (0.05, 0.07)},
        {"alpha": 0.02, "beta": (1 / 0.2, 1 / 0.2), "lam": (0.05, 0.07)},
        "maxima, reciprocal beta majorized, common alpha"),
)

COUNTEREXAMPLES = {ce.id: ce for ce in _ALL}
IDS = tuple(COUNTEREXAMPLES)
