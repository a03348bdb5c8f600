"""Shared solver configuration."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


@dataclass(frozen=True)
class SolverConfig:
    max_depth: int = 24
    default_box_halfwidth: Fraction = Fraction(16)
    denominator_bound: int = 64
    lattice_radius: int = 16
    groebner_cap: int = 50000
    box_budget: int = 100000
    sphere_depth: int = 12
    threads: int = 1

    def __post_init__(self):
        for name in ("max_depth", "denominator_bound", "lattice_radius",
                     "groebner_cap", "box_budget", "sphere_depth", "threads"):
            if getattr(self, name) < (0 if name == "max_depth" else 1):
                raise ValueError(f"{name} must be positive")
        if self.default_box_halfwidth <= 0:
            raise ValueError("default_box_halfwidth must be positive")


DEFAULT_CONFIG = SolverConfig()
