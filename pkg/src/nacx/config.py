"""Enumeration budgets.  Environment overrides: NACX_MAX_ENUM, NACX_MAX_SCAN,
NACX_MAX_PAIRS (plain integers)."""

from __future__ import annotations

import os
from dataclasses import dataclass, field


def _env_int(name: str, default: int) -> int:
    raw = os.environ.get(name)
    if raw is None:
        return default
    value = int(raw)
    if value <= 0:
        raise ValueError(f"{name} must be positive")
    return value


@dataclass(frozen=True)
class Budget:
    max_enum: int = 1 << 20  # monic right-factor candidates, element sweeps
    max_scan: int = 1 << 16  # |A| for zero-divisor / right-division scans
    max_pairs: int = 1 << 24  # |D|^2 for the degree-4 criterion

    def __post_init__(self):
        for name in ("max_enum", "max_scan", "max_pairs"):
            if getattr(self, name) <= 0:
                raise ValueError(f"budget {name} must be positive")


def default_budget() -> Budget:
    return Budget(
        max_enum=_env_int("NACX_MAX_ENUM", Budget.max_enum),
        max_scan=_env_int("NACX_MAX_SCAN", Budget.max_scan),
        max_pairs=_env_int("NACX_MAX_PAIRS", Budget.max_pairs),
    )


@dataclass
class WorkspaceConfig:
    """Named presentations plus output location and budgets for a CLI run."""

    fields: dict = field(default_factory=dict)
    algebras: dict = field(default_factory=dict)
    towers: dict = field(default_factory=dict)
    output_dir: str = "."
    budget: Budget = field(default_factory=default_budget)
    seed: int = 0
