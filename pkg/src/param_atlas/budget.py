"""Enumeration budget shared by the finite-field search routines."""

from __future__ import annotations

import os

DEFAULT_BUDGET = 10_000_000
ENV_VAR = "PARAM_ATLAS_BUDGET"


class BudgetExceededError(RuntimeError):
    def __init__(self, required: int, allowed: int, what: str):
        super().__init__(
            f"{what} needs {required} candidates, budget is {allowed} "
            f"(raise via --budget or {ENV_VAR})")
        self.required = required
        self.allowed = allowed


def current_budget(override: int | None = None) -> int:
    if override is not None:
        return override
    env = os.environ.get(ENV_VAR)
    if env:
        return int(env)
    return DEFAULT_BUDGET


def check_budget(required: int, what: str, override: int | None = None) -> None:
    allowed = current_budget(override)
    if required > allowed:
        raise BudgetExceededError(required, allowed, what)
