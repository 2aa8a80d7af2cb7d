from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any


@dataclass(frozen=True)
class CheckResult:
    """Outcome of one invariant check: ``value`` compared against ``tolerance``."""

    name: str
    passed: bool
    value: float
    tolerance: float
    details: dict[str, Any] = field(default_factory=dict)

    def as_dict(self) -> dict[str, Any]:
        return {
            "name": self.name,
            "passed": self.passed,
            "value": self.value,
            "tolerance": self.tolerance,
            "details": dict(self.details),
        }

    def summary(self) -> str:
        mark = "ok  " if self.passed else "FAIL"
        return f"{mark} {self.name}: {self.value:.3e} (tol {self.tolerance:.1e})"


@dataclass(frozen=True)
class CheckSuiteResult:
    results: tuple[CheckResult, ...]

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    @property
    def failures(self) -> tuple[CheckResult, ...]:
        return tuple(r for r in self.results if not r.passed)

    def as_dict(self) -> dict[str, Any]:
        return {"passed": self.passed, "checks": [r.as_dict() for r in self.results]}

    def summary(self) -> str:
        lines = [r.summary() for r in self.results]
        lines.append(f"{len(self.results) - len(self.failures)}/{len(self.results)} checks passed")
        return "\n".join(lines)


@dataclass(frozen=True)
class BenchmarkResult:
    """Timings of the direct and SOE-accelerated L1 history on one random walk."""

    alpha: float
    n_steps: int
    width: int
    tol: float
    n_modes: int
    direct_seconds: float
    soe_seconds: float
    max_rel_diff: float

    @property
    def speedup(self) -> float:
        return self.direct_seconds / self.soe_seconds if self.soe_seconds > 0.0 else float("inf")

    def as_dict(self) -> dict[str, Any]:
        return {
            "alpha": self.alpha,
            "n_steps": self.n_steps,
            "width": self.width,
            "tol": self.tol,
            "n_modes": self.n_modes,
            "direct_seconds": self.direct_seconds,
            "soe_seconds": self.soe_seconds,
            "speedup": self.speedup,
            "max_rel_diff": self.max_rel_diff,
        }

    def to_json(self) -> str:
        return json.dumps(self.as_dict(), sort_keys=True)


@dataclass(frozen=True)
class RunResult:
    """Files written by a CLI run and the final simulation time."""

    t_final: float
    n_steps: int
    series_path: Path
    snapshot_paths: tuple[Path, ...] = ()
    warnings: tuple[str, ...] = ()

    def as_dict(self) -> dict[str, Any]:
        return {
            "t_final": self.t_final,
            "n_steps": self.n_steps,
            "series_path": str(self.series_path),
            "snapshot_paths": [str(p) for p in self.snapshot_paths],
            "warnings": list(self.warnings),
        }

    def summary(self) -> str:
        lines = [f"run finished at t={self.t_final:.6g} after {self.n_steps} steps"]
        lines.append(f"series: {self.series_path}")
        if self.snapshot_paths:
            lines.append(f"snapshots: {len(self.snapshot_paths)}")
        if self.warnings:
            lines.append("warnings: " + "; ".join(self.warnings))
        return "\n".join(lines)


__all__ = ["BenchmarkResult", "CheckResult", "CheckSuiteResult", "RunResult"]
