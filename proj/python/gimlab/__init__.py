"""Exact computations for images of the GIM Lie algebra of type M_n."""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Iterable, Sequence

from . import _core
from ._core import UsageError

__all__ = [
    "JobResult",
    "UsageError",
    "run",
    "mn",
    "check_hom",
    "image",
    "classify",
    "loop_identities",
    "quotient",
    "lie_closure",
    "classify_block",
    "reproduce",
]

Matrix = Sequence[Sequence[Any]]


@dataclass(frozen=True)
class JobResult:
    exit_code: int
    report: dict

    @property
    def passed(self) -> bool:
        return self.exit_code == 0


def _rat(x) -> str:
    return str(Fraction(x))


def _grid(m: Matrix) -> list[list[str]]:
    return [[_rat(x) for x in row] for row in m]


def _fractions(grid) -> list[list[Fraction]]:
    return [[Fraction(x) for x in row] for row in grid]


def run(command: str, *, cache_dir: str = "", **params) -> JobResult:
    """Runs one job. Parameters mirror the CLI: n, a, target, variant, mode."""
    spec: dict[str, Any] = {"command": command}
    for key, value in params.items():
        if value is None:
            continue
        spec[key] = [_rat(x) for x in value] if key == "a" else value
    code, report = _core.run_job(json.dumps(spec), cache_dir)
    result = JobResult(code, json.loads(report))
    if code == 2:
        raise UsageError(result.report.get("error", "usage error"))
    return result


def mn(n: int) -> JobResult:
    return run("mn", n=n)


def check_hom(n: int, a: Iterable = (), target: str = "psi", variant: str = "plus") -> JobResult:
    return run("check-hom", n=n, a=list(a), target=target, variant=variant)


def image(n: int, a: Iterable = (), target: str = "psi", variant: str = "plus") -> JobResult:
    return run("image", n=n, a=list(a), target=target, variant=variant)


def classify(n: int, a: Iterable = (), target: str = "psi", variant: str = "plus",
             mode: str | None = None) -> JobResult:
    return run("classify", n=n, a=list(a), target=target, variant=variant, mode=mode)


def loop_identities(n: int) -> JobResult:
    return run("loop-identities", n=n)


def quotient(roots: Iterable, n: int = 3) -> JobResult:
    return run("quotient", n=n, a=list(roots))


def lie_closure(generators: Iterable[Matrix]) -> list[list[list[Fraction]]]:
    """Basis (reduced echelon order) of the Lie algebra the matrices generate."""
    return [_fractions(b) for b in _core.lie_closure([_grid(g) for g in generators])]


def classify_block(generators: Iterable[Matrix], n: int) -> dict:
    """Verdict for the closure of 2n x 2n generators: SL, SP, SO or UNKNOWN."""
    return json.loads(_core.classify_block([_grid(g) for g in generators], n))


def reproduce(n_values: Iterable[int], out_dir: str, cache_dir: str = "") -> tuple[int, str]:
    """Full verification table; returns (exit code, summary markdown)."""
    return _core.reproduce(list(n_values), str(out_dir), cache_dir)
