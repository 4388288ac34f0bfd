"""Two-sided identity checks over seeded low-discrepancy samples.

A case pairs two evaluators ``lhs(pt, p)`` and ``rhs(pt, p)`` with a sample
box; ``run_case`` evaluates both on every sample and reports the relative
residual ``|l - r| / (|l| + |r| + 1)``.

Ladder cases instead walk ``τ = iT`` down a fixed ladder for each ``a`` in
the box and compare ``|lhs/rhs - 1|``; they pass when the deviation
decreases strictly along the ladder and is below tolerance on the last rung.
"""
from __future__ import annotations

import fnmatch
import json
import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field, replace
from typing import Callable, Iterable, Sequence

import numpy as np
from scipy.stats import qmc

from .base import DEFAULT_PARAMS, CaseAborted, EvalParams, MockCharError, PoleError

Evaluator = Callable[["EvalPoint", EvalParams], complex]
PairEvaluator = Callable[["EvalPoint", EvalParams], tuple[complex, complex]]

DEFAULT_TOL = 1e-8
DEFAULT_SAMPLES = 100
DEFAULT_SEED = 1
ABORT_FRACTION = 0.2
MIN_EVALUATED_FRACTION = 0.8
# deviations below this are rounding noise; a ladder may stall there
LADDER_FLOOR = 1e-13


def format_complex(value: complex) -> str:
    """``a+bi`` with no spaces, e.g. ``0.25-1.5i``."""
    value = complex(value)
    return f"{value.real!r}{'+' if value.imag >= 0 or math.isnan(value.imag) else '-'}{abs(value.imag)!r}i"


def parse_complex(text: str) -> complex:
    """Inverse of ``format_complex``; also accepts plain reals and ``j``."""
    s = text.strip().replace(" ", "")
    if not s:
        raise ValueError("empty complex literal")
    s = s.replace("I", "i")
    if s.endswith("i"):
        s = s[:-1] + "j"
        # "0+i" / "-i" shorthand
        if s[-2:] in ("+j", "-j") or s == "j":
            s = s[:-1] + "1j"
    return complex(s)


@dataclass(frozen=True)
class EvalPoint:
    tau: complex
    z: complex = 0j
    aux: dict = field(default_factory=dict)

    def __getitem__(self, key):
        return self.aux[key]

    def as_dict(self) -> dict:
        def enc(v):
            if isinstance(v, complex):
                return format_complex(v)
            if isinstance(v, (np.floating,)):
                return float(v)
            if isinstance(v, (np.integer,)):
                return int(v)
            return v if isinstance(v, (int, float, str, bool)) or v is None else str(v)

        return {
            "tau": format_complex(self.tau),
            "z": format_complex(self.z),
            "aux": {k: enc(v) for k, v in sorted(self.aux.items())},
        }


@dataclass(frozen=True)
class SampleBox:
    """Ranges for ``Re τ, Im τ, Re z, Im z``; ``aux`` maps names to a
    ``(lo, hi)`` real range or to a list of discrete choices."""

    re_tau: tuple[float, float] = (-0.5, 0.5)
    im_tau: tuple[float, float] = (0.5, 1.8)
    re_z: tuple[float, float] = (-0.5, 0.5)
    im_z: tuple[float, float] = (-0.25, 0.25)
    aux: dict = field(default_factory=dict)


@dataclass(frozen=True)
class IdentityCase:
    """One identity ``lhs == rhs``.

    Either give ``lhs`` and ``rhs`` separately or a ``pair`` evaluator that
    returns both sides from shared intermediate values.
    """

    id: str
    lhs: Evaluator | None = None
    rhs: Evaluator | None = None
    sample_box: SampleBox = SampleBox()
    n_samples: int = DEFAULT_SAMPLES
    tolerance: float = DEFAULT_TOL
    seed: int = DEFAULT_SEED
    tags: tuple[str, ...] = ()
    description: str = ""
    kind: str = "sampled"
    ladder: tuple[float, ...] = (0.2, 0.1, 0.05)
    pair: PairEvaluator | None = None

    def __post_init__(self):
        if self.pair is None and (self.lhs is None or self.rhs is None):
            raise ValueError(f"{self.id}: need lhs and rhs, or pair")
        if not self.tolerance > 0:
            raise ValueError(f"{self.id}: tolerance must be positive")
        if self.kind not in ("sampled", "ladder"):
            raise ValueError(f"{self.id}: unknown kind {self.kind!r}")
        if self.kind == "sampled":
            if self.sample_box.im_tau[0] < 0.3:
                raise ValueError(f"{self.id}: sample box must have Im tau >= 0.3")
            if self.n_samples < 10:
                raise ValueError(f"{self.id}: n_samples must be at least 10")
        elif list(self.ladder) != sorted(self.ladder, reverse=True):
            raise ValueError(f"{self.id}: ladder must be decreasing")

    @property
    def exploratory(self) -> bool:
        return "exploratory" in self.tags

    def sides(self, pt: EvalPoint, p: EvalParams = DEFAULT_PARAMS) -> tuple[complex, complex]:
        if self.pair is not None:
            lhs, rhs = self.pair(pt, p)
            return complex(lhs), complex(rhs)
        return complex(self.lhs(pt, p)), complex(self.rhs(pt, p))


@dataclass(frozen=True)
class IdentityReport:
    id: str
    n_samples: int
    n_evaluated: int
    n_skipped_pole: int
    max_rel_residual: float | None
    mean_rel_residual: float | None
    passed: bool
    worst_point: EvalPoint | None
    tolerance: float
    exploratory: bool = False
    error: str | None = None

    def as_dict(self) -> dict:
        return {
            "id": self.id,
            "pass": self.passed,
            "max_rel_residual": self.max_rel_residual,
            "mean_rel_residual": self.mean_rel_residual,
            "n_evaluated": self.n_evaluated,
            "n_skipped_pole": self.n_skipped_pole,
            "worst_point": self.worst_point.as_dict() if self.worst_point else None,
        }


def rel_residual(lhs: complex, rhs: complex) -> float:
    return abs(lhs - rhs) / (abs(lhs) + abs(rhs) + 1)


def resolve_threads(threads: int | None = None) -> int:
    """Worker count: explicit value, else ``MOCKCHAR_THREADS`` (0 = auto)."""
    if threads is None:
        raw = os.environ.get("MOCKCHAR_THREADS", "0").strip() or "0"
        try:
            threads = int(raw)
        except ValueError:
            raise ValueError(f"MOCKCHAR_THREADS must be an integer, got {raw!r}") from None
    if threads < 0:
        raise ValueError("thread count must be non-negative")
    return threads or (os.cpu_count() or 1)


# --- sampling -----------------------------------------------------------------


def sample_points(case: IdentityCase, seed: int | None = None, n: int | None = None) -> list[EvalPoint]:
    """Scrambled Halton points over the case's box (deterministic in ``seed``)."""
    if case.kind == "ladder":
        return _ladder_points(case)
    box = case.sample_box
    n = case.n_samples if n is None else n
    seed = case.seed if seed is None else seed
    names = sorted(box.aux)
    dims = 4 + len(names)
    u = qmc.Halton(d=dims, scramble=True, seed=seed).random(n)
    pts = []
    for row in u:
        lo_hi = (box.re_tau, box.im_tau, box.re_z, box.im_z)
        re_t, im_t, re_z, im_z = (lo + (hi - lo) * float(x) for (lo, hi), x in zip(lo_hi, row[:4]))
        aux = {}
        for name, x in zip(names, row[4:]):
            spec = box.aux[name]
            if isinstance(spec, tuple):
                aux[name] = spec[0] + (spec[1] - spec[0]) * float(x)
            else:
                aux[name] = spec[min(int(float(x) * len(spec)), len(spec) - 1)]
        pts.append(EvalPoint(complex(re_t, im_t), complex(re_z, im_z), aux))
    return pts


def _ladder_points(case: IdentityCase) -> list[EvalPoint]:
    chains = case.sample_box.aux.get("a", [0.0])
    pts = []
    for a in chains:
        for T in case.ladder:
            tau = 1j * T
            pts.append(EvalPoint(tau, a * tau, {"a": a, "T": T}))
    return pts


# --- running ------------------------------------------------------------------


def _evaluate(case: IdentityCase, pt: EvalPoint, p: EvalParams, lhs_scale: complex, rhs_scale: complex):
    try:
        lhs, rhs = case.sides(pt, p)
        return "ok", (lhs_scale * lhs, rhs_scale * rhs)
    except PoleError:
        return "pole", None
    except (MockCharError, ArithmeticError, ValueError, OverflowError) as exc:
        return "error", f"{type(exc).__name__}: {exc}"


def ladder_is_decreasing(devs: Sequence[float], floor: float = LADDER_FLOOR) -> bool:
    """Strict decrease, except that steps entirely below ``floor`` may stall."""
    return all(b < a or max(a, b) <= floor for a, b in zip(devs, devs[1:]))


def run_case(
    case: IdentityCase,
    p: EvalParams = DEFAULT_PARAMS,
    *,
    seed: int | None = None,
    n_samples: int | None = None,
    tolerance: float | None = None,
    threads: int | None = None,
    lhs_scale: complex = 1.0,
    rhs_scale: complex = 1.0,
) -> IdentityReport:
    """Evaluate one case.

    ``lhs_scale`` / ``rhs_scale`` multiply the two sides (defect injection).
    Raises ``CaseAborted`` when more than 20% of samples fail for reasons
    other than a pole.
    """
    tol = case.tolerance if tolerance is None else tolerance
    pts = sample_points(case, seed, n_samples)
    workers = min(resolve_threads(threads), len(pts))
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(lambda pt: _evaluate(case, pt, p, lhs_scale, rhs_scale), pts))
    else:
        results = [_evaluate(case, pt, p, lhs_scale, rhs_scale) for pt in pts]

    errors = [r for status, r in results if status == "error"]
    if len(errors) > ABORT_FRACTION * len(pts):
        raise CaseAborted(f"{case.id}: {len(errors)}/{len(pts)} samples failed; first: {errors[0]}")
    n_pole = sum(status == "pole" for status, _ in results)
    ok = [(pt, r) for pt, (status, r) in zip(pts, results) if status == "ok"]

    if case.kind == "ladder":
        return _ladder_report(case, pts, results, tol, n_pole)

    if not ok:
        return IdentityReport(case.id, len(pts), 0, n_pole, None, None, False, None, tol, case.exploratory)
    res = [rel_residual(*lr) for _, lr in ok]
    worst = int(np.argmax(res))
    max_res = float(res[worst])
    passed = max_res < tol and len(ok) >= MIN_EVALUATED_FRACTION * len(pts)
    return IdentityReport(
        case.id, len(pts), len(ok), n_pole, max_res, math.fsum(res) / len(res),
        bool(passed), ok[worst][0], tol, case.exploratory,
    )


def _ladder_report(case, pts, results, tol, n_pole) -> IdentityReport:
    rungs = len(case.ladder)
    worst_res, worst_pt, all_devs, complete = -1.0, None, [], True
    for start in range(0, len(pts), rungs):
        chain = results[start:start + rungs]
        if any(status != "ok" for status, _ in chain):
            complete = False
            continue
        devs = [abs(l / r - 1) if r != 0 else math.inf for l, r in (v for _, v in chain)]
        all_devs.extend(devs)
        # a stalled or rising ladder counts as a full-size residual
        chain_res = devs[-1] if ladder_is_decreasing(devs) else max(1.0, max(devs))
        if chain_res > worst_res:
            worst_res, worst_pt = chain_res, pts[start + rungs - 1]
    n_ok = sum(status == "ok" for status, _ in results)
    if not all_devs:
        return IdentityReport(case.id, len(pts), n_ok, n_pole, None, None, False, None, tol, case.exploratory)
    passed = complete and worst_res < tol
    return IdentityReport(
        case.id, len(pts), n_ok, n_pole, float(worst_res), math.fsum(all_devs) / len(all_devs),
        bool(passed), worst_pt, tol, case.exploratory,
    )


# --- suites ---------------------------------------------------------------------


def select_cases(cases: Iterable[IdentityCase], pattern: str | None) -> list[IdentityCase]:
    """``all`` (or empty) selects everything; otherwise comma-separated globs
    matched against ids and tags."""
    cases = list(cases)
    if not pattern or pattern.strip() == "all":
        return cases
    globs = [g.strip() for g in pattern.split(",") if g.strip()]
    return [
        c for c in cases
        if any(fnmatch.fnmatchcase(c.id, g) or any(fnmatch.fnmatchcase(t, g) for t in c.tags) for g in globs)
    ]


@dataclass
class SuiteResult:
    suite: str
    reports: list[IdentityReport]
    params: dict

    @property
    def status(self) -> int:
        """0 unless a non-exploratory case failed."""
        return int(any(not r.passed and not r.exploratory for r in self.reports))

    def as_dict(self) -> dict:
        return {
            "suite": self.suite,
            "params": self.params,
            "cases": [r.as_dict() for r in self.reports],
        }

    def to_json(self) -> str:
        return json.dumps(self.as_dict(), indent=2, allow_nan=False)


CSV_COLUMNS = ("id", "pass", "max_rel_residual", "mean_rel_residual", "n_evaluated", "n_skipped_pole", "tau", "z")


def run_suite(
    cases: Iterable[IdentityCase],
    pattern: str | None = "all",
    p: EvalParams = DEFAULT_PARAMS,
    *,
    seed: int | None = None,
    n_samples: int | None = None,
    tolerance: float | None = None,
    threads: int | None = None,
) -> SuiteResult:
    """Run every selected case in id order; aborted cases are reported as failures."""
    chosen = sorted(select_cases(cases, pattern), key=lambda c: c.id)
    reports = []
    for case in chosen:
        try:
            reports.append(run_case(case, p, seed=seed, n_samples=n_samples, tolerance=tolerance, threads=threads))
        except CaseAborted as exc:
            tol = case.tolerance if tolerance is None else tolerance
            reports.append(IdentityReport(case.id, 0, 0, 0, None, None, False, None, tol, case.exploratory, str(exc)))
    params = {
        "seed": seed if seed is not None else "per-case",
        "samples": n_samples if n_samples is not None else "per-case",
        "tolerance": tolerance if tolerance is not None else "per-case",
        "filter": pattern or "all",
        **p.as_dict(),
    }
    return SuiteResult(pattern or "all", reports, params)


def _row(r: IdentityReport) -> list[str]:
    wp = r.worst_point.as_dict() if r.worst_point else {"tau": "", "z": ""}
    fmt = lambda x: "" if x is None else f"{x:.3e}"  # noqa: E731
    return [r.id, "pass" if r.passed else "FAIL", fmt(r.max_rel_residual), fmt(r.mean_rel_residual),
            str(r.n_evaluated), str(r.n_skipped_pole), wp["tau"], wp["z"]]


def format_csv(result: SuiteResult) -> str:
    import csv
    import io

    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_COLUMNS)
    for r in result.reports:
        w.writerow(_row(r))
    return buf.getvalue()


def format_plain(result: SuiteResult) -> str:
    header = "# " + " ".join(f"{k}={v}" for k, v in result.params.items())
    rows = [list(CSV_COLUMNS[:6])] + [_row(r)[:6] for r in result.reports]
    widths = [max(len(row[i]) for row in rows) for i in range(6)]
    lines = [header] + ["  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip() for row in rows]
    n_fail = sum(not r.passed and not r.exploratory for r in result.reports)
    lines.append(f"# {len(result.reports)} cases, {n_fail} failing")
    return "\n".join(lines) + "\n"


def with_overrides(case: IdentityCase, **kw) -> IdentityCase:
    return replace(case, **kw)
