"""Maximisation of B(t) over time and (f, g) parameter scans."""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass, field

import numpy as np

from .bell import BellTrace, MediatorState, bell_function, bell_series
from .hamiltonians import HamiltonianParams
from .tolerances import CLASSICAL_BOUND

INV_PHI = (math.sqrt(5.0) - 1.0) / 2.0

DEFAULT_T_MAX = 2.0 * math.pi
DEFAULT_T_STEPS = 629
DEFAULT_GRID_N = 41
REFINE_TOL = 1e-6

SWEEP_HEADER = ("f", "g", "max_B", "argmax_t")
TRACE_HEADER = ("t", "B")


def golden_section_max(fun, lo: float, hi: float, tol: float = REFINE_TOL):
    """Maximise a unimodal ``fun`` on ``[lo, hi]`` to an interval width ``tol``.

    Returns ``(x, fun(x))``.
    """
    c = hi - INV_PHI * (hi - lo)
    d = lo + INV_PHI * (hi - lo)
    fc, fd = fun(c), fun(d)
    while hi - lo > tol:
        if fc >= fd:
            hi, d, fd = d, c, fc
            c = hi - INV_PHI * (hi - lo)
            fc = fun(c)
        else:
            lo, c, fc = c, d, fd
            d = lo + INV_PHI * (hi - lo)
            fd = fun(d)
    return (c, fc) if fc >= fd else (d, fd)


def max_over_time(
    p: HamiltonianParams,
    state: MediatorState,
    t_max: float = DEFAULT_T_MAX,
    t_steps: int = DEFAULT_T_STEPS,
    method: str = "numeric",
    tol: float = REFINE_TOL,
) -> tuple[float, float]:
    """``max_t B(t)`` on ``[0, t_max]``: grid scan, then golden-section polish.

    The polish is bracketed by the neighbours of the best grid sample and is
    only kept if it improves on that sample, so the result never falls below
    the coarse maximum. Ties on the grid resolve to the earliest time.
    """
    if t_steps < 2:
        raise ValueError(f"t_steps must be >= 2, got {t_steps}")
    if not t_max > 0:
        raise ValueError(f"t_max must be positive, got {t_max}")
    times = np.linspace(0.0, t_max, t_steps)
    values = bell_series(p, state, times, method)
    i = int(np.argmax(values))
    best_t, best = float(times[i]), float(values[i])

    lo, hi = times[max(i - 1, 0)], times[min(i + 1, t_steps - 1)]
    t_ref, v_ref = golden_section_max(bell_function(p, state, method), float(lo), float(hi), tol)
    if v_ref > best:
        best_t, best = float(t_ref), float(v_ref)
    return best, best_t


def trace_curve(
    p: HamiltonianParams,
    state: MediatorState,
    t_max: float = DEFAULT_T_MAX,
    t_steps: int = 200,
    method: str = "numeric",
) -> BellTrace:
    if t_steps < 2:
        raise ValueError(f"t_steps must be >= 2, got {t_steps}")
    times = np.linspace(0.0, t_max, t_steps)
    return BellTrace.from_values(p, state, times, bell_series(p, state, times, method))


@dataclass(frozen=True)
class SweepConfig:
    """Scan over ``(f, g)`` with the other couplings held fixed.

    Defaults reproduce the contour scan: ``a = b = 0``, ``c = 1``, mediator in
    the +y eigenstate, ``f, g`` in ``[-2, 2]``.
    """

    f_range: tuple = (-2.0, 2.0)
    g_range: tuple = (-2.0, 2.0)
    grid_n: int = DEFAULT_GRID_N
    t_max: float = DEFAULT_T_MAX
    t_steps: int = DEFAULT_T_STEPS
    a: float = 0.0
    b: float = 0.0
    c: float = 1.0
    r: float = 0.0
    state: MediatorState = field(default_factory=lambda: MediatorState(beta=1.0))
    method: str = "numeric"

    def __post_init__(self):
        if self.grid_n < 2:
            raise ValueError(f"grid_n must be >= 2, got {self.grid_n}")
        if self.t_steps < 2:
            raise ValueError(f"t_steps must be >= 2, got {self.t_steps}")
        if not self.t_max > 0:
            raise ValueError(f"t_max must be positive, got {self.t_max}")
        for name in ("f_range", "g_range"):
            lo, hi = getattr(self, name)
            if not lo <= hi:
                raise ValueError(f"{name} must be an interval lo <= hi, got {(lo, hi)}")
            object.__setattr__(self, name, (float(lo), float(hi)))

    def params(self, f: float, g: float) -> HamiltonianParams:
        return HamiltonianParams(self.a, self.b, self.c, f, g, self.r)

    def axes(self) -> tuple[np.ndarray, np.ndarray]:
        return (
            np.linspace(*self.f_range, self.grid_n),
            np.linspace(*self.g_range, self.grid_n),
        )

    def as_dict(self) -> dict:
        d = asdict(self)
        d["f_range"], d["g_range"] = list(self.f_range), list(self.g_range)
        return d


@dataclass(frozen=True)
class SweepResult:
    config: SweepConfig
    f: np.ndarray
    g: np.ndarray
    max_b: np.ndarray
    argmax_t: np.ndarray

    @property
    def violation_fraction(self) -> float:
        return float(np.mean(self.max_b > CLASSICAL_BOUND))

    @property
    def global_max(self) -> dict:
        i = int(np.argmax(self.max_b))
        return {
            "max_B": float(self.max_b[i]),
            "f": float(self.f[i]),
            "g": float(self.g[i]),
            "t": float(self.argmax_t[i]),
        }

    def rows(self) -> list[tuple]:
        return list(zip(self.f.tolist(), self.g.tolist(), self.max_b.tolist(), self.argmax_t.tolist()))

    def summary(self) -> dict:
        return {
            "config": self.config.as_dict(),
            "grid_points": int(self.max_b.size),
            "global_max": self.global_max,
            "violation_fraction": self.violation_fraction,
            "classical_bound": CLASSICAL_BOUND,
        }


def run_sweep(cfg: SweepConfig, threads: int = 1) -> SweepResult:
    """Evaluate ``max_over_time`` on every grid point, ordered by (f index, g index)."""
    f_axis, g_axis = cfg.axes()
    points = [(f, g) for f in f_axis for g in g_axis]

    def evaluate(fg):
        return max_over_time(cfg.params(*fg), cfg.state, cfg.t_max, cfg.t_steps, cfg.method)

    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(evaluate, points))
    else:
        results = [evaluate(fg) for fg in points]

    pts = np.array(points, dtype=float)
    res = np.array(results, dtype=float)
    return SweepResult(cfg, pts[:, 0], pts[:, 1], res[:, 0], res[:, 1])
