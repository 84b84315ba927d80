"""Loop contours in the t-plane and certified monodromy of one loop.

The value plane has punctures 0, 1 and infinity.  Loops are based at a
real point between 0 and 1: the finite loops walk along the real axis to
a small circle around their puncture, the infinity loop climbs straight
up to a large circle.  Tracking continues the coefficient branch and the
five quintic roots along the polyline; at the end the roots are rescaled
by the exact fourth root of unity that returns the coefficient to its
base value, and matched to the initial roots, which is the loop's
permutation.

The inner continuation loop is the package's one hot kernel.  A compiled
version is used when available; set BRINGCOVER_PURE=1 to force the
pure-Python twin.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass, replace

from . import _tracking_py
from ._tracking_py import TrackingError
from .quintic import b_from_t, roots5

if os.environ.get("BRINGCOVER_PURE"):
    _backend = _tracking_py
else:
    try:
        from . import _tracking_c as _backend
    except ImportError:
        _backend = _tracking_py


def kernel_name() -> str:
    return "compiled" if _backend.__name__.endswith("_c") else "pure-python"


def available_backends() -> dict:
    out = {"pure-python": _tracking_py}
    try:
        from . import _tracking_c

        out["compiled"] = _tracking_c
    except ImportError:
        pass
    return out


@dataclass(frozen=True)
class TrackingConfig:
    base_t: float = 0.5
    branch: int = 0
    radius0: float = 0.25
    radius1: float = 0.25
    radius_inf: float = 8.0
    steps: int = 1024
    tol_residual: float = 1e-10
    tol_match_ratio: float = 3.0
    tol_lambda: float = 1e-8
    # a loop may spend at most budget_factor * (waypoint count) certified
    # steps; halvings beyond that mean the requested resolution is too
    # coarse and the loop fails rather than silently degrading
    max_depth: int = 40
    budget_factor: float = 1.05
    seed: int = 0

    def as_dict(self) -> dict:
        return {
            "base_t": self.base_t,
            "branch": self.branch,
            "radius0": self.radius0,
            "radius1": self.radius1,
            "radius_inf": self.radius_inf,
            "steps": self.steps,
            "tol_residual": self.tol_residual,
            "tol_match_ratio": self.tol_match_ratio,
            "tol_lambda": self.tol_lambda,
            "seed": self.seed,
        }

    def with_steps(self, steps: int) -> "TrackingConfig":
        return replace(self, steps=steps)


@dataclass(frozen=True)
class LoopSpec:
    puncture: object            # 0, 1 or "inf"
    base_t: complex
    radius: float
    steps: int
    direction: str = "ccw"

    def __post_init__(self):
        if self.puncture not in (0, 1, "inf"):
            raise ValueError(f"unknown puncture {self.puncture!r}")
        if self.base_t in (0, 1):
            raise ValueError("base point must avoid the punctures")
        if self.direction not in ("ccw", "cw"):
            raise ValueError("direction must be 'ccw' or 'cw'")
        if self.steps < 4:
            raise ValueError("need at least 4 steps on the circle")


def loop_spec(cfg: TrackingConfig, puncture) -> LoopSpec:
    radius = {0: cfg.radius0, 1: cfg.radius1, "inf": cfg.radius_inf}[puncture]
    return LoopSpec(puncture=puncture, base_t=complex(cfg.base_t),
                    radius=radius, steps=cfg.steps)


def contour(spec: LoopSpec) -> list:
    """Waypoints of the loop: tail out, full circle, tail back."""
    t0 = complex(spec.base_t)
    if spec.puncture == "inf":
        if abs(t0) >= spec.radius:
            raise ValueError("infinity loop must enclose the base point")
        center = 0j
        entry = complex(t0.real,
                        math.sqrt(spec.radius**2 - t0.real**2))
    else:
        center = complex(spec.puncture)
        if abs(t0 - center) <= spec.radius:
            raise ValueError("finite loop must not swallow the base point")
        entry = center + spec.radius * (t0 - center) / abs(t0 - center)

    n_tail = max(8, spec.steps // 8)
    tail = [t0 + (entry - t0) * k / n_tail for k in range(n_tail + 1)]

    theta0 = math.atan2((entry - center).imag, (entry - center).real)
    sign = 1.0 if spec.direction == "ccw" else -1.0
    circle = [
        center + abs(entry - center)
        * complex(math.cos(theta0 + sign * 2 * math.pi * k / spec.steps),
                  math.sin(theta0 + sign * 2 * math.pi * k / spec.steps))
        for k in range(1, spec.steps + 1)
    ]
    return tail + circle + tail[-2::-1]


@dataclass(frozen=True)
class TrackResult:
    pi: tuple                 # degree-5 permutation: root j lands on pi[j]
    lam: complex              # raw ratio b_end / b_start
    lam_power: int            # lam is the lam_power-th power of i
    max_residual: float
    min_separation: float
    steps_used: int

    def diagnostics(self) -> dict:
        return {
            "lambda": [self.lam.real, self.lam.imag],
            "lambda_power_of_i": self.lam_power,
            "max_residual": self.max_residual,
            "min_separation": self.min_separation,
            "steps_used": self.steps_used,
        }


def base_fiber(cfg: TrackingConfig) -> tuple:
    """(b0, roots) over the base point; roots in deterministic order."""
    b0 = b_from_t(complex(cfg.base_t), cfg.branch)
    return b0, roots5(1.0, b0, tol=cfg.tol_residual)


def track_loop(spec: LoopSpec, cfg: TrackingConfig) -> TrackResult:
    """Track one loop and return its root permutation with diagnostics."""
    b0 = b_from_t(complex(spec.base_t), cfg.branch)
    xs0 = roots5(1.0, b0, tol=cfg.tol_residual)
    ts = contour(spec)
    budget = int(cfg.budget_factor * (len(ts) - 1))
    b_end, xs_end, max_residual, min_sep, steps_used = _backend.track_path(
        ts, b0, xs0, cfg.tol_residual, cfg.tol_match_ratio,
        cfg.max_depth, budget)

    lam = b_end / b0
    k_best = min(range(4), key=lambda k: abs(lam - 1j**k))
    if abs(lam - 1j**k_best) > cfg.tol_lambda:
        raise TrackingError(
            f"branch drift {lam} is not a fourth root of unity "
            f"within {cfg.tol_lambda}")
    mu = 1j ** (-k_best % 4)
    rescaled = [mu * x for x in xs_end]

    # nearest-point matching of the rescaled final roots to the initial ones
    pi = [None] * 5
    taken = set()
    for j, z in enumerate(rescaled):
        dists = sorted((abs(z - x), i) for i, x in enumerate(xs0))
        (d1, i1), (d2, _) = dists[0], dists[1]
        if d1 * cfg.tol_match_ratio > d2 or i1 in taken:
            raise TrackingError("final root matching ambiguous")
        taken.add(i1)
        pi[j] = i1
    return TrackResult(
        pi=tuple(pi),
        lam=lam,
        lam_power=k_best,
        max_residual=max_residual,
        min_separation=min_sep,
        steps_used=steps_used,
    )
