"""Asymmetric Hulthen potential: parameter validation, point evaluation, profiles.

The potential is exponential on both sides of the origin with independent
range parameters (a left, b right) and screening parameters (q left,
q_tilde right):

    V(x) = s * V0 * e^{ a x} / (1 - q       e^{ a x})   for x < 0
    V(x) = s * V0 * e^{-b x} / (1 - q_tilde e^{-b x})   for x >= 0

with s = +1 in barrier mode and s = -1 in well mode.  Both branches decay
to zero at large |x|; at x = 0 the right branch is used (Heaviside
convention theta(0) = 1), so V jumps by V0*|1/(1-q) - 1/(1-q_tilde)| when
the screenings differ.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .errors import InvalidGrid, InvalidParameter

# Cap on the screening parameters: keeps the hypergeometric series fast and
# the 1/(1-q) matching prefactors bounded.
SCREENING_CAP = 0.95


class Mode(str, Enum):
    BARRIER = "barrier"
    WELL = "well"


@dataclass(frozen=True)
class PotentialParams:
    """Physical parameters, atomic units (hbar = 1)."""

    m: float = 1.0
    a: float = 0.5
    b: float = 0.5
    q: float = 0.5
    q_tilde: float = 0.5
    v0: float = 1.0
    mode: Mode = Mode.BARRIER

    def __post_init__(self) -> None:
        for name in ("m", "a", "b", "q", "q_tilde", "v0"):
            value = getattr(self, name)
            if not (isinstance(value, (int, float)) and math.isfinite(value)):
                raise InvalidParameter(f"{name} must be a finite number, got {value!r}")
        if self.m <= 0:
            raise InvalidParameter(f"mass must be positive, got {self.m}")
        if self.a <= 0 or self.b <= 0:
            raise InvalidParameter(
                f"range parameters must be positive, got a={self.a}, b={self.b}"
            )
        if self.v0 < 0:
            raise InvalidParameter(f"strength v0 must be >= 0, got {self.v0}")
        for name, value in (("q", self.q), ("q_tilde", self.q_tilde)):
            if not 0.0 < value <= SCREENING_CAP:
                raise InvalidParameter(
                    f"{name} must lie in (0, {SCREENING_CAP}], got {value}"
                )
        if not isinstance(self.mode, Mode):
            raise InvalidParameter(f"mode must be a Mode member, got {self.mode!r}")

    @property
    def sign(self) -> float:
        return 1.0 if self.mode is Mode.BARRIER else -1.0


def eval_potential(p: PotentialParams, x: float) -> float:
    """V(x); the right branch applies at x = 0."""
    if x < 0.0:
        u = math.exp(p.a * x)
        return p.sign * p.v0 * u / (1.0 - p.q * u)
    w = math.exp(-p.b * x)
    return p.sign * p.v0 * w / (1.0 - p.q_tilde * w)


def left_branch(p: PotentialParams, x: np.ndarray | float) -> np.ndarray | float:
    """Left-side analytic branch, valid for x <= 0 (limit value at 0)."""
    u = np.exp(p.a * np.asarray(x, dtype=float))
    return p.sign * p.v0 * u / (1.0 - p.q * u)


def right_branch(p: PotentialParams, x: np.ndarray | float) -> np.ndarray | float:
    """Right-side analytic branch, valid for x >= 0 (limit value at 0)."""
    w = np.exp(-p.b * np.asarray(x, dtype=float))
    return p.sign * p.v0 * w / (1.0 - p.q_tilde * w)


def potential_grid(p: PotentialParams, x: np.ndarray) -> np.ndarray:
    """Vectorized V over an arbitrary grid (right branch at x = 0)."""
    x = np.asarray(x, dtype=float)
    out = np.empty_like(x)
    neg = x < 0.0
    out[neg] = left_branch(p, x[neg])
    out[~neg] = right_branch(p, x[~neg])
    return out


def profile(
    p: PotentialParams, x_min: float, x_max: float, n: int
) -> list[tuple[float, float]]:
    """n uniformly spaced (x, V(x)) samples, endpoints included."""
    if n < 2:
        raise InvalidGrid(f"profile needs at least 2 samples, got {n}")
    if not x_min < x_max:
        raise InvalidGrid(f"empty range [{x_min}, {x_max}]")
    xs = np.linspace(x_min, x_max, n)
    return [(float(x), eval_potential(p, float(x))) for x in xs]
