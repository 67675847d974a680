"""Gauss hypergeometric series 2F1 for complex parameters and real argument in [0, 1).

The only special function the closed-form solutions need.  Evaluation is the
raw power series

    sum_n  (alpha)_n (beta)_n / ((gamma_c)_n n!) * z**n

summed in ascending order with compensated (Kahan) accumulation of the real
and imaginary parts.  Screening parameters feeding this module are capped at
0.95 upstream, so convergence is geometric; no analytic continuation is
attempted.  When the float pass shows heavy cancellation (oscillatory terms
much larger than the final sum) the same series is re-summed in mpmath
arbitrary precision so the returned double is still accurate.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import mpmath

from .errors import InvalidParameter, NonConvergence

ABS_FLOOR = 1e-300
_INT_DETECT_TOL = 1e-12
# Escalate to arbitrary precision once the largest term exceeds the final
# sum by this factor (i.e. more than ~4 digits were cancelled away).
_CANCEL_RATIO = 1e4
_MAX_DPS = 300


@dataclass(frozen=True)
class SeriesConfig:
    """Convergence control for the power-series evaluation."""

    rel_tol: float = 1e-14
    max_terms: int = 100_000

    def __post_init__(self) -> None:
        if not self.rel_tol > 0.0:
            raise InvalidParameter(f"rel_tol must be positive, got {self.rel_tol}")
        if self.max_terms < 1:
            raise InvalidParameter(f"max_terms must be >= 1, got {self.max_terms}")


DEFAULT_SERIES = SeriesConfig()


def _is_nonpositive_integer(c: complex) -> bool:
    r = round(c.real)
    return abs(c.imag) < _INT_DETECT_TOL and abs(c.real - r) < _INT_DETECT_TOL and r <= 0


def _validate(gamma_c: complex, z: float) -> None:
    if not 0.0 <= z < 1.0:
        raise InvalidParameter(f"series argument must lie in [0, 1), got {z}")
    if _is_nonpositive_integer(gamma_c):
        raise InvalidParameter(
            f"lower parameter {gamma_c} is a non-positive integer; series undefined"
        )


def _series_float(
    alpha: complex, beta: complex, gamma_c: complex, z: float,
    rel_tol: float, max_terms: int,
) -> tuple[complex, float, bool]:
    """One double-precision pass: (value, peak term magnitude, converged)."""
    s_re, s_im = 1.0, 0.0
    comp_re = comp_im = 0.0
    term = 1.0 + 0.0j
    peak = 1.0
    streak = 0
    for n in range(max_terms):
        term = term * ((alpha + n) * (beta + n)) / ((gamma_c + n) * (n + 1)) * z
        mag = abs(term)
        if mag > peak:
            peak = mag
        y = term.real - comp_re
        t = s_re + y
        comp_re = (t - s_re) - y
        s_re = t
        y = term.imag - comp_im
        t = s_im + y
        comp_im = (t - s_im) - y
        s_im = t
        threshold = rel_tol * math.hypot(s_re, s_im)
        if threshold < ABS_FLOOR:
            threshold = ABS_FLOOR
        # Two consecutive sub-threshold terms guard against a single term
        # transiting near zero while the tail is still significant.
        if mag <= threshold:
            streak += 1
            if streak >= 2:
                return complex(s_re, s_im), peak, True
        else:
            streak = 0
    return complex(s_re, s_im), peak, False


def _series_mp(
    alpha: complex, beta: complex, gamma_c: complex, z: float,
    rel_tol: float, max_terms: int, dps: int,
) -> complex:
    """Re-sum the identical series at `dps` working digits, raising the
    precision until the observed cancellation is covered."""
    while True:
        with mpmath.workdps(dps):
            aa, bb, cc = mpmath.mpc(alpha), mpmath.mpc(beta), mpmath.mpc(gamma_c)
            zz = mpmath.mpf(z)
            s = mpmath.mpc(1)
            term = mpmath.mpc(1)
            peak = mpmath.mpf(1)
            streak = 0
            converged = False
            for n in range(max_terms):
                term = term * (aa + n) * (bb + n) / ((cc + n) * (n + 1)) * zz
                mag = abs(term)
                if mag > peak:
                    peak = mag
                s += term
                threshold = rel_tol * abs(s) + ABS_FLOOR
                if mag <= threshold:
                    streak += 1
                    if streak >= 2:
                        converged = True
                        break
                else:
                    streak = 0
            if not converged:
                raise NonConvergence(
                    f"series did not converge within {max_terms} terms (z={z})"
                )
            scale = abs(s)
            lost = mpmath.log10(peak / scale) if scale > 0 else mpmath.mpf(0)
            needed = int(lost) + 20
        if dps >= needed:
            return complex(s)
        if needed > _MAX_DPS:
            raise NonConvergence(
                f"cancellation exceeds {_MAX_DPS} working digits (z={z})"
            )
        dps = needed + 5


def hyp2f1(
    alpha: complex, beta: complex, gamma_c: complex, z: float,
    cfg: SeriesConfig | None = None,
) -> complex:
    """Evaluate 2F1(alpha, beta; gamma_c; z) for real z in [0, 1).

    Converged so the last added term has magnitude at most
    ``cfg.rel_tol`` times the partial sum (with a 1e-300 absolute floor
    for near-zero sums).

    Raises
    ------
    InvalidParameter
        If z is outside [0, 1) or gamma_c is a non-positive integer.
    NonConvergence
        If ``cfg.max_terms`` terms do not reach the tolerance.
    """
    if cfg is None:
        cfg = DEFAULT_SERIES
    alpha = complex(alpha)
    beta = complex(beta)
    gamma_c = complex(gamma_c)
    z = float(z)
    _validate(gamma_c, z)
    if z == 0.0:
        return 1.0 + 0.0j
    value, peak, ok = _series_float(alpha, beta, gamma_c, z, cfg.rel_tol, cfg.max_terms)
    if not ok:
        raise NonConvergence(
            f"series did not converge within {cfg.max_terms} terms (z={z})"
        )
    scale = max(abs(value), ABS_FLOOR)
    if math.isfinite(peak) and peak / scale <= _CANCEL_RATIO:
        return value
    lost = math.log10(peak / scale) if math.isfinite(peak) else 40.0
    return _series_mp(alpha, beta, gamma_c, z, cfg.rel_tol, cfg.max_terms,
                      dps=int(lost) + 25)


def hyp2f1_derivative(
    alpha: complex, beta: complex, gamma_c: complex, z: float,
    cfg: SeriesConfig | None = None,
) -> complex:
    """d/dz 2F1 via the contiguous identity
    (alpha*beta/gamma_c) * 2F1(alpha+1, beta+1; gamma_c+1; z)."""
    alpha = complex(alpha)
    beta = complex(beta)
    gamma_c = complex(gamma_c)
    _validate(gamma_c, float(z))
    factor = alpha * beta / gamma_c
    return factor * hyp2f1(alpha + 1, beta + 1, gamma_c + 1, z, cfg)
