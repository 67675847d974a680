"""Direct Numerov integration used to cross-check every closed-form result.

Two independent routines:

* `transmit` integrates psi'' = 2m(V - E) psi from +L (pure outgoing wave)
  to -L and decomposes the field there into incoming/reflected plane waves.
* `shoot_bound` integrates decaying solutions inward from both ends and
  locates the energies where their logarithmic derivatives match at x = 0.
  The mismatch is evaluated in Wronskian form
  psi_L' psi_R - psi_L psi_R' (same zeros, no poles at nodes of psi).

The potential jumps at x = 0 when q != q_tilde.  A grid node is placed
exactly at the origin and each half-domain uses its own analytic branch;
`transmit` restarts the left sweep from (psi, psi') at 0 through a fourth
order Taylor seed, so no Numerov step ever straddles the discontinuity.
Endpoint derivatives come from five-point stencils, consistent with the
scheme's order.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np
from scipy.optimize import brentq

from .bound import EDGE_GUARD
from .errors import (DomainTooSmall, InvalidEnergy, InvalidParameter,
                     NoConvergence, StepTooLarge)
from .potential import Mode, PotentialParams, eval_potential, left_branch, right_branch

_TAIL_TOL = 1e-10
_RENORM_LIMIT = 1e100
_RENORM_EVERY = 2048


@dataclass(frozen=True)
class OracleConfig:
    """Discretization control.

    The domain is [-L, L] with L = half_width_factor / min(a, b); the step
    is additionally capped at 0.05 / k_char where k_char is the largest
    local wavenumber of the problem.
    """

    half_width_factor: float = 40.0
    step: float = 1e-3
    match_tol: float = 1e-10

    def __post_init__(self) -> None:
        if self.half_width_factor <= 0:
            raise InvalidParameter("half_width_factor must be positive")
        if self.step <= 0:
            raise InvalidParameter("step must be positive")
        if self.match_tol <= 0:
            raise InvalidParameter("match_tol must be positive")


DEFAULT_ORACLE = OracleConfig()


@dataclass(frozen=True)
class OracleResult:
    reflection: float
    transmission: float
    unitarity_defect: float


def _half_width(p: PotentialParams, cfg: OracleConfig) -> float:
    return cfg.half_width_factor / min(p.a, p.b)


def _check_domain(p: PotentialParams, half_width: float) -> None:
    if p.v0 == 0:
        return
    tail = max(abs(eval_potential(p, -half_width)), abs(eval_potential(p, half_width)))
    if tail >= _TAIL_TOL * p.v0:
        raise DomainTooSmall(
            f"|V(+-{half_width:g})| = {tail:g} >= {_TAIL_TOL:g}*v0; "
            "increase half_width_factor"
        )


def _grid(half_width: float, step: float) -> tuple[float, int]:
    n = max(int(math.ceil(half_width / step)), 8)
    return half_width / n, n


def _peak_wavenumber(p: PotentialParams, energy: float) -> float:
    """Largest local wavenumber / decay rate over the whole axis."""
    v_extreme = p.v0 / (1.0 - max(p.q, p.q_tilde))
    if p.mode is Mode.BARRIER:
        return math.sqrt(2.0 * p.m * max(energy, abs(v_extreme - energy), energy))
    return math.sqrt(2.0 * p.m * (v_extreme + abs(energy)))


def _forward_deriv(rows: list, h: float):
    """f'(x0) from f(x0..x0+4h), O(h^4)."""
    return (-25.0 * rows[0] + 48.0 * rows[1] - 36.0 * rows[2]
            + 16.0 * rows[3] - 3.0 * rows[4]) / (12.0 * h)


def _backward_deriv(rows: list, h: float):
    """f'(x4) from f(x4-4h..x4), O(h^4)."""
    return (25.0 * rows[4] - 48.0 * rows[3] + 36.0 * rows[2]
            - 16.0 * rows[1] + 3.0 * rows[0]) / (12.0 * h)


def _central_deriv(rows: list, h: float):
    """f'(x2) from f(x2-2h..x2+2h), O(h^4)."""
    return (rows[0] - 8.0 * rows[1] + 8.0 * rows[3] - rows[4]) / (12.0 * h)


def _sweep(f: list[float], start: int, stop: int, psi_prev, psi_cur):
    """Numerov recurrence psi[j+1] = ((12-10 f_j) psi_j - f_{j-1} psi_{j-1})/f_{j+1}
    for j = start..stop-1; returns the last two values."""
    for j in range(start, stop):
        psi_prev, psi_cur = psi_cur, (
            (12.0 - 10.0 * f[j]) * psi_cur - f[j - 1] * psi_prev
        ) / f[j + 1]
    return psi_prev, psi_cur


def _sweep_tail(f: list[float], n: int, psi_prev, psi_cur) -> list:
    """Run the recurrence from j = 1 to the end, returning the last five nodes
    psi[n-4..n] (grid-ordered)."""
    if n >= 6:
        psi_prev, psi_cur = _sweep(f, 1, n - 4, psi_prev, psi_cur)
        tail = [psi_prev, psi_cur]
        for j in range(n - 4, n):
            psi_prev, psi_cur = psi_cur, (
                (12.0 - 10.0 * f[j]) * psi_cur - f[j - 1] * psi_prev
            ) / f[j + 1]
            tail.append(psi_cur)
        return tail[-5:]
    rows = [psi_prev, psi_cur]
    for j in range(1, n):
        psi_prev, psi_cur = psi_cur, (
            (12.0 - 10.0 * f[j]) * psi_cur - f[j - 1] * psi_prev
        ) / f[j + 1]
        rows.append(psi_cur)
    return rows[-5:]


def transmit(
    p: PotentialParams, energy: float, cfg: OracleConfig | None = None,
) -> OracleResult:
    """Reflection/transmission by direct integration (barrier mode, E > 0).

    Initializes a pure outgoing wave exp(ikx) at +L, integrates to -L, and
    decomposes psi near -L into exp(+-ikx) components using the field value
    and a five-point derivative; R = |B/A|^2, T = 1/|A|^2.
    """
    if cfg is None:
        cfg = DEFAULT_ORACLE
    if p.mode is not Mode.BARRIER:
        raise InvalidParameter("transmit requires barrier mode")
    if not energy > 0.0:
        raise InvalidEnergy(f"scattering energy must be positive, got {energy}")

    k = math.sqrt(2.0 * p.m * energy)
    if k * cfg.step > 0.5:
        raise StepTooLarge(f"k*step = {k * cfg.step:g} > 0.5")
    half_width = _half_width(p, cfg)
    _check_domain(p, half_width)
    h, n = _grid(half_width, min(cfg.step, 0.05 / _peak_wavenumber(p, energy)))

    two_m = 2.0 * p.m
    h2_12 = h * h / 12.0

    # Right half [0, L]: sweep from +L down to 0 on the right branch.
    xs = np.linspace(0.0, half_width, n + 1)
    f_right = (1.0 + h2_12 * two_m * (energy - right_branch(p, xs))).tolist()
    f_rev = f_right[::-1]  # index i <-> x = L - i*h
    seed_prev = cmath.exp(1j * k * half_width)
    seed_cur = cmath.exp(1j * k * (half_width - h))
    head = _sweep_tail(f_rev, n, seed_prev, seed_cur)  # psi at x = 4h..0
    psi0 = head[4]
    dpsi0 = -_backward_deriv(head, h)  # grid runs toward -x

    # Left half [0, -L]: restart from (psi0, dpsi0) with the left branch.
    v0l = p.sign * p.v0 / (1.0 - p.q)
    dv0l = p.sign * p.a * p.v0 / (1.0 - p.q) ** 2
    ddv0l = p.sign * p.a * p.a * p.v0 * (1.0 + p.q) / (1.0 - p.q) ** 3
    dd = two_m * (v0l - energy) * psi0
    ddd = two_m * (dv0l * psi0 + (v0l - energy) * dpsi0)
    dddd = two_m * (ddv0l * psi0 + 2.0 * dv0l * dpsi0 + (v0l - energy) * dd)
    psi_minus_h = (psi0 - h * dpsi0 + 0.5 * h * h * dd
                   - h ** 3 / 6.0 * ddd + h ** 4 / 24.0 * dddd)

    xs_left = np.linspace(0.0, -half_width, n + 1)
    f_left = (1.0 + h2_12 * two_m * (energy - left_branch(p, xs_left))).tolist()
    tail = _sweep_tail(f_left, n, psi0, psi_minus_h)  # psi at x = -(n-4)h..-L

    # Decompose at x = -(L - 2h) using the five-point central derivative.
    x_dec = -(n - 2) * h
    psi_dec = tail[2]
    # tail is ordered by decreasing x; reverse for an increasing-x stencil.
    dpsi_dec = _central_deriv(tail[::-1], h)
    ik = 1j * k
    amp_in = 0.5 * (psi_dec + dpsi_dec / ik) * cmath.exp(-ik * x_dec)
    amp_back = 0.5 * (psi_dec - dpsi_dec / ik) * cmath.exp(ik * x_dec)
    reflection = abs(amp_back / amp_in) ** 2
    transmission = 1.0 / abs(amp_in) ** 2
    return OracleResult(
        reflection=reflection,
        transmission=transmission,
        unitarity_defect=abs(reflection + transmission - 1.0),
    )


def _side_f_values(
    p: PotentialParams, side_left: bool, half_width: float, n: int,
) -> np.ndarray:
    """Potential samples from the far end toward x = 0, one-sided at 0."""
    if side_left:
        xs = np.linspace(-half_width, 0.0, n + 1)
        return np.asarray(left_branch(p, xs), dtype=float)
    xs = np.linspace(half_width, 0.0, n + 1)
    return np.asarray(right_branch(p, xs), dtype=float)


def _integrate_side_scalar(
    v_nodes: list[float], energy: float, m: float, h: float, side_left: bool,
) -> tuple[float, float]:
    """(psi(0), psi'(0)) for the decaying solution integrated inward."""
    n = len(v_nodes) - 1
    two_m = 2.0 * m
    h2_12 = h * h / 12.0
    f = [1.0 + h2_12 * two_m * (energy - v) for v in v_nodes]
    kappa = math.sqrt(-two_m * energy)
    psi_prev, psi_cur = 1.0, math.exp(kappa * h)
    if n >= 6:
        for j in range(1, n - 4):
            psi_prev, psi_cur = psi_cur, (
                (12.0 - 10.0 * f[j]) * psi_cur - f[j - 1] * psi_prev
            ) / f[j + 1]
            if abs(psi_cur) > _RENORM_LIMIT:
                psi_prev /= psi_cur
                psi_cur = 1.0
        tail = [psi_prev, psi_cur]
        for j in range(n - 4, n):
            psi_prev, psi_cur = psi_cur, (
                (12.0 - 10.0 * f[j]) * psi_cur - f[j - 1] * psi_prev
            ) / f[j + 1]
            tail.append(psi_cur)
        tail = tail[-5:]
    else:
        tail = [psi_prev, psi_cur]
        for j in range(1, n):
            psi_prev, psi_cur = psi_cur, (
                (12.0 - 10.0 * f[j]) * psi_cur - f[j - 1] * psi_prev
            ) / f[j + 1]
            tail.append(psi_cur)
        tail = tail[-5:]
    deriv_grid = _backward_deriv(tail, h)
    psi0 = tail[4]
    dpsi0 = deriv_grid if side_left else -deriv_grid
    return psi0, dpsi0


def _integrate_side_batch(
    v_nodes: np.ndarray, energies: np.ndarray, m: float, h: float, side_left: bool,
) -> tuple[np.ndarray, np.ndarray]:
    """Vectorized counterpart of `_integrate_side_scalar` over an energy batch."""
    n = len(v_nodes) - 1
    two_m = 2.0 * m
    coef = h * h / 12.0 * two_m
    base = 1.0 + coef * energies
    cv = (coef * v_nodes).tolist()
    kappa = np.sqrt(-two_m * energies)
    psi_prev = np.ones_like(energies)
    psi_cur = np.exp(kappa * h)
    f_prev = base - cv[0]
    f_cur = base - cv[1]
    last_plain = max(n - 4, 1)
    for j in range(1, last_plain):
        f_next = base - cv[j + 1]
        psi_prev, psi_cur = psi_cur, (
            (12.0 - 10.0 * f_cur) * psi_cur - f_prev * psi_prev
        ) / f_next
        f_prev, f_cur = f_cur, f_next
        if j % _RENORM_EVERY == 0:
            mag = np.abs(psi_cur)
            if mag.max() > _RENORM_LIMIT:
                scale = np.where(mag > _RENORM_LIMIT, mag, 1.0)
                psi_cur = psi_cur / scale
                psi_prev = psi_prev / scale
    tail = [psi_prev, psi_cur]
    for j in range(last_plain, n):
        f_next = base - cv[j + 1]
        psi_prev, psi_cur = psi_cur, (
            (12.0 - 10.0 * f_cur) * psi_cur - f_prev * psi_prev
        ) / f_next
        f_prev, f_cur = f_cur, f_next
        tail.append(psi_cur)
    tail = tail[-5:]
    deriv_grid = _backward_deriv(tail, h)
    psi0 = tail[4]
    dpsi0 = deriv_grid if side_left else -deriv_grid
    return psi0, dpsi0


def _normalized_mismatch(
    psi_l, dpsi_l, psi_r, dpsi_r, k_ref: float,
):
    """Wronskian mismatch with each side scaled to unit size; zeros are the
    energies where the two logarithmic derivatives coincide."""
    norm_l = np.abs(psi_l) + np.abs(dpsi_l) / k_ref
    norm_r = np.abs(psi_r) + np.abs(dpsi_r) / k_ref
    return (dpsi_l * psi_r - psi_l * dpsi_r) / (norm_l * norm_r)


def halfline_solution(
    p: PotentialParams, energy: float, side_left: bool,
    cfg: OracleConfig | None = None,
) -> tuple[float, float]:
    """(psi(0), psi'(0)) of the decaying solution integrated inward from one
    side of the well (arbitrary positive normalization)."""
    if cfg is None:
        cfg = DEFAULT_ORACLE
    if p.mode is not Mode.WELL:
        raise InvalidParameter("halfline_solution requires well mode")
    if not -p.v0 < energy < 0.0:
        raise InvalidEnergy(f"energy must lie in (-{p.v0}, 0), got {energy}")
    half_width = _half_width(p, cfg)
    _check_domain(p, half_width)
    k_char = _peak_wavenumber(p, energy)
    h, n = _grid(half_width, min(cfg.step, 0.05 / k_char))
    v_nodes = _side_f_values(p, side_left, half_width, n).tolist()
    return _integrate_side_scalar(v_nodes, energy, p.m, h, side_left)


def shoot_bound(
    p: PotentialParams, scan_points: int = 600, cfg: OracleConfig | None = None,
) -> list[float]:
    """Bound-state energies by two-sided shooting (well mode).

    Scans the matching mismatch over a uniform grid in
    (-v0 + delta, -delta), delta = 1e-6*v0, then refines every sign change
    with a bracketing (Brent) search to cfg.match_tol in energy.
    """
    if cfg is None:
        cfg = DEFAULT_ORACLE
    if p.mode is not Mode.WELL:
        raise InvalidParameter("shoot_bound requires well mode")
    if scan_points < 2:
        raise InvalidParameter(f"scan needs at least 2 points, got {scan_points}")
    if p.v0 == 0:
        return []

    k_char = _peak_wavenumber(p, 0.0)
    if k_char * cfg.step > 0.5:
        raise StepTooLarge(f"k*step = {k_char * cfg.step:g} > 0.5")
    half_width = _half_width(p, cfg)
    _check_domain(p, half_width)
    h, n = _grid(half_width, min(cfg.step, 0.05 / k_char))

    v_left = _side_f_values(p, True, half_width, n)
    v_right = _side_f_values(p, False, half_width, n)

    delta = EDGE_GUARD * p.v0
    energies = np.linspace(-p.v0 + delta, -delta, scan_points)
    psi_l, dpsi_l = _integrate_side_batch(v_left, energies, p.m, h, True)
    psi_r, dpsi_r = _integrate_side_batch(v_right, energies, p.m, h, False)
    mismatch = _normalized_mismatch(psi_l, dpsi_l, psi_r, dpsi_r, k_char)
    if not np.all(np.isfinite(mismatch)):
        raise NoConvergence("non-finite shooting mismatch during scan")

    v_left_list = v_left.tolist()
    v_right_list = v_right.tolist()

    def mismatch_at(energy: float) -> float:
        pl, dl = _integrate_side_scalar(v_left_list, energy, p.m, h, True)
        pr, dr = _integrate_side_scalar(v_right_list, energy, p.m, h, False)
        return float(_normalized_mismatch(pl, dl, pr, dr, k_char))

    roots: list[float] = []
    signs = np.sign(mismatch)
    for i in range(scan_points - 1):
        if signs[i] == 0.0:
            roots.append(float(energies[i]))
            continue
        if signs[i] * signs[i + 1] < 0:
            root = brentq(mismatch_at, float(energies[i]), float(energies[i + 1]),
                          xtol=cfg.match_tol, maxiter=200)
            roots.append(float(root))
    return sorted(roots)
