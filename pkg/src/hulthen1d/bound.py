"""Bound states of the well from the determinant of the matching system.

For -v0 < E < 0 the decaying solutions on each side are single
hypergeometric terms; continuity of psi and psi' at x = 0 has a nontrivial
solution only where the 2x2 determinant D(E) vanishes.  D is real on the
whole search interval, so eigenvalues are located by a uniform sign scan
followed by bisection.

Branch choice: the decay exponent is taken positive, mu = +sqrt(-2mE)/range,
the only branch compatible with psi -> 0 at infinity.  The derivative rows
carry the chain-rule factors (+a*q on the left, -b*q_tilde on the right);
`as_printed` switches to the unweighted variant kept for comparison runs.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import InvalidEnergy, InvalidParameter, NoConvergence
from .potential import Mode, PotentialParams
from .scattering import Side
from .special import SeriesConfig, hyp2f1

# Relative guard keeping the scan away from the E -> 0 and E -> -v0 endpoints.
EDGE_GUARD = 1e-6
_MAX_BISECT = 200


@dataclass(frozen=True)
class BoundSideParams:
    """Real decay constants for one side of the well at -v0 < E < 0."""

    kappa: float
    mu: float
    nu: float
    gamma: float
    range_param: float
    screening: float


@dataclass(frozen=True)
class BoundMatchValues:
    """The four composite matching quantities, prefactors included:
    bf1/bf2 are the side values of psi at x = 0 (amplitudes excluded),
    bf3/bf4 the corresponding series-derivative terms."""

    bf1: float
    bf2: float
    bf3: float
    bf4: float


@dataclass(frozen=True)
class BoundSpectrum:
    eigenvalues: tuple[float, ...]
    residuals: tuple[float, ...]
    bracket_count: int


def _require_well(p: PotentialParams) -> None:
    if p.mode is not Mode.WELL:
        raise InvalidParameter("bound states require well mode")


def bound_side_params(p: PotentialParams, energy: float, side: Side) -> BoundSideParams:
    """Decay exponents for one side; energy must lie strictly in (-v0, 0)."""
    _require_well(p)
    if not -p.v0 < energy < 0.0:
        raise InvalidEnergy(
            f"bound-state energy must lie in (-{p.v0}, 0), got {energy}"
        )
    rng = p.a if side is Side.LEFT else p.b
    scr = p.q if side is Side.LEFT else p.q_tilde
    kappa = math.sqrt(-2.0 * p.m * energy)
    gamma = math.sqrt(2.0 * p.m * (p.v0 / scr - energy)) / rng
    return BoundSideParams(kappa=kappa, mu=kappa / rng, nu=1.0, gamma=gamma,
                           range_param=rng, screening=scr)


def bound_match_values(
    p: PotentialParams, energy: float, cfg: SeriesConfig | None = None,
) -> BoundMatchValues:
    """Evaluate the four matching quantities at y = q, z = q_tilde."""
    left = bound_side_params(p, energy, Side.LEFT)
    right = bound_side_params(p, energy, Side.RIGHT)
    q, qt = left.screening, right.screening

    pref_l = q ** left.mu * (1.0 - q) ** left.nu
    pref_r = qt ** right.mu * (1.0 - qt) ** right.nu

    al, bl = left.mu + left.nu - left.gamma, left.mu + left.nu + left.gamma
    ar, br = right.mu + right.nu - right.gamma, right.mu + right.nu + right.gamma
    cl = 1.0 + 2.0 * left.mu
    cr = 1.0 + 2.0 * right.mu

    bf1 = pref_l * hyp2f1(al, bl, cl, q, cfg).real
    bf2 = pref_r * hyp2f1(ar, br, cr, qt, cfg).real
    bf3 = pref_l * (al * bl / cl) * hyp2f1(al + 1, bl + 1, cl + 1, q, cfg).real
    bf4 = pref_r * (ar * br / cr) * hyp2f1(ar + 1, br + 1, cr + 1, qt, cfg).real
    return BoundMatchValues(bf1=bf1, bf2=bf2, bf3=bf3, bf4=bf4)


def determinant(
    p: PotentialParams, energy: float,
    cfg: SeriesConfig | None = None, as_printed: bool = False,
) -> float:
    """Matching determinant D(E); eigenvalues are its zeros.

    D = bf1*G_R - bf2*G_L with G_L = +a*q*{(mu_L/q - nu_L/(1-q))bf1 + bf3}
    and G_R = -b*q_tilde*{(mu_R/q_tilde - nu_R/(1-q_tilde))bf2 + bf4}.
    """
    left = bound_side_params(p, energy, Side.LEFT)
    right = bound_side_params(p, energy, Side.RIGHT)
    bm = bound_match_values(p, energy, cfg)
    q, qt = left.screening, right.screening
    l_brace = (left.mu / q - left.nu / (1.0 - q)) * bm.bf1 + bm.bf3
    r_brace = (right.mu / qt - right.nu / (1.0 - qt)) * bm.bf2 + bm.bf4
    if as_printed:
        return bm.bf2 * l_brace - bm.bf1 * r_brace
    g_left = p.a * q * l_brace
    g_right = -p.b * qt * r_brace
    return bm.bf1 * g_right - bm.bf2 * g_left


def _scan_grid(p: PotentialParams, scan_points: int) -> list[float]:
    delta = EDGE_GUARD * p.v0
    lo, hi = -p.v0 + delta, -delta
    step = (hi - lo) / (scan_points - 1)
    return [lo + i * step for i in range(scan_points)]


def determinant_trace(
    p: PotentialParams, scan_points: int = 2000,
    cfg: SeriesConfig | None = None, as_printed: bool = False,
) -> list[tuple[float, float]]:
    """(E, D(E)) over the uniform scan grid; exactly scan_points rows."""
    _require_well(p)
    if scan_points < 100:
        raise InvalidParameter(f"scan needs at least 100 points, got {scan_points}")
    if p.v0 <= 0:
        return []
    return [(e, determinant(p, e, cfg, as_printed)) for e in _scan_grid(p, scan_points)]


def _bisect(
    p: PotentialParams, lo: float, hi: float, d_lo: float, d_hi: float,
    root_tol: float, cfg: SeriesConfig | None, as_printed: bool,
) -> tuple[float, float]:
    """Refine one sign-change bracket down to float spacing.

    root_tol is the guaranteed ceiling on both the final bracket width and
    the determinant residual; the refinement keeps going to machine
    resolution so that derived quantities (log-derivative matching of the
    reconstructed wavefunction) are as sharp as the arithmetic allows.
    """
    mid, d_mid = lo, d_lo
    for _ in range(_MAX_BISECT):
        mid = 0.5 * (lo + hi)
        if mid == lo or mid == hi:  # bracket narrowed to adjacent floats
            if abs(d_lo) > abs(d_hi):
                mid, d_mid = hi, d_hi
            else:
                mid, d_mid = lo, d_lo
            break
        d_mid = determinant(p, mid, cfg, as_printed)
        if not math.isfinite(d_mid):
            raise NoConvergence(f"non-finite determinant at E={mid}")
        if d_mid == 0.0:
            break
        if (d_lo > 0) == (d_mid > 0):
            lo, d_lo = mid, d_mid
        else:
            hi, d_hi = mid, d_mid
    else:
        raise NoConvergence(
            f"bisection stalled in [{lo}, {hi}] with residual {abs(d_mid)}"
        )
    if hi - lo > root_tol or abs(d_mid) > root_tol:
        raise NoConvergence(
            f"bracket near E={mid} stopped at width {hi - lo:g}, "
            f"residual {abs(d_mid):g} (root_tol={root_tol:g})"
        )
    return mid, abs(d_mid)


def find_eigenvalues(
    p: PotentialParams, scan_points: int = 2000, root_tol: float = 1e-9,
    cfg: SeriesConfig | None = None, as_printed: bool = False,
) -> BoundSpectrum:
    """All bound-state energies in (-v0, 0).

    Scans D(E) on a uniform grid (guarded 1e-6*v0 away from the interval
    endpoints), then bisects every sign change; each returned eigenvalue
    carries the determinant residual |D| at the refined root.
    """
    _require_well(p)
    if scan_points < 100:
        raise InvalidParameter(f"scan needs at least 100 points, got {scan_points}")
    if not root_tol > 0:
        raise InvalidParameter(f"root_tol must be positive, got {root_tol}")
    if p.v0 <= 0:
        return BoundSpectrum(eigenvalues=(), residuals=(), bracket_count=0)

    grid = _scan_grid(p, scan_points)
    values = [determinant(p, e, cfg, as_printed) for e in grid]

    eigenvalues: list[float] = []
    residuals: list[float] = []
    brackets = 0
    for i in range(len(grid) - 1):
        d0, d1 = values[i], values[i + 1]
        if not (math.isfinite(d0) and math.isfinite(d1)):
            raise NoConvergence(f"non-finite determinant near E={grid[i]}")
        if d0 == 0.0:
            if not eigenvalues or abs(grid[i] - eigenvalues[-1]) > root_tol:
                brackets += 1
                eigenvalues.append(grid[i])
                residuals.append(0.0)
            continue
        if (d0 > 0) != (d1 > 0):
            brackets += 1
            root, resid = _bisect(p, grid[i], grid[i + 1], d0, d1,
                                  root_tol, cfg, as_printed)
            if not eigenvalues or abs(root - eigenvalues[-1]) > root_tol:
                eigenvalues.append(root)
                residuals.append(resid)
    return BoundSpectrum(eigenvalues=tuple(eigenvalues),
                         residuals=tuple(residuals),
                         bracket_count=brackets)


def eval_bound_psi(
    p: PotentialParams, energy: float, x: float, cfg: SeriesConfig | None = None,
) -> float:
    """Bound wavefunction at an eigenvalue, normalized by A_left = 1.

    The right-side amplitude is fixed by continuity, A_right = bf1/bf2;
    no probability normalization is applied.
    """
    left = bound_side_params(p, energy, Side.LEFT)
    right = bound_side_params(p, energy, Side.RIGHT)
    bm = bound_match_values(p, energy, cfg)
    if x < 0.0:
        y = p.q * math.exp(p.a * x)
        al, bl = left.mu + left.nu - left.gamma, left.mu + left.nu + left.gamma
        return (y ** left.mu * (1.0 - y) ** left.nu
                * hyp2f1(al, bl, 1.0 + 2.0 * left.mu, y, cfg).real)
    amp_r = bm.bf1 / bm.bf2
    z = p.q_tilde * math.exp(-p.b * x)
    ar, br = right.mu + right.nu - right.gamma, right.mu + right.nu + right.gamma
    return amp_r * (z ** right.mu * (1.0 - z) ** right.nu
                    * hyp2f1(ar, br, 1.0 + 2.0 * right.mu, z, cfg).real)


def eval_bound_psi_dx(
    p: PotentialParams, energy: float, x: float, cfg: SeriesConfig | None = None,
) -> float:
    """d(psi)/dx of the bound wavefunction (A_left = 1)."""
    left = bound_side_params(p, energy, Side.LEFT)
    right = bound_side_params(p, energy, Side.RIGHT)
    bm = bound_match_values(p, energy, cfg)
    if x < 0.0:
        y = p.q * math.exp(p.a * x)
        al, bl = left.mu + left.nu - left.gamma, left.mu + left.nu + left.gamma
        cl = 1.0 + 2.0 * left.mu
        f = hyp2f1(al, bl, cl, y, cfg).real
        df = (al * bl / cl) * hyp2f1(al + 1, bl + 1, cl + 1, y, cfg).real
        dpsi_dy = (y ** left.mu * (1.0 - y) ** left.nu
                   * ((left.mu / y - left.nu / (1.0 - y)) * f + df))
        return p.a * y * dpsi_dy
    amp_r = bm.bf1 / bm.bf2
    z = p.q_tilde * math.exp(-p.b * x)
    ar, br = right.mu + right.nu - right.gamma, right.mu + right.nu + right.gamma
    cr = 1.0 + 2.0 * right.mu
    f = hyp2f1(ar, br, cr, z, cfg).real
    df = (ar * br / cr) * hyp2f1(ar + 1, br + 1, cr + 1, z, cfg).real
    dpsi_dz = (z ** right.mu * (1.0 - z) ** right.nu
               * ((right.mu / z - right.nu / (1.0 - z)) * f + df))
    return -p.b * z * amp_r * dpsi_dz
