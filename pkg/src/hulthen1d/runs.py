"""Sweep and verification drivers shared by the CLI and the HTTP service.

Every public function returns plain dicts/lists ready for CSV or JSON
serialization.  Sweeps honour the HULTHEN_THREADS environment variable
(0 or unset = serial); output order always follows the grid order.
"""

from __future__ import annotations

import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import replace
from typing import Callable, Sequence

from .bound import determinant_trace, find_eigenvalues
from .errors import InvalidEnergy, InvalidGrid, NonConvergence, NonFiniteResult
from .oracle import OracleConfig, shoot_bound, transmit
from .potential import Mode, PotentialParams, profile
from .scattering import scatter

# Fixed comparison tolerances for the verify command.
VERIFY_T_TOL = 1e-4
VERIFY_E_TOL = 1e-6
VERIFY_UNITARITY_TOL = 1e-8

# Oracle step used by verify's bound-state shooting (coarser than the
# all-purpose default; discretization error is far below VERIFY_E_TOL).
VERIFY_SHOOT_STEP = 4e-3


def thread_count() -> int:
    raw = os.environ.get("HULTHEN_THREADS", "")
    try:
        n = int(raw)
    except ValueError:
        return 1
    return n if n > 1 else 1


def _map_ordered(fn: Callable, items: Sequence) -> list:
    workers = thread_count()
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(fn, items))
    return [fn(item) for item in items]


def _require_finite(row: dict) -> dict:
    for key, value in row.items():
        if isinstance(value, float) and not math.isfinite(value):
            raise NonFiniteResult(f"non-finite value for {key!r}: {value}")
    return row


def _grid_values(lo: float, hi: float, n: int) -> list[float]:
    if n < 2:
        raise InvalidGrid(f"sweep needs at least 2 points, got {n}")
    if not lo < hi:
        raise InvalidGrid(f"empty sweep range [{lo}, {hi}]")
    step = (hi - lo) / (n - 1)
    return [lo + i * step for i in range(n)]


def params_dict(p: PotentialParams) -> dict:
    return {"m": p.m, "a": p.a, "b": p.b, "q": p.q, "q_tilde": p.q_tilde,
            "v0": p.v0, "mode": p.mode.value}


def envelope(p: PotentialParams, command: str, results: dict,
             tolerances: dict | None = None, status: str = "ok") -> dict:
    return {
        "params": params_dict(p),
        "command": command,
        "results": results,
        "tolerances": tolerances or {},
        "status": status,
    }


def profile_rows(p: PotentialParams, x_min: float, x_max: float, n: int) -> list[dict]:
    return [_require_finite({"x": x, "V": v}) for x, v in profile(p, x_min, x_max, n)]


def scatter_row(p: PotentialParams, energy: float) -> dict:
    try:
        sol = scatter(p, energy)
    except NonConvergence as exc:
        raise NonConvergence(f"at grid point E={energy!r}: {exc}") from exc
    return _require_finite({
        "E": energy,
        "R": sol.reflection,
        "T": sol.transmission,
        "unitarity_defect": sol.unitarity_defect,
    })


def energy_scan(p: PotentialParams, e_min: float, e_max: float, n: int) -> list[dict]:
    """Rows E,R,T,unitarity_defect over a uniform energy grid."""
    if not e_min > 0:
        raise InvalidEnergy(f"scan energies must be positive, got e_min={e_min}")
    return _map_ordered(lambda e: scatter_row(p, e), _grid_values(e_min, e_max, n))


def strength_scan(p: PotentialParams, energy: float,
                  v0_min: float, v0_max: float, n: int) -> list[dict]:
    """Rows V0,T at fixed energy over a uniform strength grid."""
    if v0_min < 0:
        raise InvalidGrid(f"strengths must be >= 0, got v0_min={v0_min}")

    def one(v0: float) -> dict:
        sol = scatter(replace(p, v0=v0), energy)
        return _require_finite({"V0": v0, "T": sol.transmission})

    return _map_ordered(one, _grid_values(v0_min, v0_max, n))


def bound_run(
    p: PotentialParams, scan_points: int = 2000, root_tol: float = 1e-9,
    with_trace: bool = False,
) -> tuple[dict, list[dict] | None]:
    """Bound spectrum summary plus (optionally) the determinant trace rows."""
    spectrum = find_eigenvalues(p, scan_points=scan_points, root_tol=root_tol)
    results = {
        "eigenvalues": list(spectrum.eigenvalues),
        "residuals": list(spectrum.residuals),
        "count": len(spectrum.eigenvalues),
        "bracket_count": spectrum.bracket_count,
    }
    for e in spectrum.eigenvalues:
        if not math.isfinite(e):
            raise NonFiniteResult(f"non-finite eigenvalue {e}")
    trace = None
    if with_trace:
        trace = [_require_finite({"E": e, "D": d})
                 for e, d in determinant_trace(p, scan_points)]
    summary = envelope(p, "bound", results, {"root_tol": root_tol})
    return summary, trace


def verify_run(
    p: PotentialParams, e_min: float = 0.1, e_max: float = 10.0, n: int = 20,
    oracle_cfg: OracleConfig | None = None,
) -> tuple[dict, bool]:
    """Arbitration report: closed forms against the direct integrator.

    Barrier mode compares T at n energies plus the worst unitarity defect;
    well mode compares every eigenvalue against two-sided shooting.  The
    report also carries the published-form comparison spectrum so sign
    disagreements surface explicitly.
    """
    tolerances = {
        "transmission_abs": VERIFY_T_TOL,
        "eigenvalue_abs": VERIFY_E_TOL,
        "unitarity": VERIFY_UNITARITY_TOL,
    }
    if p.mode is Mode.BARRIER:
        cfg = oracle_cfg or OracleConfig()
        rows = []
        for e in _grid_values(e_min, e_max, n):
            analytic = scatter(p, e)
            printed_form = scatter(p, e, as_printed=True)
            oracle = transmit(p, e, cfg)
            rows.append(_require_finite({
                "E": e,
                "T_analytic": analytic.transmission,
                "T_oracle": oracle.transmission,
                "abs_diff": abs(analytic.transmission - oracle.transmission),
                "T_printed_form": printed_form.transmission,
                "unitarity_defect": analytic.unitarity_defect,
            }))
        max_diff = max(r["abs_diff"] for r in rows)
        max_defect = max(r["unitarity_defect"] for r in rows)
        ok = max_diff <= VERIFY_T_TOL and max_defect <= VERIFY_UNITARITY_TOL
        results = {
            "transmission": rows,
            "max_abs_diff": max_diff,
            "max_unitarity_defect": max_defect,
        }
        return envelope(p, "verify", results, tolerances,
                        "ok" if ok else "fail"), ok

    cfg = oracle_cfg or OracleConfig(step=VERIFY_SHOOT_STEP)
    spectrum = find_eigenvalues(p)
    oracle_eigs = shoot_bound(p, cfg=cfg)
    printed_form = find_eigenvalues(p, as_printed=True)
    pairs = []
    ok = len(spectrum.eigenvalues) == len(oracle_eigs)
    for i, e in enumerate(spectrum.eigenvalues):
        oracle_e = oracle_eigs[i] if i < len(oracle_eigs) else float("nan")
        diff = abs(e - oracle_e)
        if not (math.isfinite(diff) and diff <= VERIFY_E_TOL):
            ok = False
        pairs.append({"E_analytic": e, "E_oracle": oracle_e, "abs_diff": diff})
    results = {
        "eigenvalues": pairs,
        "count_analytic": len(spectrum.eigenvalues),
        "count_oracle": len(oracle_eigs),
        "printed_form_eigenvalues": list(printed_form.eigenvalues),
    }
    return envelope(p, "verify", results, tolerances, "ok" if ok else "fail"), ok
