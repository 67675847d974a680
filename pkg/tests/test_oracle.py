"""Direct-integration oracle: free limits, convergence orders, shooting."""

import numpy as np
import pytest
from scipy.optimize import brentq

from hulthen1d import (DomainTooSmall, InvalidEnergy, InvalidParameter, Mode,
                       OracleConfig, PotentialParams, StepTooLarge)
from hulthen1d.bound import find_eigenvalues
from hulthen1d.oracle import halfline_solution, shoot_bound, transmit
from hulthen1d.scattering import scatter

FAST = OracleConfig(step=4e-3)


class TestTransmit:
    def test_free_particle(self):
        p = PotentialParams(v0=0, a=0.4, b=0.5, q=0.6, q_tilde=0.7)
        res = transmit(p, 1.0)
        assert res.transmission == pytest.approx(1.0, abs=1e-10)
        assert res.reflection == pytest.approx(0.0, abs=1e-10)

    def test_agrees_with_closed_form(self, barrier_asym):
        for energy in (0.5, 1.0, 2.0, 5.0):
            res = transmit(barrier_asym, energy)
            analytic = scatter(barrier_asym, energy).transmission
            assert abs(res.transmission - analytic) <= 1e-4

    def test_high_energy_transparent(self):
        p = PotentialParams()  # v0 = 1
        res = transmit(p, 100.0 * p.v0)
        assert res.transmission > 0.999

    def test_unitarity_defect_at_defaults(self, barrier_asym):
        for energy in (0.3, 2.0, 11.0):
            assert transmit(barrier_asym, energy).unitarity_defect <= 1e-6

    def test_deep_tunneling_agrees_with_closed_form(self):
        p = PotentialParams(v0=50.0)  # V0 = 50 * E below
        numeric = transmit(p, 1.0).transmission
        analytic = scatter(p, 1.0).transmission
        assert numeric < 0.01 and analytic < 0.01
        assert abs(numeric - analytic) <= 1e-4

    def test_step_halving_fourth_order(self, barrier_asym):
        t_h = transmit(barrier_asym, 2.0, OracleConfig(step=1e-3)).transmission
        t_h2 = transmit(barrier_asym, 2.0, OracleConfig(step=5e-4)).transmission
        assert abs(t_h - t_h2) <= 1e-6

    def test_domain_too_small(self, barrier_asym):
        with pytest.raises(DomainTooSmall):
            transmit(barrier_asym, 1.0, OracleConfig(half_width_factor=5.0))

    def test_step_too_large(self, barrier_asym):
        with pytest.raises(StepTooLarge):
            transmit(barrier_asym, 50.0, OracleConfig(step=0.1))

    def test_mode_and_energy_validation(self, barrier_asym, well_asym):
        with pytest.raises(InvalidParameter):
            transmit(well_asym, 1.0)
        with pytest.raises(InvalidEnergy):
            transmit(barrier_asym, -1.0)


class TestShootBound:
    def test_reference_well(self, well_asym):
        roots = shoot_bound(well_asym, 600, FAST)
        spec = find_eigenvalues(well_asym)
        assert len(roots) == len(spec.eigenvalues) == 6
        for numeric, analytic in zip(roots, spec.eigenvalues):
            assert abs(numeric - analytic) <= 1e-6

    def test_zero_strength_empty(self):
        p = PotentialParams(v0=0, mode=Mode.WELL)
        assert shoot_bound(p, 200, FAST) == []

    def test_eigenvalues_inside_interval(self, well_asym):
        roots = shoot_bound(well_asym, 600, FAST)
        assert all(-well_asym.v0 < e < 0 for e in roots)
        assert roots == sorted(roots)

    def test_step_halving(self, well_asym):
        coarse = shoot_bound(well_asym, 400, OracleConfig(step=4e-3))
        fine = shoot_bound(well_asym, 400, OracleConfig(step=2e-3))
        assert len(coarse) == len(fine)
        assert max(abs(a - b) for a, b in zip(coarse, fine)) <= 1e-8

    def test_domain_stability(self, well_asym):
        base = shoot_bound(well_asym, 400, OracleConfig(step=4e-3))
        wide = shoot_bound(well_asym, 400,
                           OracleConfig(step=4e-3, half_width_factor=60.0))
        assert len(base) == len(wide)
        assert max(abs(a - b) for a, b in zip(base, wide)) <= 1e-8

    def test_symmetric_well_matches_parity_halfline_solves(self, well_sym):
        """Even states satisfy psi'(0) = 0 and odd states psi(0) = 0 for the
        decaying left half-line solution; their union is the spectrum."""
        roots = shoot_bound(well_sym, 600, FAST)

        energies = np.linspace(-well_sym.v0 + 1e-6, -1e-6, 800)
        values = [halfline_solution(well_sym, float(e), True, FAST)
                  for e in energies]
        psi0 = np.array([v[0] for v in values])
        dpsi0 = np.array([v[1] for v in values])
        norm = np.abs(psi0) + np.abs(dpsi0)
        psi0, dpsi0 = psi0 / norm, dpsi0 / norm

        parity_roots = []
        for i in range(len(energies) - 1):
            lo, hi = float(energies[i]), float(energies[i + 1])
            if dpsi0[i] * dpsi0[i + 1] < 0:
                parity_roots.append(brentq(
                    lambda e: halfline_solution(well_sym, e, True, FAST)[1],
                    lo, hi, xtol=1e-10))
            if psi0[i] * psi0[i + 1] < 0:
                parity_roots.append(brentq(
                    lambda e: halfline_solution(well_sym, e, True, FAST)[0],
                    lo, hi, xtol=1e-10))
        parity_roots.sort()
        assert len(parity_roots) == len(roots)
        assert max(abs(a - b) for a, b in zip(roots, parity_roots)) <= 1e-8

    def test_mode_validation(self, barrier_asym):
        with pytest.raises(InvalidParameter):
            shoot_bound(barrier_asym, 200, FAST)
