"""Potential shape, validation and profile sampling."""


import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from hulthen1d import InvalidGrid, InvalidParameter, Mode, PotentialParams
from hulthen1d.potential import (eval_potential, left_branch, potential_grid,
                                 profile, right_branch)


class TestValidation:
    @pytest.mark.parametrize("kwargs", [
        dict(m=0.0), dict(m=-1.0), dict(a=0.0), dict(b=-0.5), dict(v0=-1.0),
        dict(q=0.0), dict(q=0.96), dict(q_tilde=1.2), dict(q_tilde=-0.1),
        dict(m=float("nan")), dict(v0=float("inf")),
    ])
    def test_rejects_bad_parameters(self, kwargs):
        with pytest.raises(InvalidParameter):
            PotentialParams(**kwargs)

    def test_rejects_bad_mode(self):
        with pytest.raises(InvalidParameter):
            PotentialParams(mode="barrier")  # plain strings are not accepted

    def test_screening_cap_is_inclusive(self):
        PotentialParams(q=0.95, q_tilde=0.95)


class TestEval:
    def test_vanishes_far_left(self):
        p = PotentialParams(v0=1, q=0.5)
        assert eval_potential(p, -1e4) == pytest.approx(0.0, abs=1e-300)

    def test_left_limit_at_origin(self):
        p = PotentialParams(v0=1, q=0.5, a=0.5)
        assert eval_potential(p, -1e-12) == pytest.approx(2.0, rel=1e-9)

    def test_well_sign_flip_at_origin(self):
        p = PotentialParams(v0=1, q_tilde=0.5, mode=Mode.WELL)
        assert eval_potential(p, 0.0) == pytest.approx(-2.0, rel=1e-12)

    def test_tail_below_threshold(self):
        for kwargs in (dict(), dict(a=0.3, b=0.9, q=0.9, q_tilde=0.1, v0=5.0)):
            p = PotentialParams(**kwargs)
            edge = 50.0 / min(p.a, p.b)
            assert abs(eval_potential(p, -edge)) < 1e-10 * p.v0
            assert abs(eval_potential(p, edge)) < 1e-10 * p.v0

    def test_jump_at_origin(self):
        p = PotentialParams(v0=2.0, q=0.3, q_tilde=0.6)
        jump = float(right_branch(p, 0.0)) - float(left_branch(p, 0.0))
        assert jump == pytest.approx(2.0 * (1 / 0.4 - 1 / 0.7), rel=1e-12)
        sym = PotentialParams(v0=2.0, q=0.3, q_tilde=0.3)
        assert float(right_branch(sym, 0.0)) == pytest.approx(
            float(left_branch(sym, 0.0)), rel=1e-14)

    def test_grid_matches_pointwise(self):
        p = PotentialParams(a=0.7, b=0.4, q=0.2, q_tilde=0.8, v0=3.0)
        xs = np.linspace(-20, 20, 101)
        grid = potential_grid(p, xs)
        for x, v in zip(xs, grid):
            assert v == pytest.approx(eval_potential(p, float(x)), rel=1e-14)


class TestProfile:
    def test_three_point_profile(self):
        p = PotentialParams(v0=1, a=0.5, b=0.5, q=0.5, q_tilde=0.5)
        rows = profile(p, -10, 10, 3)
        assert [x for x, _ in rows] == [-10.0, 0.0, 10.0]
        assert rows[1][1] == pytest.approx(2.0, rel=1e-12)
        assert rows[0][1] == pytest.approx(eval_potential(p, -10.0))

    def test_zero_strength(self):
        p = PotentialParams(v0=0)
        assert all(v == 0.0 for _, v in profile(p, -5, 5, 11))

    def test_symmetric_profile(self):
        p = PotentialParams(v0=1, a=0.5, b=0.5, q=0.5, q_tilde=0.5)
        rows = profile(p, -10, 10, 201)
        for x, v in rows:
            assert abs(v - eval_potential(p, -x)) < 1e-12 * p.v0

    @pytest.mark.parametrize("args", [(-1, 1, 1), (-1, 1, 0), (1, -1, 5), (2, 2, 5)])
    def test_invalid_grid(self, args):
        with pytest.raises(InvalidGrid):
            profile(PotentialParams(), *args)


param_sets = st.builds(
    PotentialParams,
    m=st.floats(0.5, 2.0),
    a=st.floats(0.2, 1.5),
    b=st.floats(0.2, 1.5),
    q=st.floats(0.05, 0.95),
    q_tilde=st.floats(0.05, 0.95),
    v0=st.floats(0.0, 5.0),
    mode=st.sampled_from([Mode.BARRIER, Mode.WELL]),
)


class TestProperties:
    @given(param_sets, st.floats(-60.0, 60.0))
    @settings(max_examples=100, deadline=None)
    def test_sign_fixed_by_mode(self, p, x):
        v = eval_potential(p, x)
        if p.mode is Mode.BARRIER:
            assert v >= 0.0
        else:
            assert v <= 0.0

    @given(st.floats(0.2, 1.5), st.floats(0.05, 0.95), st.floats(0.1, 5.0))
    @settings(max_examples=50, deadline=None)
    def test_even_when_sides_match(self, rng, scr, v0):
        p = PotentialParams(a=rng, b=rng, q=scr, q_tilde=scr, v0=v0)
        xs = np.linspace(0.0, 40.0, 97)
        mismatch = max(abs(eval_potential(p, float(x)) - eval_potential(p, float(-x)))
                       for x in xs)
        assert mismatch < 1e-12 * v0
