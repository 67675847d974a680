"""Transmission, reflection and bound states of the 1D asymmetric Hulthen potential."""

from .bound import (BoundMatchValues, BoundSideParams, BoundSpectrum,
                    bound_match_values, bound_side_params, determinant,
                    determinant_trace, eval_bound_psi, eval_bound_psi_dx,
                    find_eigenvalues)
from .errors import (DomainTooSmall, HulthenError, InvalidEnergy, InvalidGrid,
                     InvalidParameter, NoConvergence, NonConvergence,
                     NonFiniteResult, SingularMatching, StepTooLarge)
from .oracle import (OracleConfig, OracleResult, halfline_solution, shoot_bound,
                     transmit)
from .potential import (Mode, PotentialParams, SCREENING_CAP, eval_potential,
                        potential_grid, profile)
from .scattering import (MatchCoefficients, ScatteringSolution, Side, SideParams,
                         amplitude_ratios, eval_psi, eval_psi_dx,
                         match_coefficients, scatter, side_params)
from .special import SeriesConfig, hyp2f1, hyp2f1_derivative

__version__ = "0.1.0"

__all__ = [
    "BoundMatchValues", "BoundSideParams", "BoundSpectrum",
    "DomainTooSmall", "HulthenError", "InvalidEnergy", "InvalidGrid",
    "InvalidParameter", "MatchCoefficients", "Mode", "NoConvergence",
    "NonConvergence", "NonFiniteResult", "OracleConfig", "OracleResult",
    "PotentialParams", "SCREENING_CAP", "ScatteringSolution", "SeriesConfig",
    "Side", "SideParams", "SingularMatching", "StepTooLarge",
    "amplitude_ratios", "bound_match_values", "bound_side_params",
    "determinant", "determinant_trace", "eval_bound_psi", "eval_bound_psi_dx",
    "eval_potential", "eval_psi", "eval_psi_dx", "find_eigenvalues",
    "halfline_solution", "hyp2f1", "hyp2f1_derivative", "match_coefficients",
    "potential_grid", "profile", "scatter", "shoot_bound", "side_params",
    "transmit", "__version__",
]
