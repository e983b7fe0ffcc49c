"""bettilab: exact finite-field computations for graded Betti tables of
point sets on embedded curves, minimal-resolution predictions, and
determinantal/pfaffian Chow forms checked against resultant oracles."""

__version__ = "0.1.0"

from .betti import BettiTable, betti_table, brute_force_betti, regularity
from .chow import (ChowMatrix, chow_evaluate, compare_on_curve,
                   compare_on_quadric, curve_plane_meets, quadric_plane_meets,
                   sylvester_resultant, tate_phi)
from .curves import (Divisor, HyperellipticCurve, ParametricCurve,
                     SplittingType, curve_betti_table, gonal_betti_rows,
                     h0_divisor, monomial_curve, property_r_sample,
                     random_rational_curve, rational_normal_curve,
                     sample_gamma_points, sample_points, splitting_type)
from .points import (PointSet, evaluation_matrix, graded_piece,
                     hilbert_function, monomial_basis)
from .predictor import (MrcPrediction, Verdict, delta, igc_generator_count,
                        predict, u_value, verdict)
from .ulrich import (UlrichModuleData, euler_pairing,
                     line_bundle_on_rational_curve, sheaf_on_quadric,
                     ulrich_certify, ulrich_numerics, ulrich_numerics_for_rank,
                     zero_cycle_length, zero_cycle_u)

__all__ = [name for name in dir() if not name.startswith("_")]
