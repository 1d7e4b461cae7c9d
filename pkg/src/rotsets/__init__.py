"""Rotational orbits and rotational sets of the circle map t -> d*t mod 1, in exact arithmetic."""
from .arith import (
    Angle,
    DigitTuple,
    RotationNumber,
    angle,
    angle_to_tuple,
    binomial,
    exact_period,
    mod_inverse,
    sigma,
    sigma_pow,
    tuple_shift,
    tuple_to_angle,
)
from .enumeration import (
    InterlacingGraph,
    RepSequence,
    binomial_inversion_check,
    build_graph,
    can_interlace,
    clique_witness,
    count_orbits,
    count_sets_closed,
    count_sets_recursive,
    enumerate_rep_sequences,
    enumerate_sets,
    least_tuple_to_rep,
    orbit_from_rep,
    rep_to_least_tuple,
    set_from_reps,
)
from .errors import *  # noqa: F401,F403
from .oracle import OracleReport, brute_force_orbits, brute_force_sets, cross_check
from .rotation import (
    RotationalOrbit,
    RotationalSet,
    check_least_condition,
    detect_rotation,
    verify_orbit,
    verify_set,
    zero_preimage_between,
)
