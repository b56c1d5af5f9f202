# Export the library surface for notebooks and scripts
from mckay3.impl.types.group import GroupAction
from mckay3.impl.types.cyclotomic import CyclotomicNumber
from mckay3.impl.types.quiver import Constellation, FixedPoint, StabilityParam, parse_zero_pattern
from mckay3.impl.group import new_group, all_groups, equivalent_presentations, character
from mckay3.impl.mckay import cartan_matrices, character_relation
from mckay3.impl.eta import eta_table, eta_invariant, eta_float
from mckay3.impl.correspondence import verify_chain, verify_index_identity, predicted_intersection_matrix
from mckay3.impl.quiver import (
    is_generic, relation_residual, invariant_subsets, is_theta_stable, is_theta_semistable, random_constellation,
    enumerate_fixed_points, chamber_survey,
)
from mckay3.impl.kempf_ness import moment_map, zeta_of_theta, gauge_act, kempf_ness_solve
from mckay3.impl.config import SolverConfig, RunConfig
