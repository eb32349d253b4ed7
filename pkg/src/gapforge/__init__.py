"""Gap-creating reductions for parameterized maximum likelihood decoding over F_p."""
from .amplify import AmplifyReport, amplify_to_gamma, compose_amplify
from .bridges import (BridgeReport, force_unit_coefficients, mld_to_ncp,
                      ncp_to_mld)
from .codes import (Code, CodeParams, build_random_code, build_rs_code,
                    collision_number_exact, distance_based_bounds, merge_code,
                    random_code_params)
from .errors import (BudgetError, GapforgeError, InputError, NoInstanceFound,
                     ParseError, VerificationError)
from .field import (FpMatrix, FpVector, PrimeField, independent_rows,
                    linear_combine, solve_linear)
from .gap import (BipartiteGapOutput, Layout, ReductionReport,
                  build_gap_bipartite, colored_to_uncolored, duplicate_stretch,
                  gap_reduce)
from .instances import (ColoredMldInstance, MldInstance, NcpInstance, Pick,
                        Witness, gen_certified_no, gen_planted_yes,
                        verify_witness)
from .io import read_instance, write_instance
from .oracles import (GapReportCard, certify_gap, exact_mld_min,
                      exact_ncp_min)

__version__ = "0.1.0"
