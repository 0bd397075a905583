from .opt import OptSummary as OptSummary
from .opt import verify_opt as verify_opt
from .info import verify_info as verify_info
from .deltas import verify_deltas as verify_deltas
from .protocols import run_protocol as run_protocol
from .samplers import verify_samplers as verify_samplers
from .equivalence import compare_variants as compare_variants
from .opt import instance_opt_summary as instance_opt_summary
from .theta import verify_theta_recovery as verify_theta_recovery
from .concentration import verify_concentration as verify_concentration
from .equivalence import verify_nu_equivalence as verify_nu_equivalence
