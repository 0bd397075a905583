from .data import Basis as Basis
from .data import Instance as Instance
from .deltas import DeltaCatalogue as DeltaCatalogue
from .deltas import instance_deltas as instance_deltas
from .vectors import ConstantVectors as ConstantVectors
from .vectors import reorder_profile as reorder_profile
from .formulas import BlockRatio as BlockRatio
from .samplers import is_basis as is_basis
from .vectors import constant_vectors as constant_vectors
from .samplers import is_clause as is_clause
from .samplers import sample_basis as sample_basis
from .samplers import is_compatible as is_compatible
from .samplers import is_clause_pair as is_clause_pair
from .samplers import is_special_pair as is_special_pair
from .samplers import sample_instance as sample_instance
from .samplers import validate_profile as validate_profile
from .formulas import generalized_deltas as generalized_deltas
from .samplers import validate_instance as validate_instance
from .samplers import sample_compatible as sample_compatible
from .samplers import reference_instance as reference_instance
from .samplers import sample_clause_pair as sample_clause_pair
from .formulas import optimal_block_ratio as optimal_block_ratio
from .samplers import sample_special_pair as sample_special_pair
from .vectors import ReferenceConfiguration as ReferenceConfiguration
from .samplers import sample_compatible_given_pair as sample_compatible_given_pair
