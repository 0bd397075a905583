from .rng import RngStream as RngStream
from .itemset import ItemSet as ItemSet
from .itemset import check_width as check_width
from .sampling import sample_pc as sample_pc
from .partition import part_cells as part_cells
from .sampling import enumerate_pc as enumerate_pc
from .partition import part_profile as part_profile
from .sampling import refine_sample as refine_sample
from .sampling import profile_holds as profile_holds
from .sampling import sample_pc_ally as sample_pc_ally
from .sampling import sample_pc_masks as sample_pc_masks
from .sampling import refine_by_index as refine_by_index
from .sampling import lower_tail_bound as lower_tail_bound
from .sampling import membership_index as membership_index
from .partition import PartitionParameter as PartitionParameter
from .sampling import pc_avoid_probability as pc_avoid_probability
from .partition import expected_intersection as expected_intersection
from .sampling import mixture_avoid_probability as mixture_avoid_probability
from .sampling import pc_ally_avoid_probability as pc_ally_avoid_probability
from .sampling import negatively_correlated_tail as negatively_correlated_tail
