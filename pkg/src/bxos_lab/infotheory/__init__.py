from .measures import tvd as tvd
from .measures import entropy as entropy
from .identities import TOLERANCE as TOLERANCE
from .measures import mutual_info as mutual_info
from .measures import Divergences as Divergences
from .measures import divergences as divergences
from .identities import random_joint as random_joint
from .measures import kl_divergence as kl_divergence
from .identities import IdentityCheck as IdentityCheck
from .measures import tvd_max_events as tvd_max_events
from .identities import IdentityReport as IdentityReport
from .joint import JointDistribution as JointDistribution
from .measures import expected_kl_form as expected_kl_form
from .identities import verify_identities as verify_identities
from .measures import conditional_entropy as conditional_entropy
