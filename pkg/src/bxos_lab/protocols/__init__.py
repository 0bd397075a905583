from .base import Protocol as Protocol
from .engine import execute as execute
from .base import BitMessage as BitMessage
from .base import Transcript as Transcript
from .engine import Violation as Violation
from .base import SellerReply as SellerReply
from .base import MessageReader as MessageReader
from .engine import approx_ratio as approx_ratio
from .engine import check_truthful as check_truthful
from .bundle import TrivialProtocol as TrivialProtocol
from .bundle import VickreyProtocol as VickreyProtocol
from .engine import ProtocolOutcome as ProtocolOutcome
from .clause import RandomClauseProtocol as RandomClauseProtocol
from .exchange import BasisExchangeProtocol as BasisExchangeProtocol
