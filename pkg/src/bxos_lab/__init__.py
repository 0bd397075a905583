"""两买家 binary-XOS 组合拍卖困难实例实验室"""

from .config import Config as Config
from .config import lconfig as lconfig
from .setcore import ItemSet as ItemSet
from .construction import Basis as Basis
from .constants import Variant as Variant
from .setcore import RngStream as RngStream
from .construction import Instance as Instance
from .exception import LabException as LabException
from .valuation import BXOSValuation as BXOSValuation
from .valuation import build_valuations as build_valuations
from .construction import sample_instance as sample_instance

__version__ = "0.4.1"
