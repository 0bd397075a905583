from .report import Check as Check
from .report import Report as Report
from .report import write_report as write_report
from .report import encode_report as encode_report
from .schema import parse_instance as parse_instance
from .models import ExperimentConfig as ExperimentConfig
from .schema import serialize_instance as serialize_instance
