"""Domain models for the rotating cut-ring vacuum toolkit."""

from src.models.state import DimensionlessState, PhysicalRing, UnitScales
from src.models.spectrum import Mode, Regulator, RegulatorKind
from src.models.greens import GPoint, SplitConfig, SplitMethod
from src.models.zeropoint import EnhancementCoefficient, FieldKind, WindingNumber
from src.models.landscape import (
    Branch, Candidate, CandidateKind, ELTableRow, GridScanResult, Jump, MinimumReport,
)
from src.models.run_config import OutputFormat, RunConfig

__all__ = [
    "DimensionlessState", "PhysicalRing", "UnitScales",
    "Mode", "Regulator", "RegulatorKind",
    "GPoint", "SplitConfig", "SplitMethod",
    "EnhancementCoefficient", "FieldKind", "WindingNumber",
    "Branch", "Candidate", "CandidateKind", "ELTableRow", "GridScanResult", "Jump",
    "MinimumReport",
    "OutputFormat", "RunConfig",
]
