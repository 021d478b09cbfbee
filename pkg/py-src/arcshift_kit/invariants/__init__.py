from .compute import (
    fused_class,
    is_homogeneous_proper,
    linking_number,
    odd_crossings,
    odd_writhe,
    odd_writhe_component,
    odd_writhe_defined,
    parity_matrix,
    report,
    sign_e,
    vlk,
    vlk_matrix,
)
from .models import InvariantModel, InvariantReport, LinkingNumber, ParityMatrix

__all__ = [
    "InvariantModel",
    "InvariantReport",
    "LinkingNumber",
    "ParityMatrix",
    "fused_class",
    "is_homogeneous_proper",
    "linking_number",
    "odd_crossings",
    "odd_writhe",
    "odd_writhe_component",
    "odd_writhe_defined",
    "parity_matrix",
    "report",
    "sign_e",
    "vlk",
    "vlk_matrix",
]
