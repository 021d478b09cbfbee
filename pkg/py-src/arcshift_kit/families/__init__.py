from .generators import (
    DEFAULT_REJECTION_BUDGET,
    FAMILY_NAMES,
    FamilyName,
    FamilySpec,
    all_canonical,
    gen_canonical,
    gen_l2n1,
    gen_lpq,
    gen_random,
    gen_torus,
    gen_twin_trefoil,
    gen_virtual_hopf,
    gen_virtual_trefoil,
)

__all__ = [
    "DEFAULT_REJECTION_BUDGET",
    "FAMILY_NAMES",
    "FamilyName",
    "FamilySpec",
    "all_canonical",
    "gen_canonical",
    "gen_l2n1",
    "gen_lpq",
    "gen_random",
    "gen_torus",
    "gen_twin_trefoil",
    "gen_virtual_hopf",
    "gen_virtual_trefoil",
]
