from .analysis import (
    half_type_witness,
    has_p_defect_zero,
    index_two_subgroups,
    is_half_type,
    nonvanishing_elements,
    pnv,
    pv,
    quotient_pv_check,
    table_of,
    vanishing_elements,
    vanishing_set,
    verify_defect_zero_vanishing,
)
from .builtins import (
    BUILTINS,
    alternating,
    builtin,
    cyclic,
    dihedral,
    extraspecial,
    frobenius,
    load_group,
    parse_group_text,
    quaternion8,
    symmetric,
)
from .chartable import GroupCharacterTable, character_table, conjugacy_classes
from .perm import (
    DEFAULT_CAP,
    PermGroup,
    center,
    derived_series,
    derived_subgroup,
    direct_product,
    is_normal,
    is_solvable,
    quotient,
)

__all__ = [
    "half_type_witness",
    "has_p_defect_zero",
    "index_two_subgroups",
    "is_half_type",
    "nonvanishing_elements",
    "pnv",
    "pv",
    "quotient_pv_check",
    "table_of",
    "vanishing_elements",
    "vanishing_set",
    "verify_defect_zero_vanishing",
    "BUILTINS",
    "alternating",
    "builtin",
    "cyclic",
    "dihedral",
    "extraspecial",
    "frobenius",
    "load_group",
    "parse_group_text",
    "quaternion8",
    "symmetric",
    "DEFAULT_CAP",
    "PermGroup",
    "center",
    "derived_series",
    "derived_subgroup",
    "direct_product",
    "is_normal",
    "is_solvable",
    "quotient",
    "GroupCharacterTable",
    "character_table",
    "conjugacy_classes",
]
