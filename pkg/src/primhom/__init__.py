"""Character-table tools for deciding Property II of finite p-groups."""

__version__ = "0.1.0"

from .cyclotomic import Cyclotomic, E  # noqa: E402
from .perm import Group, Permutation, generate_group, conjugacy_classes  # noqa: E402
from .chartab import CharacterTable, character_table  # noqa: E402
from .decide import PropertyIIReport, decide_property_ii  # noqa: E402

__all__ = [
    "Cyclotomic",
    "E",
    "Group",
    "Permutation",
    "generate_group",
    "conjugacy_classes",
    "CharacterTable",
    "character_table",
    "PropertyIIReport",
    "decide_property_ii",
]
