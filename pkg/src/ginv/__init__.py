"""Class-inverting automorphisms, double classes and the Drinfeld centre of finite permutation groups."""
from __future__ import annotations

__version__ = "0.1.0"

from .perm import Perm, parse_cycles, parse_perm_list
from .group import (
    Group,
    GroupTooLarge,
    centralizer,
    conjugacy_classes,
    element_order,
    generate_group,
)
from .catalog import GroupSpec, build, parse_spec, sylow_count
from .chartable import CharacterTable, all_characters_real, character_table
from .double_classes import (
    FactorizedPartition,
    double_classes,
    sn_double_class_invariant,
    sn_enumerate_factorized_partitions,
)
from .automorphisms import (
    Automorphism,
    SearchBudgetExceeded,
    automorphism_group,
    exists_class_inverting,
    exists_double_class_inverting,
    inner_automorphisms,
    is_ambivalent,
    is_class_inverting,
    is_class_preserving,
    is_double_class_inverting,
    is_double_class_preserving,
    is_doubly_ambivalent,
)
from .centre import (
    apply_autoequivalence,
    centre_character,
    centre_simples,
    diagonal_physical,
    dual_simple,
    modular_invariant_matrix,
    tensor_character,
)
from .sym_alt import CycleType, an_classification, an_self_inverse_parity, splits_in_alternating

__all__ = [name for name in dir() if not name.startswith("_") and name != "annotations"]
