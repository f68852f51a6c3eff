"""Finitely presented groups: words, presentations, abelianization, free subgroups."""
from .colimit import INF, SupernaturalDescriptor, colimit_rank1, factorize
from .finite import FiniteGroup, ResourceLimit, count_homs, cyclic_group, symmetric_group, target_group
from .nielsen import SubgroupGraph, is_nielsen_reduced, nielsen_reduce, subgroup_rank
from .presentation import (AbelianDescriptor, GroupPresentation, TietzeResult, abelian_invariants,
                           abelianize, relabel, tietze_reduce, tietze_simplify)
from .snf import determinant, hom_count_to_cyclic, smith_diagonal
from .system import (DirectSystem, GroupMorphism, ImageRank, InvalidMorphism, is_free_automorphism,
                     make_morphism, simplified_map, stable_image_rank)
from .words import GroupWord, free_reduce, parse_word

__all__ = [
    "INF", "SupernaturalDescriptor", "colimit_rank1", "factorize",
    "FiniteGroup", "ResourceLimit", "count_homs", "cyclic_group", "symmetric_group", "target_group",
    "SubgroupGraph", "is_nielsen_reduced", "nielsen_reduce", "subgroup_rank",
    "AbelianDescriptor", "GroupPresentation", "TietzeResult", "abelian_invariants", "abelianize",
    "relabel", "tietze_reduce", "tietze_simplify",
    "determinant", "hom_count_to_cyclic", "smith_diagonal",
    "DirectSystem", "GroupMorphism", "ImageRank", "InvalidMorphism", "is_free_automorphism",
    "make_morphism", "simplified_map", "stable_image_rank",
    "GroupWord", "free_reduce", "parse_word",
]
