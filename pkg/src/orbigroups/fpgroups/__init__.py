"""Finitely presented groups: words, coset enumeration, abelianization,
Reidemeister-Schreier rewriting and small permutation groups."""

from .coset import (COMPLETE, EXCEEDED, CosetTable, EnumerationExceeded, coset_enumerate,
                    group_order)
from .perm import (GroupAnalysis, OrderBoundExceeded, PermGroup, analyze, from_cycles,
                   regular_representation)
from .presentation import Presentation, PresentationSyntaxError
from .reidemeister import (SubgroupPresentation, schreier_presentation, subgroup_abelianization,
                           verify_subgroup_claim)
from .snf import AbelianInvariants, abelianization, smith_diagonal
from .words import Word, commutator, free_reduce, inverse, mul, power

__all__ = [
    "COMPLETE", "EXCEEDED", "CosetTable", "EnumerationExceeded", "coset_enumerate",
    "group_order", "GroupAnalysis", "OrderBoundExceeded", "PermGroup", "analyze",
    "from_cycles", "regular_representation", "Presentation", "PresentationSyntaxError",
    "SubgroupPresentation", "schreier_presentation", "subgroup_abelianization",
    "verify_subgroup_claim", "AbelianInvariants", "abelianization", "smith_diagonal",
    "Word", "commutator", "free_reduce", "inverse", "mul", "power",
]
