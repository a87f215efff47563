"""Imbedding sums of graphs: counting unlabeled maps by symmetry."""
from .errors import CapExceeded, PreconditionError, VerificationError
from .graphs import Graph, RotationSystem, automorphism_group, complete, wheel
from .imbedding_sum import fixed_set_size, imbedding_sum, unlabeled_count
from .perm import CycleType, Permutation, PermutationGroup
from .polynomials import CycleIndexPolynomial, FigureSeries, WeightSeries

__all__ = [
    "CapExceeded", "PreconditionError", "VerificationError",
    "Graph", "RotationSystem", "automorphism_group", "complete", "wheel",
    "fixed_set_size", "imbedding_sum", "unlabeled_count",
    "CycleType", "Permutation", "PermutationGroup",
    "CycleIndexPolynomial", "FigureSeries", "WeightSeries",
]
