"""Exact computation in the group algebra of the symmetric group.

Rook sums, row-to-row sums, antisymmetrizers, the two complementary chains
of ideals they generate, their actions on tensor modules, and the abstract
algebra carrying the rook-sum product rule.  All arithmetic is exact, over
the rationals or a prime field.
"""

from snalg.dalg import DElement
from snalg.exactla import GF, QQ, DenseMatrix, SpanBasis
from snalg.groupalg import AlgebraElement
from snalg.perm import Permutation
from snalg.rook import Subset
from snalg.setdecomp import SetDecomposition

__version__ = "0.1.0"

__all__ = [
    "Permutation",
    "QQ",
    "GF",
    "DenseMatrix",
    "SpanBasis",
    "AlgebraElement",
    "SetDecomposition",
    "Subset",
    "DElement",
    "__version__",
]
