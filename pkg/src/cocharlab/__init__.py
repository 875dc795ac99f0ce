"""Y-proper graded cocharacters of upper-triangular matrix algebras.

The package combines a closed combinatorial formula for the phi-grading,
printed reference tables, and a brute-force oracle that evaluates proper
multilinear polynomials on graded matrix units.
"""

from .characters import CharacterSum, MultiCharacter, NotACharacter, lr_product
from .engine import (NotGoodMultidegree, dominance_compare, gamma_n,
                     ordinary_multiplicity_bound, strip_sum, xi_multidegree, xi_n)
from .grading import (ElementaryGrading, bad_sequences, is_good_sequence,
                      phi_good_criterion, t_ideal_generators)
from .oracle import (CapExceeded, GradedMatrixAlgebra, gamma_oracle, spanning_products,
                     xi_n_oracle, xi_oracle)
from .partitions import hook_dimension, partitions_of
from .products import ProperProduct, parse_product
from .published import PatternNotCovered, published_character, published_value
from .report import DiscrepancyReport, Verdict, emit_report

__all__ = [
    "CapExceeded", "CharacterSum", "DiscrepancyReport", "ElementaryGrading",
    "GradedMatrixAlgebra", "MultiCharacter", "NotACharacter", "NotGoodMultidegree",
    "PatternNotCovered", "ProperProduct", "Verdict", "bad_sequences", "dominance_compare",
    "emit_report", "gamma_n", "gamma_oracle", "hook_dimension", "is_good_sequence",
    "lr_product", "ordinary_multiplicity_bound", "parse_product", "partitions_of",
    "phi_good_criterion", "published_character", "published_value", "spanning_products",
    "strip_sum", "t_ideal_generators", "xi_multidegree", "xi_n", "xi_n_oracle",
    "xi_oracle",
]
