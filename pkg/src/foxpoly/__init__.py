"""Fox-calculus polytopes, thickness and splitting complexity for
two-generator one-relator groups."""

__version__ = "0.1.0"

from .words import (Generator, NielsenMove, Presentation, Word, apply_nielsen,  # noqa: E402
                    cyclic_permute, cyclic_reduce, invert, is_primitive,
                    is_proper_power, parse_word)
from .foxcalc import (FoxTermList, FreeRingElement, chain_rule_check,  # noqa: E402
                      fox_derivative, fox_term_list, fundamental_formula_check)
from .abelian import (AbelianizationData, Character, abelian_image,  # noqa: E402
                      analyze_abelianization, make_character)
from .polytope import (IntegralPolytope, TranslationClass, VirtualPolytope,  # noqa: E402
                       class_equal, faces_and_duals, hull, minkowski_sum,
                       resolve_single, thickness, virtual_equal)
from .invariants import (Classification, Kind, MarkingReport, PolytopeInvariant,  # noqa: E402
                         SplittingReport, classify, compute_polytope, invariance_suite,
                         markings, splitting_complexity)
