"""Immersions into 2-complexes, classified through the inverse monoid M(X, P)."""
from .core import (EMPTY, GroupPresentationText, Kind, Letter, ParseError, Presentation, Word,
                   concat, group_image, invert)
from .graph import (Automaton, GraphError, LabeledGraph, act, canonical_code, fold, iso_rooted,
                    iso_unrooted, member)
from .stephen import (DEFAULT_BUDGET, BudgetExhausted, SaturationReport, coset_automaton,
                      flower, linear_automaton, saturate, schutzenberger)
from .order import conjugate, conjugator, is_idempotent, leq, submonoid_member, word_eq
from .complex import (ComplexError, Morphism, TwoCell, TwoComplex, bouquet, complex_of_automaton,
                      coset_complex, graph_of_complex, immersion, immersions, is_covering,
                      isomorphism, rebase_boundary, stabilizer)

__version__ = "0.1.0"
