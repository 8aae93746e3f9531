"""Exact teaching-dimension solvers for finite concept classes, plus finite
truncations of the enumeration gadgets used to classify them."""

from .core import (INF, Concept, ConceptClass, Domain, DomainOverflow, Label, LabeledExample,
                   Sample, consistent, disjoint_union, join, pair, unpair)
from .classfile import ParseError, emit_class, load_class, parse_class, save_class
from .td import (is_distinguishing_set, is_minimal_distinguishing_set, positive_teaching_dimension,
                 td_at_most, td_of_class, tdplus_of_class, teaching_dimension)
from .xtd import min_specifying_set, worst_hypothesis, xtd_of_class, xtdplus_of_class
from .rtd import (TeachingPlan, TeachingSequence, canonical_sequence, rtd1plus, rtd1plus_at_most,
                  rtd_exact, validate_sequence)

__version__ = "0.1.0"
