"""Star-complement-star state complexity lab."""
from .automata import (Dfa, EpsNfa, as_nfa, bits, canonical, complement, determinize,
                       equivalent, members, minimize, run, with_epsilon, without_epsilon)
from .errors import InputError, StateCapExceeded
from .pipeline import (CanonicalForm, PipelineReport, antichain_min, canonical_form_check,
                       n3_nfa, orbit, plus_complement_plus, plus_nfa, pruned_determinize,
                       pruned_step, star_complement_star)

__all__ = [
    "Dfa", "EpsNfa", "as_nfa", "bits", "canonical", "complement", "determinize", "equivalent",
    "members", "minimize", "run", "with_epsilon", "without_epsilon", "InputError",
    "StateCapExceeded", "CanonicalForm", "PipelineReport", "antichain_min",
    "canonical_form_check", "n3_nfa", "orbit", "plus_complement_plus", "plus_nfa",
    "pruned_determinize", "pruned_step", "star_complement_star",
]
