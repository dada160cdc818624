"""Decision procedures for copyful streaming string transducers.

The package evaluates register transducers, builds synchronized products,
translates equivalence and functionality questions into morphism sequence
equivalence and back, and decides the latter either by bounded search or
by a complete polynomial ideal chain.
"""

from .errors import (
    DomainViolation,
    InternalSoundnessError,
    ParseError,
    ToolkitError,
    ValidationError,
)
from .formats import parse_hdt0l, parse_input_word, parse_sst, print_hdt0l, print_sst
from .hdt0l import Hdt0lInstance, bounded_validity, derive
from .algebra import decide_hdt0l
from .nfa import Nfa, nfa_equivalent, nfa_intersection
from .reductions import (
    ReductionTrace,
    bisst_to_hdt0l,
    check_diagonal,
    check_equivalent,
    check_functional,
    hdt0l_to_sst_pair,
    replay_sequence,
)
from .report import Report
from .sst import (
    Run,
    Sst,
    Transition,
    accepting_runs,
    copyless_violation,
    domain_automaton,
    evaluate,
    is_copyless,
    output_of_run,
    product,
    run_substitution,
)
from .verdict import EngineConfig, Verdict, VerdictKind
from .words import Alphabet, Letter, Morphism, Substitution, Word, union_alphabet

__version__ = "0.1.0"

__all__ = [
    "Alphabet",
    "DomainViolation",
    "EngineConfig",
    "Hdt0lInstance",
    "InternalSoundnessError",
    "Letter",
    "Morphism",
    "Nfa",
    "ParseError",
    "ReductionTrace",
    "Report",
    "Run",
    "Sst",
    "Substitution",
    "ToolkitError",
    "Transition",
    "ValidationError",
    "Verdict",
    "VerdictKind",
    "Word",
    "accepting_runs",
    "bisst_to_hdt0l",
    "bounded_validity",
    "check_diagonal",
    "check_equivalent",
    "check_functional",
    "copyless_violation",
    "decide_hdt0l",
    "derive",
    "domain_automaton",
    "evaluate",
    "hdt0l_to_sst_pair",
    "is_copyless",
    "nfa_equivalent",
    "nfa_intersection",
    "output_of_run",
    "parse_hdt0l",
    "parse_input_word",
    "parse_sst",
    "print_hdt0l",
    "print_sst",
    "product",
    "replay_sequence",
    "run_substitution",
    "union_alphabet",
]
