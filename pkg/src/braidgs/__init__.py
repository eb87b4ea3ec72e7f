"""Word problems for the positive braid monoid and the braid group via a
Groebner-Shirshov rewriting basis, with a generic completion engine and a
brute-force oracle to check it against."""

from .braid import (
    artin_presentation,
    bkl_presentation,
    coxeter_braid_presentation,
    gs_normalize,
    identity_suite,
    match_theorem_rule,
    theorem_rules,
)
from .completion import (
    CompletionConfig,
    bfs_class,
    complete,
    completed_system,
    interreduce,
    oracle_equal,
    verify_gs_up_to,
)
from .core import Presentation, deglex_compare, delta_word, format_word, parse_presentation, parse_word
from .garside import GarsideForm, delta_prefix, group_equal, group_is_identity, group_normal_form, positive_garside_form, tau
from .rewrite import RuleSystem, normalize

__version__ = "0.1.0"
