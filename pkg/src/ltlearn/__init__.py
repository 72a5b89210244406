"""Passive learning of LTL formulas over finite words."""
__version__ = "0.1.0"

from .formula import (  # noqa: E402
    FALSE, TRUE, And, Bottom, Eventually, Formula, Globally, Letter, NegLetter,
    Next, Op, Or, Top, Until, dualize, evaluate, formula_size, in_fragment,
    parse_operators,
)
from .syntax import FormulaSyntaxError, format_formula, parse  # noqa: E402
from .semantics import SemanticsTable, TraceBatch, semantics_table  # noqa: E402
from .sample import (  # noqa: E402
    LearnResult, Sample, SampleError, Status, common_weak_subword_avoiding,
    is_non_repeating, is_subword, is_weak_subword, load_sample, save_sample,
    separates,
)
from .exact import ResourceExhaustedError, learn_exact, learn_minimal  # noqa: E402
from .patterns import (  # noqa: E402
    Pattern, greedy_approx_xand, normalize_to_pattern, pattern_to_formula,
    remove_disjunctions,
)
from .fatterns import (  # noqa: E402
    Fattern, FandCharacterization, characterize_Fand, fattern_of, forest_formula,
    learn_Fand_heuristic, normalize_Fand, normalize_Fand_single_positive,
    shrink_chain,
)
from .degenerate import (  # noqa: E402
    construct_separator, learn_bool, learn_For_fixed, learn_Gand, learn_unary,
)
from .dispatch import learn  # noqa: E402
