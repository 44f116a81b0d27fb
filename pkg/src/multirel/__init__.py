"""Peleg multirelations over small finite universes, with modal operators, star and a law checker."""

from .core import (
    MAX_UNIVERSE_SIZE, ElementSet, Multirelation, Universe, antidomain, constant, domain,
    is_subidentity, par_compose, seq_compose, union,
)
from .errors import (
    ConstraintError, FixpointError, MissingTable, MrelParseError, MultirelError,
    NotSubidentity, TermSyntaxError, UnboundVariable, UniverseMismatch, UniverseTooLarge,
)
from .fileio import dumps_env, load_env, loads_env, parse_relation, save_env
from .laws import check_law, gen_multirelations, get_law, list_laws
from .modal import box, box_direct, diamond, diamond_direct
from .star import approx_power, binary_star, star, star_trace
from .terms import Environment, eval_term, format_term, parse_term

__version__ = "0.1.0"
