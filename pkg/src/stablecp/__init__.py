"""Stable marriage as a single global constraint on a small propagation kernel."""
from .constraint import GSLists, StableMarriageConstraint, gs_lists_by_constraint
from .egs import egs_female, egs_male, full_gs_lists
from .instance import (
    Instance,
    InstanceError,
    build_inverse,
    encode_smi,
    generate_random,
    generate_random_smi,
    load_instance,
    parse_instance,
    render_instance,
)
from .kernel import Failure, IntVar, ReversibleInt, Solver
from .matching import Matching
from .oracle import enumerate_stable_bruteforce, is_stable
from .search import ScoreTables, enumerate_all, solve_sex_equal

__version__ = "0.1.0"
