"""mtlkit: a finite-model workbench for MTL and its algebras."""

from types import ModuleType as _Module

from .algebra import (
    AlgebraReport, FiniteAlgebra, boolean2, check_axioms, contractivity_index,
    goedel, heyting_diamond_with_top, is_chain, is_involutive, is_n_contractive,
    is_smtl, is_well_connected, lukasiewicz, make_algebra, nilpotent_minimum,
    residuate, trivial, verify,
)
from .catalog import builtin, list_catalog, load, load_span, loads, dumps, resolve, save
from .constructions import ordinal_sum, product, quotient, subalgebra_generated
from .enumeration import census, chains_upto, enumerate_chains, naive_chain_tables
from .errors import MTLError
from .filters import (
    Filter, all_filters, congruence_of, generated_filter, is_filter,
    is_simple, is_subdirectly_irreducible, make_filter, monolith, principal_filter,
)
from .formula import (
    BOT, TOP, Bot, Conj, Formula, Impl, Meet, Var, axiom_schemata, disj, neg,
    parse, power, show,
)
from .modeltheory import (
    AmalgamationSpan, are_isomorphic, find_amalgam, find_embeddings,
    find_joint_embedding,
)
from .morphism import Morphism, compose, hom_violation, make_morphism
from .relations import PropertyGraph, default_graph
from .scenarios import SCENARIOS, Verdict, run_all, run_scenario
from .semantics import (
    consequence, evaluate, find_interpolant, is_tautology, local_deduction_check,
    value_table,
)

__version__ = "0.1.0"

__all__ = sorted(name for name, value in globals().items()
                 if not name.startswith("_") and not isinstance(value, _Module))
