"""Workbench for finite bounded involution lattices with a Brouwer complement.

Construct, validate, transform, enumerate and search the finite members
of the lattice classes built from a De Morgan involution ' and a Brouwer
complement ~ (pseudo-Kleene, BZ, BZ*, PBZ*, antiortholattices and their
relatives).
"""

from .core import (
    BoundedLattice,
    FiniteAlgebra,
    ValidationError,
    ValidationReport,
    boolean_lattice,
    canonical_form,
    chain_lattice,
    is_isomorphic,
    is_order_isomorphic,
    validate_tables,
)
from .axioms import classify, sharp_sets
from .terms import THEORY, evaluate, holds, holds_quasi, parse_statement
from .constructions import (
    blocks,
    cones,
    horizontal_sum,
    is_horizontal_sum_of_blocks,
    ordinal_sum,
    product,
    quotient,
    subalgebra_generated,
    twist1,
    twist2,
    twist_represent,
)
from .congruences import (
    Congruence,
    all_congruences,
    congruence_generated,
    is_congruence,
    is_directly_indecomposable,
    is_subdirectly_irreducible,
    principal_congruence,
)
from .enumeration import (
    CAPS,
    EnumerationSpec,
    claim_names,
    enumerate_all,
    enumerate_lattices,
    enumerate_pbz,
    search_counterexample,
    verify_over_corpus,
)
from .catalog import get as catalog_get
from .catalog import names as catalog_names
from .fileformat import dump, dumps, export_dot, load, loads

__version__ = "0.1.0"
