"""Non-cyclic graphs of finite groups: construction, invariants and checks."""

from .catalog import CatalogEntry, get_group, noncyclic_catalog, standard_catalog
from .domination import DominatingSetResult, brute_force_gamma, domination_number, is_dominating_set
from .graphs import ComponentDescriptor, ComponentKind, SimpleGraph, components
from .groups import FiniteGroup, make_group
from .noncyclic import GroupIsCyclic, NonCyclicGraph, build_noncyclic_graph, is_acceptable, noncyclic_complement
from .theorems import VerificationReport, run_all

__version__ = "0.1.0"
