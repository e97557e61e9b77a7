"""Conjugacy-class graphs of normal subgroups, with the machinery to build
the groups and verify the structural theorems about them."""

from .constructions import construct
from .core import (
    GClass,
    center,
    centralizer,
    commutator_subgroup,
    conjugacy_classes,
    conjugacy_classes_in,
    element_primary_parts,
    normal_subgroups,
    quotient,
    sylow_subgroup,
)
from .errors import CapExceeded, ClassGraphError, InputError
from .fp import parse_presentation, realize, realize_text, todd_coxeter
from .graphs import ClassGraph, PrimeGraph, build_class_graph, build_prime_graph, graph_metrics
from .group import FiniteGroup, Subgroup
from .harness import CorpusSpec, generate_corpus, run_corpus, run_golden_examples, verify_pair
from .perm import Permutation, closure
from .structure import StructureReport, classify_disconnected

__version__ = "0.1.0"
