"""Spectra of Cayley digraphs on symmetric groups: regular partitions,
quotient matrices, and assembly from irreducible representations."""

from .cayley import (
    Digraph,
    adjacency_matrix,
    build_cayley,
    build_gamma,
    build_pancake,
    diameter,
    find_perfect_codes,
    gamma_generators,
    pancake_generators,
)
from .irreps import Irrep, irrep, irrep_matrix, irreps, kostka, rank_of, rho_sum
from .lift import VoltageGraph, base_matrix, expand_lift, expand_relative_lift, rho_base_matrix
from .perms import (
    ClassLabel,
    IntegerPartition,
    Permutation,
    Subgroup,
    compose,
    enumerate_sym,
    integer_partitions,
    permutation_matrix,
    words_with_content,
    young_subgroup,
)
from .quotient import (
    PhiMap,
    QuotientMatrix,
    gamma_closed_form,
    lift_eigenvector,
    pancake_closed_form,
    perfect_code_multiplicity_bound,
    phi_partition,
    position_partition_quotient,
    project_vertex,
    quotient_matrix,
    verify_regular,
)
from .spectra import (
    Spectrum,
    assemble_regular,
    assemble_relative,
    cluster,
    compare,
    eigenvalues,
    oracle_spectrum,
    quotient_spectrum,
)

__version__ = "0.1.0"
