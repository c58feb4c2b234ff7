import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from cayleyspec.cayley import adjacency_matrix, build_pancake, gamma_generators, pancake_generators
from cayleyspec.irreps import irrep
from cayleyspec.lift import (
    VoltageGraph,
    base_matrix,
    expand_lift,
    expand_relative_lift,
    left_cosets,
    rho_base_matrix,
)
from cayleyspec.perms import Permutation, compose, default_blocks, integer_partitions, young_subgroup
from cayleyspec.quotient import PhiMap, project_vertex, quotient_matrix
from cayleyspec.spectra import assemble_regular, assemble_relative, compare, oracle_spectrum
from strategies import permutations


def P(text, n=4):
    return Permutation.parse(text, n)


def two_vertex():
    return VoltageGraph(2, 4, ((0, 1, P("(12)")), (1, 0, P("(1234)")), (0, 0, P("(243)")), (1, 1, P("(34)")), (0, 1, P("e"))))


def test_base_matrix_entries():
    vg = two_vertex()
    B = base_matrix(vg)
    assert [[len(B[u][v]) for v in range(2)] for u in range(2)] == [[1, 2], [1, 1]]
    assert rho_base_matrix(vg, irrep((3, 1))).shape == (6, 6)


def test_singleton_lift_is_cayley_graph():
    lifted = expand_lift(VoltageGraph.singleton(pancake_generators(4)))
    pancake = build_pancake(4)
    assert [v[1] for v in lifted.vertices] == list(pancake.vertices)
    assert np.array_equal(adjacency_matrix(lifted), adjacency_matrix(pancake))


def test_regular_lift_spectrum_two_vertices():
    vg = two_vertex()
    lifted = expand_lift(vg)
    assert lifted.order == 48
    assert compare(assemble_regular(vg), oracle_spectrum(lifted)).equal


@pytest.mark.parametrize("mu", [str(m) for m in integer_partitions(4)])
def test_relative_lift_spectrum_two_vertices(mu):
    vg = two_vertex()
    H = young_subgroup(default_blocks(mu))
    lifted = expand_relative_lift(vg, H)
    assert lifted.order == 2 * 24 // len(H)
    assert compare(assemble_relative(vg, H), oracle_spectrum(lifted)).equal


@pytest.mark.parametrize("mu", [str(m) for m in integer_partitions(4)])
def test_relative_lift_is_quotient(mu):
    gens = gamma_generators(3, 3, 2)
    H = young_subgroup(default_blocks(mu))
    lifted = expand_relative_lift(VoltageGraph.singleton(gens), H)
    q = quotient_matrix(gens, mu)
    phi = PhiMap.from_partition(mu)
    words = [project_vertex(Permutation(v[1]), phi) for v in lifted.vertices]
    order = [words.index(lab) for lab in q.labels]
    A = adjacency_matrix(lifted)
    assert np.array_equal(A[np.ix_(order, order)], q.matrix)


def test_left_cosets_partition_group():
    H = young_subgroup(default_blocks((2, 1, 1)))
    reps, owner = left_cosets(H)
    assert len(reps) == 12 and len(owner) == 24
    for j, g in enumerate(reps):
        assert all(owner[compose(g, h).images] == j for h in H.elements)
        assert g.images == min(compose(g, h).images for h in H.elements)


def test_json_round_trip():
    vg = VoltageGraph(2, 4, two_vertex().arcs, blocks=((1, 2), (3, 4)))
    again = VoltageGraph.from_json(vg.to_json())
    assert again == vg
    named = VoltageGraph.from_json(
        '{"degree": 3, "vertices": ["u", "v"], "arcs": [{"from": "u", "to": "v", "voltage": "(123)"}]}'
    )
    assert named.k == 2 and named.arcs[0][:2] == (0, 1)
    assert len(vg.subgroup()) == 4


def test_validation():
    with pytest.raises(ValueError):
        VoltageGraph(0, 3, ())
    with pytest.raises(ValueError):
        VoltageGraph(1, 3, ((0, 1, P("(12)", 3)),))
    with pytest.raises(ValueError):
        VoltageGraph(1, 3, ((0, 0, P("(12)", 4)),))
    with pytest.raises(ValueError):
        expand_lift(VoltageGraph.singleton([P("(12)", 9)]))


@settings(max_examples=20)
@given(st.lists(st.tuples(st.integers(0, 1), st.integers(0, 1), permutations(3)), min_size=1, max_size=5))
def test_random_voltage_graphs(arcs):
    vg = VoltageGraph(2, 3, tuple(arcs))
    assert compare(assemble_regular(vg), oracle_spectrum(expand_lift(vg))).equal
    H = young_subgroup(default_blocks((2, 1)))
    assert compare(assemble_relative(vg, H), oracle_spectrum(expand_relative_lift(vg, H))).equal
