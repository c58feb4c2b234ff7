"""Acceptance gate: one group of tests per criterion, named test_criterion_<n>_*.

The terminal summary prints a PASS/FAIL line per criterion (see conftest).
"""

import math
import random
import time
from contextlib import contextmanager

import numpy as np
import pytest
import sympy

import golden
from cayleyspec.cayley import (
    adjacency_matrix,
    build_cayley,
    build_gamma,
    build_pancake,
    diameter,
    find_perfect_codes,
    gamma_generators,
    pancake_generators,
)
from cayleyspec.irreps import irrep_matrix, irreps, kostka, rank_of, rho_sum
from cayleyspec.lift import VoltageGraph
from cayleyspec.perms import (
    Permutation,
    compose,
    default_blocks,
    enumerate_sym,
    integer_partitions,
    young_subgroup,
)
from cayleyspec.quotient import (
    PhiMap,
    exact_rank,
    gamma_closed_form,
    gamma_family_generators,
    last_symbol_codes,
    pancake_closed_form,
    perfect_code_eigenvectors,
    perfect_code_multiplicity_bound,
    phi_partition,
    position_partition_quotient,
    quotient_matrix,
    verify_regular,
)
from cayleyspec.spectra import (
    assemble_regular,
    assemble_relative,
    compare,
    contains,
    expected_total,
    irrep_blocks,
    oracle_spectrum,
    quotient_matrix_spectrum,
    quotient_spectrum,
    values_close,
)

GOLD_TOL = 1e-9
ORACLE_TOL = 1e-6


@contextmanager
def within(seconds):
    start = time.perf_counter()
    yield
    elapsed = time.perf_counter() - start
    assert elapsed < seconds, f"took {elapsed:.2f}s, budget {seconds}s"


def p4_voltage():
    return VoltageGraph.singleton(pancake_generators(4))


def gamma332_voltage():
    return VoltageGraph.singleton(gamma_generators(3, 3, 2))


GOLDEN_GRAPHS = {
    "P4": (p4_voltage, golden.P4_SPECTRUM, golden.P4_IRREP_SPECTRA, golden.P4_QUOTIENT_SPECTRA),
    "Gamma332": (
        gamma332_voltage,
        golden.GAMMA332_SPECTRUM,
        golden.GAMMA332_IRREP_SPECTRA,
        golden.GAMMA332_QUOTIENT_SPECTRA,
    ),
}


def _h(mu):
    return young_subgroup(default_blocks(mu))


# -- 1 ---------------------------------------------------------------------


@pytest.mark.parametrize("name", sorted(GOLDEN_GRAPHS))
def test_criterion_1_full_spectrum(name):
    make, full, _, _ = GOLDEN_GRAPHS[name]
    with within(1.0):
        spec = assemble_regular(make())
    assert values_close(spec, full, GOLD_TOL), spec.pretty()
    assert spec.total == 24


# -- 2 ---------------------------------------------------------------------


@pytest.mark.parametrize("name", sorted(GOLDEN_GRAPHS))
def test_criterion_2_per_irrep_spectra(name):
    make, _, per_irrep, _ = GOLDEN_GRAPHS[name]
    with within(1.0):
        blocks = irrep_blocks(make())
    got = {str(b.irrep.shape): b.spectrum for b in blocks}
    assert set(got) == set(per_irrep)
    for shape, expected in per_irrep.items():
        assert values_close(got[shape], expected, GOLD_TOL), (shape, got[shape].pretty())


# -- 3 ---------------------------------------------------------------------


def test_criterion_3_rank_table():
    with within(5.0):
        reps = irreps(4)
        shapes = [str(r.shape) for r in reps]
        assert tuple(shapes) == golden.PARTITIONS_4
        for row, mu in zip(golden.RANKS_4, golden.PARTITIONS_4):
            H = _h(mu)
            ranks = tuple(rank_of(rho_sum(rho, H.elements), scale=len(H)) for rho in reps)
            assert ranks == row, mu
            assert ranks == tuple(kostka(rho.shape, mu) for rho in reps), mu


@pytest.mark.parametrize("name", sorted(GOLDEN_GRAPHS))
def test_criterion_3_relative_weights(name):
    make = GOLDEN_GRAPHS[name][0]
    for row, mu in zip(golden.RANKS_4, golden.PARTITIONS_4):
        weights = tuple(b.weight for b in irrep_blocks(make(), _h(mu)))
        assert weights == row


# -- 4 ---------------------------------------------------------------------


@pytest.mark.parametrize("name", sorted(GOLDEN_GRAPHS))
def test_criterion_4_quotient_spectra(name):
    make, _, _, table = GOLDEN_GRAPHS[name]
    with within(5.0):
        for mu, expected in table.items():
            spec = assemble_relative(make(), _h(mu))
            assert values_close(spec, expected, GOLD_TOL), (mu, spec.pretty())


# -- 5 ---------------------------------------------------------------------


def _oracle_families(n):
    fams = [("pancake", pancake_generators(n), build_pancake(n))]
    # the word graph Gamma(n-1, n, n-1) is built independently of any generators
    fams.append(("gamma-words", gamma_generators(n - 1, n, n - 1), build_gamma(n - 1, n, n - 1)))
    if n >= 3:
        gens = gamma_family_generators(n)
        fams.append(("gamma-mixed", gens, build_cayley(n, gens)))
    return fams


def _check_oracle(n):
    for label, gens, graph in _oracle_families(n):
        full = assemble_regular(VoltageGraph.singleton(gens))
        cmp = compare(full, oracle_spectrum(graph), ORACLE_TOL)
        assert cmp.equal, (label, n, cmp.mismatches)
        for mu in integer_partitions(n):
            cmp = compare(quotient_spectrum(gens, mu), quotient_matrix_spectrum(gens, mu), ORACLE_TOL)
            assert cmp.equal, (label, n, str(mu), cmp.mismatches)


def test_criterion_5_oracle_equivalence():
    with within(30.0):
        for n in range(2, 6):
            _check_oracle(n)


@pytest.mark.slow
def test_criterion_5_oracle_equivalence_n6():
    with within(600.0):
        _check_oracle(6)


# -- 6 ---------------------------------------------------------------------


def test_criterion_6_regularity():
    with within(120.0):
        for n in range(3, 7):
            for gens in (pancake_generators(n), gamma_family_generators(n)):
                graph = build_cayley(n, gens)
                for mu in integer_partitions(n):
                    part = phi_partition(graph, PhiMap.from_partition(mu))
                    reg = verify_regular(graph, part)
                    assert reg.regular, (n, str(mu), reg.witness)
                    S = part.characteristic_matrix()
                    AS = np.asarray(adjacency_matrix(graph, as_sparse=True) @ S)
                    assert np.array_equal(AS, S @ reg.B)
                    assert np.array_equal(reg.B, quotient_matrix(gens, mu).matrix)


# -- 7 ---------------------------------------------------------------------


def test_criterion_7_closed_forms():
    with within(5.0):
        for n in range(3, 10):
            cf = pancake_closed_form(n)
            assert np.array_equal(cf.B, position_partition_quotient(pancake_generators(n)).matrix)
            for lam, v in cf.eigenpairs:
                v = np.array(v)
                assert np.array_equal(cf.B @ v, lam * v)
            gf = gamma_closed_form(n)
            assert np.array_equal(gf.B, position_partition_quotient(gamma_family_generators(n)).matrix)
            assert set(gf.certified_eigenvalues) == {n - 1, n - 3, -1}

        cf = pancake_closed_form(5)
        assert cf.B.tolist() == golden.B5
        eig = sympy.Matrix(golden.B5).eigenvals()
        assert sorted(eig) == sorted(golden.B5_EIGENVALUES) and set(eig.values()) == {1}
        by_value = {lam: np.array(v) for lam, v in cf.eigenpairs}
        cols = np.array(golden.B5_EIGENVECTORS).T
        for lam, col in zip(golden.B5_EIGENVALUES, cols):
            assert exact_rank([by_value[lam], col]) == 1, lam
        assert (gamma_closed_form(5).B + np.eye(5, dtype=int)).tolist() == golden.B5_PRIME_PLUS_I


# -- 8 ---------------------------------------------------------------------


def test_criterion_8_perfect_codes():
    with within(60.0):
        for n in range(3, 6):
            graph = build_pancake(n)
            codes = find_perfect_codes(graph)
            assert len(codes) == n
            assert codes == sorted(last_symbol_codes(n))
            assert all(len(c) == math.factorial(n) // n for c in codes)
            assert exact_rank(perfect_code_eigenvectors(n, graph)) == n - 1
            assert perfect_code_multiplicity_bound(n) == n - 1
            m = assemble_regular(VoltageGraph.singleton(pancake_generators(n))).multiplicity(-1)
            assert m >= n - 1
            if n == 4:
                assert m == 4


# -- 9 ---------------------------------------------------------------------


def test_criterion_9_diameters():
    with within(120.0):
        for n, k in golden.PANCAKE_DIAMETERS.items():
            assert diameter(build_pancake(n)) == k, n


# -- 10 --------------------------------------------------------------------


def test_criterion_10_dimension_sum():
    for n in range(2, 9):
        assert sum(r.dim ** 2 for r in irreps(n)) == math.factorial(n)


def _check_pair(rho, p, q):
    a, b = irrep_matrix(rho, p), irrep_matrix(rho, q)
    assert np.allclose(irrep_matrix(rho, compose(p, q)), a @ b, atol=1e-12)
    assert np.allclose(a @ a.T, np.eye(rho.dim), atol=1e-12)


def test_criterion_10_exhaustive_small():
    with within(60.0):
        for n in range(2, 5):
            elems = list(enumerate_sym(n))
            for rho in irreps(n):
                for p in elems:
                    for q in elems:
                        _check_pair(rho, p, q)


def test_criterion_10_sampled():
    rng = random.Random(20261015)
    with within(60.0):
        for n in range(5, 8):
            reps = irreps(n)
            for _ in range(1000):
                p = Permutation(tuple(rng.sample(range(1, n + 1), n)))
                q = Permutation(tuple(rng.sample(range(1, n + 1), n)))
                _check_pair(rng.choice(reps), p, q)


# -- 11 --------------------------------------------------------------------


def test_criterion_11_bipartite_symmetry():
    spec = assemble_regular(gamma332_voltage())
    mirrored = type(spec)(tuple((-v, m) for v, m in spec.entries))
    assert compare(spec, mirrored, GOLD_TOL).equal


def test_criterion_11_multiplicity_conservation():
    with within(5.0):
        a, b = Permutation.parse("(12)", 4), Permutation.parse("(1234)", 4)
        two_vertex = VoltageGraph(2, 4, ((0, 1, a), (1, 0, b), (0, 0, compose(a, b)), (1, 1, b)))
        for vg in (p4_voltage(), gamma332_voltage(), two_vertex):
            assert assemble_regular(vg).total == expected_total(vg) == 24 * vg.k
            for mu in integer_partitions(4):
                H = _h(mu)
                assert assemble_relative(vg, H).total == expected_total(vg, H)


def test_criterion_11_refinement_nesting():
    with within(5.0):
        mus = integer_partitions(4)
        groups = {str(mu): set(_h(mu).elements) for mu in mus}
        pairs = [(f, c) for f in groups for c in groups if f != c and groups[f] <= groups[c]]
        assert len(pairs) >= 6
        for make in (p4_voltage, gamma332_voltage):
            vg = make()
            specs = {k: assemble_relative(vg, _h(k)) for k in groups}
            for fine, coarse in pairs:
                assert contains(specs[fine], specs[coarse]), (fine, coarse)
