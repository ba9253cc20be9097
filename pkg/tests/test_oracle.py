import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from core.config import SpectraConfig
from core.graph import (
    CaterpillarSpec,
    Graph,
    SymmetricMatrix,
    build_caterpillar,
    complete_graph,
    cycle_graph,
    empty_graph,
    path_graph,
    star_graph,
)
from core.oracle import (
    ConvergenceError,
    Spectrum,
    adjacency_energy,
    adjacency_spectrum,
    randic_energy_oracle,
    randic_spectrum_oracle,
    symmetric_eigenvalues,
)

MAX_DIMENSION = 9


@st.composite
def symmetric_matrices(draw):
    k = draw(st.integers(min_value=1, max_value=MAX_DIMENSION))
    a = draw(arrays(np.float64, (k, k),
                    elements=st.floats(min_value=-10.0, max_value=10.0,
                                       allow_nan=False, allow_subnormal=False)))
    return SymmetricMatrix((a + a.T) / 2.0)


@settings(max_examples=150, deadline=None)
@given(symmetric_matrices())
def test_jacobi_matches_lapack(m):
    got = symmetric_eigenvalues(m).as_array()
    expected = np.sort(np.linalg.eigvalsh(m.entries))[::-1]
    np.testing.assert_allclose(got, expected, rtol=0, atol=1e-9)


@settings(max_examples=50, deadline=None)
@given(symmetric_matrices())
def test_jacobi_preserves_trace(m):
    assert math.isclose(sum(symmetric_eigenvalues(m).values), m.trace(), abs_tol=1e-9)


def test_jacobi_trivial_sizes():
    assert symmetric_eigenvalues(SymmetricMatrix(np.zeros((0, 0)))).values == ()
    assert symmetric_eigenvalues(SymmetricMatrix(np.array([[2.5]]))).values == (2.5,)


@pytest.mark.filterwarnings("error")
def test_jacobi_tiny_off_diagonal_raises_no_overflow_warning():
    a = np.array([[0.0, 1.0, 1e-308], [1.0, 0.0, 0.0], [1e-308, 0.0, 100.0]])
    values = symmetric_eigenvalues(SymmetricMatrix(a)).values
    np.testing.assert_allclose(values, [100.0, 1.0, -1.0], atol=1e-12)


def test_jacobi_raises_when_sweeps_run_out():
    m = SymmetricMatrix(np.array([[1.0, 2.0, 3.0], [2.0, 4.0, 5.0], [3.0, 5.0, 6.0]]))
    with pytest.raises(ConvergenceError, match="did not converge"):
        symmetric_eigenvalues(m, SpectraConfig(jacobi_max_sweeps=0))


def test_spectrum_is_sorted_descending():
    s = Spectrum.from_values([0.5, -1.0, 1.0, 0.0])
    assert s.values == (1.0, 0.5, 0.0, -1.0)
    assert s.energy() == 2.5
    assert len(s) == 4


def test_spectrum_grouping_and_multiplicity():
    s = Spectrum.from_values([1.0, 0.0, 1e-12, -1e-12, -1.0])
    assert s.multiplicity(0.0) == 3
    assert s.multiplicity(1.0) == 1
    assert s.multiplicity(0.5) == 0
    assert [count for _, count in s.grouped()] == [1, 3, 1]


def test_spectrum_union():
    s = Spectrum.from_values([1.0, -1.0]).union([0.0, 0.0], Spectrum.from_values([0.5]))
    assert s.values == (1.0, 0.5, 0.0, 0.0, -1.0)


# --- Randić energies of named graphs ---

def test_k2_energy_is_two():
    assert randic_energy_oracle(path_graph(2)) == pytest.approx(2.0, abs=1e-12)


@pytest.mark.parametrize("n", [3, 5, 8])
def test_star_and_complete_graphs_have_energy_two(n):
    assert randic_energy_oracle(star_graph(n)) == pytest.approx(2.0, abs=1e-9)
    assert randic_energy_oracle(complete_graph(n)) == pytest.approx(2.0, abs=1e-9)


def test_edgeless_graph_has_zero_energy():
    assert randic_energy_oracle(empty_graph(4)) == 0.0
    assert adjacency_energy(empty_graph(4)) == 0.0


def test_cycle_adjacency_spectrum():
    n = 7
    expected = sorted((2 * math.cos(2 * math.pi * k / n) for k in range(n)), reverse=True)
    np.testing.assert_allclose(adjacency_spectrum(cycle_graph(n)).as_array(), expected, atol=1e-10)


def test_largest_randic_eigenvalue_is_one():
    g = build_caterpillar(CaterpillarSpec((3, 1, 4, 1)))
    assert randic_spectrum_oracle(g).values[0] == pytest.approx(1.0, abs=1e-9)


@pytest.mark.parametrize("n", [4, 5, 10, 17, 30])
def test_path_energy_relation(n):
    lhs = randic_energy_oracle(path_graph(n))
    rhs = 2.0 + 0.5 * adjacency_energy(path_graph(n - 2))
    assert abs(lhs - rhs) <= 1e-8


def test_disconnected_graph_spectrum_is_union():
    g = Graph(5, frozenset({(0, 1), (2, 3), (3, 4)}))
    s = randic_spectrum_oracle(g)
    expected = Spectrum.from_values([1.0, -1.0, 1.0, 0.0, -1.0])
    np.testing.assert_allclose(s.as_array(), expected.as_array(), atol=1e-10)
