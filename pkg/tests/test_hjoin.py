import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from core.graph import CaterpillarSpec, build_caterpillar, complete_graph, cycle_graph, path_graph, star_graph
from core.hjoin import (
    HJoinError,
    HJoinInstance,
    HJoinSlot,
    build_gamma_k,
    caterpillar_blocks,
    caterpillar_host,
    caterpillar_instance,
    caterpillar_randic_spectrum,
    characteristic_det,
    hjoin_graph,
    hjoin_randic_spectrum,
    pencil_det,
    schur_determinant,
    spine_degrees,
)
from core.oracle import randic_spectrum_oracle

specs = st.lists(st.integers(min_value=1, max_value=8), min_size=2, max_size=6).map(
    lambda p: CaterpillarSpec(tuple(p))
)
slots = st.one_of(
    st.integers(min_value=1, max_value=3).map(HJoinSlot.empty),
    st.integers(min_value=1, max_value=4).map(HJoinSlot.complete),
    st.integers(min_value=3, max_value=5).map(HJoinSlot.cycle),
)


# --- slots and instances ---

def test_slot_validation():
    with pytest.raises(HJoinError, match="order"):
        HJoinSlot(0, 0, ())
    with pytest.raises(HJoinError, match="regularity"):
        HJoinSlot(3, 3, (0.0, 0.0))
    with pytest.raises(HJoinError, match="remaining eigenvalues"):
        HJoinSlot(3, 0, (0.0,))


def test_slot_graphs():
    assert HJoinSlot.complete(4).graph() == complete_graph(4)
    assert HJoinSlot.cycle(5).graph() == cycle_graph(5)
    assert HJoinSlot.single().graph().n == 1
    with pytest.raises(HJoinError, match="custom"):
        HJoinSlot(2, 1, (-1.0,)).graph()


def test_instance_rejects_slot_count_mismatch_and_isolated_slots():
    with pytest.raises(HJoinError, match="slots were given"):
        HJoinInstance(path_graph(3), (HJoinSlot.single(),) * 2)
    with pytest.raises(HJoinError, match="isolated"):
        HJoinInstance(path_graph(1), (HJoinSlot.empty(2),))


def test_star_is_join_of_k1_and_empty_graph():
    inst = HJoinInstance(path_graph(2), (HJoinSlot.single(), HJoinSlot.empty(4)))
    assert hjoin_graph(inst) == star_graph(5)
    values = hjoin_randic_spectrum(inst).values
    np.testing.assert_allclose(values, [1.0, 0.0, 0.0, 0.0, -1.0], atol=1e-12)


def test_complete_bipartite_join():
    # K_{2,3} = K_2-host join of two empty graphs
    inst = HJoinInstance(path_graph(2), (HJoinSlot.empty(2), HJoinSlot.empty(3)))
    g = hjoin_graph(inst)
    assert g.edge_count == 6
    np.testing.assert_allclose(
        hjoin_randic_spectrum(inst).as_array(), randic_spectrum_oracle(g).as_array(), atol=1e-10
    )


@settings(max_examples=60, deadline=None)
@given(st.data())
def test_hjoin_spectrum_matches_oracle(data):
    k = data.draw(st.integers(min_value=2, max_value=4))
    host = path_graph(k) if data.draw(st.booleans()) else star_graph(k)
    inst = HJoinInstance(host, tuple(data.draw(slots) for _ in range(k)))
    reduced = hjoin_randic_spectrum(inst).as_array()
    dense = randic_spectrum_oracle(hjoin_graph(inst)).as_array()
    np.testing.assert_allclose(reduced, dense, atol=1e-9)


def test_gamma_k_diagonal_carries_regularity():
    inst = HJoinInstance(path_graph(2), (HJoinSlot.complete(3), HJoinSlot.single()))
    gamma = build_gamma_k(inst).entries
    # slot 0: d=2, N=1 ; slot 1: d=0, N=3
    assert gamma[0, 0] == pytest.approx(2 / 3)
    assert gamma[1, 1] == 0.0
    assert gamma[0, 1] == pytest.approx(math.sqrt(3) / math.sqrt(3 * 3))


# --- caterpillar reduction ---

def test_caterpillar_host_is_comb():
    host = caterpillar_host(3)
    assert host == build_caterpillar(CaterpillarSpec((1, 1, 1)))
    assert host.n == 6


@settings(max_examples=100, deadline=None)
@given(specs)
def test_caterpillar_instance_materializes_the_caterpillar(spec):
    inst = caterpillar_instance(spec)
    assert inst.order == spec.n
    assert hjoin_graph(inst).edge_count == spec.n - 1


@settings(max_examples=150, deadline=None)
@given(specs)
def test_reduction_matches_oracle(spec):
    reduced = caterpillar_randic_spectrum(spec).as_array()
    dense = randic_spectrum_oracle(build_caterpillar(spec)).as_array()
    np.testing.assert_allclose(reduced, dense, rtol=0, atol=1e-9)


@settings(deadline=None)
@given(specs)
def test_blocks_structure(spec):
    blocks = caterpillar_blocks(spec)
    r = spec.r
    np.testing.assert_allclose(blocks.omega1, 1.0 / np.sqrt(spine_degrees(spec)))
    np.testing.assert_allclose(blocks.omega2, np.sqrt(spec.p))
    np.testing.assert_allclose(blocks.B, np.diag(blocks.omega1 * blocks.omega2))
    gamma = blocks.gamma.entries
    np.testing.assert_array_equal(gamma[r:, r:], np.zeros((r, r)))
    np.testing.assert_array_equal(gamma[:r, :r], blocks.A)


def test_spine_degrees():
    assert spine_degrees(CaterpillarSpec((5, 6, 5))) == [6, 8, 6]


@settings(max_examples=100, deadline=None)
@given(specs, st.floats(min_value=-2.0, max_value=2.0, allow_nan=False))
def test_pencil_identity(spec, lam):
    assert abs(characteristic_det(spec, lam) - pencil_det(spec, lam)) <= 1e-8


@settings(max_examples=50, deadline=None)
@given(specs)
def test_pencil_vanishes_on_the_reduced_spectrum(spec):
    for value in caterpillar_randic_spectrum(spec).grouped():
        if abs(value[0]) > 1e-8:
            assert abs(pencil_det(spec, value[0])) <= 1e-8


@settings(max_examples=60)
@given(
    st.integers(min_value=1, max_value=4),
    st.integers(min_value=1, max_value=4),
    st.integers(min_value=0, max_value=2**31 - 1),
)
def test_schur_determinant(split, rest, seed):
    rng = np.random.default_rng(seed)
    n = split + rest
    m = rng.normal(size=(n, n)) + n * np.eye(n)
    assert schur_determinant(m, split) == pytest.approx(np.linalg.det(m), rel=1e-9)
