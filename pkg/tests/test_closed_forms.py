import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from core.closed_forms import (
    DomainError,
    energy_r2,
    energy_r3,
    pencil_r2,
    pencil_r3,
    r3_coefficients,
    r3_spectral_params,
    spectrum_r2,
    spectrum_r3,
)
from core.config import SpectraConfig
from core.graph import CaterpillarSpec, build_caterpillar
from core.hjoin import pencil_det
from core.oracle import randic_energy_oracle, randic_spectrum_oracle


@st.composite
def r3_params(draw, max_n=40):
    n = draw(st.integers(min_value=6, max_value=max_n))
    p = draw(st.integers(min_value=1, max_value=n - 5))
    q = draw(st.integers(min_value=1, max_value=n - p - 4))
    return n, p, q


# --- r = 2 ---

def test_double_star_energy_small():
    assert energy_r2(6, 2) == pytest.approx(10 / 3, abs=1e-12)
    assert energy_r2(4, 1) == pytest.approx(3.0, abs=1e-12)


def test_double_star_spectrum_t23():
    one, x, minus_x, minus_one = spectrum_r2(7, 2)
    assert (one, minus_one) == (1.0, -1.0)
    assert x == pytest.approx(math.sqrt(0.5))
    assert minus_x == -x


@pytest.mark.parametrize("n, p", [(3, 1), (6, 0), (6, 4)])
def test_double_star_domain(n, p):
    with pytest.raises(DomainError):
        energy_r2(n, p)


@pytest.mark.parametrize("n", range(4, 25))
def test_double_star_matches_oracle(n):
    for p in range(1, n - 2):
        g = build_caterpillar(CaterpillarSpec((p, n - p - 2)))
        assert abs(energy_r2(n, p) - randic_energy_oracle(g)) <= 1e-9


@settings(max_examples=60, deadline=None)
@given(st.integers(min_value=4, max_value=30).flatmap(
    lambda n: st.tuples(st.just(n), st.integers(min_value=1, max_value=n - 3))),
    st.floats(min_value=-2.0, max_value=2.0, allow_nan=False))
def test_double_star_pencil_factorization(np_pair, lam):
    n, p = np_pair
    spec = CaterpillarSpec((p, n - p - 2))
    assert abs(pencil_r2(n, p, lam) - pencil_det(spec, lam)) <= 1e-9


# --- r = 3 ---

def test_r3_coefficients_are_exact_integers():
    c = r3_coefficients(19, 5, 5)
    assert (c.eta, c.zeta, c.chi) == (6 * 6 * 8, 7 * (5 * 11 + 5), 5 * 5 * 6)
    assert all(isinstance(v, int) for v in (c.eta, c.zeta, c.chi))


def test_r3_coefficients_are_symmetric_in_the_end_stars():
    assert r3_coefficients(33, 9, 12) == r3_coefficients(33, 12, 9)


@pytest.mark.parametrize(
    "n, p, q, expected",
    [
        (19, 5, 5, 5.406880688),
        (19, 4, 4, 5.388854382),
        (19, 6, 6, 5.363498092),
        (21, 5, 5, 5.458735020),
        (35, 10, 10, 5.672394838),
        (50, 14, 14, 5.770056733),
        (33, 9, 9, 5.653986727),
        (33, 10, 11, 5.639354482),
        (33, 9, 8, 5.652375900),
        (33, 8, 10, 5.651878107),
    ],
)
def test_r3_energy_reference_values(n, p, q, expected):
    assert energy_r3(n, p, q) == pytest.approx(expected, abs=5e-9)


def test_r3_spectrum_shape():
    values = spectrum_r3(19, 5, 5)
    assert values[0] == 1.0 and values[-1] == -1.0
    assert values[1] > values[2] > 0
    assert values[3] == -values[2] and values[4] == -values[1]
    params = r3_spectral_params(r3_coefficients(19, 5, 5))
    # product of the squared roots is gamma, their sum 2 alpha
    assert values[1] ** 2 * values[2] ** 2 == pytest.approx(params.gamma)
    assert values[1] ** 2 + values[2] ** 2 == pytest.approx(2 * params.alpha)


@pytest.mark.parametrize("n, p, q", [(6, 0, 1), (6, 1, 0), (6, 2, 1), (10, 3, 4)])
def test_r3_domain(n, p, q):
    with pytest.raises(DomainError):
        energy_r3(n, p, q)


def test_smallest_r3_caterpillar():
    g = build_caterpillar(CaterpillarSpec((1, 1, 1)))
    assert energy_r3(6, 1, 1) == pytest.approx(randic_energy_oracle(g), abs=1e-9)


@settings(max_examples=200, deadline=None)
@given(r3_params())
def test_r3_energy_matches_oracle(params):
    n, p, q = params
    spec = CaterpillarSpec((p, n - p - q - 3, q))
    assert abs(energy_r3(n, p, q) - randic_energy_oracle(build_caterpillar(spec))) <= 1e-9


@settings(max_examples=60, deadline=None)
@given(r3_params(max_n=25))
def test_r3_spectrum_plus_zeros_matches_oracle(params):
    n, p, q = params
    spec = CaterpillarSpec((p, n - p - q - 3, q))
    zeros = [0.0] * (n - 6)
    expected = np.sort(np.array(list(spectrum_r3(n, p, q)) + zeros))[::-1]
    got = randic_spectrum_oracle(build_caterpillar(spec)).as_array()
    np.testing.assert_allclose(got, expected, atol=1e-9)


@settings(max_examples=100, deadline=None)
@given(r3_params(), st.floats(min_value=-2.0, max_value=2.0, allow_nan=False))
def test_r3_pencil_factorization(params, lam):
    n, p, q = params
    spec = CaterpillarSpec((p, n - p - q - 3, q))
    assert abs(pencil_r3(n, p, q, lam) - pencil_det(spec, lam)) <= 1e-8


def test_negative_discriminant_beyond_clamp_is_rejected():
    from core.closed_forms import R3Coefficients

    with pytest.raises(DomainError, match="negative discriminant"):
        r3_spectral_params(R3Coefficients(eta=1, zeta=1, chi=1), SpectraConfig())
