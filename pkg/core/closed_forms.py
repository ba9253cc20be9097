"""Closed-form Randić spectra and energies for double stars (r=2) and r=3 caterpillars."""

import math
from dataclasses import dataclass
from typing import Optional

from .config import SpectraConfig


class DomainError(ValueError):
    pass


@dataclass(frozen=True)
class R3Coefficients:
    """eta, zeta, chi of T(p, n-p-q-3, q), exact integers."""
    eta: int
    zeta: int
    chi: int


@dataclass(frozen=True)
class R3SpectralParams:
    alpha: float
    gamma: float
    beta: float


# ---------------------------------------------------------------------------
# r = 2: T(p, n-p-2)
# ---------------------------------------------------------------------------

def _check_r2(n: int, p: int) -> None:
    if n < 4:
        raise DomainError(f"double star needs n >= 4, got n={n}")
    if not 1 <= p <= n - 3:
        raise DomainError(f"double star needs 1 <= p <= n-3, got n={n}, p={p}")


def _r2_root(n: int, p: int) -> float:
    return math.sqrt(p * (n - p - 2) / ((p + 1) * (n - p - 1)))


def spectrum_r2(n: int, p: int) -> tuple[float, float, float, float]:
    _check_r2(n, p)
    x = _r2_root(n, p)
    return (1.0, x, -x, -1.0)


def energy_r2(n: int, p: int) -> float:
    _check_r2(n, p)
    return 2.0 + 2.0 * _r2_root(n, p)


def pencil_r2(n: int, p: int, lam: float) -> float:
    """Factored det(lambda^2 I_2 - lambda A - B^2) of the double star."""
    _check_r2(n, p)
    den = (p + 1) * (n - p - 1)
    return (lam * lam - 1.0) * (den * lam * lam - p * (n - p - 2)) / den


# ---------------------------------------------------------------------------
# r = 3: T(p, n-p-q-3, q)
# ---------------------------------------------------------------------------

def _check_r3(n: int, p: int, q: int) -> None:
    if p < 1 or q < 1:
        raise DomainError(f"end stars need p, q >= 1, got p={p}, q={q}")
    if n - p - q - 3 < 1:
        raise DomainError(
            f"middle star needs n-p-q-3 >= 1, got n={n}, p={p}, q={q} (middle={n - p - q - 3})"
        )


def r3_coefficients(n: int, p: int, q: int) -> R3Coefficients:
    _check_r3(n, p, q)
    return R3Coefficients(
        eta=(p + 1) * (q + 1) * (n - p - q - 1),
        zeta=(n - p - q - 2) * (q * (2 * p + 1) + p),
        chi=p * q * (n - p - q - 3),
    )


def r3_spectral_params(c: R3Coefficients, config: Optional[SpectraConfig] = None) -> R3SpectralParams:
    config = config or SpectraConfig()
    if c.eta <= 0:
        raise DomainError(f"eta must be positive, got {c.eta}")
    alpha = c.zeta / (2 * c.eta)
    gamma = c.chi / c.eta
    # alpha^2 - gamma = (zeta^2 - 4 eta chi) / (2 eta)^2, numerator exact
    disc = (c.zeta * c.zeta - 4 * c.eta * c.chi) / (4 * c.eta * c.eta)
    if disc < -config.discriminant_clamp:
        raise DomainError(f"negative discriminant {disc:.3e} for {c}")
    return R3SpectralParams(alpha=alpha, gamma=gamma, beta=math.sqrt(max(disc, 0.0)))


def _r3_roots(n: int, p: int, q: int, config: Optional[SpectraConfig]) -> tuple[float, float]:
    """sqrt(alpha + beta), sqrt(alpha - beta)."""
    params = r3_spectral_params(r3_coefficients(n, p, q), config)
    big = params.alpha + params.beta
    # product of the two squared roots is gamma
    small = params.gamma / big if big > 0 else 0.0
    return math.sqrt(big), math.sqrt(max(small, 0.0))


def spectrum_r3(n: int, p: int, q: int,
                config: Optional[SpectraConfig] = None) -> tuple[float, float, float, float, float, float]:
    hi, lo = _r3_roots(n, p, q, config)
    return (1.0, hi, lo, -lo, -hi, -1.0)


def energy_r3(n: int, p: int, q: int, config: Optional[SpectraConfig] = None) -> float:
    hi, lo = _r3_roots(n, p, q, config)
    return 2.0 * (1.0 + hi + lo)


def pencil_r3(n: int, p: int, q: int, lam: float) -> float:
    """(lambda^2 - 1)(eta lambda^4 - zeta lambda^2 + chi) / eta."""
    c = r3_coefficients(n, p, q)
    l2 = lam * lam
    return (l2 - 1.0) * (c.eta * l2 * l2 - c.zeta * l2 + c.chi) / c.eta
