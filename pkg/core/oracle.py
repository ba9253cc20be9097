"""Brute-force ground truth: dense cyclic Jacobi eigensolver and graph energies."""

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Optional

import numpy as np

from .config import SpectraConfig
from .graph import Graph, SymmetricMatrix, adjacency_matrix, randic_matrix


class ConvergenceError(RuntimeError):
    pass


@dataclass(frozen=True)
class Spectrum:
    """Multiset of real eigenvalues, sorted non-increasing."""
    values: tuple[float, ...]

    @classmethod
    def from_values(cls, values: Iterable[float]) -> "Spectrum":
        return cls(tuple(sorted((float(v) for v in values), reverse=True)))

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self):
        return iter(self.values)

    def as_array(self) -> np.ndarray:
        return np.array(self.values)

    def energy(self) -> float:
        return float(sum(abs(v) for v in self.values))

    def union(self, *others: "Spectrum | Iterable[float]") -> "Spectrum":
        merged = list(self.values)
        for other in others:
            merged.extend(other)
        return Spectrum.from_values(merged)

    def grouped(self, radius: float = 1e-8) -> list[tuple[float, int]]:
        """Cluster neighbouring values within `radius`; returns (mean, multiplicity)."""
        groups: list[list[float]] = []
        for v in self.values:
            if groups and groups[-1][-1] - v <= radius:
                groups[-1].append(v)
            else:
                groups.append([v])
        return [(sum(g) / len(g), len(g)) for g in groups]

    def multiplicity(self, value: float, radius: float = 1e-8) -> int:
        for mean, count in self.grouped(radius):
            if abs(mean - value) <= radius:
                return count
        return 0


@lru_cache(maxsize=64)
def _pairings(k: int) -> tuple[tuple[np.ndarray, np.ndarray], ...]:
    """Round-robin schedule of disjoint (p, q) pairs covering every p < q once."""
    m = k + (k % 2)
    players = list(range(m))
    rounds = []
    for _ in range(m - 1):
        pairs = []
        for i in range(m // 2):
            a, b = players[i], players[m - 1 - i]
            if a < k and b < k:
                pairs.append((min(a, b), max(a, b)))
        if pairs:
            ps, qs = zip(*pairs)
            rounds.append((np.array(ps), np.array(qs)))
        players = [players[0], players[-1]] + players[1:-1]
    return tuple(rounds)


def _off_norm(a: np.ndarray) -> float:
    off = a - np.diag(np.diag(a))
    return float(np.sqrt(np.sum(off * off)))


def symmetric_eigenvalues(m: SymmetricMatrix, config: Optional[SpectraConfig] = None) -> Spectrum:
    """All eigenvalues of a real symmetric matrix by cyclic Jacobi rotations.

    Each sweep visits every off-diagonal pair once in round-robin order; the
    pairs of one round are disjoint, so their rotations are applied together.
    Stops when the off-diagonal Frobenius norm drops below `jacobi_tol`.
    """
    config = config or SpectraConfig()
    a = np.array(m.entries, dtype=float)
    k = a.shape[0]
    if k <= 1:
        return Spectrum.from_values(np.diag(a))

    rounds = _pairings(k)
    for _ in range(config.jacobi_max_sweeps):
        if _off_norm(a) < config.jacobi_tol:
            return Spectrum.from_values(np.diag(a))
        for p, q in rounds:
            apq = a[p, q]
            app = a[p, p]
            aqq = a[q, q]
            active = apq != 0.0
            with np.errstate(divide="ignore", invalid="ignore", over="ignore"):
                tau = np.where(active, (aqq - app) / (2.0 * apq), 0.0)
            t = np.where(tau >= 0.0, 1.0, -1.0) / (np.abs(tau) + np.hypot(1.0, tau))
            t = np.where(active, t, 0.0)
            c = 1.0 / np.hypot(1.0, t)
            s = t * c

            col_p = a[:, p].copy()
            col_q = a[:, q].copy()
            a[:, p] = c * col_p - s * col_q
            a[:, q] = s * col_p + c * col_q
            row_p = a[p, :].copy()
            row_q = a[q, :].copy()
            a[p, :] = c[:, None] * row_p - s[:, None] * row_q
            a[q, :] = s[:, None] * row_p + c[:, None] * row_q
            a[p, q] = 0.0
            a[q, p] = 0.0
        a = 0.5 * (a + a.T)

    if _off_norm(a) < config.jacobi_tol:
        return Spectrum.from_values(np.diag(a))
    raise ConvergenceError(
        f"Jacobi did not converge in {config.jacobi_max_sweeps} sweeps "
        f"(off-diagonal norm {_off_norm(a):.3e}, k={k})"
    )


def randic_spectrum_oracle(g: Graph, config: Optional[SpectraConfig] = None) -> Spectrum:
    return symmetric_eigenvalues(randic_matrix(g), config)


def adjacency_spectrum(g: Graph, config: Optional[SpectraConfig] = None) -> Spectrum:
    return symmetric_eigenvalues(adjacency_matrix(g), config)


def randic_energy_oracle(g: Graph, config: Optional[SpectraConfig] = None) -> float:
    """RE(G): sum of |eigenvalues| of the Randić matrix; 0 for edgeless graphs."""
    if g.edge_count == 0:
        return 0.0
    return randic_spectrum_oracle(g, config).energy()


def adjacency_energy(g: Graph, config: Optional[SpectraConfig] = None) -> float:
    if g.edge_count == 0:
        return 0.0
    return adjacency_spectrum(g, config).energy()
