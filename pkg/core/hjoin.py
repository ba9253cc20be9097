"""H-join Randić spectra and the caterpillar reduction to an r x r pencil.

A caterpillar T(p_1..p_r) is the H-join of K_1 (spine slots) and empty graphs
of order p_i (leaf slots) over the host T(1,..,1). Every slot is 0-regular,
so the Randić spectrum is sigma(Gamma_2r) plus zeros, and the eigenvalues of
Gamma_2r are the roots of det(lambda^2 I - lambda A - B^2).
"""

import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .config import SpectraConfig
from .graph import (
    CaterpillarSpec,
    Graph,
    SymmetricMatrix,
    build_caterpillar,
    complete_graph,
    cycle_graph,
    degrees,
    empty_graph,
)
from .oracle import Spectrum, symmetric_eigenvalues


class HJoinError(ValueError):
    pass


@dataclass(frozen=True)
class HJoinSlot:
    """A d-regular graph of order n, with its adjacency spectrum minus one copy of d."""
    order: int
    regularity: int
    spectrum: tuple[float, ...]
    kind: str = "custom"

    def __post_init__(self) -> None:
        if self.order < 1:
            raise HJoinError(f"slot order must be >= 1, got {self.order}")
        if not 0 <= self.regularity <= self.order - 1:
            raise HJoinError(
                f"slot regularity must lie in [0, {self.order - 1}], got {self.regularity}"
            )
        if len(self.spectrum) != self.order - 1:
            raise HJoinError(
                f"slot of order {self.order} needs {self.order - 1} remaining eigenvalues, "
                f"got {len(self.spectrum)}"
            )

    @classmethod
    def single(cls) -> "HJoinSlot":
        return cls(1, 0, (), "single")

    @classmethod
    def empty(cls, n: int) -> "HJoinSlot":
        return cls(n, 0, (0.0,) * (n - 1), "empty")

    @classmethod
    def complete(cls, n: int) -> "HJoinSlot":
        return cls(n, n - 1, (-1.0,) * (n - 1), "complete")

    @classmethod
    def cycle(cls, n: int) -> "HJoinSlot":
        return cls(n, 2, tuple(2.0 * math.cos(2.0 * math.pi * k / n) for k in range(1, n)), "cycle")

    def graph(self) -> Graph:
        if self.kind in ("single", "empty"):
            return empty_graph(self.order)
        if self.kind == "complete":
            return complete_graph(self.order)
        if self.kind == "cycle":
            return cycle_graph(self.order)
        raise HJoinError("custom slots carry no graph; materialize them yourself")


@dataclass(frozen=True)
class HJoinInstance:
    host: Graph
    slots: tuple[HJoinSlot, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "slots", tuple(self.slots))
        if len(self.slots) != self.host.n:
            raise HJoinError(
                f"host has order {self.host.n} but {len(self.slots)} slots were given"
            )
        for j, total in enumerate(self.join_sums()):
            if total + self.slots[j].regularity == 0:
                raise HJoinError(f"slot {j} is isolated (N_j + d_j = 0)")

    @property
    def k(self) -> int:
        return self.host.n

    @property
    def order(self) -> int:
        return sum(s.order for s in self.slots)

    def join_sums(self) -> list[int]:
        """N_j: total order of the slots adjacent to j in the host."""
        sums = [0] * self.host.n
        for u, v in self.host.edges:
            sums[u] += self.slots[v].order
            sums[v] += self.slots[u].order
        return sums


@dataclass(frozen=True)
class CaterpillarBlocks:
    """Gamma_2r = [[A, B], [B, 0]] with A = O1 A_P O1 and B = O1 O2."""
    A: np.ndarray
    B: np.ndarray
    gamma: SymmetricMatrix
    omega1: np.ndarray
    omega2: np.ndarray


# ---------------------------------------------------------------------------
# General H-join
# ---------------------------------------------------------------------------

def build_gamma_k(inst: HJoinInstance) -> SymmetricMatrix:
    sums = inst.join_sums()
    scale = [sums[j] + s.regularity for j, s in enumerate(inst.slots)]
    upper = {
        (u, v): math.sqrt(inst.slots[u].order * inst.slots[v].order) / math.sqrt(scale[u] * scale[v])
        for u, v in inst.host.edges
    }
    diagonal = [s.regularity / scale[j] for j, s in enumerate(inst.slots)]
    return SymmetricMatrix.from_upper(inst.k, upper, diagonal)


def hjoin_randic_spectrum(inst: HJoinInstance, config: Optional[SpectraConfig] = None) -> Spectrum:
    sums = inst.join_sums()
    scaled = [
        lam / (sums[j] + slot.regularity)
        for j, slot in enumerate(inst.slots)
        for lam in slot.spectrum
    ]
    return symmetric_eigenvalues(build_gamma_k(inst), config).union(scaled)


def hjoin_graph(inst: HJoinInstance) -> Graph:
    """Materialize H[G_1..G_k]: slot copies, plus every edge across adjacent slots."""
    offsets = [0]
    for slot in inst.slots:
        offsets.append(offsets[-1] + slot.order)
    edges = set()
    for j, slot in enumerate(inst.slots):
        base = offsets[j]
        for u, v in slot.graph().edges:
            edges.add((base + u, base + v))
    for a, b in inst.host.edges:
        for u in range(offsets[a], offsets[a + 1]):
            for v in range(offsets[b], offsets[b + 1]):
                edges.add((min(u, v), max(u, v)))
    return Graph(offsets[-1], frozenset(edges))


# ---------------------------------------------------------------------------
# Caterpillar specialization
# ---------------------------------------------------------------------------

def caterpillar_host(r: int) -> Graph:
    """T(1,..,1) of order 2r: spine 0..r-1, pendant r+i on spine vertex i."""
    return build_caterpillar(CaterpillarSpec((1,) * r))


def caterpillar_instance(spec: CaterpillarSpec) -> HJoinInstance:
    slots = [HJoinSlot.single()] * spec.r + [HJoinSlot.empty(p) for p in spec.p]
    return HJoinInstance(caterpillar_host(spec.r), tuple(slots))


def caterpillar_blocks(spec: CaterpillarSpec) -> CaterpillarBlocks:
    r = spec.r
    sums = caterpillar_instance(spec).join_sums()
    omega1 = np.array([1.0 / math.sqrt(sums[i]) for i in range(r)])
    omega2 = np.array([math.sqrt(spec.p[i] / sums[r + i]) for i in range(r)])

    path_adj = np.zeros((r, r))
    idx = np.arange(r - 1)
    path_adj[idx, idx + 1] = 1.0
    path_adj[idx + 1, idx] = 1.0
    A = omega1[:, None] * path_adj * omega1[None, :]
    B = np.diag(omega1 * omega2)

    gamma = np.zeros((2 * r, 2 * r))
    gamma[:r, :r] = A
    gamma[:r, r:] = B
    gamma[r:, :r] = B
    return CaterpillarBlocks(A=A, B=B, gamma=SymmetricMatrix(gamma), omega1=omega1, omega2=omega2)


def caterpillar_randic_spectrum(spec: CaterpillarSpec, config: Optional[SpectraConfig] = None) -> Spectrum:
    gamma = caterpillar_blocks(spec).gamma
    zeros = [0.0] * sum(p - 1 for p in spec.p)
    return symmetric_eigenvalues(gamma, config).union(zeros)


def pencil_det(spec: CaterpillarSpec, lam: float) -> float:
    """det(lambda^2 I_r - lambda A - B^2) by LU with partial pivoting."""
    blocks = caterpillar_blocks(spec)
    r = spec.r
    pencil = lam * lam * np.eye(r) - lam * blocks.A - blocks.B @ blocks.B
    return float(np.linalg.det(pencil))


def characteristic_det(spec: CaterpillarSpec, lam: float) -> float:
    """det(lambda I_2r - Gamma_2r)."""
    gamma = caterpillar_blocks(spec).gamma.entries
    return float(np.linalg.det(lam * np.eye(gamma.shape[0]) - gamma))


def schur_determinant(m: np.ndarray, split: int) -> float:
    """det(M) = det(A - B D^-1 C) det(D) for M = [[A, B], [C, D]], A of order `split`."""
    a = m[:split, :split]
    b = m[:split, split:]
    c = m[split:, :split]
    d = m[split:, split:]
    complement = a - b @ np.linalg.solve(d, c)
    return float(np.linalg.det(complement) * np.linalg.det(d))


def spine_degrees(spec: CaterpillarSpec) -> list[int]:
    """Degrees of the spine vertices of T(p_1..p_r); equal to N_i of the spine slots."""
    return degrees(build_caterpillar(spec))[: spec.r]
