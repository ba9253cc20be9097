"""Extremal caterpillars for Randić energy: double stars and three r=3 families.

Families (T_p is the member with parameter p, n fixed):
  double-star   T(p, n-p-2)          p in [1, (n-2)/2]
  fixed-middle  T(p, b, n-p-b-3)     p in [1, n-b-4]   (members p and n-p-b-3 coincide)
  symmetric     T(p, n-2p-3, p)      p in [1, (n-4)/2]
  fixed-end     T(p, n-p-b-3, b)     p in [1, n-b-4]
"""

import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Optional

from .closed_forms import DomainError, energy_r2, energy_r3
from .config import SpectraConfig
from .graph import CaterpillarSpec


class LocalizationError(RuntimeError):
    pass


class FamilyKind(str, Enum):
    DOUBLE_STAR = "double-star"
    FIXED_MIDDLE = "fixed-middle"
    SYMMETRIC = "symmetric"
    FIXED_END = "fixed-end"


_USES_B = (FamilyKind.FIXED_MIDDLE, FamilyKind.FIXED_END)


@dataclass(frozen=True)
class Family:
    kind: FamilyKind
    n: int
    b: Optional[int] = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "kind", FamilyKind(self.kind))
        min_n = 4 if self.kind is FamilyKind.DOUBLE_STAR else 7
        if self.n < min_n:
            raise DomainError(f"{self.kind.value} family needs n >= {min_n}, got n={self.n}")
        if self.kind in _USES_B:
            if self.b is None or not 1 <= self.b <= self.n - 6:
                raise DomainError(
                    f"{self.kind.value} family needs 1 <= b <= n-6 = {self.n - 6}, got b={self.b}"
                )
        elif self.b is not None:
            object.__setattr__(self, "b", None)

    def domain(self) -> range:
        n, b = self.n, self.b
        if self.kind is FamilyKind.DOUBLE_STAR:
            return range(1, (n - 2) // 2 + 1)
        if self.kind is FamilyKind.SYMMETRIC:
            return range(1, (n - 4) // 2 + 1)
        return range(1, n - b - 4 + 1)

    def sweep_domain(self) -> range:
        """Domain with isomorphic duplicates removed (fixed-middle only)."""
        if self.kind is FamilyKind.FIXED_MIDDLE:
            return range(1, (self.n - self.b - 3) // 2 + 1)
        return self.domain()

    def spec(self, p: int) -> CaterpillarSpec:
        n, b = self.n, self.b
        if self.kind is FamilyKind.DOUBLE_STAR:
            return CaterpillarSpec((p, n - p - 2))
        if self.kind is FamilyKind.FIXED_MIDDLE:
            return CaterpillarSpec((p, b, n - p - b - 3))
        if self.kind is FamilyKind.SYMMETRIC:
            return CaterpillarSpec((p, n - 2 * p - 3, p))
        return CaterpillarSpec((p, n - p - b - 3, b))

    def partner(self, x: float) -> float:
        """q(x): the far end-star size as a function of the parameter."""
        if self.kind is FamilyKind.FIXED_MIDDLE:
            return self.n - x - self.b - 3
        if self.kind is FamilyKind.SYMMETRIC:
            return x
        if self.kind is FamilyKind.FIXED_END:
            return self.b
        raise DomainError("double-star family has no r=3 partner")

    def label(self) -> str:
        if self.b is None:
            return f"{self.kind.value} n={self.n}"
        return f"{self.kind.value} n={self.n} b={self.b}"


@dataclass(frozen=True)
class SweepResult:
    family: Family
    energies: dict[int, float]
    argmax: tuple[int, ...]
    argmin: tuple[int, ...]

    @property
    def max_energy(self) -> float:
        return self.energies[self.argmax[0]]

    @property
    def min_energy(self) -> float:
        return self.energies[self.argmin[0]]


@dataclass(frozen=True)
class ExtremalReport:
    family: Family
    z: int
    argmin_p: int
    energies: dict[int, float]
    attained_max: float
    attained_min: float
    interval_r: Optional[float] = None
    interval_s: Optional[float] = None
    z_ties: tuple[int, ...] = ()
    rounded_interval: Optional[tuple[int, int]] = None
    z_bar: Optional[float] = None
    notes: tuple[str, ...] = field(default_factory=tuple)

    @property
    def extremal_spec(self) -> CaterpillarSpec:
        return self.family.spec(self.z)

    def neighborhood(self) -> tuple[Optional[float], float, Optional[float]]:
        """RE(T_{z-1}), RE(T_z), RE(T_{z+1}); None outside the domain."""
        dom = self.family.domain()
        around = []
        for p in (self.z - 1, self.z, self.z + 1):
            if p in self.energies:
                around.append(self.energies[p])
            elif p in dom:
                around.append(family_energy(self.family, p))
            else:
                around.append(None)
        return around[0], around[1], around[2]


@dataclass(frozen=True)
class Theorem4Bounds:
    n: int
    lower: float
    upper: float
    p_min: int
    p_max: int
    attained_max: float
    upper_attained: bool
    odd_display: Optional[float] = None
    notes: tuple[str, ...] = ()


@dataclass(frozen=True)
class RemarkRow:
    n: int
    b_min: int
    b_star: float
    b_star_rounded: float


# ---------------------------------------------------------------------------
# Energies and sweeps
# ---------------------------------------------------------------------------

def round_half_away(x: float) -> int:
    return int(math.copysign(math.floor(abs(x) + 0.5), x))


def family_energy(f: Family, p: int, config: Optional[SpectraConfig] = None) -> float:
    if p not in f.domain():
        dom = f.domain()
        raise DomainError(f"p={p} outside [{dom.start}, {dom.stop - 1}] for {f.label()}")
    n = f.n
    if f.kind is FamilyKind.DOUBLE_STAR:
        return energy_r2(n, p)
    return energy_r3(n, p, int(f.partner(p)), config)


def _extremes(energies: dict[int, float], tol: float) -> tuple[tuple[int, ...], tuple[int, ...]]:
    hi = max(energies.values())
    lo = min(energies.values())
    argmax = tuple(p for p, e in sorted(energies.items()) if hi - e <= tol)
    argmin = tuple(p for p, e in sorted(energies.items()) if e - lo <= tol)
    return argmax, argmin


def sweep_family(f: Family, config: Optional[SpectraConfig] = None) -> SweepResult:
    """RE at every admissible p; argmax/argmin list every p within tie_tol."""
    config = config or SpectraConfig()
    energies = {p: family_energy(f, p, config) for p in f.sweep_domain()}
    argmax, argmin = _extremes(energies, config.tie_tol)
    return SweepResult(family=f, energies=energies, argmax=argmax, argmin=argmin)


# ---------------------------------------------------------------------------
# Double stars
# ---------------------------------------------------------------------------

def double_star_ratio_prime(n: int, x: float) -> float:
    """d/dx of x(n-x-2) / ((x+1)(n-x-1))."""
    return (n - 1) * (n - 2 * (x + 1)) / ((x + 1) ** 2 * (n - x - 1) ** 2)


def theorem4_bounds(n: int, verbose: bool = False) -> Theorem4Bounds:
    if n < 4:
        raise DomainError(f"double star needs n >= 4, got n={n}")
    lower = 2.0 + math.sqrt(2.0 * (n - 3) / (n - 2))
    upper = 4.0 - 4.0 / n
    p_max = (n - 2) // 2
    attained = energy_r2(n, p_max)
    notes: list[str] = []
    odd_display = None
    if n % 2 == 1:
        # closed form printed for odd n; the member p=(n-3)/2 actually gives (n-3)/(n+1)
        odd_display = 2.0 + 2.0 * math.sqrt((n - 3) / (n + 2))
        if abs(odd_display - attained) > 1e-12:
            notes.append(
                f"odd n={n}: RE(T_{p_max}) = {attained:.9f} from the energy formula, "
                f"displayed 2+2*sqrt((n-3)/(n+2)) = {odd_display:.9f}; using the former"
            )
    upper_attained = n % 2 == 0 and abs(attained - upper) <= 1e-12 * upper
    if verbose:
        for note in notes:
            print(f"  warning: {note}")
    return Theorem4Bounds(
        n=n,
        lower=lower,
        upper=upper,
        p_min=1,
        p_max=p_max,
        attained_max=attained,
        upper_attained=upper_attained,
        odd_display=odd_display,
        notes=tuple(notes),
    )


# ---------------------------------------------------------------------------
# Fixed middle star
# ---------------------------------------------------------------------------

def theorem5_extremes(n: int, b: int, config: Optional[SpectraConfig] = None,
                      verbose: bool = False) -> ExtremalReport:
    config = config or SpectraConfig()
    f = Family(FamilyKind.FIXED_MIDDLE, n, b)
    sweep = sweep_family(f, config)
    z = (n - b - 3) // 2
    notes: list[str] = []
    values = [sweep.energies[p] for p in f.sweep_domain()]
    if any(later < earlier - config.tie_tol for earlier, later in zip(values, values[1:])):
        notes.append(f"{f.label()}: energy not non-decreasing on [1, {z}]")
    if z not in sweep.argmax:
        notes.append(f"{f.label()}: sweep argmax {sweep.argmax} does not contain z={z}")
    if verbose:
        for note in notes:
            print(f"  warning: {note}")
    return ExtremalReport(
        family=f,
        z=z,
        argmin_p=1,
        energies=sweep.energies,
        attained_max=sweep.energies[z],
        attained_min=sweep.energies[1],
        z_ties=sweep.argmax,
        notes=tuple(notes),
    )


# ---------------------------------------------------------------------------
# Symmetric and fixed-end families: interval localization
# ---------------------------------------------------------------------------

def theorem6_interval(n: int) -> tuple[float, float]:
    if n < 7:
        raise DomainError(f"symmetric family needs n >= 7, got n={n}")
    r = 0.5 * (2 * n - 3 - math.sqrt(2 * n * (n - 2) + 3))
    s = 0.5 * (2 * (n - 1) - math.sqrt(2 * n * (n - 1)))
    return r, s


def theorem7_interval(n: int, b: int) -> tuple[float, float]:
    Family(FamilyKind.FIXED_END, n, b)
    m = n - b - 1
    r = -m + math.sqrt(2 * m * (m - 1))
    radicand = (b + 1) * (n - b - 1) * ((2 * b + 1) * (n - 1) - 2 * b * b)
    s = (-((b + 1) * (n - b) - 1) + math.sqrt(radicand)) / b
    return r, s


def family_interval(f: Family) -> tuple[float, float]:
    if f.kind is FamilyKind.SYMMETRIC:
        return theorem6_interval(f.n)
    if f.kind is FamilyKind.FIXED_END:
        return theorem7_interval(f.n, f.b)
    raise DomainError(f"no localization interval for the {f.kind.value} family")


def alpha_prime(f: Family, x: float) -> float:
    n, b = f.n, f.b
    if f.kind is FamilyKind.FIXED_MIDDLE:
        return (b + 1) * (n - b - 1) * (n - 2 * x - b - 3) / (
            2 * (b + 2) * ((x + 1) * (n - x - b - 2)) ** 2
        )
    if f.kind is FamilyKind.SYMMETRIC:
        return (2 * x * x - (4 * n - 4) * x + n * n - 3 * n + 2) / (
            (x + 1) ** 2 * (n - 2 * x - 1) ** 2
        )
    if f.kind is FamilyKind.FIXED_END:
        num = (-b * x * x - 2 * ((b + 1) * (n - b) - 1) * x
               + (b + 1) * n * n - (b + 1) * (2 * b + 3) * n + b * (b + 2) ** 2 + 2)
        return num / (2 * (b + 1) * ((x + 1) * (n - x - b - 1)) ** 2)
    raise DomainError("use double_star_ratio_prime for the double-star family")


def gamma_prime(f: Family, x: float) -> float:
    n, b = f.n, f.b
    if f.kind is FamilyKind.FIXED_MIDDLE:
        return b * (n - b - 2) * (n - 2 * x - b - 3) / (
            (b + 2) * (x + 1) ** 2 * (n - x - b - 2) ** 2
        )
    if f.kind is FamilyKind.SYMMETRIC:
        return 2 * x * (2 * x * x - (4 * n - 6) * x + n * n - 4 * n + 3) / (
            (x + 1) ** 3 * (n - 2 * x - 1) ** 2
        )
    if f.kind is FamilyKind.FIXED_END:
        num = b * (-x * x - 2 * (n - b - 1) * x + n * n - 2 * (b + 2) * n + (b + 3) * (b + 1))
        return num / ((b + 1) * ((x + 1) * (n - x - b - 1)) ** 2)
    raise DomainError("use double_star_ratio_prime for the double-star family")


def gamma_at(f: Family, x: float) -> float:
    """gamma(n, x, q(x)) for real x."""
    q = f.partner(x)
    mid = f.n - x - q - 3
    return x * q * mid / ((x + 1) * (q + 1) * (mid + 2))


def sign_lambda(f: Family, x: float) -> float:
    """lambda(x) = 2 alpha'(x) sqrt(gamma(x)) + gamma'(x); same sign as f'(x)."""
    return 2.0 * alpha_prime(f, x) * math.sqrt(max(gamma_at(f, x), 0.0)) + gamma_prime(f, x)


def continuous_maximizer(f: Family, r: Optional[float] = None, s: Optional[float] = None,
                         iterations: int = 200) -> Optional[float]:
    """Root of lambda on [r, s] by bisection; None when lambda does not change sign there."""
    if r is None or s is None:
        r, s = family_interval(f)
    lo, hi = r, s
    if sign_lambda(f, lo) < 0 or sign_lambda(f, hi) > 0:
        return None
    for _ in range(iterations):
        mid = 0.5 * (lo + hi)
        if sign_lambda(f, mid) >= 0:
            lo = mid
        else:
            hi = mid
        if hi - lo < 1e-13:
            break
    return 0.5 * (lo + hi)


def locate_z(f: Family, config: Optional[SpectraConfig] = None, verbose: bool = False) -> ExtremalReport:
    """Maximizer of RE over the integers of [floor(r), ceil(s)], checked against a full sweep."""
    config = config or SpectraConfig()
    r, s = family_interval(f)
    dom = f.domain()
    lo = max(math.floor(r), dom.start)
    hi = min(math.ceil(s), dom.stop - 1)
    if lo > hi:
        raise LocalizationError(
            f"{f.label()}: [{math.floor(r)}, {math.ceil(s)}] misses the domain "
            f"[{dom.start}, {dom.stop - 1}]"
        )

    sweep = sweep_family(f, config)
    local = {p: sweep.energies[p] for p in range(lo, hi + 1)}
    ties, _ = _extremes(local, config.tie_tol)
    z = ties[0]
    if sweep.argmax[0] != z:
        raise LocalizationError(
            f"{f.label()}: interval argmax {z} disagrees with full sweep argmax {sweep.argmax}"
        )

    notes: list[str] = []
    if len(ties) > 1:
        notes.append(f"{f.label()}: tie for the maximum at p={list(ties)}")
    rounded = (round_half_away(r), round_half_away(s))
    z_bar = continuous_maximizer(f, r, s)
    if z_bar is not None:
        z_round = round_half_away(z_bar)
        if not rounded[0] <= z_round <= rounded[1]:
            notes.append(
                f"{f.label()}: round(z_bar)={z_round} lies outside "
                f"[round(r), round(s)] = [{rounded[0]}, {rounded[1]}]"
            )
        if z_round != z:
            notes.append(f"{f.label()}: round(z_bar)={z_round} differs from integer argmax z={z}")
    if verbose:
        for note in notes:
            print(f"  warning: {note}")

    return ExtremalReport(
        family=f,
        z=z,
        argmin_p=sweep.argmin[0],
        energies=sweep.energies,
        attained_max=sweep.max_energy,
        attained_min=sweep.min_energy,
        interval_r=r,
        interval_s=s,
        z_ties=ties,
        rounded_interval=rounded,
        z_bar=z_bar,
        notes=tuple(notes),
    )


def extremal_report(f: Family, config: Optional[SpectraConfig] = None,
                    verbose: bool = False) -> ExtremalReport:
    """Extremal report by the rule that covers the family."""
    if f.kind in (FamilyKind.SYMMETRIC, FamilyKind.FIXED_END):
        return locate_z(f, config, verbose)
    if f.kind is FamilyKind.FIXED_MIDDLE:
        return theorem5_extremes(f.n, f.b, config, verbose)
    config = config or SpectraConfig()
    sweep = sweep_family(f, config)
    bounds = theorem4_bounds(f.n, verbose)
    return ExtremalReport(
        family=f,
        z=bounds.p_max,
        argmin_p=1,
        energies=sweep.energies,
        attained_max=bounds.attained_max,
        attained_min=sweep.energies[1],
        z_ties=sweep.argmax,
        notes=bounds.notes,
    )


# ---------------------------------------------------------------------------
# Interval length for the fixed-end family
# ---------------------------------------------------------------------------

def remark_g(n: int, b: int) -> int:
    """Positive exactly when the fixed-end interval [r, s] is shorter than 1."""
    return 8 * (n + b - 1) ** 2 * (n - b - 1) * (n - b - 2) - (3 * n * n - 3 * b * n - 9 * n + 2 * b + 6) ** 2


def remark_h(n: int, b: int) -> int:
    """Lower bound for g: (n-b-1) replaced by (n-b-2)."""
    return 8 * (n + b - 1) ** 2 * (n - b - 2) ** 2 - (3 * (n - 1) * (n - 2) - (3 * n - 2) * b) ** 2


def remark_deltas(n: int, b: int) -> tuple[float, float]:
    """Factors of h: h = delta1 * delta2."""
    root8 = math.sqrt(8.0)
    lead = root8 * (n + b - 1) * (n - b - 2)
    rest = 3 * (n - 1) * (n - 2) - (3 * n - 2) * b
    return lead - rest, lead + rest


B_STAR_SLOPE = (3.0 - math.sqrt(8.0)) / math.sqrt(8.0)
# four-digit slope used by the tabulated b*; drifts from the exact one by about 1e-4 at n=100
REMARK_ROUNDED_SLOPE = 0.06066


def remark_b_star(n: int, rounded: bool = False) -> float:
    return (REMARK_ROUNDED_SLOPE if rounded else B_STAR_SLOPE) * (n - 1)


def remark_b_min(n: int) -> int:
    if n < 7:
        raise DomainError(f"fixed-end family needs n >= 7, got n={n}")
    for b in range(1, n - 5):
        if remark_g(n, b) > 0:
            return b
    raise DomainError(f"g(n, b) <= 0 for every b in [1, {n - 6}] (n={n})")


def remark_table(ns: list[int] | tuple[int, ...]) -> list[RemarkRow]:
    return [RemarkRow(n=n, b_min=remark_b_min(n), b_star=remark_b_star(n),
                      b_star_rounded=remark_b_star(n, rounded=True))
            for n in ns]
