"""Verification suites: each check times itself and reports pass/fail with sample failures."""

import math
import time
from concurrent.futures import ThreadPoolExecutor, as_completed
from dataclasses import asdict, dataclass, field
from typing import Callable, Optional

import numpy as np

from .closed_forms import energy_r2, energy_r3, pencil_r2, pencil_r3
from .config import SpectraConfig
from .extremal import (
    Family,
    FamilyKind,
    LocalizationError,
    double_star_ratio_prime,
    family_energy,
    family_interval,
    locate_z,
    remark_b_min,
    remark_b_star,
    remark_deltas,
    remark_g,
    remark_h,
    sign_lambda,
    sweep_family,
    theorem4_bounds,
    theorem5_extremes,
)
from .graph import (
    CaterpillarSpec,
    build_caterpillar,
    path_graph,
    random_caterpillar_spec,
    random_tree,
)
from .hjoin import (
    HJoinInstance,
    HJoinSlot,
    caterpillar_blocks,
    caterpillar_randic_spectrum,
    characteristic_det,
    hjoin_graph,
    hjoin_randic_spectrum,
    pencil_det,
    schur_determinant,
)
from .oracle import adjacency_energy, randic_energy_oracle, randic_spectrum_oracle
from .platform import PlatformInfo, platform_check
from .record import OutputRecord

# b_min for the fixed-end interval, by order
KNOWN_B_MIN = {20: 1, 30: 2, 50: 3, 100: 6, 500: 30, 1000: 61, 5000: 303, 10000: 606, 20000: 1213}

# orders for which g(n, b) > 0 is checked on the whole range b >= 0.06066 (n-1)
REMARK_BOUND_NS = (20, 30, 50, 100, 500, 1000)

_MAX_FAILURES = 5


@dataclass
class CheckResult:
    name: str
    passed: bool
    cases: int
    elapsed: float
    detail: str = ""
    failures: list[str] = field(default_factory=list)


class _Tally:
    """Counts cases and keeps the first few failure messages."""

    def __init__(self) -> None:
        self.cases = 0
        self.failed = 0
        self.messages: list[str] = []

    def expect(self, ok: bool, message: Callable[[], str] | str) -> None:
        self.cases += 1
        if ok:
            return
        self.failed += 1
        if len(self.messages) < _MAX_FAILURES:
            self.messages.append(message() if callable(message) else message)

    def result(self, name: str, t0: float, detail: str = "") -> CheckResult:
        return CheckResult(
            name=name,
            passed=self.failed == 0,
            cases=self.cases,
            elapsed=round(time.perf_counter() - t0, 3),
            detail=detail or f"{self.cases - self.failed}/{self.cases} cases",
            failures=self.messages,
        )


# ---------------------------------------------------------------------------
# Checks
# ---------------------------------------------------------------------------

def _random_spec(rng: np.random.Generator, config: SpectraConfig) -> CaterpillarSpec:
    if config.oracle_max_n is not None and config.oracle_max_n < 4:
        raise ValueError(f"no caterpillar T(p_1..p_r) has order <= {config.oracle_max_n}")
    while True:
        spec = random_caterpillar_spec(rng, config.max_r, config.max_p)
        if config.oracle_max_n is None or spec.n <= config.oracle_max_n:
            return spec


def _random_slot(rng: np.random.Generator) -> HJoinSlot:
    choice = int(rng.integers(0, 3))
    if choice == 0:
        return HJoinSlot.empty(int(rng.integers(1, 4)))
    if choice == 1:
        return HJoinSlot.complete(int(rng.integers(1, 4)))
    return HJoinSlot.cycle(int(rng.integers(3, 6)))


def check_oracle_equivalence(config: SpectraConfig, rng: np.random.Generator) -> CheckResult:
    """Reduction spectra of random caterpillars and H-joins against the dense oracle."""
    t0 = time.perf_counter()
    tally = _Tally()
    tol = config.compare_tol
    for _ in range(config.samples):
        spec = _random_spec(rng, config)
        reduced = caterpillar_randic_spectrum(spec, config).as_array()
        dense = randic_spectrum_oracle(build_caterpillar(spec), config).as_array()
        err = float(np.max(np.abs(reduced - dense)))
        tally.expect(err <= tol, lambda: f"{spec}: max deviation {err:.3e}")

    for _ in range(max(config.samples // 10, 1)):
        host = random_tree(int(rng.integers(2, 5)), rng)
        inst = HJoinInstance(host, tuple(_random_slot(rng) for _ in range(host.n)))
        reduced = hjoin_randic_spectrum(inst, config).as_array()
        dense = randic_spectrum_oracle(hjoin_graph(inst), config).as_array()
        err = float(np.max(np.abs(reduced - dense)))
        kinds = ",".join(f"{s.kind}{s.order}" for s in inst.slots)
        tally.expect(err <= tol, lambda: f"H-join [{kinds}]: max deviation {err:.3e}")
    return tally.result("oracle-equivalence", t0)


def check_closed_forms(config: SpectraConfig, rng: np.random.Generator) -> CheckResult:
    """energy_r2 / energy_r3 against the oracle for every admissible (n, p, q), n <= max_n."""
    t0 = time.perf_counter()
    tally = _Tally()
    tol = config.compare_tol
    for n in range(4, config.max_n + 1):
        for p in range(1, n - 2):
            spec = CaterpillarSpec((p, n - p - 2))
            err = abs(energy_r2(n, p) - randic_energy_oracle(build_caterpillar(spec), config))
            tally.expect(err <= tol, lambda: f"{spec}: |energy_r2 - oracle| = {err:.3e}")
        for p in range(1, n - 4):
            for q in range(1, n - p - 3):
                spec = CaterpillarSpec((p, n - p - q - 3, q))
                err = abs(energy_r3(n, p, q, config)
                          - randic_energy_oracle(build_caterpillar(spec), config))
                tally.expect(err <= tol, lambda: f"{spec}: |energy_r3 - oracle| = {err:.3e}")
    return tally.result("closed-forms", t0)


def check_structural(config: SpectraConfig, rng: np.random.Generator) -> CheckResult:
    """Largest eigenvalue 1, 2 <= RE <= n, zero multiplicity of caterpillars."""
    t0 = time.perf_counter()
    tally = _Tally()
    for _ in range(config.samples):
        g = random_tree(int(rng.integers(2, max(config.max_n, 3) + 1)), rng)
        spectrum = randic_spectrum_oracle(g, config)
        tally.expect(abs(spectrum.values[0] - 1.0) <= config.compare_tol,
                     lambda: f"tree n={g.n}: rho_1 = {spectrum.values[0]!r}")
        energy = spectrum.energy()
        tally.expect(2.0 - config.compare_tol <= energy <= g.n + config.compare_tol,
                     lambda: f"tree n={g.n}: RE = {energy:.9f} outside [2, n]")

        spec = _random_spec(rng, config)
        spectrum = randic_spectrum_oracle(build_caterpillar(spec), config)
        tally.expect(abs(spectrum.values[0] - 1.0) <= config.compare_tol,
                     lambda: f"{spec}: rho_1 = {spectrum.values[0]!r}")
        energy = spectrum.energy()
        tally.expect(2.0 - config.compare_tol <= energy <= spec.n + config.compare_tol,
                     lambda: f"{spec}: RE = {energy:.9f} outside [2, n]")
        zeros = spectrum.multiplicity(0.0, config.cluster_radius)
        expected = sum(p - 1 for p in spec.p)
        tally.expect(zeros == expected,
                     lambda: f"{spec}: zero multiplicity {zeros}, expected {expected}")
    return tally.result("structural", t0)


def check_path_relation(config: SpectraConfig, rng: np.random.Generator) -> CheckResult:
    """RE(P_n) = 2 + E(P_{n-2}) / 2."""
    t0 = time.perf_counter()
    tally = _Tally()
    for n in range(4, config.path_max_n + 1):
        lhs = randic_energy_oracle(path_graph(n), config)
        rhs = 2.0 + 0.5 * adjacency_energy(path_graph(n - 2), config)
        tally.expect(abs(lhs - rhs) <= 1e-8, lambda: f"P_{n}: {lhs:.12f} vs {rhs:.12f}")
    return tally.result("path-relation", t0)


def check_pencil(config: SpectraConfig, rng: np.random.Generator) -> CheckResult:
    """det(lambda I - Gamma) against the r x r pencil, its Schur form and the factored pencils."""
    t0 = time.perf_counter()
    tally = _Tally()
    tol = config.pencil_tol
    for _ in range(config.samples):
        spec = _random_spec(rng, config)
        lam = float(rng.uniform(-1.5, 1.5))
        full = characteristic_det(spec, lam)
        reduced = pencil_det(spec, lam)
        tally.expect(abs(full - reduced) <= tol,
                     lambda: f"{spec}, lambda={lam:.6f}: {full:.6e} vs pencil {reduced:.6e}")

        if abs(lam) > 1e-3:
            gamma = caterpillar_blocks(spec).gamma.entries
            shifted = lam * np.eye(gamma.shape[0]) - gamma
            schur = schur_determinant(shifted, spec.r)
            tally.expect(abs(schur - full) <= tol * max(1.0, abs(full)),
                         lambda: f"{spec}, lambda={lam:.6f}: Schur {schur:.6e} vs {full:.6e}")

        if spec.r == 2:
            closed = pencil_r2(spec.n, spec.p[0], lam)
        elif spec.r == 3:
            closed = pencil_r3(spec.n, spec.p[0], spec.p[2], lam)
        else:
            continue
        tally.expect(abs(closed - reduced) <= tol,
                     lambda: f"{spec}, lambda={lam:.6f}: factored {closed:.6e} vs {reduced:.6e}")
    return tally.result("pencil", t0)


def check_theorem4(config: SpectraConfig, rng: np.random.Generator) -> CheckResult:
    """Double stars: increasing in p, argmax (n-2)//2, upper bound attained iff n even."""
    t0 = time.perf_counter()
    tally = _Tally()
    for n in range(4, config.theorem4_max_n + 1):
        f = Family(FamilyKind.DOUBLE_STAR, n)
        sweep = sweep_family(f, config)
        bounds = theorem4_bounds(n)
        values = list(sweep.energies.values())
        tally.expect(all(b > a for a, b in zip(values, values[1:])),
                     lambda: f"n={n}: double-star energy not increasing")
        tally.expect(sweep.argmax == (bounds.p_max,),
                     lambda: f"n={n}: argmax {sweep.argmax}, expected {bounds.p_max}")
        tally.expect(sweep.argmin == (1,), lambda: f"n={n}: argmin {sweep.argmin}")
        tally.expect(abs(sweep.energies[1] - bounds.lower) <= 1e-12 * bounds.lower,
                     lambda: f"n={n}: RE(T_1) {sweep.energies[1]!r} vs lower {bounds.lower!r}")
        attained = abs(sweep.max_energy - bounds.upper) <= 1e-12 * bounds.upper
        tally.expect(attained == (n % 2 == 0),
                     lambda: f"n={n}: upper bound attained={attained}")
    return tally.result("theorem4", t0)


def check_theorem5(config: SpectraConfig, rng: np.random.Generator) -> CheckResult:
    """Fixed middle star: non-decreasing up to (n-b-3)//2, symmetric under p <-> n-p-b-3."""
    t0 = time.perf_counter()
    tally = _Tally()
    for n in range(7, config.theorem5_max_n + 1):
        for b in range(1, n - 5):
            report = theorem5_extremes(n, b, config)
            tally.expect(not report.notes, lambda: "; ".join(report.notes))
            f = report.family
            for p in f.domain():
                mirror = n - p - b - 3
                a, c = family_energy(f, p, config), family_energy(f, mirror, config)
                tally.expect(abs(a - c) <= 1e-12,
                             lambda: f"n={n} b={b}: RE(T_{p})={a!r} vs RE(T_{mirror})={c!r}")
    return tally.result("theorem5", t0)


def _localization_cases(f: Family, config: SpectraConfig, tally: _Tally) -> None:
    try:
        report = locate_z(f, config)
    except LocalizationError as e:
        tally.expect(False, str(e))
        return
    r, s = report.interval_r, report.interval_s
    sweep_argmax = max(report.energies, key=lambda p: (report.energies[p], -p))
    tally.expect(math.floor(r) <= sweep_argmax <= math.ceil(s),
                 lambda: f"{f.label()}: argmax {sweep_argmax} outside [{r:.6f}, {s:.6f}]")
    if f.kind is FamilyKind.SYMMETRIC:
        tally.expect(s - r < 0.5, lambda: f"{f.label()}: s - r = {s - r:.6f}")
    energies = report.energies
    for p in f.domain():
        if p + 1 not in energies:
            continue
        if p + 1 <= r:
            tally.expect(energies[p + 1] > energies[p] - config.tie_tol,
                         lambda: f"{f.label()}: not increasing at p={p} <= r")
        if p >= s:
            tally.expect(energies[p + 1] < energies[p] + config.tie_tol,
                         lambda: f"{f.label()}: not decreasing at p={p} >= s")


def check_localization(config: SpectraConfig, rng: np.random.Generator) -> CheckResult:
    """Symmetric and fixed-end maximizers lie in [floor(r), ceil(s)]; unimodality around them."""
    t0 = time.perf_counter()
    tally = _Tally()
    for n in range(7, config.symmetric_max_n + 1):
        _localization_cases(Family(FamilyKind.SYMMETRIC, n), config, tally)
    for n in range(7, config.fixed_end_max_n + 1):
        for b in range(1, n - 5):
            _localization_cases(Family(FamilyKind.FIXED_END, n, b), config, tally)
    return tally.result("localization", t0)


def _sign(x: float) -> int:
    return (x > 0) - (x < 0)


def check_sign_criterion(config: SpectraConfig, rng: np.random.Generator) -> CheckResult:
    """Sign of RE(T_{p+1}) - RE(T_p) against lambda where lambda keeps one sign on [p, p+1]."""
    t0 = time.perf_counter()
    tally = _Tally()
    eps = config.sign_tol
    families: list[Family] = []
    for n in range(7, config.max_n + 1):
        families.append(Family(FamilyKind.SYMMETRIC, n))
        for b in range(1, n - 5):
            families.append(Family(FamilyKind.FIXED_MIDDLE, n, b))
            families.append(Family(FamilyKind.FIXED_END, n, b))

    for f in families:
        dom = f.domain()
        for p in range(dom.start, dom.stop - 1):
            lams = [sign_lambda(f, x) for x in (p, p + 0.5, p + 1)]
            signs = {_sign(v) for v in lams}
            if len(signs) != 1 or min(abs(v) for v in lams) <= eps:
                continue
            diff = family_energy(f, p + 1, config) - family_energy(f, p, config)
            if abs(diff) <= config.tie_tol:
                continue
            tally.expect(_sign(diff) == signs.pop(),
                         lambda: f"{f.label()} p={p}: diff {diff:.3e}, lambda {lams[1]:.3e}")

    for n in range(4, config.max_n + 1):
        for p in range(1, (n - 2) // 2):
            slope = double_star_ratio_prime(n, p + 0.5)
            tally.expect(slope > 0 and energy_r2(n, p + 1) > energy_r2(n, p),
                         lambda: f"double-star n={n} p={p}: slope {slope:.3e}")
    return tally.result("sign-criterion", t0)


def check_remark(config: SpectraConfig, rng: np.random.Generator) -> CheckResult:
    """b_min table, g > 0 above 0.06066 (n-1), h = delta1 * delta2 <= g."""
    t0 = time.perf_counter()
    tally = _Tally()
    rows = []
    for n in config.remark_ns:
        b_min = remark_b_min(n)
        rows.append(f"n={n}: b_min={b_min} b*={remark_b_star(n):.4f} "
                    f"(0.06066(n-1)={remark_b_star(n, rounded=True):.4f})")
        if n in KNOWN_B_MIN:
            tally.expect(b_min == KNOWN_B_MIN[n],
                         lambda: f"n={n}: b_min {b_min}, expected {KNOWN_B_MIN[n]}")
        for b in range(1, n - 5):
            g, h = remark_g(n, b), remark_h(n, b)
            tally.expect(h < g, lambda: f"n={n} b={b}: h={h} not below g={g}")
            if n in REMARK_BOUND_NS and b >= remark_b_star(n, rounded=True):
                tally.expect(g > 0, lambda: f"n={n} b={b}: g={g} <= 0")
        mid = max(1, (n - 6) // 2)
        d1, d2 = remark_deltas(n, mid)
        h = remark_h(n, mid)
        tally.expect(abs(d1 * d2 - h) <= 1e-9 * max(1.0, abs(h)),
                     lambda: f"n={n} b={mid}: delta1*delta2={d1 * d2:.6e} vs h={h}")
    return tally.result("remark", t0, detail="; ".join(rows))


CHECKS: dict[str, Callable[[SpectraConfig, np.random.Generator], CheckResult]] = {
    "oracle-equivalence": check_oracle_equivalence,
    "closed-forms": check_closed_forms,
    "structural": check_structural,
    "path-relation": check_path_relation,
    "pencil": check_pencil,
    "theorem4": check_theorem4,
    "theorem5": check_theorem5,
    "localization": check_localization,
    "sign-criterion": check_sign_criterion,
    "remark": check_remark,
}


# ---------------------------------------------------------------------------
# Runner and report
# ---------------------------------------------------------------------------

@dataclass
class VerifyReport:
    rng_seed: int
    checks: list[CheckResult] = field(default_factory=list)
    config_summary: dict = field(default_factory=dict)
    platform: Optional[PlatformInfo] = None

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_record(self) -> OutputRecord:
        return OutputRecord(
            command="verify",
            inputs={"rng_seed": self.rng_seed, "config": self.config_summary},
            results={
                "passed": self.passed,
                "checks": [asdict(c) for c in self.checks],
            },
            provenance="oracle",
        )

    def print_summary(self) -> str:
        """Format and print the verification summary. Returns the formatted text."""
        lines = []
        lines.append("=" * 60)
        lines.append("VERIFY — Randić spectra and extremal caterpillars")
        lines.append("=" * 60)
        if self.platform is not None:
            pi = self.platform
            lines.append(f"Platform: {pi.os_name} {pi.os_version}, Python {pi.python_version}, "
                         f"numpy {pi.numpy_version}")
        lines.append(f"RNG seed: {self.rng_seed}")
        lines.append("")
        for c in self.checks:
            status = "PASS" if c.passed else "FAIL"
            lines.append(f"  {status}  {c.name:<20} {c.cases:>7} cases  {c.elapsed:>8.2f}s")
            if c.detail and c.name == "remark":
                for part in c.detail.split("; "):
                    lines.append(f"        {part}")
            for msg in c.failures:
                lines.append(f"        - {msg}")
        lines.append("  --------------------------------")
        failed = [c.name for c in self.checks if not c.passed]
        if failed:
            lines.append(f"  FAILED: {', '.join(failed)}")
        else:
            lines.append(f"  All {len(self.checks)} checks passed")
        lines.append("=" * 60)

        text = "\n".join(lines)
        print(text)
        return text


def run_checks(names: list[str], config: SpectraConfig, verbose: bool = True) -> VerifyReport:
    """Run the named checks on a thread pool; results come back in the requested order."""
    unknown = [n for n in names if n not in CHECKS]
    if unknown:
        raise ValueError(f"unknown checks: {', '.join(unknown)} (choose from {', '.join(CHECKS)})")

    pinfo = platform_check(verbose=False)
    if config.rng_seed is None:
        config.rng_seed = int(np.random.default_rng().integers(0, 2**31 - 1))
    master = np.random.default_rng(config.rng_seed)
    # per-check generators are drawn in order so results do not depend on scheduling
    sub_seeds = [int(s) for s in master.integers(0, 2**31 - 1, size=len(names))]

    if verbose:
        print(f"RNG seed: {config.rng_seed}")
        print(f"\n--- Running {len(names)} check(s) ({config.max_workers} workers) ---")

    def _run_one(idx: int, name: str, seed: int) -> tuple[int, CheckResult]:
        result = CHECKS[name](config, np.random.default_rng(seed))
        if verbose:
            status = "PASS" if result.passed else "FAIL"
            print(f"  [{idx + 1}/{len(names)}] {name}: {status} ({result.elapsed:.2f}s)")
        return idx, result

    with ThreadPoolExecutor(max_workers=config.max_workers) as pool:
        futures = {
            pool.submit(_run_one, i, name, seed): i
            for i, (name, seed) in enumerate(zip(names, sub_seeds))
        }
        results: list[tuple[int, CheckResult]] = []
        for future in as_completed(futures):
            results.append(future.result())

    results.sort(key=lambda r: r[0])
    return VerifyReport(
        rng_seed=config.rng_seed,
        checks=[r for _, r in results],
        config_summary=config.to_dict(),
        platform=pinfo,
    )
