"""All numerical and run parameters as a single dataclass."""

from dataclasses import dataclass, asdict
from typing import Optional, Literal
import json


@dataclass
class SpectraConfig:
    # --- eigensolver ---
    jacobi_tol: float = 1e-12               # off-diagonal Frobenius norm stop
    jacobi_max_sweeps: int = 100

    # --- comparisons ---
    compare_tol: float = 1e-9               # spectra / energies vs the oracle
    cluster_radius: float = 1e-8            # eigenvalues closer than this merge
    pencil_tol: float = 1e-8                # |pencil_det| at a root
    discriminant_clamp: float = 1e-12       # alpha^2 - gamma clamped to 0 above -clamp
    tie_tol: float = 1e-12                  # energies this close count as a tie
    sign_tol: float = 1e-9                  # |lambda(x)| below this has no usable sign

    # --- output ---
    output_format: Literal["json", "csv"] = "json"
    energy_decimals: int = 9
    interval_decimals: int = 6

    # --- verification suites ---
    samples: int = 500                      # random instances per randomized suite
    max_r: int = 6
    max_p: int = 8
    oracle_max_n: Optional[int] = None      # reject random caterpillars above this order
    max_n: int = 40                         # closed-form vs oracle sweep
    path_max_n: int = 200
    theorem4_max_n: int = 200
    theorem5_max_n: int = 60
    symmetric_max_n: int = 200
    fixed_end_max_n: int = 120
    remark_ns: tuple[int, ...] = (20, 30, 50, 100, 500, 1000, 5000, 10000, 20000)

    # --- parallelism ---
    max_workers: int = 4                    # thread pool size for verification suites

    # --- reproducibility ---
    rng_seed: Optional[int] = None          # None = random, int = reproducible

    def to_dict(self) -> dict:
        d = asdict(self)
        d["remark_ns"] = list(self.remark_ns)
        return d

    def to_json(self, indent: int = 2) -> str:
        return json.dumps(self.to_dict(), indent=indent)

    @classmethod
    def from_dict(cls, d: dict) -> "SpectraConfig":
        if "remark_ns" in d and isinstance(d["remark_ns"], list):
            d = dict(d, remark_ns=tuple(d["remark_ns"]))
        return cls(**{k: v for k, v in d.items() if k in cls.__dataclass_fields__})

    @classmethod
    def quick(cls, **overrides) -> "SpectraConfig":
        """Small suites for interactive runs (GUI, smoke tests)."""
        defaults = dict(
            samples=60,
            max_n=16,
            path_max_n=40,
            theorem4_max_n=60,
            theorem5_max_n=24,
            symmetric_max_n=60,
            fixed_end_max_n=30,
            remark_ns=(20, 30, 50, 100),
        )
        defaults.update(overrides)
        return cls(**defaults)

    @classmethod
    def acceptance(cls, **overrides) -> "SpectraConfig":
        """Full-size suites with a fixed seed."""
        defaults = dict(rng_seed=20181)
        defaults.update(overrides)
        return cls(**defaults)
