"""Output records: JSON log of a computation, CSV tables, fixed-decimal rounding."""

import csv
import io
import json
from dataclasses import asdict, dataclass, field
from decimal import ROUND_HALF_UP, Decimal
from pathlib import Path
from typing import Any, Iterable, Optional, Sequence

PROVENANCES = ("closed-form", "reduction", "oracle")


def round_fixed(x: float, decimals: int) -> float:
    """Round half away from zero at `decimals` places, on the shortest repr of x."""
    quantum = Decimal(1).scaleb(-decimals)
    value = float(Decimal(repr(float(x))).quantize(quantum, rounding=ROUND_HALF_UP))
    return value + 0.0  # drops -0.0


def format_fixed(x: float, decimals: int) -> str:
    quantum = Decimal(1).scaleb(-decimals)
    text = format(Decimal(repr(float(x))).quantize(quantum, rounding=ROUND_HALF_UP), "f")
    if text.startswith("-") and Decimal(text) == 0:
        text = text[1:]
    return text


@dataclass
class OutputRecord:
    command: str
    inputs: dict
    results: dict
    provenance: str
    version: str = ""

    def __post_init__(self) -> None:
        if self.provenance not in PROVENANCES:
            raise ValueError(f"unknown provenance {self.provenance!r}, expected one of {PROVENANCES}")
        if not self.version:
            from . import __version__
            self.version = __version__

    def to_dict(self) -> dict:
        return asdict(self)

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2) + "\n"

    def save(self, path: str | Path) -> Path:
        path = Path(path)
        path.parent.mkdir(parents=True, exist_ok=True)
        with open(path, "w", encoding="utf-8", newline="\n") as f:
            f.write(self.to_json())
        return path

    @classmethod
    def from_dict(cls, data: dict) -> "OutputRecord":
        return cls(**{k: v for k, v in data.items() if k in cls.__dataclass_fields__})

    @classmethod
    def load(cls, path: str | Path) -> "OutputRecord":
        with open(path, encoding="utf-8") as f:
            return cls.from_dict(json.load(f))


@dataclass
class Table:
    """Header plus rows of already-formatted cells."""
    header: list[str]
    rows: list[list[str]] = field(default_factory=list)

    def add(self, cells: Iterable[Any]) -> None:
        self.rows.append([str(c) for c in cells])

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(self.header)
        writer.writerows(self.rows)
        return buf.getvalue()

    def to_records(self) -> list[dict]:
        return [dict(zip(self.header, row)) for row in self.rows]


def spectrum_values(values: Sequence[float], decimals: Optional[int] = None) -> list[float]:
    """Descending list for JSON; optional fixed rounding."""
    ordered = sorted((float(v) for v in values), reverse=True)
    if decimals is None:
        return [v + 0.0 for v in ordered]
    return [round_fixed(v, decimals) for v in ordered]


def emit(text: str, out: Optional[str | Path] = None) -> None:
    """Write to `out` (LF line endings) or print to stdout."""
    if out is None:
        print(text, end="" if text.endswith("\n") else "\n")
        return
    path = Path(out)
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", encoding="utf-8", newline="\n") as f:
        f.write(text)
