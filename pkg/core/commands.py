"""Command implementations shared by cli.py and gui.py."""

from dataclasses import dataclass
from typing import Optional

from .closed_forms import DomainError, spectrum_r2, spectrum_r3
from .config import SpectraConfig
from .extremal import ExtremalReport, Family, FamilyKind, extremal_report, locate_z, sweep_family
from .graph import (
    CaterpillarSpec,
    Graph,
    build_caterpillar,
    caterpillar_spec_of,
    format_caterpillar,
    load_edge_list,
    looks_like_caterpillar,
    parse_caterpillar,
)
from .hjoin import caterpillar_randic_spectrum
from .oracle import Spectrum, randic_spectrum_oracle
from .record import OutputRecord, Table, format_fixed, round_fixed, spectrum_values

METHODS = ("oracle", "reduction", "closed-form")


class MethodError(ValueError):
    pass


@dataclass(frozen=True)
class ResolvedInput:
    """A spec string or an edge-list file, with the caterpillar view when one exists."""
    source: str
    graph: Graph
    spec: Optional[CaterpillarSpec]
    from_spec: bool

    @property
    def default_method(self) -> str:
        return "reduction" if self.from_spec else "oracle"


def resolve_input(source: str) -> ResolvedInput:
    if looks_like_caterpillar(source):
        spec = parse_caterpillar(source)
        return ResolvedInput(source, build_caterpillar(spec), spec, True)
    graph = load_edge_list(source)
    return ResolvedInput(source, graph, caterpillar_spec_of(graph), False)


# ---------------------------------------------------------------------------
# spectrum / energy
# ---------------------------------------------------------------------------

def _zeros(spec: CaterpillarSpec) -> list[float]:
    return [0.0] * sum(p - 1 for p in spec.p)


def _closed_form_spectrum(spec: CaterpillarSpec, config: SpectraConfig) -> Spectrum:
    if spec.r == 2:
        core = spectrum_r2(spec.n, spec.p[0])
    elif spec.r == 3:
        core = spectrum_r3(spec.n, spec.p[0], spec.p[2], config)
    else:
        raise MethodError(f"closed-form covers r=2 and r=3 only, got r={spec.r} for {spec}")
    return Spectrum.from_values(core).union(_zeros(spec))


def compute_spectrum(inp: ResolvedInput, method: Optional[str] = None,
                     config: Optional[SpectraConfig] = None) -> tuple[Spectrum, str]:
    """Randić spectrum by the requested method; returns (spectrum, method used)."""
    config = config or SpectraConfig()
    method = method or inp.default_method
    if method not in METHODS:
        raise MethodError(f"unknown method {method!r} (choose from {', '.join(METHODS)})")
    if method == "oracle":
        return randic_spectrum_oracle(inp.graph, config), method
    if inp.spec is None:
        raise MethodError(
            f"{method} needs a caterpillar with at least one leaf on every spine vertex; "
            f"{inp.source} is not one (use --method oracle)"
        )
    if method == "reduction":
        return caterpillar_randic_spectrum(inp.spec, config), method
    return _closed_form_spectrum(inp.spec, config), method


def _inputs(inp: ResolvedInput, method: str) -> dict:
    return {
        "source": inp.source,
        "method": method,
        "graph": format_caterpillar(inp.spec) if inp.spec is not None else None,
        "n": inp.graph.n,
        "edges": inp.graph.edge_count,
    }


def cmd_spectrum(source: str, method: Optional[str] = None,
                 config: Optional[SpectraConfig] = None) -> OutputRecord:
    config = config or SpectraConfig()
    inp = resolve_input(source)
    spectrum, used = compute_spectrum(inp, method, config)
    return OutputRecord(
        command="spectrum",
        inputs=_inputs(inp, used),
        results={
            "spectrum": spectrum_values(spectrum.values),
            "multiplicities": [
                [round_fixed(v, config.energy_decimals), m]
                for v, m in spectrum.grouped(config.cluster_radius)
            ],
        },
        provenance=used,
    )


def cmd_energy(source: str, method: Optional[str] = None,
               config: Optional[SpectraConfig] = None) -> OutputRecord:
    config = config or SpectraConfig()
    inp = resolve_input(source)
    if inp.graph.edge_count == 0:
        energy, used = 0.0, method or inp.default_method
    else:
        spectrum, used = compute_spectrum(inp, method, config)
        energy = spectrum.energy()
    return OutputRecord(
        command="energy",
        inputs=_inputs(inp, used),
        results={"energy": round_fixed(energy, config.energy_decimals)},
        provenance=used,
    )


def record_table(record: OutputRecord, config: Optional[SpectraConfig] = None) -> Table:
    """CSV view of a spectrum or energy record."""
    config = config or SpectraConfig()
    if record.command == "energy":
        graph = record.inputs.get("graph") or record.inputs["source"]
        table = Table(["graph", "n", "method", "energy"])
        table.add([graph, record.inputs["n"], record.provenance,
                   format_fixed(record.results["energy"], config.energy_decimals)])
        return table
    if record.command == "spectrum":
        table = Table(["index", "eigenvalue"])
        for i, v in enumerate(record.results["spectrum"], start=1):
            table.add([i, format_fixed(v, config.energy_decimals)])
        return table
    if record.command == "sweep":
        columns = record.results["columns"]
        table = Table(list(columns))
        for row in record.results["rows"]:
            table.add(["" if row[c] is None else _cell(c, row[c], config) for c in columns])
        return table
    raise ValueError(f"no table view for command {record.command!r}")


# ---------------------------------------------------------------------------
# sweep
# ---------------------------------------------------------------------------

_INTERVAL_COLUMNS = ("r", "s")
_ENERGY_COLUMNS = ("re", "re_prev", "re_z", "re_next")


def _cell(column: str, value, config: SpectraConfig) -> str:
    if column in _INTERVAL_COLUMNS:
        return format_fixed(value, config.interval_decimals)
    if column in _ENERGY_COLUMNS:
        return format_fixed(value, config.energy_decimals)
    return str(value)


def _round_row(row: dict, config: SpectraConfig) -> dict:
    out = {}
    for key, value in row.items():
        if value is None or not isinstance(value, float):
            out[key] = value
        elif key in _INTERVAL_COLUMNS:
            out[key] = round_fixed(value, config.interval_decimals)
        else:
            out[key] = round_fixed(value, config.energy_decimals)
    return out


def _extremal_row(report: ExtremalReport) -> dict:
    prev, mid, nxt = report.neighborhood()
    row = {"n": report.family.n}
    if report.family.b is not None:
        row["b"] = report.family.b
    row.update(
        r=report.interval_r,
        s=report.interval_s,
        z=report.z,
        re_prev=prev,
        re_z=mid,
        re_next=nxt,
        graph=format_caterpillar(report.extremal_spec),
    )
    return row


def _families(kind: FamilyKind, ns: list[int], bs: Optional[list[int]]) -> list[Family]:
    if not ns:
        raise DomainError("sweep needs at least one --n")
    if kind in (FamilyKind.FIXED_MIDDLE, FamilyKind.FIXED_END):
        if not bs:
            raise DomainError(f"{kind.value} sweep needs --b")
        return [Family(kind, n, b) for n in ns for b in bs]
    return [Family(kind, n) for n in ns]


def cmd_sweep(family: str, ns: list[int], bs: Optional[list[int]] = None, full: bool = False,
              config: Optional[SpectraConfig] = None, verbose: bool = False) -> OutputRecord:
    """Extremal rows (n, r, s, z, neighbours) for symmetric/fixed-end; (p, RE) rows otherwise or with full=True."""
    config = config or SpectraConfig()
    kind = FamilyKind(family)
    families = _families(kind, list(ns), list(bs) if bs else None)
    tabular = kind in (FamilyKind.SYMMETRIC, FamilyKind.FIXED_END) and not full

    rows: list[dict] = []
    notes: list[str] = []
    extremes: list[dict] = []
    for f in families:
        if tabular:
            report = locate_z(f, config, verbose)
            rows.append(_extremal_row(report))
            notes.extend(report.notes)
            continue
        sweep = sweep_family(f, config)
        for p, energy in sweep.energies.items():
            row = {"n": f.n}
            if f.b is not None:
                row["b"] = f.b
            row.update(p=p, graph=format_caterpillar(f.spec(p)), re=energy)
            rows.append(row)
        report = extremal_report(f, config, verbose)
        notes.extend(report.notes)
        extremes.append({
            "family": f.label(),
            "argmax": list(sweep.argmax),
            "argmin": list(sweep.argmin),
            "max": round_fixed(sweep.max_energy, config.energy_decimals),
            "min": round_fixed(sweep.min_energy, config.energy_decimals),
        })

    columns = list(rows[0].keys())
    results = {
        "columns": columns,
        "rows": [_round_row(row, config) for row in rows],
        "notes": notes,
    }
    if extremes:
        results["extremes"] = extremes
    inputs = {"family": kind.value, "n": list(ns), "b": list(bs) if bs else None, "full": full}
    return OutputRecord(command="sweep", inputs=inputs, results=results, provenance="closed-form")


def render(record: OutputRecord, fmt: str, config: Optional[SpectraConfig] = None) -> str:
    if fmt == "json":
        return record.to_json()
    if fmt == "csv":
        return record_table(record, config).to_csv()
    raise ValueError(f"unknown format {fmt!r} (choose json or csv)")
