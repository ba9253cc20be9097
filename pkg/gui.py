#!/usr/bin/env python3
"""Gradio GUI — same commands as cli.py, browser-based interface."""

import io
import sys
import threading
import time
import traceback

import gradio as gr

from core.commands import METHODS, cmd_energy, cmd_spectrum, cmd_sweep, record_table
from core.config import SpectraConfig
from core.extremal import FamilyKind
from core.verify import CHECKS, run_checks

FAMILY_CHOICES = [k.value for k in FamilyKind]
METHOD_CHOICES = ["default"] + list(METHODS)


# ---------------------------------------------------------------------------
# Helpers
# ---------------------------------------------------------------------------

class _LogStream:
    """Thread-safe stdout replacement that accumulates text for the log panel."""

    def __init__(self, echo=None):
        self._buf = io.StringIO()
        self._lock = threading.Lock()
        self._echo = echo

    def write(self, text):
        with self._lock:
            self._buf.write(text)
        if self._echo:
            self._echo.write(text)

    def flush(self):
        if self._echo:
            self._echo.flush()

    def getvalue(self):
        with self._lock:
            return self._buf.getvalue()


def _parse_ints(text):
    """Integers separated by commas or spaces; blank gives []."""
    if not text:
        return []
    return [int(tok) for tok in text.replace(",", " ").split()]


# ---------------------------------------------------------------------------
# Config builder
# ---------------------------------------------------------------------------

def _build_config(quick=False, decimals=None, seed=None, workers=None, max_n=None):
    """Construct SpectraConfig from GUI widget values."""
    config = SpectraConfig.quick() if quick else SpectraConfig()

    if decimals is not None:
        config.energy_decimals = int(decimals)
    if workers is not None:
        config.max_workers = int(workers)
    if max_n:
        n = int(max_n)
        config.max_n = n
        config.oracle_max_n = n
        config.path_max_n = n
        config.theorem4_max_n = n
        config.theorem5_max_n = n
        config.symmetric_max_n = n
        config.fixed_end_max_n = n

    if seed is not None:
        try:
            config.rng_seed = int(seed)
        except (ValueError, TypeError):
            pass

    return config


# ---------------------------------------------------------------------------
# Tab handlers
# ---------------------------------------------------------------------------

def run_spectrum(source, method, decimals):
    """Returns (energy text, spectrum CSV, JSON record)."""
    config = _build_config(decimals=decimals)
    method = None if method == "default" else method
    try:
        spec_record = cmd_spectrum(source.strip(), method, config)
        energy_record = cmd_energy(source.strip(), method, config)
    except Exception as e:
        return f"error: {e}", "", ""
    energy = energy_record.results["energy"]
    summary = (f"RE = {energy:.{config.energy_decimals}f}  "
               f"({energy_record.provenance}, n={energy_record.inputs['n']})")
    return summary, record_table(spec_record, config).to_csv(), spec_record.to_json()


def run_sweep(family, n_text, b_text, full, decimals):
    """Returns (table, diagnostics text)."""
    config = _build_config(decimals=decimals)
    try:
        record = cmd_sweep(family, _parse_ints(n_text), _parse_ints(b_text) or None, bool(full), config)
    except Exception as e:
        return gr.Dataframe(value=[], headers=["error"]), f"error: {e}"
    table = record_table(record, config)
    notes = "\n".join(record.results["notes"]) or "no diagnostics"
    return gr.Dataframe(value=table.rows, headers=table.header), notes


def run_verify_gen(selected, quick, max_n, seed, workers):
    """Generator yielding the verification log as it grows."""
    log = _LogStream(echo=sys.__stdout__)
    config = _build_config(quick=quick, seed=seed, workers=workers, max_n=max_n)
    names = list(selected) or list(CHECKS)
    state = {"done": False}

    def _work():
        old = sys.stdout
        sys.stdout = log
        try:
            report = run_checks(names, config, verbose=True)
            print()
            report.print_summary()
        except Exception:
            traceback.print_exc(file=log)
        finally:
            sys.stdout = old
            state["done"] = True

    t = threading.Thread(target=_work, daemon=True)
    t.start()

    while not state["done"]:
        time.sleep(0.4)
        yield log.getvalue()

    t.join()
    yield log.getvalue()


# ---------------------------------------------------------------------------
# UI
# ---------------------------------------------------------------------------

def build_ui():
    with gr.Blocks(title="Randić caterpillars") as app:
        gr.Markdown(
            "# Randić spectra of caterpillars\n"
            "H-join reduction, closed forms and extremal families — same commands as `cli.py`."
        )

        with gr.Tab("Spectrum / Energy"):
            with gr.Row():
                source = gr.Textbox(label="Caterpillar spec or edge-list path", value="T(5,6,5)")
                method = gr.Dropdown(choices=METHOD_CHOICES, value="default", label="Method")
                decimals = gr.Slider(minimum=3, maximum=15, step=1, value=9, label="Decimals")
            spectrum_btn = gr.Button("Compute", variant="primary")
            energy_box = gr.Textbox(label="Randić energy", interactive=False)
            with gr.Row():
                spectrum_csv = gr.Textbox(label="Spectrum (CSV)", lines=12, interactive=False)
                spectrum_json = gr.Code(label="Record (JSON)", language="json")

        with gr.Tab("Family sweep"):
            with gr.Row():
                family = gr.Dropdown(choices=FAMILY_CHOICES, value="symmetric", label="Family")
                n_text = gr.Textbox(label="n (one or more)", value="19 21 35 50")
                b_text = gr.Textbox(label="b (fixed-middle / fixed-end)", value="")
                full = gr.Checkbox(label="All (p, RE) rows", value=False)
                sweep_decimals = gr.Slider(minimum=3, maximum=15, step=1, value=9, label="Decimals")
            sweep_btn = gr.Button("Sweep", variant="primary")
            sweep_table = gr.Dataframe(label="Table", interactive=False)
            sweep_notes = gr.Textbox(label="Diagnostics", lines=4, interactive=False)

        with gr.Tab("Verify"):
            checks = gr.CheckboxGroup(choices=list(CHECKS), value=[], label="Suites (none = all)")
            with gr.Row():
                quick = gr.Checkbox(label="Quick (small suites)", value=True)
                max_n = gr.Number(label="Max n (blank = preset)", value=None, precision=0)
                seed = gr.Number(label="RNG Seed (blank = random)", value=None, precision=0)
                workers = gr.Slider(minimum=1, maximum=16, step=1, value=4, label="Workers")
            verify_btn = gr.Button("Run checks", variant="primary", size="lg")
            verify_log = gr.Textbox(label="Verification Log", lines=20, max_lines=50, interactive=False)

        # --- Events ---
        spectrum_btn.click(
            fn=run_spectrum,
            inputs=[source, method, decimals],
            outputs=[energy_box, spectrum_csv, spectrum_json],
        )
        sweep_btn.click(
            fn=run_sweep,
            inputs=[family, n_text, b_text, full, sweep_decimals],
            outputs=[sweep_table, sweep_notes],
        )
        verify_btn.click(
            fn=run_verify_gen,
            inputs=[checks, quick, max_n, seed, workers],
            outputs=verify_log,
        )

    return app


if __name__ == "__main__":
    build_ui().launch()
