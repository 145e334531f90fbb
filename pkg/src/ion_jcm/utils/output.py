"""
Artifact writers: CSV trace, JSON metadata, SVG chart.
Writes are guarded by a file lock next to the target so concurrent runs sharing
an output directory do not interleave.
"""
import json
import os
from typing import Any, Dict

import numpy as np
from filelock import FileLock
from matplotlib import rc_context
from matplotlib.backends.backend_agg import FigureCanvasAgg
from matplotlib.figure import Figure

from ion_jcm.config import CSV_FORMAT
from ion_jcm.dynamics.states import PopulationTrace

CSV_COLUMNS = ["t_us", "rho_11", "rho_00", "rho_m1m1", "tail_bound"]

_LINES = (
    ("rho_11", r"$\rho_{11}$", "tab:red"),
    ("rho_00", r"$\rho_{00}$", "tab:green"),
    ("rho_m1m1", r"$\rho_{-1-1}$", "tab:blue"),
)


def _ensure_parent(path: str):
    parent = os.path.dirname(os.path.abspath(path))
    os.makedirs(parent, exist_ok=True)


def write_csv(path: str, t_us: np.ndarray, trace: PopulationTrace, fmt: str = CSV_FORMAT):
    """Comma-separated, header row, LF line endings, UTF-8, fixed number format."""
    rows = np.column_stack([
        t_us,
        trace.rho_11,
        trace.rho_00,
        trace.rho_m1m1,
        np.full(t_us.shape, trace.tail_bound),
    ])
    _ensure_parent(path)
    with FileLock(f"{path}.lock"):
        np.savetxt(
            path,
            rows,
            fmt=fmt,
            delimiter=",",
            newline="\n",
            header=",".join(CSV_COLUMNS),
            comments="",
            encoding="utf-8",
        )


def write_json(path: str, metadata: Dict[str, Any]):
    _ensure_parent(path)
    with FileLock(f"{path}.lock"):
        with open(path, "w", encoding="utf-8", newline="\n") as f:
            json.dump(metadata, f, indent=2, sort_keys=True)
            f.write("\n")


def read_json(path: str) -> Dict[str, Any]:
    with open(path, "r", encoding="utf-8") as f:
        return json.load(f)


def write_svg(path: str, t_us: np.ndarray, trace: PopulationTrace, title: str = ""):
    """Static line chart of the three occupations."""
    fig = Figure(figsize=(8, 4.5))
    FigureCanvasAgg(fig)
    ax = fig.subplots()
    for column, label, color in _LINES:
        ax.plot(t_us, getattr(trace, column), label=label, color=color, linewidth=0.8)
    ax.set_xlabel(r"t ($\mu$s)")
    ax.set_ylabel("occupation")
    ax.set_ylim(-0.02, 1.02)
    ax.set_xlim(float(t_us[0]), float(t_us[-1]))
    if title:
        ax.set_title(title)
    ax.legend(loc="upper right")
    fig.tight_layout()

    _ensure_parent(path)
    with FileLock(f"{path}.lock"):
        with rc_context({"svg.hashsalt": "ion-jcm"}):
            fig.savefig(path, format="svg", metadata={"Date": None})
