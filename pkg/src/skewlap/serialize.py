"""JSON, CSV and plain-text renderings of matrices, spectra and reports.

Floats are written with 12 significant digits, and magnitudes below
``CHOP`` are written as 0 so solver noise never reaches a golden file.  The
spectrum residual is written as its power-of-ten ceiling for the same
reason.
"""

from __future__ import annotations

import json
import math
from fractions import Fraction
from importlib import resources

import numpy as np

from .bounds import BoundsReport
from .eigen import Spectrum, zero_multiplicity
from .energy import EnergyReport
from .oracle import SweepSummary

CHOP = 1e-11
SCHEMA_VERSION = 1


def num(x):
    if x is None or isinstance(x, bool):
        return x
    if isinstance(x, (int, np.integer)):
        return int(x)
    if isinstance(x, Fraction):
        return int(x) if x.denominator == 1 else num(float(x))
    x = float(x)
    if not math.isfinite(x):
        return None
    if abs(x) < CHOP:
        return 0.0
    return float(f"{x:.12g}")


def decade_ceiling(x: float) -> float:
    if x <= 0:
        return 0.0
    return float(f"1e{math.ceil(math.log10(x))}")


def dumps(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def load_schema(name: str) -> dict:
    text = resources.files("skewlap").joinpath("schemas", f"{name}.schema.json").read_text()
    return json.loads(text)


# -- matrices ------------------------------------------------------------------


def matrix_dict(name: str, m: np.ndarray) -> dict:
    return {"matrix": name, "order": int(m.shape[0]), "rows": [[num(v) for v in row] for row in m.tolist()]}


def matrix_table(m: np.ndarray) -> str:
    cells = [[str(num(v)) for v in row] for row in m.tolist()]
    if not cells:
        return "\n"
    width = max(len(c) for row in cells for c in row)
    return "\n".join(" ".join(c.rjust(width) for c in row) for row in cells) + "\n"


# -- spectra -------------------------------------------------------------------


def spectrum_dict(name: str, s: Spectrum) -> dict:
    return {
        "matrix": name,
        "order": s.order,
        "method": s.method,
        "eigenvalues": [{"re": num(z.real), "im": num(z.imag)} for z in s.values],
        "zero_multiplicity": zero_multiplicity(s),
        "residual": decade_ceiling(s.residual),
        "zero_tol": num(s.zero_tol),
    }


def _complex_str(z: complex) -> str:
    re, im = num(z.real), num(z.imag)
    if im == 0:
        return f"{re}"
    if re == 0:
        return f"{im}i"
    return f"{re}{'+' if im > 0 else '-'}{abs(im)}i"


def spectrum_table(name: str, s: Spectrum) -> str:
    lines = [f"matrix {name}  order {s.order}  method {s.method}"]
    lines += [f"  {_complex_str(z):>28}   |mu| = {num(abs(z))}" for z in s.values]
    lines.append(f"zero multiplicity {zero_multiplicity(s)}  residual <= {decade_ceiling(s.residual)}")
    return "\n".join(lines) + "\n"


# -- energies ------------------------------------------------------------------

_CSV_FIELDS = ("n", "m", "p", "adjacency_energy", "skew_energy", "le_g", "le_k", "sle_k",
               "sle_g", "le_m", "sle", "M", "M1")


def energy_dict(r: EnergyReport) -> dict:
    return {k: num(getattr(r, k)) for k in _CSV_FIELDS}


def _csv_cell(x) -> str:
    x = num(x)
    return str(x) if isinstance(x, int) else f"{x:.12g}"


def energy_csv(r: EnergyReport, header: bool = True) -> str:
    row = ",".join(_csv_cell(getattr(r, k)) for k in _CSV_FIELDS)
    return (EnergyReport.CSV_HEADER + "\n" if header else "") + row + "\n"


def energy_table(r: EnergyReport) -> str:
    labels = dict(zip(_CSV_FIELDS, EnergyReport.CSV_HEADER.split(",")))
    return "".join(f"{labels[k]:>5}  {num(getattr(r, k))}\n" for k in _CSV_FIELDS)


# -- bounds --------------------------------------------------------------------


def bounds_dict(r: BoundsReport) -> dict:
    return {
        "n": r.n,
        "m": r.m,
        "p": r.p,
        "sle": num(r.sle),
        "M": num(r.M),
        "M1": num(r.M1),
        "classification": r.classification.value,
        "lower_equality": r.lower_equality,
        "odd_eulerian_components": r.odd_eulerian_components,
        "checks": [
            {
                "name": c.name,
                "side": c.side,
                "bound": num(c.bound),
                "energy_name": c.energy_name,
                "energy": num(c.energy),
                "slack": num(c.slack),
                "tight": c.tight,
                "holds": c.holds,
            }
            for c in r.checks
        ],
    }


def bounds_table(r: BoundsReport) -> str:
    head = f"{'check':<28} {'side':<5} {'bound':>16} {'energy':>16} {'slack':>16}  tight  holds"
    lines = [head, "-" * len(head)]
    for c in r.checks:
        bound = "n/a" if c.bound is None else str(num(c.bound))
        slack = "n/a" if c.slack is None else str(num(c.slack))
        lines.append(
            f"{c.name:<28} {c.side:<5} {bound:>16} {str(num(c.energy)):>16} {slack:>16}  "
            f"{'yes' if c.tight else 'no':<5}  {'yes' if c.holds else 'NO'}"
        )
    lines.append(f"n={r.n} m={r.m} p={r.p} M={num(r.M)} M1={num(r.M1)} SLE={num(r.sle)}")
    lines.append(f"equality case: {r.classification.value}")
    return "\n".join(lines) + "\n"


# -- sweeps --------------------------------------------------------------------


def sweep_dict(s: SweepSummary) -> dict:
    d = s.as_dict()
    for key in ("min_nonzero_slack", "min_nonzero_modulus"):
        d[key] = num(d[key])
    d["max_residual"] = decade_ceiling(s.max_residual)
    d["classifications"] = dict(sorted(d["classifications"].items()))
    return d
