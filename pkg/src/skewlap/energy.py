"""Energy functionals of a digraph and the degree invariants M, M1.

Eight energies are computed side by side: the adjacency energy of the
underlying graph, the skew energy, the two undirected Laplacian energies
(``le_g`` absolute-deviation form, ``le_k`` second moment), the two earlier
skew Laplacian energies built on ``SL = D - S`` (``sle_k``, ``sle_g``), the
out-degree Laplacian energy ``le_m`` and the new ``sle`` from ``D~ - S``.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass
from fractions import Fraction

import numpy as np

from . import matrices as mx
from .digraph import Digraph, component_count, in_degrees, out_degrees, total_degrees
from .eigen import Spectrum, eigenvalues, spectral_moment


class IdentityMismatch(AssertionError):
    """A closed-form energy disagreed with its exact trace-of-square."""


@dataclass(frozen=True)
class EnergyReport:
    n: int
    m: int
    p: int
    adjacency_energy: float
    skew_energy: float
    le_g: float
    le_k: int
    sle_k: int
    sle_g: float
    le_m: int
    sle: float
    M: Fraction
    M1: Fraction

    CSV_HEADER = "n,m,p,E,Es,LEg,LEk,SLEk,SLEg,LEm,SLE,M,M1"

    def as_dict(self) -> dict:
        return asdict(self)


def _abs_sum(s: Spectrum, shift: float = 0.0) -> float:
    return float(sum(abs(z - shift) for z in s.values))


def sle_spectrum(g: Digraph) -> Spectrum:
    return eigenvalues(mx.skew_laplacian_new(g))


def sle(g: Digraph) -> float:
    """Sum of eigenvalue moduli of ``D~ - S``."""
    return sle_spectrum(g).energy()


def skew_energy(g: Digraph) -> float:
    return eigenvalues(mx.skew_adjacency(g)).energy()


def adjacency_energy(g: Digraph) -> float:
    return eigenvalues(mx.underlying_adjacency(g)).energy()


def laplacian_energy_g(g: Digraph) -> float:
    mean = 2 * g.m / g.n
    return _abs_sum(eigenvalues(mx.laplacian_underlying(g)), mean)


def skew_laplacian_energy_g(g: Digraph) -> float:
    """``sum |mu_i - 2m/n|`` over the (complex) eigenvalues of ``SL = D - S``."""
    mean = 2 * g.m / g.n
    return _abs_sum(eigenvalues(mx.skew_laplacian_old(g)), mean)


def _checked(name: str, closed: int, trace: int) -> int:
    if closed != trace:
        raise IdentityMismatch(f"{name}: closed form {closed} != trace of square {trace}")
    return closed


def laplacian_energy_k(g: Digraph) -> int:
    d = total_degrees(g)
    closed = int((d * (d + 1)).sum())
    return _checked("LE_k", closed, spectral_moment(mx.laplacian_underlying(g), 2))


def skew_laplacian_energy_k(g: Digraph) -> int:
    d = total_degrees(g)
    closed = int((d * (d - 1)).sum())
    return _checked("SLE_k", closed, spectral_moment(mx.skew_laplacian_old(g), 2))


def out_laplacian_energy(g: Digraph) -> int:
    d = out_degrees(g)
    closed = int((d * d).sum())
    return _checked("LE_m", closed, spectral_moment(mx.laplacian_out(g), 2))


def m_invariants(g: Digraph) -> tuple[Fraction, Fraction]:
    """``M = -m + (1/2) sum (d+_i - d-_i)^2`` and ``M1 = M + 2m``, exactly."""
    delta = out_degrees(g) - in_degrees(g)
    M = Fraction(-g.m) + Fraction(int((delta * delta).sum()), 2)
    return M, M + 2 * g.m


def energy_report(g: Digraph) -> EnergyReport:
    M, M1 = m_invariants(g)
    return EnergyReport(
        n=g.n,
        m=g.m,
        p=component_count(g),
        adjacency_energy=adjacency_energy(g),
        skew_energy=skew_energy(g),
        le_g=laplacian_energy_g(g),
        le_k=laplacian_energy_k(g),
        sle_k=skew_laplacian_energy_k(g),
        sle_g=skew_laplacian_energy_g(g),
        le_m=out_laplacian_energy(g),
        sle=sle(g),
        M=M,
        M1=M1,
    )


def degree_spread(d: np.ndarray, m: int, n: int) -> Fraction:
    """``(1/2) sum (d_i - 2m/n)^2`` in exact arithmetic."""
    mean = Fraction(2 * m, n)
    return sum((Fraction(int(x)) - mean) ** 2 for x in d) / 2
