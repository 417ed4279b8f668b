"""Integer matrices attached to an oriented digraph.

All builders return ``numpy.int64`` arrays of shape ``(n, n)``.
"""

from __future__ import annotations

from typing import Callable, NamedTuple

import numpy as np

from .digraph import Digraph, in_degrees, out_degrees


class DegreeMatrices(NamedTuple):
    out: np.ndarray  # D+
    inn: np.ndarray  # D-
    total: np.ndarray  # D = D+ + D-
    tilde: np.ndarray  # D~ = D+ - D-


def adjacency_out(g: Digraph) -> np.ndarray:
    a = np.zeros((g.n, g.n), dtype=np.int64)
    if g.arcs:
        u, v = np.array(g.arcs).T
        a[u, v] = 1
    return a


def adjacency_in(g: Digraph) -> np.ndarray:
    return adjacency_out(g).T.copy()


def skew_adjacency(g: Digraph) -> np.ndarray:
    a = adjacency_out(g)
    return a - a.T


def underlying_adjacency(g: Digraph) -> np.ndarray:
    a = adjacency_out(g)
    return a + a.T


def degree_matrices(g: Digraph) -> DegreeMatrices:
    dout, din = out_degrees(g), in_degrees(g)
    return DegreeMatrices(np.diag(dout), np.diag(din), np.diag(dout + din), np.diag(dout - din))


def laplacian_underlying(g: Digraph) -> np.ndarray:
    """``L(G_U) = D - A(G_U)`` of the underlying undirected graph."""
    return degree_matrices(g).total - underlying_adjacency(g)


def skew_laplacian_old(g: Digraph) -> np.ndarray:
    """The earlier skew Laplacian ``SL = D - S`` built on total degrees."""
    return degree_matrices(g).total - skew_adjacency(g)


def laplacian_out(g: Digraph) -> np.ndarray:
    """Out-degree Laplacian ``L+ = D+ - A+``."""
    return degree_matrices(g).out - adjacency_out(g)


def skew_laplacian_new(g: Digraph) -> np.ndarray:
    """``D~ - S``: diagonal of out-minus-in degree, minus the skew adjacency.

    Every row sums to zero and the trace is zero.  For a balanced digraph
    this is exactly ``-S``.
    """
    a = adjacency_out(g)
    delta = a.sum(axis=1) - a.sum(axis=0)
    return np.diag(delta) - (a - a.T)


# CLI names; the symbolic spellings (A+, D~, SLnew, ...) are aliases.
BUILDERS: dict[str, Callable[[Digraph], np.ndarray]] = {
    "aplus": adjacency_out,
    "aminus": adjacency_in,
    "a": underlying_adjacency,
    "s": skew_adjacency,
    "dplus": lambda g: degree_matrices(g).out,
    "dminus": lambda g: degree_matrices(g).inn,
    "d": lambda g: degree_matrices(g).total,
    "dtilde": lambda g: degree_matrices(g).tilde,
    "l": laplacian_underlying,
    "sl": skew_laplacian_old,
    "lplus": laplacian_out,
    "slnew": skew_laplacian_new,
}

ALIASES = {"a+": "aplus", "a-": "aminus", "d+": "dplus", "d-": "dminus", "d~": "dtilde", "l+": "lplus"}


def matrix_by_name(g: Digraph, name: str) -> np.ndarray:
    key = name.strip().lower()
    key = ALIASES.get(key, key)
    try:
        return BUILDERS[key](g)
    except KeyError:
        raise KeyError(f"unknown matrix {name!r}; choose from {', '.join(BUILDERS)}") from None
