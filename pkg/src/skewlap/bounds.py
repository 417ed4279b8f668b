"""Energy bounds: evaluation, slack, tightness, and equality-case classification.

Every check is a :class:`BoundCheck`.  ``tight`` means
``slack <= tol * max(1, bound)`` and ``holds`` means the inequality is
satisfied up to that same margin.

Check names
-----------
``sle_lower``             2 sqrt|M| <= SLE
``sle_upper_components``  SLE <= sqrt(2 M1 (n - p))
``sle_upper``             SLE <= sqrt(2 M1 n)
``sle_upper_2m1``         SLE <= 2 M1 (only without isolated vertices)

The ``leg_*`` and ``sleg_*`` checks are the older bounds on ``LE_g`` of the
underlying graph and on ``SLE_g``; each uses its own ``M`` (``+m`` for
``LE_g``, ``-m`` for ``SLE_g``) over total degrees.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction

from . import matrices as mx
from .digraph import (
    Digraph,
    component_count,
    has_isolated_vertices,
    in_degrees,
    is_balanced,
    out_degrees,
    total_degrees,
    weak_components,
)
from .eigen import Spectrum, eigenvalues
from .energy import degree_spread, m_invariants

DEFAULT_TOL = 1e-7


class Equality(str, Enum):
    NOT_TIGHT = "NotTight"
    LOWER_TIGHT = "LowerTight"
    UPPER_ZERO_REGULAR = "UpperTight-ZeroRegular"
    UPPER_BALANCED = "UpperTight-BalancedBipartiteSpectrum"
    UNCLASSIFIED = "TightButUnclassified"


@dataclass(frozen=True)
class BoundCheck:
    name: str
    side: str
    bound: float | None
    energy_name: str
    energy: float
    slack: float | None
    tight: bool
    holds: bool


@dataclass(frozen=True)
class BoundsReport:
    n: int
    m: int
    p: int
    sle: float
    M: Fraction
    M1: Fraction
    checks: tuple[BoundCheck, ...]
    classification: Equality
    lower_equality: bool | None = None
    odd_eulerian_components: bool | None = None
    spectrum: Spectrum | None = field(default=None, compare=False, repr=False)

    def check(self, name: str) -> BoundCheck:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    @property
    def violations(self) -> list[BoundCheck]:
        return [c for c in self.checks if not c.holds]


def make_check(name: str, side: str, bound: float | None, energy_name: str, energy: float,
               tol: float = DEFAULT_TOL) -> BoundCheck:
    if bound is None:
        return BoundCheck(name, side, None, energy_name, energy, None, False, True)
    margin = tol * max(1.0, abs(bound))
    slack = abs(energy - bound)
    holds = energy >= bound - margin if side == "lower" else energy <= bound + margin
    return BoundCheck(name, side, bound, energy_name, energy, slack, slack <= margin, holds)


def _sqrt(x) -> float:
    return math.sqrt(max(float(x), 0.0))


def sle_bounds(g: Digraph, tol: float = DEFAULT_TOL, spectrum: Spectrum | None = None) -> list[BoundCheck]:
    """``2 sqrt|M| <= SLE <= sqrt(2 M1 (n - p))``."""
    s = spectrum if spectrum is not None else eigenvalues(mx.skew_laplacian_new(g))
    energy = s.energy()
    M, M1 = m_invariants(g)
    p = component_count(g)
    return [
        make_check("sle_lower", "lower", 2 * _sqrt(abs(M)), "sle", energy, tol),
        make_check("sle_upper_components", "upper", _sqrt(2 * M1 * (g.n - p)), "sle", energy, tol),
    ]


def sle_coarse_bounds(g: Digraph, tol: float = DEFAULT_TOL, spectrum: Spectrum | None = None) -> list[BoundCheck]:
    """``SLE <= sqrt(2 M1 n)``, and ``SLE <= 2 M1`` when no vertex is isolated."""
    s = spectrum if spectrum is not None else eigenvalues(mx.skew_laplacian_new(g))
    energy = s.energy()
    _, M1 = m_invariants(g)
    out = [make_check("sle_upper", "upper", _sqrt(2 * M1 * g.n), "sle", energy, tol)]
    if not has_isolated_vertices(g):
        out.append(make_check("sle_upper_2m1", "upper", float(2 * M1), "sle", energy, tol))
    return out


def comparison_bounds(g: Digraph, tol: float = DEFAULT_TOL) -> list[BoundCheck]:
    """Older bounds on ``LE_g`` (underlying graph) and on ``SLE_g``."""
    n, m = g.n, g.m
    if n == 0:
        return []
    mean = Fraction(2 * m, n)
    spread = degree_spread(total_degrees(g), m, n)
    p = component_count(g)
    isolated = has_isolated_vertices(g)

    lap = eigenvalues(mx.laplacian_underlying(g))
    le_g = float(sum(abs(z - float(mean)) for z in lap.values))
    Mu = m + spread
    checks = [
        make_check("leg_lower", "lower", 2 * _sqrt(Mu), "le_g", le_g, tol),
        make_check("leg_upper", "upper", _sqrt(2 * Mu * n), "le_g", le_g, tol),
        make_check("leg_upper_components", "upper",
                   float(mean * p) + _sqrt((n - p) * (2 * Mu - p * mean**2)), "le_g", le_g, tol),
    ]
    if not isolated:
        checks.append(make_check("leg_upper_2m", "upper", float(2 * Mu), "le_g", le_g, tol))

    old = eigenvalues(mx.skew_laplacian_old(g))
    gammas = [abs(z - float(mean)) for z in old.values]
    sle_g = float(sum(gammas))
    Ms = -m + spread
    M1s = Ms + 2 * m
    k = max(gammas)
    checks += [
        make_check("sleg_lower", "lower", 2 * _sqrt(Ms) if Ms >= 0 else None, "sle_g", sle_g, tol),
        make_check("sleg_upper", "upper", _sqrt(2 * M1s * n), "sle_g", sle_g, tol),
        make_check("sleg_upper_spectral_radius", "upper",
                   k + _sqrt((n - 1) * (2 * float(M1s) - k * k)), "sle_g", sle_g, tol),
    ]
    if not isolated:
        checks.append(make_check("sleg_upper_2m1", "upper", float(2 * M1s), "sle_g", sle_g, tol))
    return checks


def _same_ray(points: list[complex], tol: float) -> bool:
    ref = None
    for z in points:
        if ref is None:
            ref = z
            continue
        if abs(cmath.phase(z / ref)) > tol:
            return False
    return True


def classify_lower_equality(s: Spectrum, tol: float = DEFAULT_TOL) -> bool:
    """Whether ``sum |mu_i| = 2 sqrt|M|`` is forced by the spectrum's geometry.

    True iff all nonzero pairwise products ``mu_i mu_j`` (i < j) point along
    one ray from the origin, and so do all nonzero squares ``mu_i**2``.
    Zero products lie on every closed ray and are skipped.
    """
    nz = [z for z in s.values if abs(z) > s.zero_tol]
    products = [nz[i] * nz[j] for i in range(len(nz)) for j in range(i + 1, len(nz))]
    return _same_ray(products, tol) and _same_ray([z * z for z in nz], tol)


def classify_upper_equality(g: Digraph, s: Spectrum, tol: float = DEFAULT_TOL) -> Equality:
    """Which equality case an upper-tight digraph falls into.

    Either the digraph has no arcs, or it is balanced and the spectrum is
    ``0`` (p times) together with ``+ai`` and ``-ai`` ((n - p)/2 times each)
    for a single ``a > 0``.
    """
    if g.m == 0:
        return Equality.UPPER_ZERO_REGULAR
    if not is_balanced(g):
        return Equality.UNCLASSIFIED
    p = component_count(g)
    zeros = [z for z in s.values if abs(z) <= s.zero_tol]
    rest = [z for z in s.values if abs(z) > s.zero_tol]
    if len(zeros) != p or len(rest) % 2 or not rest:
        return Equality.UNCLASSIFIED
    a = max(abs(z) for z in rest)
    margin = tol * max(1.0, a)
    if any(abs(z.real) > margin or abs(abs(z) - a) > margin for z in rest):
        return Equality.UNCLASSIFIED
    up = sum(1 for z in rest if z.imag > 0)
    if up != len(rest) // 2:
        return Equality.UNCLASSIFIED
    return Equality.UPPER_BALANCED


def verify_odd_eulerian_components(g: Digraph) -> bool:
    """Every weak component is balanced and has an odd number of vertices."""
    dout, din = out_degrees(g), in_degrees(g)
    for comp in weak_components(g):
        if len(comp) % 2 == 0:
            return False
        if any(dout[v] != din[v] for v in comp):
            return False
    return True


def bounds_report(g: Digraph, tol: float = DEFAULT_TOL, comparison: bool = True,
                  spectrum: Spectrum | None = None) -> BoundsReport:
    s = spectrum if spectrum is not None else eigenvalues(mx.skew_laplacian_new(g))
    main = sle_bounds(g, tol, s)
    checks = main + sle_coarse_bounds(g, tol, s)
    if comparison:
        checks += comparison_bounds(g, tol)
    lower, upper = main
    lower_eq = None
    odd = None
    if upper.tight:
        cls = classify_upper_equality(g, s, tol)
        odd = verify_odd_eulerian_components(g)
    elif lower.tight:
        lower_eq = classify_lower_equality(s, tol)
        cls = Equality.LOWER_TIGHT if lower_eq else Equality.UNCLASSIFIED
    else:
        cls = Equality.NOT_TIGHT
    if lower.tight and lower_eq is None:
        lower_eq = classify_lower_equality(s, tol)
    M, M1 = m_invariants(g)
    return BoundsReport(
        n=g.n, m=g.m, p=component_count(g), sle=s.energy(), M=M, M1=M1,
        checks=tuple(checks), classification=cls, lower_equality=lower_eq,
        odd_eulerian_components=odd, spectrum=s,
    )
