"""Exhaustive and randomized verification of the SLE identities and bounds.

The sweep enumerates every labelled oriented graph on up to five vertices
(``3 ** C(n, 2)`` of them per order) and optionally a seeded batch of random
oriented graphs, running :func:`check_digraph` on each.  Partial summaries
are merged in stream order, so a sweep's JSON is reproducible regardless of
worker count.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from typing import Iterator

import numpy as np

from . import matrices as mx
from .bounds import DEFAULT_TOL, Equality, bounds_report, classify_lower_equality
from .digraph import Digraph, component_count, format_edge_list, in_degrees, is_balanced, out_degrees
from .eigen import EigenError, Spectrum, eigenvalues, spectral_moment, zero_multiplicity
from .energy import IdentityMismatch, laplacian_energy_k, m_invariants, out_laplacian_energy, skew_laplacian_energy_k
from .families import random_oriented

MAX_EXHAUSTIVE_ORDER = 5
BALANCED_TOL = 1e-9
MOMENT_TOL = 1e-8
WITNESS_CAP = 5000


class OrderTooLarge(ValueError):
    pass


class ViolationFound(AssertionError):
    def __init__(self, summary: SweepSummary):
        first = summary.violations[0]
        super().__init__(f"{len(summary.violations)} violation(s); first: {first['check']} on\n{first['digraph']}")
        self.summary = summary


@dataclass(frozen=True)
class RandomSpec:
    count: int
    n: int
    arc_probability: float = 0.5
    seed: int = 0


@dataclass
class SweepSummary:
    checked: int = 0
    violations: list[dict] = field(default_factory=list)
    lower_tight: int = 0
    upper_tight: int = 0
    classifications: dict[str, int] = field(default_factory=dict)
    min_nonzero_slack: float = math.inf
    max_residual: float = 0.0
    min_nonzero_modulus: float = math.inf
    lower_tight_witnesses: list[tuple[int, tuple[tuple[int, int], ...]]] = field(default_factory=list)
    upper_tight_witnesses: list[tuple[int, tuple[tuple[int, int], ...]]] = field(default_factory=list)

    def merge(self, other: SweepSummary) -> SweepSummary:
        classes = dict(self.classifications)
        for k, v in other.classifications.items():
            classes[k] = classes.get(k, 0) + v
        return SweepSummary(
            checked=self.checked + other.checked,
            violations=self.violations + other.violations,
            lower_tight=self.lower_tight + other.lower_tight,
            upper_tight=self.upper_tight + other.upper_tight,
            classifications=classes,
            min_nonzero_slack=min(self.min_nonzero_slack, other.min_nonzero_slack),
            max_residual=max(self.max_residual, other.max_residual),
            min_nonzero_modulus=min(self.min_nonzero_modulus, other.min_nonzero_modulus),
            lower_tight_witnesses=(self.lower_tight_witnesses + other.lower_tight_witnesses)[:WITNESS_CAP],
            upper_tight_witnesses=(self.upper_tight_witnesses + other.upper_tight_witnesses)[:WITNESS_CAP],
        )

    def as_dict(self) -> dict:
        d = asdict(self)
        d["lower_tight_witnesses"] = len(self.lower_tight_witnesses)
        d["upper_tight_witnesses"] = len(self.upper_tight_witnesses)
        for key in ("min_nonzero_slack", "min_nonzero_modulus"):
            if math.isinf(d[key]):
                d[key] = None
        return d


# -- enumeration ---------------------------------------------------------------


def enumeration_size(n: int) -> int:
    return 3 ** (n * (n - 1) // 2)


def oriented_from_index(n: int, index: int) -> Digraph:
    """The ``index``-th oriented graph in :func:`enumerate_oriented` order.

    Each unordered pair (lexicographic, first pair most significant) takes
    a base-3 digit: 0 absent, 1 forward ``i -> j``, 2 backward ``j -> i``.
    """
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    arcs = []
    for i, j in reversed(pairs):
        index, digit = divmod(index, 3)
        if digit == 1:
            arcs.append((i, j))
        elif digit == 2:
            arcs.append((j, i))
    return Digraph(n, tuple(arcs))


def enumerate_oriented(n: int) -> Iterator[Digraph]:
    if not 1 <= n <= MAX_EXHAUSTIVE_ORDER:
        raise OrderTooLarge(f"exhaustive enumeration supports 1 <= n <= {MAX_EXHAUSTIVE_ORDER}, got {n}")
    for k in range(enumeration_size(n)):
        yield oriented_from_index(n, k)


# -- per-digraph oracles -------------------------------------------------------


def moment_oracle_check(g: Digraph, tol: float = MOMENT_TOL, spectrum: Spectrum | None = None) -> bool:
    """Compare the solver's spectrum with exact degree formulas.

    Checks ``sum mu = 0``, ``sum mu^2 = 2M`` and
    ``sum_{i != j} mu_i mu_j = sum_{i != j} delta_i delta_j + 2m`` with
    ``delta = d+ - d-``.  The right-hand sides are integers computed from
    degrees alone.
    """
    if g.n == 0:
        return True
    s = spectrum if spectrum is not None else eigenvalues(mx.skew_laplacian_new(g))
    mu = np.array(s.values, dtype=complex)
    delta = (out_degrees(g) - in_degrees(g)).astype(object)
    M, _ = m_invariants(g)
    p1 = complex(mu.sum())
    p2 = complex((mu * mu).sum())
    cross = p1 * p1 - p2
    cross_exact = int(delta.sum()) ** 2 - int((delta * delta).sum()) + 2 * g.m
    scale = tol * max(1.0, float((np.abs(mu) ** 2).sum()))
    return abs(p1) <= scale and abs(p2 - 2 * float(M)) <= scale and abs(cross - cross_exact) <= scale


def zero_multiplicity_check(g: Digraph, spectrum: Spectrum | None = None) -> bool:
    s = spectrum if spectrum is not None else eigenvalues(mx.skew_laplacian_new(g))
    return zero_multiplicity(s) >= component_count(g)


def check_digraph(g: Digraph, tol: float = DEFAULT_TOL) -> SweepSummary:
    """Run every oracle on one digraph and return a one-item summary."""
    out = SweepSummary(checked=1)

    def fail(name: str, detail: str = "") -> None:
        out.violations.append({"check": name, "detail": detail, "digraph": format_edge_list(g)})

    sl = mx.skew_laplacian_new(g)
    if int(np.trace(sl)) != 0 or np.any(sl.sum(axis=1) != 0):
        fail("trace_and_row_sums_zero")
    try:
        s = eigenvalues(sl)
    except EigenError as exc:
        fail("eigensolver", repr(exc))
        return out
    out.max_residual = s.residual
    nonzero = [abs(z) for z in s.values if abs(z) > s.zero_tol]
    if nonzero:
        out.min_nonzero_modulus = min(nonzero)

    M, _ = m_invariants(g)
    if M.denominator != 1 or spectral_moment(sl, 2) != 2 * M:
        fail("second_moment_equals_2M", f"trace={spectral_moment(sl, 2)} 2M={2 * M}")
    if not moment_oracle_check(g, spectrum=s):
        fail("moment_oracle")
    if not zero_multiplicity_check(g, s):
        fail("zero_multiplicity_at_least_p", f"zeros={zero_multiplicity(s)} p={component_count(g)}")

    report = bounds_report(g, tol, comparison=False, spectrum=s)
    for c in report.checks:
        if not c.holds:
            fail(c.name, f"bound={c.bound!r} energy={c.energy!r}")
        elif not c.tight and c.slack is not None:
            out.min_nonzero_slack = min(out.min_nonzero_slack, c.slack)
    if report.check("sle_upper_components").bound > report.check("sle_upper").bound + 1e-12:
        fail("bound_monotonicity")

    lower, upper = report.check("sle_lower"), report.check("sle_upper_components")
    witness = (g.n, g.arcs)
    if lower.tight:
        out.lower_tight = 1
        out.lower_tight_witnesses.append(witness)
        if not classify_lower_equality(s, tol):
            fail("lower_equality_geometry")
    if upper.tight:
        out.upper_tight = 1
        out.upper_tight_witnesses.append(witness)
        if not report.odd_eulerian_components:
            fail("upper_tight_components_odd_eulerian")
    cls = report.classification
    out.classifications[cls.value] = 1
    if cls is Equality.UNCLASSIFIED:
        fail("unclassified_equality")

    if is_balanced(g) and g.m:
        es = eigenvalues(mx.skew_adjacency(g)).energy()
        if abs(s.energy() - es) > BALANCED_TOL:
            fail("balanced_sle_equals_skew_energy", f"sle={s.energy()!r} es={es!r}")

    try:
        laplacian_energy_k(g)
        skew_laplacian_energy_k(g)
        out_laplacian_energy(g)
    except IdentityMismatch as exc:
        fail("closed_form_identity", str(exc))
    return out


# -- sweeps --------------------------------------------------------------------


def _run_chunk(task: tuple) -> SweepSummary:
    kind, tol = task[0], task[1]
    total = SweepSummary()
    if kind == "exhaustive":
        _, _, n, start, stop = task
        for k in range(start, stop):
            total = total.merge(check_digraph(oriented_from_index(n, k), tol))
    else:
        _, _, n, prob, seed, start, stop = task
        for i in range(start, stop):
            total = total.merge(check_digraph(random_oriented(n, prob, (seed, i)), tol))
    return total


def _tasks(n_max: int, random_spec: RandomSpec | None, tol: float, chunk: int) -> list[tuple]:
    tasks = []
    for n in range(1, n_max + 1):
        size = enumeration_size(n)
        tasks += [("exhaustive", tol, n, a, min(a + chunk, size)) for a in range(0, size, chunk)]
    if random_spec is not None and random_spec.count > 0:
        r = random_spec
        tasks += [
            ("random", tol, r.n, r.arc_probability, r.seed, a, min(a + chunk, r.count))
            for a in range(0, r.count, chunk)
        ]
    return tasks


def random_digraph(spec: RandomSpec, i: int) -> Digraph:
    """The ``i``-th digraph of a random sweep."""
    return random_oriented(spec.n, spec.arc_probability, (spec.seed, i))


def sweep_bounds(n_max: int, random_spec: RandomSpec | None = None, tol: float = DEFAULT_TOL,
                 workers: int = 1, strict: bool = True, chunk: int = 500) -> SweepSummary:
    """Check every oriented graph with ``1 <= n <= n_max`` plus a random batch.

    With ``strict`` a non-empty violation list raises :class:`ViolationFound`
    (which carries the summary); otherwise the summary is returned as is.
    """
    if n_max > MAX_EXHAUSTIVE_ORDER:
        raise OrderTooLarge(f"exhaustive leg supports n_max <= {MAX_EXHAUSTIVE_ORDER}, got {n_max}")
    tasks = _tasks(n_max, random_spec, tol, chunk)
    summary = SweepSummary()
    if workers <= 1 or len(tasks) <= 1:
        parts = map(_run_chunk, tasks)
    else:
        pool = ProcessPoolExecutor(max_workers=workers)
        parts = pool.map(_run_chunk, tasks)
    try:
        for part in parts:
            summary = summary.merge(part)
    finally:
        if workers > 1 and len(tasks) > 1:
            pool.shutdown()
    if strict and summary.violations:
        raise ViolationFound(summary)
    return summary
