"""Named digraph families and seeded random generators.

Randomness comes from ``numpy.random.default_rng(seed)`` (PCG64, 128-bit
state), so a given seed reproduces the same digraph on every platform.
``seed`` may be an int or a sequence of ints (hashed by ``SeedSequence``).
"""

from __future__ import annotations

from typing import Sequence

import numpy as np

from .digraph import Digraph


class InvalidParameter(ValueError):
    pass


class InvalidSize(InvalidParameter):
    pass


class GenerationFailed(RuntimeError):
    pass


Seed = int | Sequence[int] | None


def directed_path(n: int) -> Digraph:
    if n < 1:
        raise InvalidSize(f"path needs n >= 1, got {n}")
    return Digraph(n, tuple((i, i + 1) for i in range(n - 1)))


def directed_cycle(n: int) -> Digraph:
    if n < 3:
        raise InvalidSize(f"oriented cycle needs n >= 3, got {n}")
    return Digraph(n, tuple((i, (i + 1) % n) for i in range(n)))


def oriented_complete_bipartite(n: int) -> Digraph:
    """Balanced orientation of ``K_{2n,2n}`` with blocks X1, X2, Y1, Y2 of size n.

    Vertex ranges are X1 = [0, n), X2 = [n, 2n), Y1 = [2n, 3n), Y2 = [3n, 4n);
    arcs run X1 -> Y1, X2 -> Y2, Y1 -> X2 and Y2 -> X1, complete between blocks.
    """
    if n < 1:
        raise InvalidSize(f"block size must be >= 1, got {n}")
    x1, x2, y1, y2 = (range(k * n, (k + 1) * n) for k in range(4))
    arcs = []
    for src, dst in ((x1, y1), (x2, y2), (y1, x2), (y2, x1)):
        arcs.extend((u, v) for u in src for v in dst)
    return Digraph(4 * n, tuple(arcs))


def triangles_plus_isolated(alpha: int, beta: int) -> Digraph:
    """``alpha`` disjoint oriented triangles followed by ``beta`` isolated vertices."""
    if alpha < 0 or beta < 0 or alpha + beta < 1:
        raise InvalidSize(f"need alpha, beta >= 0 and alpha + beta >= 1, got ({alpha}, {beta})")
    arcs = []
    for t in range(alpha):
        a, b, c = 3 * t, 3 * t + 1, 3 * t + 2
        arcs += [(a, b), (b, c), (c, a)]
    return Digraph(3 * alpha + beta, tuple(arcs))


def random_oriented(n: int, arc_probability: float, seed: Seed = None) -> Digraph:
    """Each unordered pair gets an arc with probability ``arc_probability``,
    in a uniformly random direction.  Pairs are visited in lexicographic order.
    """
    if not 0.0 <= arc_probability <= 1.0:
        raise InvalidParameter(f"arc_probability must lie in [0, 1], got {arc_probability}")
    if n < 0:
        raise InvalidSize(f"n must be >= 0, got {n}")
    rng = np.random.default_rng(seed)
    iu, ju = np.triu_indices(n, k=1)
    present = rng.random(iu.size) < arc_probability
    forward = rng.random(iu.size) < 0.5
    arcs = [
        (int(i), int(j)) if f else (int(j), int(i))
        for i, j, keep, f in zip(iu, ju, present, forward)
        if keep
    ]
    return Digraph(n, tuple(arcs))


def random_tournament(n: int, seed: Seed = None) -> Digraph:
    return random_oriented(n, 1.0, seed)


def random_balanced(n: int, cycle_count: int, seed: Seed = None, retries: int = 200) -> Digraph:
    """Union of ``cycle_count`` arc-disjoint random directed cycles (length 3..n).

    A cycle that would repeat an arc or create a digon is redrawn, up to
    ``CYCLE_DRAWS`` times; if one cannot be placed the whole digraph is
    started over.  After ``retries`` restarts :class:`GenerationFailed` is raised.
    """
    if n < 3:
        raise InvalidSize(f"balanced generator needs n >= 3, got {n}")
    if cycle_count < 0:
        raise InvalidSize(f"cycle_count must be >= 0, got {cycle_count}")
    rng = np.random.default_rng(seed)
    for _ in range(retries):
        arcs = _draw_cycles(rng, n, cycle_count)
        if arcs is not None:
            return Digraph(n, tuple(arcs))
    raise GenerationFailed(f"could not place {cycle_count} arc-disjoint cycles on {n} vertices after {retries} restarts")


CYCLE_DRAWS = 20


def _draw_cycles(rng: np.random.Generator, n: int, count: int) -> set[tuple[int, int]] | None:
    arcs: set[tuple[int, int]] = set()
    for _ in range(count):
        for _ in range(CYCLE_DRAWS):
            length = int(rng.integers(3, n + 1))
            verts = [int(v) for v in rng.permutation(n)[:length]]
            cyc = [(verts[i], verts[(i + 1) % length]) for i in range(length)]
            if all(a not in arcs and (a[1], a[0]) not in arcs for a in cyc):
                arcs.update(cyc)
                break
        else:
            return None
    return arcs


FAMILIES = ("path", "cycle", "g1", "g2", "rand", "tournament", "balanced")
