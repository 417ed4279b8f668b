"""Oriented simple digraphs and the edge-list text format.

A :class:`Digraph` is immutable: ``n`` vertices labelled ``0..n-1`` and a
sorted tuple of arcs ``(u, v)`` meaning ``u -> v``.  Loops, digons (both
``(u, v)`` and ``(v, u)``) and duplicate arcs are rejected, so every entry of
the skew-adjacency matrix is well defined.

The edge-list format is 1-indexed::

    # optional comment lines
    4 3
    1 2
    2 3
    3 4
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np


class DigraphError(ValueError):
    """Base class for invalid digraph input."""

    def __init__(self, message: str, arc: tuple[int, int] | None = None):
        super().__init__(message)
        self.arc = arc


class LoopArc(DigraphError):
    pass


class DigonArc(DigraphError):
    pass


class DuplicateArc(DigraphError):
    pass


class VertexOutOfRange(DigraphError):
    pass


class ParseError(DigraphError):
    def __init__(self, message: str, line: int | None = None):
        super().__init__(f"line {line}: {message}" if line is not None else message)
        self.line = line


def _check_arc(n: int, arc: tuple[int, int], seen: set[tuple[int, int]]) -> None:
    u, v = arc
    if not (0 <= u < n and 0 <= v < n):
        raise VertexOutOfRange(f"arc {arc} has an endpoint outside 0..{n - 1}", arc)
    if u == v:
        raise LoopArc(f"loop arc {arc}", arc)
    if arc in seen:
        raise DuplicateArc(f"duplicate arc {arc}", arc)
    if (v, u) in seen:
        raise DigonArc(f"arc {arc} reverses an existing arc", arc)


def _validate(n: int, arcs: Iterable[Sequence[int]]) -> tuple[tuple[int, int], ...]:
    if n < 0:
        raise VertexOutOfRange(f"vertex count must be non-negative, got {n}")
    seen: set[tuple[int, int]] = set()
    for raw in arcs:
        arc = (int(raw[0]), int(raw[1]))
        _check_arc(n, arc, seen)
        seen.add(arc)
    return tuple(sorted(seen))


@dataclass(frozen=True)
class Digraph:
    n: int
    arcs: tuple[tuple[int, int], ...] = field(default=())

    def __post_init__(self) -> None:
        object.__setattr__(self, "arcs", _validate(self.n, self.arcs))

    @property
    def m(self) -> int:
        return len(self.arcs)

    def reversed(self) -> Digraph:
        return Digraph(self.n, tuple((v, u) for u, v in self.arcs))

    def relabeled(self, perm: Sequence[int]) -> Digraph:
        """Return the digraph with vertex ``i`` renamed to ``perm[i]``."""
        if sorted(perm) != list(range(self.n)):
            raise ValueError("perm must be a permutation of 0..n-1")
        return Digraph(self.n, tuple((perm[u], perm[v]) for u, v in self.arcs))

    def induced(self, vertices: Sequence[int]) -> Digraph:
        """Subdigraph induced on ``vertices``, relabelled in the given order."""
        index = {v: i for i, v in enumerate(vertices)}
        return Digraph(
            len(vertices),
            tuple((index[u], index[v]) for u, v in self.arcs if u in index and v in index),
        )


def new_digraph(n: int, arcs: Iterable[Sequence[int]] = ()) -> Digraph:
    return Digraph(n, tuple(tuple(a) for a in arcs))  # type: ignore[misc]


def out_degrees(g: Digraph) -> np.ndarray:
    d = np.zeros(g.n, dtype=np.int64)
    for u, _ in g.arcs:
        d[u] += 1
    return d


def in_degrees(g: Digraph) -> np.ndarray:
    d = np.zeros(g.n, dtype=np.int64)
    for _, v in g.arcs:
        d[v] += 1
    return d


def total_degrees(g: Digraph) -> np.ndarray:
    return out_degrees(g) + in_degrees(g)


def weak_components(g: Digraph) -> list[list[int]]:
    """Connected components of the underlying undirected graph.

    Blocks are sorted internally and ordered by their smallest vertex, so
    ``len(weak_components(g))`` is the component count ``p``.
    """
    parent = list(range(g.n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in g.arcs:
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[max(ru, rv)] = min(ru, rv)
    blocks: dict[int, list[int]] = {}
    for v in range(g.n):
        blocks.setdefault(find(v), []).append(v)
    return [blocks[r] for r in sorted(blocks)]


def component_count(g: Digraph) -> int:
    return len(weak_components(g))


def is_balanced(g: Digraph) -> bool:
    return bool(np.array_equal(out_degrees(g), in_degrees(g)))


def is_eulerian(g: Digraph) -> bool:
    """Balanced, with every non-isolated vertex in a single weak component."""
    if not is_balanced(g):
        return False
    touched = [c for c in weak_components(g) if len(c) > 1]
    return len(touched) <= 1


def has_isolated_vertices(g: Digraph) -> bool:
    return bool((total_degrees(g) == 0).any())


def parse_edge_list(text: str) -> Digraph:
    header: tuple[int, int] | None = None
    arcs: list[tuple[int, int]] = []
    lines: list[int] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ParseError(f"expected two integers, got {raw.strip()!r}", lineno)
        try:
            a, b = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(f"expected two integers, got {raw.strip()!r}", lineno) from None
        if header is None:
            if a < 0 or b < 0:
                raise ParseError("vertex and arc counts must be non-negative", lineno)
            header = (a, b)
            continue
        arcs.append((a - 1, b - 1))
        lines.append(lineno)
    if header is None:
        raise ParseError("missing 'n m' header line")
    n, m = header
    if len(arcs) != m:
        raise ParseError(f"header declares {m} arcs but {len(arcs)} were given")
    # validate arc by arc so errors carry the offending line
    seen: set[tuple[int, int]] = set()
    for arc, lineno in zip(arcs, lines):
        try:
            _check_arc(n, arc, seen)
        except DigraphError as exc:
            one_based = (arc[0] + 1, arc[1] + 1)
            raise type(exc)(f"line {lineno}: 1-indexed arc {one_based}: {exc}", arc) from None
        seen.add(arc)
    return Digraph(n, tuple(arcs))


def format_edge_list(g: Digraph, comment: str | None = None) -> str:
    out = []
    if comment:
        out.append(f"# {comment}")
    out.append(f"{g.n} {g.m}")
    out.extend(f"{u + 1} {v + 1}" for u, v in g.arcs)
    return "\n".join(out) + "\n"
