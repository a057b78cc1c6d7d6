"""Search for unbiased mates of a weighing matrix through its ternary code.

Pipeline: candidate rows for a mate of W are weight-k codewords of the dual
code of C3(W) (leading entry 1, coordinates mapped 2 -> -1) whose integer
inner product with every row of W lies in {0, +-sqrt(k)}.  Orthogonal pairs
of candidates may share a mate, so mates are exactly the n-cliques of the
compatibility graph.  A second graph on the mates themselves, with
unbiasedness edges, turns maximum cliques into lower bounds for the largest
family containing W.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass

import numpy as np

from . import gf3
from .wmatrix import MuwmFamily, WeighingMatrix, are_unbiased, code_of, normalize_rows

__all__ = [
    "CompatGraph",
    "Mate",
    "build_gamma",
    "find_mates",
    "build_mate_graph",
    "max_clique",
    "muwm_lower_bound",
]


@dataclass(frozen=True)
class CompatGraph:
    """Vertex payloads plus symmetric adjacency stored as int bitsets."""

    payloads: tuple
    adjacency: tuple[int, ...]

    def __post_init__(self):
        n = len(self.payloads)
        if len(self.adjacency) != n:
            raise ValueError("adjacency length does not match vertex count")
        for i, row in enumerate(self.adjacency):
            if row >> n:
                raise ValueError("adjacency bits beyond vertex range")
            if row & (1 << i):
                raise ValueError(f"self-loop at vertex {i}")
        for i in range(n):
            for j in range(i + 1, n):
                if bool(self.adjacency[i] & (1 << j)) != bool(self.adjacency[j] & (1 << i)):
                    raise ValueError("adjacency not symmetric")

    @property
    def vertex_count(self) -> int:
        return len(self.payloads)

    def edge_count(self) -> int:
        return sum(bin(row).count("1") for row in self.adjacency) // 2

    def degree(self, v: int) -> int:
        return bin(self.adjacency[v]).count("1")


@dataclass(frozen=True)
class Mate:
    """A mate matrix together with the clique of graph vertices behind it."""

    matrix: WeighingMatrix
    vertex_set: tuple[int, ...]


def build_gamma(w1: WeighingMatrix) -> CompatGraph:
    """Compatibility graph over mate-candidate rows for w1.

    Vertices: weight-k dual codewords of C3(w1) with leading entry 1,
    taken as {0,+-1} vectors, filtered so the inner product with every row
    of w1 lies in {0, +-sqrt(k)}.  Vertex order is lexicographic in the
    codeword encoding.  Edges join integer-orthogonal pairs.
    """
    k = w1.weight
    if k % 3 != 0:
        raise ValueError(f"weight {k} not divisible by 3; the dual-code route needs it")
    root = math.isqrt(k)
    if root * root != k:
        raise ValueError(f"weight {k} is not a perfect square")
    dual = gf3.dual_code(code_of(w1))
    words = gf3.enumerate_codewords(dual, target_weight=k, leading_one=True)
    if not words:
        return CompatGraph(payloads=(), adjacency=())
    cand = np.array(words, dtype=np.int64)
    cand[cand == 2] = -1
    base = w1.matrix
    prods = cand @ base.T
    ok = np.all((prods == 0) | (np.abs(prods) == root), axis=1)
    cand = cand[ok]
    payloads = tuple(tuple(int(e) for e in row) for row in cand)
    if len(payloads) == 0:
        return CompatGraph(payloads=(), adjacency=())
    gram = cand @ cand.T
    adj = gram == 0
    np.fill_diagonal(adj, False)
    bits = []
    for i in range(len(payloads)):
        row = 0
        for j in np.nonzero(adj[i])[0]:
            row |= 1 << int(j)
        bits.append(row)
    return CompatGraph(payloads=payloads, adjacency=tuple(bits))


def _mate_from_vertices(w1: WeighingMatrix, graph: CompatGraph, clique: tuple[int, ...]) -> Mate:
    rows = tuple(graph.payloads[v] for v in clique)
    mate = normalize_rows(WeighingMatrix(rows, w1.weight))
    if not are_unbiased(mate, w1):
        raise AssertionError("clique produced a matrix not unbiased with the base")
    return Mate(matrix=mate, vertex_set=tuple(sorted(clique)))


def _color_classes(adj: list[int], candidates: int) -> int:
    """Number of greedy color classes covering the candidate set."""
    classes: list[int] = []
    pool = candidates
    while pool:
        lsb = pool & -pool
        v = lsb.bit_length() - 1
        pool ^= lsb
        for c in range(len(classes)):
            if not (classes[c] & adj[v]):
                classes[c] |= lsb
                break
        else:
            classes.append(lsb)
    return len(classes)


def _enumerate_cliques_of_size(
    graph: CompatGraph, size: int, limit: int | None, deadline: float | None
) -> tuple[list[tuple[int, ...]], bool]:
    """All cliques of exactly the given size; (cliques, completed)."""
    n = graph.vertex_count
    if size == 0:
        return [()], True
    if n < size:
        return [], True
    adj = list(graph.adjacency)
    found: list[tuple[int, ...]] = []
    complete = True
    counter = 0

    def extend(current: list[int], candidates: int) -> bool:
        # candidates: vertices adjacent to all of current, with index above
        # the last chosen vertex (so cliques come out in lexicographic order)
        nonlocal counter, complete
        counter += 1
        if deadline is not None and counter % 256 == 0 and time.monotonic() > deadline:
            complete = False
            return False
        need = size - len(current)
        if need == 0:
            found.append(tuple(current))
            return limit is None or len(found) < limit
        if candidates.bit_count() < need:
            return True
        if need > 2 and _color_classes(adj, candidates) < need:
            return True
        pool = candidates
        while pool:
            lsb = pool & -pool
            v = lsb.bit_length() - 1
            pool ^= lsb
            if (candidates >> v).bit_count() < need:
                break
            current.append(v)
            # mask keeps only higher-indexed vertices: each clique once
            if not extend(current, candidates & adj[v] & ~((lsb << 1) - 1)):
                current.pop()
                return False
            current.pop()
        return True

    if not extend([], (1 << n) - 1):
        if limit is not None and len(found) >= limit:
            complete = False
    return found, complete


def _find_mates_flagged(
    w1: WeighingMatrix, limit: int | None = None, time_budget: float | None = None
) -> tuple[list[Mate], bool]:
    graph = build_gamma(w1)
    deadline = None if time_budget is None else time.monotonic() + time_budget
    cliques, complete = _enumerate_cliques_of_size(graph, w1.order, limit, deadline)
    seen: dict[tuple[int, ...], Mate] = {}
    for clique in cliques:
        key = tuple(sorted(clique))
        if key not in seen:
            seen[key] = _mate_from_vertices(w1, graph, key)
    mates = [seen[key] for key in sorted(seen)]
    return mates, complete


def find_mates(
    w1: WeighingMatrix, limit: int | None = None, time_budget: float | None = None
) -> list[Mate]:
    """All mates of w1 (n-cliques of the compatibility graph).

    Deterministic: deduplicated by vertex set and sorted lexicographically
    by it.  A limit caps the number of cliques collected; a time budget in
    seconds stops enumeration early (both leave the result valid but
    possibly incomplete).
    """
    mates, _ = _find_mates_flagged(w1, limit, time_budget)
    return mates


def build_mate_graph(w1: WeighingMatrix, mates: list[Mate]) -> CompatGraph:
    """Graph on mates with edges where the two matrices are unbiased."""
    for mate in mates:
        if not are_unbiased(mate.matrix, w1):
            raise ValueError("mate list contains a matrix not unbiased with the base")
    n = len(mates)
    bits = [0] * n
    for i in range(n):
        for j in range(i + 1, n):
            if are_unbiased(mates[i].matrix, mates[j].matrix):
                bits[i] |= 1 << j
                bits[j] |= 1 << i
    return CompatGraph(payloads=tuple(mates), adjacency=tuple(bits))


def _greedy_color_bound(adj: list[int], candidates: int, order: list[int]) -> list[tuple[int, int]]:
    """Greedy coloring of the candidate set, as (vertex, color) pairs sorted
    by color ascending; color c bounds any clique inside {v} + later part."""
    classes: list[int] = []  # bitset per color class
    colored: list[tuple[int, int]] = []
    for v in order:
        if not (candidates >> v) & 1:
            continue
        for c, cls in enumerate(classes):
            if not (cls & adj[v]):
                classes[c] = cls | (1 << v)
                colored.append((v, c + 1))
                break
        else:
            classes.append(1 << v)
            colored.append((v, len(classes)))
    colored.sort(key=lambda vc: vc[1])
    return colored


def max_clique(
    g: CompatGraph, time_budget: float | None = None
) -> tuple[int, tuple[int, ...], bool]:
    """Branch-and-bound maximum clique with greedy-coloring bounds.

    Returns (size, witness, exact).  Deterministic: vertices are ranked by
    degree descending with index ties, and the witness is re-verified
    edge-by-edge before returning.  With a time budget (seconds) the search
    may stop early and report its best clique with exact=False.
    """
    n = g.vertex_count
    if n == 0:
        return 0, (), True
    order = sorted(range(n), key=lambda v: (-g.degree(v), v))
    adj = list(g.adjacency)
    deadline = None if time_budget is None else time.monotonic() + time_budget
    best: list[int] = []
    exact = True
    counter = 0

    def expand(current: list[int], candidates: int) -> bool:
        nonlocal best, exact, counter
        counter += 1
        if deadline is not None and counter % 128 == 0 and time.monotonic() > deadline:
            exact = False
            return False
        colored = _greedy_color_bound(adj, candidates, order)
        for v, bound in reversed(colored):
            if len(current) + bound <= len(best):
                return True
            current.append(v)
            nxt = candidates & adj[v]
            if len(current) > len(best):
                best = list(current)
            if nxt:
                if not expand(current, nxt):
                    current.pop()
                    return False
            current.pop()
            candidates &= ~(1 << v)
        return True

    expand([], (1 << n) - 1)
    witness = tuple(sorted(best))
    for i, u in enumerate(witness):
        for v in witness[i + 1 :]:
            if not (g.adjacency[u] >> v) & 1:
                raise AssertionError("clique witness failed the edge recheck")
    return len(witness), witness, exact


def muwm_lower_bound(
    w1: WeighingMatrix, time_budget: float | None = None
) -> tuple[int, MuwmFamily, bool]:
    """Lower bound on the largest mutually unbiased family containing w1.

    Enumerates mates, builds the unbiasedness graph on them, and returns
    1 + (maximum clique size), the witness family itself, and whether both
    phases ran to completion.  The time budget is split between the phases.
    """
    start = time.monotonic()
    mate_budget = None if time_budget is None else 0.6 * time_budget
    mates, mates_complete = _find_mates_flagged(w1, time_budget=mate_budget)
    graph = build_mate_graph(w1, mates)
    remaining = None
    if time_budget is not None:
        remaining = max(1.0, time_budget - (time.monotonic() - start))
    size, witness, clique_exact = max_clique(graph, remaining)
    members = [w1] + [mates[v].matrix for v in witness]
    family = MuwmFamily(members=tuple(members))
    return 1 + size, family, mates_complete and clique_exact
