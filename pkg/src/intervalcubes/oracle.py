"""Brute-force ground truth at desk scale.

Exact claw and independence numbers by exhaustive search, and exact
cubicity via the intersection characterization: the minimum number of
indifference supergraphs whose shared non-edges cover every non-edge of
the input.  Candidate supergraphs are enumerated over subsets of the
non-edges, tested by the vertex-order characterization (some order in
which every earlier neighbor run is a clique suffix), and reduced to
inclusion-maximal missing-non-edge sets before a branch-and-bound set
cover finds the minimum family size.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .graphs import Graph, non_edges

MAX_ORACLE_VERTICES = 8
MAX_ORACLE_NON_EDGES = 24


class SizeRefusalError(ValueError):
    """The instance exceeds the oracle's hard safety bounds."""


# ----------------------------------------------------------------------
# exact independent sets
# ----------------------------------------------------------------------

def _adj_masks(graph: Graph) -> list[int]:
    return [
        sum(1 << w for w in graph.adj[v]) for v in range(graph.n)
    ]


def _mis_size(pool: int, adj: list[int]) -> int:
    """Maximum independent set size within the pool bitmask."""
    if pool == 0:
        return 0
    # isolated vertices always join the set
    v = None
    best_deg = -1
    m = pool
    while m:
        low = m & -m
        u = low.bit_length() - 1
        m ^= low
        deg = (adj[u] & pool).bit_count()
        if deg == 0:
            return 1 + _mis_size(pool ^ low, adj)
        if deg > best_deg:
            best_deg, v = deg, u
    take = 1 + _mis_size(pool & ~(adj[v] | (1 << v)), adj)
    skip = _mis_size(pool ^ (1 << v), adj)
    return max(take, skip)


def brute_alpha(graph: Graph) -> int:
    return _mis_size((1 << graph.n) - 1, _adj_masks(graph))


def brute_claw(graph: Graph) -> int:
    adj = _adj_masks(graph)
    return max((_mis_size(adj[v], adj) for v in range(graph.n)), default=0)


# ----------------------------------------------------------------------
# indifference recognition by vertex-order search
# ----------------------------------------------------------------------

_ORDER_CACHE: dict[tuple[int, tuple[int, ...]], tuple[int, ...] | None] = {}


def indifference_ordering(graph: Graph) -> tuple[int, ...] | None:
    """A vertex order in which every vertex's earlier neighbors form a
    clique suffix of the prefix; exists exactly for indifference graphs."""
    return _indifference_ordering(graph.n, tuple(_adj_masks(graph)))


def _has_claw(n: int, adj) -> bool:
    """Induced star on three leaves anywhere; indifference graphs have none,
    so this is a cheap rejection before the ordering search."""
    for v in range(n):
        nb = adj[v]
        m = nb
        while m:
            low_u = m & -m
            u = low_u.bit_length() - 1
            m ^= low_u
            m2 = m
            while m2:
                low_w = m2 & -m2
                w = low_w.bit_length() - 1
                m2 ^= low_w
                if (adj[u] >> w) & 1:
                    continue
                if nb & ~adj[u] & ~adj[w] & ~low_u & ~low_w:
                    return True
    return False


def _indifference_ordering(n: int, adj: tuple[int, ...]) -> tuple[int, ...] | None:
    key = (n, adj)
    if key in _ORDER_CACHE:
        return _ORDER_CACHE[key]
    if _has_claw(n, adj):
        _ORDER_CACHE[key] = None
        return None

    order: list[int] = []
    # clique_start[t]: least s such that order[s:t] is a clique
    clique_start = [0]
    prefix_mask = 0

    def place() -> bool:
        nonlocal prefix_mask
        t = len(order)
        if t == n:
            return True
        for x in range(n):
            if (prefix_mask >> x) & 1:
                continue
            ax = adj[x]
            i = t
            suffix_mask = 0
            while i > 0 and (ax >> order[i - 1]) & 1:
                i -= 1
                suffix_mask |= 1 << order[i]
            # earlier neighbors must be exactly a suffix, and that suffix a clique
            if (ax & prefix_mask) != suffix_mask or i < clique_start[t]:
                continue
            order.append(x)
            prefix_mask |= 1 << x
            clique_start.append(max(clique_start[t], i))
            if place():
                return True
            order.pop()
            prefix_mask ^= 1 << x
            clique_start.pop()
        return False

    found = tuple(order) if place() else None
    _ORDER_CACHE[key] = found
    return found


def unit_realization(graph: Graph, order) -> tuple[Fraction, ...] | None:
    """Explicit positions realizing the graph with threshold 1 along the
    given order, or None if none exists.

    Difference constraints with a symbolic infinitesimal for strictness
    are solved by longest paths; the infinitesimal is then replaced by a
    concrete rational small enough to keep every comparison's outcome.
    """
    n = graph.n
    if n == 0:
        return ()
    order = list(order)
    pos = {v: i for i, v in enumerate(order)}
    if sorted(pos) != list(range(n)) or len(pos) != n:
        raise ValueError("order must be a permutation of the vertices")

    # weights are (rational, epsilon-coefficient) pairs; lex order matches
    # evaluation at an infinitesimal positive epsilon
    edges: list[tuple[int, int, tuple[Fraction, int]]] = []
    for i in range(n - 1):
        edges.append((order[i], order[i + 1], (Fraction(0), 0)))
    for a in range(n):
        for b in range(a + 1, n):
            u, v = order[a], order[b]
            if graph.has_edge(u, v):
                edges.append((v, u, (Fraction(-1), 0)))
            else:
                edges.append((u, v, (Fraction(1), 1)))

    dist: list[tuple[Fraction, int] | None] = [None] * n
    dist[order[0]] = (Fraction(0), 0)
    for _ in range(n):
        changed = False
        for u, v, (wa, wb) in edges:
            du = dist[u]
            if du is None:
                continue
            cand = (du[0] + wa, du[1] + wb)
            if dist[v] is None or cand > dist[v]:
                dist[v] = cand
                changed = True
        if not changed:
            break
    for u, v, (wa, wb) in edges:
        du = dist[u]
        if du is not None:
            cand = (du[0] + wa, du[1] + wb)
            if dist[v] is None or cand > dist[v]:
                return None  # still improvable: positive cycle, infeasible
    if any(d is None for d in dist):
        return None

    # any epsilon below every comparison's flip threshold works
    eps = Fraction(1, 2)
    for a in range(n):
        for b in range(a + 1, n):
            da = dist[a][0] - dist[b][0]
            db = dist[a][1] - dist[b][1]
            if db == 0:
                continue
            for target in (Fraction(-1), Fraction(0), Fraction(1)):
                if da != target:
                    eps = min(eps, abs(da - target) / (2 * abs(db)))
    values = tuple(d[0] + d[1] * eps for d in dist)

    for u in range(n):
        for v in range(u + 1, n):
            if graph.has_edge(u, v) != (abs(values[u] - values[v]) <= 1):
                return None
    return values


# ----------------------------------------------------------------------
# supergraph enumeration and exact cubicity
# ----------------------------------------------------------------------

def _refuse_if_large(graph: Graph) -> list[tuple[int, int]]:
    if graph.n > MAX_ORACLE_VERTICES:
        raise SizeRefusalError(
            f"{graph.n} vertices exceeds the oracle bound of {MAX_ORACLE_VERTICES}"
        )
    missing = non_edges(graph)
    if len(missing) > MAX_ORACLE_NON_EDGES:
        raise SizeRefusalError(
            f"{len(missing)} non-edges exceeds the oracle bound of {MAX_ORACLE_NON_EDGES}"
        )
    return missing


def _enumerate_candidates(graph: Graph) -> tuple[list[int], list[tuple[int, int]], int]:
    """Missing-non-edge sets (as bitmasks over the non-edge list) of the
    inclusion-maximal indifference supergraphs, plus the test count.

    Enumerates added-edge subsets smallest first, skipping supersets of
    successes: minimal added sets are exactly maximal missing sets, and
    every realizable missing set lies below a maximal one, so set covers
    built from these candidates are unaffected.
    """
    missing = _refuse_if_large(graph)
    e = len(missing)
    base = _adj_masks(graph)
    minimal_added: list[int] = []
    tested = 0
    for size in range(e + 1):
        for combo in combinations(range(e), size):
            mask = 0
            for i in combo:
                mask |= 1 << i
            if any(found & mask == found for found in minimal_added):
                continue
            adj = list(base)
            for i in combo:
                u, v = missing[i]
                adj[u] |= 1 << v
                adj[v] |= 1 << u
            tested += 1
            if _indifference_ordering(graph.n, tuple(adj)) is not None:
                minimal_added.append(mask)
    universe = (1 << e) - 1
    candidates = [universe ^ added for added in minimal_added]
    candidates.sort(key=lambda m: (-m.bit_count(), m))
    return candidates, missing, tested


def indifference_supergraphs(graph: Graph) -> list[list[tuple[int, int]]]:
    """The inclusion-maximal sets of input non-edges that one indifference
    supergraph can leave uncovered, as sorted pair lists."""
    candidates, missing, _ = _enumerate_candidates(graph)
    out = []
    for mask in candidates:
        pairs = [missing[i] for i in range(len(missing)) if (mask >> i) & 1]
        out.append(pairs)
    return out


@dataclass(frozen=True)
class ExactResult:
    cubicity: int
    witness: tuple[tuple[tuple[int, int], ...], ...]
    candidates_enumerated: int
    cover_nodes: int

    def to_json_obj(self) -> dict:
        return {
            "cubicity": self.cubicity,
            "witness": [[list(p) for p in member] for member in self.witness],
            "candidates_enumerated": self.candidates_enumerated,
            "cover_nodes": self.cover_nodes,
        }


@dataclass(frozen=True)
class Exceeded:
    b_max: int
    candidates_enumerated: int
    cover_nodes: int

    def to_json_obj(self) -> dict:
        return {
            "exceeded": True,
            "b_max": self.b_max,
            "candidates_enumerated": self.candidates_enumerated,
            "cover_nodes": self.cover_nodes,
        }


def exact_cubicity(graph: Graph, b_max: int = 4) -> ExactResult | Exceeded:
    """Minimum family size by iterative-deepening branch and bound over the
    candidate missing sets; complete graphs need zero."""
    missing = _refuse_if_large(graph)
    if not missing:
        return ExactResult(0, (), 0, 0)
    candidates, missing, tested = _enumerate_candidates(graph)
    universe = (1 << len(missing)) - 1
    nodes = 0

    def cover(uncovered: int, depth: int, chosen: list[int]) -> bool:
        nonlocal nodes
        nodes += 1
        if uncovered == 0:
            return True
        if depth == 0:
            return False
        pivot = (uncovered & -uncovered).bit_length() - 1
        for mask in candidates:
            if (mask >> pivot) & 1:
                chosen.append(mask)
                if cover(uncovered & ~mask, depth - 1, chosen):
                    return True
                chosen.pop()
        return False

    for b in range(1, b_max + 1):
        chosen: list[int] = []
        if cover(universe, b, chosen):
            witness = tuple(
                tuple(missing[i] for i in range(len(missing)) if (mask >> i) & 1)
                for mask in chosen
            )
            return ExactResult(b, witness, tested, nodes)
    return Exceeded(b_max, tested, nodes)
