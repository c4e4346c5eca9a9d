"""Assembly of unit-cube representations for interval graphs.

The pipeline pads the graph until its claw number is a power of two
(pendants hung off one vertex of the last clique), lays the cliques out
on a line with a scale that hits integer positions at the anchor cliques,
gives every vertex a branch code whose low bits copy its level, and then
emits one coordinate per code bit: bit 0 places the vertex by its right
end, bit 1 by its left end.  Restricting the padded coordinates back to
the original vertices keeps the represented graph intact because induced
subgraphs only lose constraints.

Dimension count is exactly ceil(log2 claw) + 2.  A second variant routes
through a universal vertex to get ceil(log2 alpha) dimensions instead,
dropping the two coordinates that the augmented build leaves complete.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction

from .graphs import Graph, connected_components
from .intervals import CliqueOrdering
from .labelling import Labelling, label_vertices
from .params import ceil_log2, claw_number, neighborhood_mis
from .rationals import format_rational, parse_rational
from .recognition import ConstructionError, require_ordering


def bit(a: int, i: int) -> int:
    """The i-th binary digit of a non-negative integer."""
    if a < 0 or i < 0:
        raise ValueError("bit() expects non-negative arguments")
    return (a >> i) & 1


@dataclass(frozen=True)
class PaddedGraph:
    """The working graph with pendant vertices appended so that the claw
    number equals 2**power; original vertices keep their indices."""

    graph: Graph
    ordering: CliqueOrdering
    original: tuple[int, ...]
    power: int
    added: int

    @property
    def claw(self) -> int:
        return 1 << self.power


@dataclass(frozen=True)
class CubeRepresentation:
    """Axis-parallel cubes of side `side`: vertices are adjacent exactly
    when every coordinate differs by at most `side`.  dimension == 0 means
    every pair is adjacent by convention."""

    dimension: int
    side: Fraction
    coords: tuple[tuple[Fraction, ...], ...]

    @property
    def n(self) -> int:
        return len(self.coords)

    def to_json_obj(self) -> dict:
        return {
            "dimension": self.dimension,
            "side": format_rational(self.side),
            "coords": [[format_rational(x) for x in row] for row in self.coords],
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json_obj(), indent=2, sort_keys=True)

    @classmethod
    def from_json_obj(cls, obj) -> "CubeRepresentation":
        dimension = int(obj["dimension"])
        side = parse_rational(obj["side"])
        coords = tuple(
            tuple(parse_rational(x) for x in row) for row in obj["coords"]
        )
        for row in coords:
            if len(row) != dimension:
                raise ValueError("coordinate vector length disagrees with dimension")
        return cls(dimension, side, coords)

    @classmethod
    def loads(cls, text: str) -> "CubeRepresentation":
        return cls.from_json_obj(json.loads(text))


@dataclass(frozen=True)
class ConstructionTrace:
    """Everything the audit checks need: the clique scale, the codes and
    levels on the padded graph, the branch taken per (dimension, vertex),
    and the unrestricted padded coordinates."""

    power: int
    claw: int
    scale: tuple[Fraction, ...]
    codes: tuple[int, ...]
    levels: tuple[int, ...]
    branch: tuple[tuple[int, ...], ...]
    coords: tuple[tuple[Fraction, ...], ...]
    padded: PaddedGraph
    labelling: Labelling

    def to_json_obj(self) -> dict:
        return {
            "power": self.power,
            "claw": self.claw,
            "bits": list(range(self.power + 2)),
            "scale": [format_rational(x) for x in self.scale],
            "codes": list(self.codes),
            "levels": list(self.levels),
            "branch": [list(row) for row in self.branch],
            "added": self.padded.added,
            "original_n": len(self.padded.original),
            "padded_coords": [
                [format_rational(x) for x in row] for row in self.coords
            ],
        }


def pad_graph(graph: Graph, ordering: CliqueOrdering) -> PaddedGraph:
    """Append pendants to a vertex of the last clique until the claw
    number is the next power of two; no-op when it already is one."""
    psi, _ = claw_number(ordering, graph)
    if psi < 2:
        raise ValueError("padding needs claw number at least 2")
    power = ceil_log2(psi)
    target = 1 << power
    original = tuple(range(graph.n))
    if target == psi:
        return PaddedGraph(graph, ordering, original, power, 0)

    center = None
    center_mis = -1
    for v in sorted(ordering.cliques[-1]):
        m, _ = neighborhood_mis(ordering, graph, v)
        if m > center_mis:
            center, center_mis = v, m
    added = target - center_mis

    n, k = graph.n, ordering.k
    edges = graph.edges() + [(center, n + i) for i in range(added)]
    padded_graph = Graph(n + added, edges)
    cliques = list(ordering.cliques) + [
        frozenset({center, n + i}) for i in range(added)
    ]
    left = list(ordering.left) + [k + i for i in range(added)]
    right = list(ordering.right) + [k + i for i in range(added)]
    right[center] = k + added - 1
    padded_ordering = CliqueOrdering(tuple(cliques), tuple(left), tuple(right))

    check, _ = claw_number(padded_ordering, padded_graph)
    if check != target:
        raise ConstructionError(
            f"padding produced claw number {check}, wanted {target}"
        )
    return PaddedGraph(padded_graph, padded_ordering, original, power, added)


def clique_scale(ordering: CliqueOrdering, labelling: Labelling) -> tuple[Fraction, ...]:
    """Strictly increasing positions for the cliques, hitting value i at
    the rightmost clique of anchor i and interpolating linearly between
    consecutive anchors with a half-unit offset."""
    k = ordering.k
    anchors = labelling.anchors
    rights = [ordering.right[u] for u in anchors]
    if rights[0] != 0 or rights[-1] != k - 1:
        raise ConstructionError("anchor rightmost cliques must span 0..k-1")
    scale: list[Fraction | None] = [None] * k
    scale[0] = Fraction(0)
    for i in range(len(anchors) - 1):
        a, b = rights[i], rights[i + 1]
        for j in range(a + 1, b + 1):
            scale[j] = i + Fraction(1, 2) + Fraction(j - a, 2 * (b - a))
    if any(x is None for x in scale):
        raise ConstructionError("scale left a clique index unassigned")
    out = tuple(scale)  # type: ignore[arg-type]
    for j in range(k - 1):
        if not out[j] < out[j + 1]:
            raise ConstructionError("scale is not strictly increasing")
    for i, r in enumerate(rights):
        if out[r] != i:
            raise ConstructionError("scale misses an anchor value")
    return out


def branch_codes(labelling: Labelling, claw: int) -> tuple[int, ...]:
    """Per-vertex code in [claw, 3*claw): low bits copy the level, the two
    extra bits alternate with the level's block parity."""
    if claw < 2 or claw & (claw - 1):
        raise ValueError("claw must be a power of two, at least 2")
    codes = []
    for level in labelling.levels:
        if (level // claw) % 2 == 0:
            codes.append(level % claw + claw)
        else:
            codes.append(level % claw + 2 * claw)
    return tuple(codes)


def build_representation(
    graph: Graph, ordering: CliqueOrdering | None = None
) -> tuple[CubeRepresentation, ConstructionTrace | None]:
    """The claw-number construction: exactly ceil(log2 claw) + 2 dimensions.

    Graphs whose claw number is below 2 (disjoint unions of cliques) take
    the degenerate one-dimensional route and carry no trace.
    """
    ordering = require_ordering(graph, ordering)
    if graph.n == 0:
        return build_degenerate(graph), None
    psi, _ = claw_number(ordering, graph)
    if psi < 2:
        return build_degenerate(graph), None

    padded = pad_graph(graph, ordering)
    lab = label_vertices(padded.ordering)
    scale = clique_scale(padded.ordering, lab)
    claw = padded.claw
    codes = branch_codes(lab, claw)
    side = claw - Fraction(1, 2)
    dims = padded.power + 2

    left, right = padded.ordering.left, padded.ordering.right
    coords = []
    branch = [[0] * padded.graph.n for _ in range(dims)]
    for v in range(padded.graph.n):
        row = []
        for i in range(dims):
            b = bit(codes[v], i)
            branch[i][v] = b
            if b == 0:
                row.append(scale[right[v]] - claw + Fraction(1, 2))
            else:
                row.append(scale[left[v]])
        coords.append(tuple(row))

    rep = CubeRepresentation(
        dimension=dims,
        side=side,
        coords=tuple(coords[v] for v in range(graph.n)),
    )
    trace = ConstructionTrace(
        power=padded.power,
        claw=claw,
        scale=scale,
        codes=codes,
        levels=lab.levels,
        branch=tuple(tuple(row) for row in branch),
        coords=tuple(coords),
        padded=padded,
        labelling=lab,
    )
    return rep, trace


def build_degenerate(graph: Graph) -> CubeRepresentation:
    """Disjoint unions of cliques: one dimension, clique j at position 2j;
    zero dimensions when the graph is complete."""
    comps = connected_components(graph)
    for comp in comps:
        for v in comp:
            if len(graph.adj[v]) != len(comp) - 1:
                raise ValueError("graph is not a disjoint union of cliques")
    if len(comps) <= 1:
        return CubeRepresentation(0, Fraction(1), ((),) * graph.n)
    coord = [Fraction(0)] * graph.n
    for j, comp in enumerate(comps):
        for v in comp:
            coord[v] = Fraction(2 * j)
    return CubeRepresentation(1, Fraction(1), tuple((x,) for x in coord))


def _augment_with_universal(
    graph: Graph, ordering: CliqueOrdering
) -> tuple[Graph, CliqueOrdering]:
    n, k = graph.n, ordering.k
    edges = graph.edges() + [(v, n) for v in range(n)]
    aug = Graph(n + 1, edges)
    cliques = tuple(c | {n} for c in ordering.cliques)
    left = ordering.left + (0,)
    right = ordering.right + (k - 1,)
    return aug, CliqueOrdering(cliques, left, right)


def _complete_dims(rep: CubeRepresentation) -> list[int]:
    # the largest pairwise gap in a dimension is its coordinate span
    out = []
    for i in range(rep.dimension):
        values = [row[i] for row in rep.coords]
        if not values or max(values) - min(values) <= rep.side:
            out.append(i)
    return out


def build_alpha_representation(
    graph: Graph, ordering: CliqueOrdering | None = None
) -> CubeRepresentation:
    """Exactly ceil(log2 alpha) dimensions via a universal vertex.

    Adding a universal vertex forces claw number == independence number,
    which makes the two extra dimensions of the claw build complete; both
    are detected by direct span checks, then dropped together with the
    universal vertex.
    """
    ordering = require_ordering(graph, ordering)
    if graph.n == 0:
        return CubeRepresentation(0, Fraction(1), ())
    lab = label_vertices(ordering)
    if lab.alpha == 1:
        return CubeRepresentation(0, Fraction(1), ((),) * graph.n)

    aug, aug_ordering = _augment_with_universal(graph, ordering)
    rep_aug, trace = build_representation(aug, aug_ordering)
    if trace is None:
        raise ConstructionError("augmented build unexpectedly degenerate")
    p = trace.power
    complete = _complete_dims(rep_aug)
    if complete != [p, p + 1]:
        raise ConstructionError(
            f"expected dimensions {p} and {p + 1} to be complete, found {complete}"
        )
    coords = tuple(
        tuple(rep_aug.coords[v][i] for i in range(p)) for v in range(graph.n)
    )
    return CubeRepresentation(p, rep_aug.side, coords)


def build_best(
    graph: Graph, ordering: CliqueOrdering | None = None
) -> CubeRepresentation:
    """The smaller of the two variants; ties go to the alpha variant."""
    ordering = require_ordering(graph, ordering)
    claw_rep, _ = build_representation(graph, ordering)
    alpha_rep = build_alpha_representation(graph, ordering)
    return alpha_rep if alpha_rep.dimension <= claw_rep.dimension else claw_rep


def normalize_unit(rep: CubeRepresentation) -> CubeRepresentation:
    """Rescale so the cube side is 1; adjacency is unchanged."""
    if rep.dimension == 0 or rep.side == 1:
        return rep
    if rep.side <= 0:
        raise ValueError("cube side must be positive")
    return CubeRepresentation(
        rep.dimension,
        Fraction(1),
        tuple(tuple(x / rep.side for x in row) for row in rep.coords),
    )
