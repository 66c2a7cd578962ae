"""Complex-weighted multigraphs and their derived weight transforms.

A graph here is a finite loopless multigraph on vertices 0..n-1 with one
complex weight per edge.  Instances are immutable; every operation returns
a new graph.  Beyond construction and serialization this module provides

* the parallel-class reduction  w -> prod(1+w_i) - 1,
* the derived nonnegative edge weights used by the zero-free disc bounds
  (raw modulus, |w|/|1+w| variants, the interpolated family, the dual map),
* the degree-style quantities Delta, Delta', Delta~, Psi and their ratio.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import (
    BadIndex,
    DegenerateLambda,
    EmptySet,
    LoopEdge,
    MissingRoot,
    OutOfDomain,
    SingularDual,
)

Edge = tuple[int, int, complex]

VIEW_MODES = ("raw", "prime", "tilde", "double_prime", "interpolated", "dual")
_ROOTED_MODES = ("tilde", "double_prime", "interpolated")


@dataclass(frozen=True)
class WeightedGraph:
    """Immutable loopless multigraph with complex edge weights.

    vertices holds arbitrary hashable labels; edges are (u, v, w) triples
    with 0-based endpoint indices into the vertex tuple.  Edge order is
    preserved from construction and is part of the graph's identity.
    """

    vertices: tuple
    edges: tuple[Edge, ...]

    def __post_init__(self):
        n = len(self.vertices)
        for u, v, _ in self.edges:
            if not (0 <= u < n and 0 <= v < n):
                raise BadIndex(f"edge endpoint out of range: ({u}, {v}) with {n} vertices")
            if u == v:
                raise LoopEdge(f"loop at vertex {u} is not allowed")

    @property
    def n(self) -> int:
        return len(self.vertices)

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def is_simple(self) -> bool:
        """True when no unordered vertex pair carries more than one edge."""
        seen = set()
        for u, v, _ in self.edges:
            key = (u, v) if u < v else (v, u)
            if key in seen:
                return False
            seen.add(key)
        return True

    def weights(self) -> list[complex]:
        return [w for _, _, w in self.edges]

    def edges_at(self, x: int) -> list[int]:
        """Indices of the edges incident on vertex x, in edge order."""
        if not (0 <= x < self.n):
            raise BadIndex(f"vertex {x} out of range")
        return [i for i, (u, v, _) in enumerate(self.edges) if u == x or v == x]

    def with_weights(self, weights: Sequence[complex]) -> "WeightedGraph":
        """Same structure, new weights (one per edge, in edge order)."""
        if len(weights) != self.m:
            raise BadIndex(f"expected {self.m} weights, got {len(weights)}")
        new_edges = tuple((u, v, complex(w)) for (u, v, _), w in zip(self.edges, weights))
        return WeightedGraph(self.vertices, new_edges)


def build_graph(vertex_labels: Sequence, edge_list: Iterable[tuple]) -> WeightedGraph:
    """Validate and construct a WeightedGraph.

    edge_list items are (u, v, w) with integer endpoints and a weight
    convertible to complex.  Loops raise LoopEdge, bad endpoints BadIndex.
    """
    edges = tuple((int(u), int(v), complex(w)) for u, v, w in edge_list)
    return WeightedGraph(tuple(vertex_labels), edges)


def parallel_reduce(g: WeightedGraph) -> WeightedGraph:
    """Collapse every parallel class to one edge of weight prod(1+w_i) - 1.

    The multivariate partition function is unchanged by this reduction.
    Classes are ordered by first appearance, and the surviving edge keeps
    the orientation of the first edge of its class.  Simple graphs come
    back unchanged (same object content, fresh instance).
    """
    order: list[tuple[int, int]] = []
    accum: dict[tuple[int, int], complex] = {}
    orient: dict[tuple[int, int], tuple[int, int]] = {}
    for u, v, w in g.edges:
        key = (u, v) if u < v else (v, u)
        if key not in accum:
            order.append(key)
            accum[key] = 1 + 0j
            orient[key] = (u, v)
        accum[key] *= 1 + w
    new_edges = tuple(orient[k] + (accum[k] - 1,) for k in order)
    return WeightedGraph(g.vertices, new_edges)


@dataclass(frozen=True)
class EdgeWeightView:
    """Selects one of the derived edge-weight transforms.

    mode: "raw", "prime", "tilde", "double_prime", "interpolated" or "dual".
    The rooted modes (tilde, double_prime, interpolated) treat edges at the
    root differently from the rest; interpolated also needs a in [0, 1].
    """

    mode: str
    root: int | None = None
    a: float | None = None

    def __post_init__(self):
        if self.mode not in VIEW_MODES:
            raise OutOfDomain(f"unknown weight view mode {self.mode!r}")
        if self.mode in _ROOTED_MODES and self.root is None:
            raise MissingRoot(f"mode {self.mode!r} requires a root vertex")
        if self.mode == "interpolated":
            if self.a is None or not (0.0 <= self.a <= 1.0):
                raise OutOfDomain("interpolated mode requires a in [0, 1]")


def _damped(w: complex, exponent: float) -> float:
    """min(|w|, |w| / |1+w|^exponent) without dividing by zero."""
    aw = abs(w)
    a1 = abs(1 + w) ** exponent
    if a1 <= 1.0:
        return aw
    return aw / a1


def transform_weights(g: WeightedGraph, view: EdgeWeightView) -> WeightedGraph:
    """Apply an EdgeWeightView, returning a graph with the derived weights.

    All modes except "dual" produce nonnegative real weights (stored as
    complex with zero imaginary part).  The dual map w -> -w/(1+w) raises
    SingularDual on any edge with w = -1; applied twice it is the identity.
    """
    mode = view.mode
    if mode in _ROOTED_MODES:
        root = view.root
        if not (0 <= root < g.n):
            raise BadIndex(f"root {root} out of range")
        at_root = set(g.edges_at(root))

    out: list[complex] = []
    for i, (u, v, w) in enumerate(g.edges):
        if mode == "raw":
            out.append(complex(abs(w)))
        elif mode == "prime":
            out.append(complex(_damped(w, 1.0)))
        elif mode == "dual":
            if w == -1:
                raise SingularDual(f"edge {i} has weight -1; dual transform undefined")
            out.append(-w / (1 + w))
        elif mode == "tilde":
            expo = 0.5 if i in at_root else 1.0
            out.append(complex(_damped(w, expo)))
        elif mode == "double_prime":
            out.append(complex(abs(w)) if i in at_root else complex(_damped(w, 1.0)))
        else:  # interpolated
            expo = 1.0 - view.a / 2.0 if i in at_root else 1.0
            out.append(complex(_damped(w, expo)))
    return g.with_weights(out)


@dataclass(frozen=True)
class DegreeReport:
    """Weighted-degree summary of a graph.

    strengths[x] sums |w_e| over edges at x; delta is its maximum.
    delta_prime and delta_tilde use the damped weights min(|w|, |w|/|1+w|)
    and min(|w|, |w|/|1+w|^(1/2)).  psi is the largest per-vertex product
    of max(1, |1+w_e|).  lam = delta_prime / delta_tilde is exposed as a
    property and raises DegenerateLambda when delta_tilde = 0.
    """

    delta: float
    delta_prime: float
    delta_tilde: float
    psi: float
    strengths: tuple[float, ...]
    _lam: float | None = None

    @property
    def lam(self) -> float:
        if self._lam is None:
            raise DegenerateLambda("delta_tilde is zero; lambda is undefined")
        return self._lam


def degree_quantities(g: WeightedGraph) -> DegreeReport:
    """Compute Delta, Delta', Delta~, Psi and per-vertex strengths.

    An edgeless graph reports zeros with Psi = 1 and an undefined lambda.
    Always 1/sqrt(psi) <= lam <= 1 when lam is defined.
    """
    n = g.n
    s_raw = [0.0] * n
    s_prime = [0.0] * n
    s_tilde = [0.0] * n
    p_psi = [1.0] * n
    for u, v, w in g.edges:
        aw = abs(w)
        dp = _damped(w, 1.0)
        dt = _damped(w, 0.5)
        mx = max(1.0, abs(1 + w))
        for x in (u, v):
            s_raw[x] += aw
            s_prime[x] += dp
            s_tilde[x] += dt
            p_psi[x] *= mx
    delta = max(s_raw, default=0.0) if n else 0.0
    dprime = max(s_prime, default=0.0) if n else 0.0
    dtilde = max(s_tilde, default=0.0) if n else 0.0
    psi = max(p_psi, default=1.0) if n else 1.0
    lam = (dprime / dtilde) if dtilde > 0.0 else None
    return DegreeReport(delta, dprime, dtilde, psi, tuple(s_raw), lam)


def delta_prime_a(g: WeightedGraph, a: float) -> float:
    """Max vertex sum of min(|w|, |w|/|1+w|^(1-a/2)) over all edges.

    Interpolates between Delta' at a = 0 and Delta~ at a = 1, and is
    nondecreasing in a.
    """
    if not (0.0 <= a <= 1.0):
        raise OutOfDomain(f"a must lie in [0, 1], got {a}")
    expo = 1.0 - a / 2.0
    s = [0.0] * g.n
    for u, v, w in g.edges:
        d = _damped(w, expo)
        s[u] += d
        s[v] += d
    return max(s, default=0.0)


def induced_subgraph(g: WeightedGraph, vertex_set: Iterable[int]) -> WeightedGraph:
    """Subgraph induced by a nonempty vertex subset.

    Kept vertices preserve their relative order and labels; kept edges
    preserve edge order and weights.
    """
    keep = sorted(set(int(x) for x in vertex_set))
    if not keep:
        raise EmptySet("induced_subgraph needs at least one vertex")
    for x in keep:
        if not (0 <= x < g.n):
            raise BadIndex(f"vertex {x} out of range")
    remap = {x: i for i, x in enumerate(keep)}
    labels = tuple(g.vertices[x] for x in keep)
    edges = tuple(
        (remap[u], remap[v], w) for u, v, w in g.edges if u in remap and v in remap
    )
    return WeightedGraph(labels, edges)


# ---------------------------------------------------------------------------
# serialization

def graph_to_json(g: WeightedGraph) -> dict:
    return {
        "vertices": list(g.vertices),
        "edges": [
            {"u": u, "v": v, "w": [w.real, w.imag]} for u, v, w in g.edges
        ],
    }


def graph_from_json(obj: dict) -> WeightedGraph:
    try:
        labels = obj["vertices"]
        raw_edges = obj["edges"]
    except (KeyError, TypeError) as exc:
        raise BadIndex(f"malformed graph object: {exc}") from exc
    edges = []
    for e in raw_edges:
        w = e["w"]
        if isinstance(w, (int, float)):
            wc = complex(w)
        else:
            wc = complex(w[0], w[1])
        edges.append((e["u"], e["v"], wc))
    return build_graph(labels, edges)


def parse_edge_lines(text: str) -> WeightedGraph:
    """Parse the line format: one "u v re im" per line, # starts a comment.

    Vertex count is inferred as 1 + the largest endpoint index, with the
    indices themselves used as labels.
    """
    edges = []
    top = -1
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 4:
            raise BadIndex(f"line {lineno}: expected 'u v re im', got {raw!r}")
        u, v = int(parts[0]), int(parts[1])
        w = complex(float(parts[2]), float(parts[3]))
        edges.append((u, v, w))
        top = max(top, u, v)
    labels = tuple(range(top + 1))
    return build_graph(labels, edges)


def load_graph(path: str) -> WeightedGraph:
    """Read a graph from a JSON file or from the whitespace line format."""
    with open(path, "r", encoding="utf-8") as fh:
        text = fh.read()
    stripped = text.lstrip()
    if stripped.startswith("{"):
        return graph_from_json(json.loads(text))
    return parse_edge_lines(text)


def save_graph(g: WeightedGraph, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(graph_to_json(g), fh, indent=2, sort_keys=True)
        fh.write("\n")
