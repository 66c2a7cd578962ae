"""Multivariate partition polynomials by exhaustive edge-subset enumeration.

For a weighted graph G the central object is

    Z_G(q) = sum over A subset of E of q^{k(A)} * prod_{e in A} w_e,

where k(A) counts connected components of (V, A), isolated vertices
included.  Z_G is a monic polynomial of degree |V| in q.  The companion
quantities are the connected generating value C_G(w) (the coefficient of
q^1) and the spanning-tree generating value T_G(w).

Everything here enumerates subsets directly; exactness at desk scale is
the point, so inputs are capped at 24 edges.
"""

from __future__ import annotations

import functools
import itertools
import json
from dataclasses import dataclass

import numpy as np

from . import _kernels
from .errors import TooLarge
from .graph import WeightedGraph

MAX_ENUM_EDGES = 24


@dataclass(frozen=True)
class QPolynomial:
    """Polynomial in q with complex coefficients, ascending by power."""

    coeffs: tuple[complex, ...]

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def eval(self, q: complex) -> complex:
        acc = 0j
        for c in reversed(self.coeffs):
            acc = acc * q + c
        return acc

    def __mul__(self, other: "QPolynomial") -> "QPolynomial":
        a, b = self.coeffs, other.coeffs
        out = [0j] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            for j, cb in enumerate(b):
                out[i + j] += ca * cb
        return QPolynomial(tuple(out))

    def to_json(self) -> list[list[float]]:
        return [[c.real, c.imag] for c in self.coeffs]

    @staticmethod
    def from_json(obj) -> "QPolynomial":
        if isinstance(obj, str):
            obj = json.loads(obj)
        return QPolynomial(tuple(complex(re, im) for re, im in obj))


def _check_size(g: WeightedGraph, max_edges: int) -> None:
    cap = min(max_edges, MAX_ENUM_EDGES) if max_edges else MAX_ENUM_EDGES
    if g.m > cap:
        raise TooLarge(f"{g.m} edges exceeds the enumeration cap of {cap}")


def z_polynomial(g: WeightedGraph, max_edges: int = MAX_ENUM_EDGES) -> QPolynomial:
    """The full polynomial Z_G(q), exact up to floating-point rounding.

    The leading coefficient (power |V|) is exactly 1 from the empty edge
    subset, and coefficients below the component count of the nonzero-
    weight edge set are exact zeros.
    """
    _check_size(g, max_edges)
    coeffs = _kernels.z_coefficients(g.n, g.edges)
    return QPolynomial(tuple(complex(c) for c in coeffs))


def z_eval(g: WeightedGraph, q: complex, max_edges: int = MAX_ENUM_EDGES) -> complex:
    """Z_G at one point, by Horner evaluation of the coefficient vector."""
    return z_polynomial(g, max_edges).eval(complex(q))


def connected_gen_poly(g: WeightedGraph, max_edges: int = MAX_ENUM_EDGES) -> complex:
    """C_G(w): sum of prod w_e over edge subsets connecting all of V.

    Equals the q^1 coefficient of Z_G; a single-vertex graph gives 1 and
    a disconnected graph gives 0.
    """
    _check_size(g, max_edges)
    if g.n == 0:
        return 1 + 0j
    coeffs = _kernels.z_coefficients(g.n, g.edges)
    return complex(coeffs[1])


def connected_by_support(g: WeightedGraph, max_edges: int = MAX_ENUM_EDGES) -> dict[int, complex]:
    """C values of all induced sub-systems in one sweep.

    Returns {vertex_bitmask: C} where C sums prod w_e over edge subsets
    with endpoint support exactly that bitmask, connected on it.  Masks
    with no connecting subset are absent.  Singletons are absent too; the
    convention C = 1 for a single vertex is the caller's concern.
    """
    _check_size(g, max_edges)
    table = _kernels.connected_by_support(g.n, g.edges)
    return {int(s): complex(c) for s, c in enumerate(table) if c != 0}


@functools.lru_cache(maxsize=4096)
def _spanning_tree_masks_cached(n: int, edge_pairs: tuple[tuple[int, int], ...]) -> tuple[int, ...]:
    m = len(edge_pairs)
    if n <= 1:
        return (0,)
    out = []
    for combo in itertools.combinations(range(m), n - 1):
        parent = list(range(n))
        ok = True
        for e in combo:
            u, v = edge_pairs[e]
            while parent[u] != u:
                u = parent[u]
            while parent[v] != v:
                v = parent[v]
            if u == v:
                ok = False
                break
            parent[u] = v
        if ok:
            mask = 0
            for e in combo:
                mask |= 1 << e
            out.append(mask)
    return tuple(out)


def spanning_tree_masks(n: int, edge_pairs) -> list[int]:
    """Bitmasks of all spanning trees (edge-index sets of size n-1).

    Enumerates size-(n-1) edge combinations and keeps the acyclic
    connected ones.  For n <= 1 the empty set is the single tree.
    Results are memoized on the structure, which the sweep harnesses
    revisit once per weight draw.
    """
    return list(_spanning_tree_masks_cached(n, tuple(tuple(p) for p in edge_pairs)))


def connected_spanning_masks(n: int, edge_pairs) -> list[int]:
    """Edge masks whose subgraph connects all n vertices, ascending."""
    if len(edge_pairs) > MAX_ENUM_EDGES:
        raise TooLarge(f"{len(edge_pairs)} edges exceeds the enumeration cap")
    flags = _kernels.connected_spanning_flags(n, [tuple(p) for p in edge_pairs])
    return [int(i) for i in np.nonzero(flags)[0]]


def spanning_tree_gen_poly(g: WeightedGraph, max_edges: int = MAX_ENUM_EDGES) -> complex:
    """T_G(w): sum of prod w_e over spanning trees of G (0 if disconnected)."""
    _check_size(g, max_edges)
    pairs = [(u, v) for u, v, _ in g.edges]
    w = g.weights()
    total = 0j
    for mask in spanning_tree_masks(g.n, pairs):
        pr = 1 + 0j
        mm = mask
        e = 0
        while mm:
            if mm & 1:
                pr *= w[e]
            mm >>= 1
            e += 1
        total += pr
    return total


def component_count(n: int, edge_pairs: list[tuple[int, int]], mask: int) -> int:
    """k(A) for the edge subset given as a bitmask over edge_pairs."""
    parent = list(range(n))
    k = n
    e = 0
    mm = mask
    while mm:
        if mm & 1:
            u, v = edge_pairs[e]
            while parent[u] != u:
                u = parent[u]
            while parent[v] != v:
                v = parent[v]
            if u != v:
                parent[u] = v
                k -= 1
        mm >>= 1
        e += 1
    return k


def nonzero_component_count(g: WeightedGraph) -> int:
    """k(E+): components of (V, edges with nonzero weight).

    Z_G is divisible by q to exactly this combinatorial power, so it is
    the multiplicity of the root q = 0 used when stripping zero roots.
    """
    pairs = [(u, v) for u, v, w in g.edges if w != 0]
    mask = (1 << len(pairs)) - 1
    return component_count(g.n, pairs, mask)
