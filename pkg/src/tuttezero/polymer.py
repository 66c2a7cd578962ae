"""Hard-core polymer gas built on the connected-subgraph weights.

Dividing the partition function by q^{|V|} turns it into a gas of
pairwise-disjoint vertex sets: each connected S with |S| >= 2 carries
activity rho(S) = q^{-(|S|-1)} C_{G[S]}(w), and

    Z_G(q, w) = q^{|V|} * Xi(rho)

where Xi sums the products of activities over collections of disjoint
polymers.  Xi is evaluated here exactly by dynamic programming over
vertex subsets.  The classical convergence certificates bound, per
vertex, the activity mass seen at scale alpha; margin at most one
guarantees Xi does not vanish.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass

import numpy as np
from scipy.optimize import brentq, minimize_scalar

from .errors import (
    BadIndex,
    DegenerateWeights,
    EmptySet,
    OutOfDomain,
    TooLarge,
    ZeroQ,
)
from .graph import WeightedGraph
from .tutte import connected_by_support

MAX_POLYMER_VERTICES = 12


@dataclass(frozen=True)
class PolymerWeights:
    """Activity map for a polymer gas on host vertices 0..n-1.

    entries holds (vertex_mask, activity) pairs, sorted by mask, one per
    polymer; singleton and empty masks are rejected, as is a mask that
    leaves the host's range.
    """

    host_vertex_count: int
    entries: tuple[tuple[int, complex], ...]

    def __post_init__(self):
        n = self.host_vertex_count
        if n < 0:
            raise BadIndex(f"vertex count must be >= 0, got {n}")
        if n > MAX_POLYMER_VERTICES:
            raise TooLarge(f"{n} vertices exceeds polymer limit {MAX_POLYMER_VERTICES}")
        seen = set()
        for mask, _ in self.entries:
            if mask <= 0 or mask >> n:
                raise BadIndex(f"polymer mask {mask} outside host range")
            if mask & (mask - 1) == 0:
                raise BadIndex(f"polymer mask {mask} is a singleton")
            if mask in seen:
                raise BadIndex(f"duplicate polymer mask {mask}")
            seen.add(mask)
        object.__setattr__(self, "entries", tuple(sorted(self.entries)))

    @classmethod
    def from_sets(cls, n: int, pairs) -> "PolymerWeights":
        entries = []
        for s, rho in pairs:
            mask = 0
            for v in s:
                if not (0 <= v < n):
                    raise BadIndex(f"vertex {v} outside 0..{n - 1}")
                mask |= 1 << v
            entries.append((mask, complex(rho)))
        return cls(n, tuple(entries))

    def sets(self) -> list[tuple[tuple[int, ...], complex]]:
        out = []
        for mask, rho in self.entries:
            s = tuple(v for v in range(self.host_vertex_count) if mask >> v & 1)
            out.append((s, rho))
        return out

    def to_json(self) -> list[dict]:
        return [
            {"S": list(s), "rho": [rho.real, rho.imag]} for s, rho in self.sets()
        ]

    @classmethod
    def from_json(cls, n: int, data) -> "PolymerWeights":
        if isinstance(data, str):
            data = json.loads(data)
        pairs = []
        for item in data:
            re, im = item["rho"]
            pairs.append((item["S"], complex(re, im)))
        return cls.from_sets(n, pairs)


def tutte_polymer_weights(g: WeightedGraph, q: complex) -> PolymerWeights:
    """Activities rho(S) = q^{-(|S|-1)} C_{G[S]}(w) for connected |S| >= 2."""
    q = complex(q)
    if q == 0:
        raise ZeroQ("activities are undefined at q = 0")
    if g.n > MAX_POLYMER_VERTICES:
        raise TooLarge(f"{g.n} vertices exceeds polymer limit {MAX_POLYMER_VERTICES}")
    entries = []
    for mask, c in connected_by_support(g).items():
        size = bin(mask).count("1")
        if size < 2 or c == 0:
            continue
        entries.append((mask, c * q ** -(size - 1)))
    return PolymerWeights(g.n, tuple(entries))


def polymer_partition(pw: PolymerWeights) -> complex:
    """Xi(rho): sum over collections of pairwise-disjoint polymers.

    Dynamic programming over the set of still-available vertices; the
    lowest available vertex is either left bare or covered by one of the
    polymers containing it.
    """
    n = pw.host_vertex_count
    if n == 0:
        return 1.0 + 0j
    by_low: list[list[tuple[int, complex]]] = [[] for _ in range(n)]
    for mask, rho in pw.entries:
        low = (mask & -mask).bit_length() - 1
        by_low[low].append((mask, rho))
    f = np.zeros(1 << n, dtype=np.complex128)
    f[0] = 1.0
    for mask in range(1, 1 << n):
        low = (mask & -mask).bit_length() - 1
        acc = f[mask & (mask - 1)]
        for smask, rho in by_low[low]:
            if smask & mask == smask:
                acc += rho * f[mask ^ smask]
        f[mask] = acc
    return complex(f[-1])


def polymer_profile(g: WeightedGraph) -> np.ndarray:
    """Coefficients p_j with Xi(q) = sum_j p_j q^{-j}, j = 0..n-1.

    Same dynamic programming as polymer_partition, but each activity is
    carried as its connected value times a shift by |S| - 1 in j, so the
    q-dependence stays symbolic.  Multiplying by q^n aligns p_j with the
    coefficient of q^{n-j} in the partition function; the tests compare
    them coefficient by coefficient.
    """
    n = g.n
    if n == 0:
        return np.ones(1, dtype=np.complex128)
    if n > MAX_POLYMER_VERTICES:
        raise TooLarge(f"{n} vertices exceeds polymer limit {MAX_POLYMER_VERTICES}")
    by_low: list[list[tuple[int, int, complex]]] = [[] for _ in range(n)]
    for mask, c in connected_by_support(g).items():
        size = bin(mask).count("1")
        if size < 2 or c == 0:
            continue
        low = (mask & -mask).bit_length() - 1
        by_low[low].append((mask, size - 1, c))
    f = np.zeros((1 << n, n), dtype=np.complex128)
    f[0, 0] = 1.0
    for mask in range(1, 1 << n):
        low = (mask & -mask).bit_length() - 1
        acc = f[mask & (mask - 1)].copy()
        for smask, shift, c in by_low[low]:
            if smask & mask == smask:
                acc[shift:] += c * f[mask ^ smask, : n - shift]
        f[mask] = acc
    return f[-1].copy()


def polymer_size_profile(pw: PolymerWeights) -> list[dict]:
    """Per-vertex activity mass grouped by polymer size, for the margins."""
    n = pw.host_vertex_count
    by_vertex: list[dict[int, float]] = [dict() for _ in range(n)]
    for mask, rho in pw.entries:
        size = bin(mask).count("1")
        a = abs(rho)
        for v in range(n):
            if mask >> v & 1:
                d = by_vertex[v]
                d[size] = d.get(size, 0.0) + a
    return by_vertex


def _margin_numerators(pw: PolymerWeights, alpha: float) -> float:
    worst = 0.0
    for d in polymer_size_profile(pw):
        s = sum(a * math.exp(alpha * size) for size, a in d.items())
        worst = max(worst, s)
    return worst


def gkfp_margin(pw: PolymerWeights, alpha: float) -> float:
    """sup_x sum_{S owning x} e^{alpha |S|} |rho(S)|, over e^alpha - 1.

    At most one certifies that the gas partition function cannot vanish.
    """
    if alpha <= 0:
        raise OutOfDomain(f"alpha must be > 0, got {alpha}")
    return _margin_numerators(pw, alpha) / math.expm1(alpha)


def kp_margin(pw: PolymerWeights, alpha: float) -> float:
    """Same numerator over the smaller denominator alpha."""
    if alpha <= 0:
        raise OutOfDomain(f"alpha must be > 0, got {alpha}")
    return _margin_numerators(pw, alpha) / alpha


def gkfp_optimal(pw: PolymerWeights) -> tuple[float, float]:
    """Minimizing alpha and minimum of the certificate margin.

    The margin is a maximum of log-convex functions of alpha, hence
    unimodal; a bounded scalar minimization brackets the optimum, and
    when a single vertex attains the maximum there the exact stationary
    point of its smooth branch is polished by root finding.
    """
    if not pw.entries:
        raise DegenerateWeights("no polymers: margin vanishes identically")
    profile = [d for d in polymer_size_profile(pw) if d]
    if not profile:
        raise EmptySet("no vertex meets any polymer")

    def margin(alpha: float) -> float:
        worst = 0.0
        for d in profile:
            s = sum(a * math.exp(alpha * size) for size, a in d.items())
            worst = max(worst, s)
        return worst / math.expm1(alpha)

    res = minimize_scalar(
        margin, bounds=(1e-6, 50.0), method="bounded",
        options={"xatol": 1e-10, "maxiter": 500},
    )
    a0 = float(res.x)

    # identify the active vertex branch at the coarse optimum
    vals = []
    for d in profile:
        vals.append(sum(a * math.exp(a0 * size) for size, a in d.items()))
    top = max(vals)
    active = [d for d, v in zip(profile, vals) if v >= top * (1 - 1e-9)]
    d = active[0]

    def branch_derivative(alpha: float) -> float:
        ea = math.exp(alpha)
        num = sum(a * math.exp(alpha * size) for size, a in d.items())
        dnum = sum(a * size * math.exp(alpha * size) for size, a in d.items())
        return dnum * (ea - 1.0) - num * ea

    lo, hi = max(1e-9, a0 - 0.1), a0 + 0.1
    try:
        if branch_derivative(lo) < 0 < branch_derivative(hi):
            a_star = float(brentq(branch_derivative, lo, hi, xtol=1e-14))
        else:
            a_star = a0
    except ValueError:
        a_star = a0
    if margin(a_star) > margin(a0):
        a_star = a0
    return a_star, margin(a_star)
