import math

import numpy as np
import pytest

from tuttezero import (
    BadIndex,
    DegenerateWeights,
    OutOfDomain,
    PolymerWeights,
    ZeroQ,
    build_graph,
    gkfp_margin,
    gkfp_optimal,
    kp_margin,
    polymer_partition,
    polymer_profile,
    tutte_polymer_weights,
    z_polynomial,
)
from tuttezero.families import complete_graph, path_graph


def brute_partition(pw):
    """Sum over families of pairwise-disjoint polymers, fully unrolled."""
    entries = list(pw.entries)

    def rec(i, used):
        if i == len(entries):
            return 1.0 + 0.0j
        mask, rho = entries[i]
        total = rec(i + 1, used)
        if not mask & used:
            total += rho * rec(i + 1, used | mask)
        return total

    return rec(0, 0)


def test_weights_validation():
    with pytest.raises(BadIndex):
        PolymerWeights.from_sets(3, [([0], 1.0)])  # singleton polymer
    with pytest.raises(BadIndex):
        PolymerWeights.from_sets(3, [([0, 5], 1.0)])
    with pytest.raises(BadIndex):
        PolymerWeights.from_sets(3, [([0, 1], 1.0), ([1, 0], 2.0)])


def test_partition_matches_brute_force(rng):
    for _ in range(20):
        n = int(rng.integers(3, 7))
        sets = []
        seen = set()
        for _ in range(int(rng.integers(1, 8))):
            size = int(rng.integers(2, n + 1))
            s = tuple(sorted(rng.choice(n, size, replace=False).tolist()))
            if s in seen:
                continue
            seen.add(s)
            sets.append((list(s), complex(*rng.normal(0, 1, 2))))
        pw = PolymerWeights.from_sets(n, sets)
        a = polymer_partition(pw)
        b = brute_partition(pw)
        assert abs(a - b) <= 1e-12 * max(1.0, abs(b))


def test_tutte_weights_on_path():
    w = complex(0.25, -1.0)
    q = complex(2.0, 0.5)
    g = path_graph(3, w)
    pw = tutte_polymer_weights(g, q)
    got = dict(pw.entries)
    # pairs {0,1}, {1,2} carry w/q; the triple needs both edges: w^2/q^2
    assert abs(got[0b011] - w / q) < 1e-14
    assert abs(got[0b110] - w / q) < 1e-14
    assert abs(got[0b111] - w * w / q ** 2) < 1e-14
    assert 0b101 not in got


def test_tutte_weights_reject_zero_q(triangle):
    with pytest.raises(ZeroQ):
        tutte_polymer_weights(triangle, 0.0)


def test_profile_reproduces_polynomial(rng):
    for n, pairs in (
        (3, [(0, 1), (1, 2), (0, 2)]),
        (4, [(0, 1), (1, 2), (2, 3), (0, 3), (0, 2)]),
        (5, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4), (1, 3)]),
    ):
        ws = [complex(*rng.normal(0, 1, 2)) for _ in pairs]
        g = build_graph(range(n), [(u, v, w) for (u, v), w in zip(pairs, ws)])
        prof = polymer_profile(g)
        zc = z_polynomial(g).coeffs
        # coefficient of q^(n-j) in Z equals the gas coefficient of q^-j
        scale = max(1.0, max(abs(c) for c in zc))
        for j, c in enumerate(prof):
            assert abs(c - zc[n - j]) <= 1e-10 * scale


def test_partition_equals_polynomial_at_point(rng):
    g = complete_graph(4, 0.5 + 0.25j)
    zc = z_polynomial(g).coeffs
    for _ in range(5):
        q = complex(*rng.uniform(0.5, 2.5, 2))
        xi = polymer_partition(tutte_polymer_weights(g, q))
        z = sum(c * q ** i for i, c in enumerate(zc))
        assert abs(xi * q ** 4 - z) <= 1e-10 * max(1.0, abs(z))


def test_profile_scaling_homogeneity():
    # scaling every edge weight by t scales the size-s gas weights by t^...
    # degrees: entry j of the profile collects polymers covering j+k(extra)
    # vertices; doubling q instead divides entry j by 2^j
    g = complete_graph(4, 1.0 + 1.0j)
    prof = polymer_profile(g)
    q = 1.7 - 0.4j
    xi_q = sum(c / q ** j for j, c in enumerate(prof))
    xi_2q = sum(c / (2 * q) ** j for j, c in enumerate(prof))
    direct_q = polymer_partition(tutte_polymer_weights(g, q))
    direct_2q = polymer_partition(tutte_polymer_weights(g, 2 * q))
    assert abs(xi_q - direct_q) < 1e-10 * max(1.0, abs(direct_q))
    assert abs(xi_2q - direct_2q) < 1e-10 * max(1.0, abs(direct_2q))


def test_margin_hand_computed_single_edge():
    w, q = complex(0.0, 3.0), complex(4.0, 0.0)
    pw = tutte_polymer_weights(path_graph(2, w), q)
    alpha = math.log(2.0)
    want = math.exp(2 * alpha) * abs(w / q) / (math.exp(alpha) - 1.0)
    assert abs(gkfp_margin(pw, alpha) - want) < 1e-12
    assert abs(gkfp_margin(pw, alpha) - 4.0 * abs(w) / abs(q)) < 1e-12


def test_margin_alpha_domain(triangle):
    pw = tutte_polymer_weights(triangle, 2.0)
    with pytest.raises(OutOfDomain):
        gkfp_margin(pw, 0.0)
    with pytest.raises(OutOfDomain):
        kp_margin(pw, -1.0)


def test_optimal_margin_is_global(rng):
    g = complete_graph(4, complex(0.4, 0.9))
    pw = tutte_polymer_weights(g, complex(3.0, -1.0))
    a_star, margin = gkfp_optimal(pw)
    for alpha in np.geomspace(1e-4, 30, 300):
        assert margin <= gkfp_margin(pw, float(alpha)) * (1 + 1e-9)
    assert abs(gkfp_margin(pw, a_star) - margin) <= 1e-9 * margin


def test_kp_variant_never_beats_gkfp(triangle):
    pw = tutte_polymer_weights(triangle, complex(1.5, 2.0))
    for alpha in (0.1, 0.5, 1.0, 2.0):
        # e^a - 1 >= a, so the classical margin dominates at every alpha
        assert gkfp_margin(pw, alpha) <= kp_margin(pw, alpha) * (1 + 1e-12)


def test_margin_below_one_implies_nonvanishing(rng):
    hits = 0
    for _ in range(40):
        n = int(rng.integers(3, 6))
        pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
        keep = [p for p in pairs if rng.random() < 0.7]
        if len({v for p in keep for v in p}) < n:
            continue
        ws = [complex(*rng.normal(0, 0.4, 2)) for _ in keep]
        g = build_graph(range(n), [(u, v, w) for (u, v), w in zip(keep, ws)])
        q = complex(*rng.normal(0, 6, 2))
        if abs(q) < 1:
            continue
        try:
            pw = tutte_polymer_weights(g, q)
        except ZeroQ:
            continue
        if not pw.entries:
            continue
        _, margin = gkfp_optimal(pw)
        if margin <= 1.0:
            hits += 1
            assert abs(polymer_partition(pw)) > 1e-12
    assert hits >= 5  # the sweep has to actually exercise the regime


def test_optimal_needs_entries():
    pw = PolymerWeights.from_sets(4, [])
    with pytest.raises(DegenerateWeights):
        gkfp_optimal(pw)


def test_weights_json_round_trip():
    pw = PolymerWeights.from_sets(4, [([0, 1], 1.5 + 0.5j), ([1, 2, 3], -2.0j)])
    back = PolymerWeights.from_json(pw.host_vertex_count, pw.to_json())
    assert back == pw
