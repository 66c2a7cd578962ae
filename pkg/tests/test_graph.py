import cmath
import json

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tuttezero import (
    BadIndex,
    DegenerateLambda,
    EdgeWeightView,
    LoopEdge,
    MissingRoot,
    build_graph,
    degree_quantities,
    delta_prime_a,
    graph_from_json,
    graph_to_json,
    induced_subgraph,
    parallel_reduce,
    parse_edge_lines,
    transform_weights,
)
from tuttezero.errors import OutOfDomain, SingularDual

from conftest import dc_z_coeffs


def test_build_rejects_loops():
    with pytest.raises(LoopEdge):
        build_graph(range(2), [(1, 1, 1.0)])


def test_build_rejects_bad_endpoint():
    with pytest.raises(BadIndex):
        build_graph(range(2), [(0, 5, 1.0)])


def test_basic_attributes(triangle):
    assert triangle.n == 3
    assert triangle.m == 3
    assert triangle.is_simple


def test_multigraph_not_simple():
    g = build_graph(range(2), [(0, 1, 1.0), (0, 1, 2.0)])
    assert not g.is_simple


def test_parallel_reduce_merges_weights():
    w1, w2 = complex(0.5, 1.0), complex(-0.25, 0.75)
    g = build_graph(range(2), [(0, 1, w1), (0, 1, w2)])
    red = parallel_reduce(g)
    assert red.m == 1
    merged = red.edges[0][2]
    assert cmath.isclose(merged, (1 + w1) * (1 + w2) - 1, rel_tol=1e-14)


def test_parallel_reduce_preserves_polynomial():
    edges = [(0, 1, 0.5 + 1j), (0, 1, -0.25 + 0.75j), (1, 2, 2.0 + 0j), (0, 2, 1j)]
    g = build_graph(range(3), edges)
    red = parallel_reduce(g)
    a = dc_z_coeffs(3, [(u, v, w) for u, v, w in g.edges])
    b = dc_z_coeffs(3, [(u, v, w) for u, v, w in red.edges])
    assert np.allclose(a, b, rtol=1e-13, atol=1e-13)


def test_weight_views_on_one_edge():
    w = complex(3.0, 4.0)  # |1+w| = sqrt(32) > 1
    g = build_graph(range(2), [(0, 1, w)])
    a = abs(1 + w)
    raw = transform_weights(g, EdgeWeightView("raw")).edges[0][2]
    prime = transform_weights(g, EdgeWeightView("prime")).edges[0][2]
    tilde = transform_weights(g, EdgeWeightView("tilde", root=0)).edges[0][2]
    dbl = transform_weights(g, EdgeWeightView("double_prime", root=0)).edges[0][2]
    assert raw == complex(abs(w))
    assert abs(prime - abs(w) / a) < 1e-14
    assert abs(tilde - abs(w) / a ** 0.5) < 1e-14
    assert dbl == complex(abs(w))  # the root edge keeps its raw magnitude


def test_weight_views_subcritical_no_damping():
    # inside |1+w| <= 1 damping is inert: all magnitudes stay |w|
    w = complex(-0.5, 0.3)
    g = build_graph(range(2), [(0, 1, w)])
    for view in (EdgeWeightView("prime"), EdgeWeightView("tilde", root=0),
                 EdgeWeightView("double_prime", root=1)):
        assert transform_weights(g, view).edges[0][2] == complex(abs(w))


def test_interpolated_view_between_endpoints():
    w = complex(3.0, 4.0)
    g = build_graph(range(2), [(0, 1, w)])
    vals = {}
    for a in (0.0, 0.5, 1.0):
        view = EdgeWeightView("interpolated", root=0, a=a)
        vals[a] = transform_weights(g, view).edges[0][2].real
    assert abs(vals[0.0] - abs(w) / abs(1 + w)) < 1e-14
    assert abs(vals[1.0] - abs(w) / abs(1 + w) ** 0.5) < 1e-14
    assert vals[0.0] < vals[0.5] < vals[1.0]


def test_rooted_view_requires_root():
    with pytest.raises(MissingRoot):
        EdgeWeightView("tilde")
    with pytest.raises(OutOfDomain):
        EdgeWeightView("interpolated", root=0, a=2.0)
    with pytest.raises(OutOfDomain):
        EdgeWeightView("sideways")


def test_dual_view_is_an_involution():
    w = complex(0.4, -1.2)
    g = build_graph(range(2), [(0, 1, w)])
    once = transform_weights(g, EdgeWeightView("dual"))
    twice = transform_weights(once, EdgeWeightView("dual"))
    assert cmath.isclose(twice.edges[0][2], w, rel_tol=1e-13)
    assert cmath.isclose(once.edges[0][2], -w / (1 + w), rel_tol=1e-14)


def test_dual_view_singular_at_minus_one():
    g = build_graph(range(2), [(0, 1, -1.0)])
    with pytest.raises(SingularDual):
        transform_weights(g, EdgeWeightView("dual"))


def test_degree_quantities_hand_checked():
    w = 1000.0
    g = build_graph(range(2), [(0, 1, w)])
    deg = degree_quantities(g)
    assert deg.delta == w
    assert abs(deg.delta_prime - w / (1 + w)) < 1e-12
    assert abs(deg.delta_tilde - w / (1 + w) ** 0.5) < 1e-9
    assert abs(deg.psi - (1 + w)) < 1e-12
    assert abs(deg.lam - deg.delta_prime / deg.delta_tilde) < 1e-15


def test_degree_lambda_window(small_weighted):
    deg = degree_quantities(small_weighted)
    assert 1.0 / deg.psi ** 0.5 - 1e-12 <= deg.lam <= 1.0 + 1e-12


def test_lambda_degenerate_when_tilde_vanishes():
    g = build_graph(range(2), [(0, 1, 0.0)])
    deg = degree_quantities(g)
    with pytest.raises(DegenerateLambda):
        _ = deg.lam


def test_delta_prime_a_endpoints(small_weighted):
    deg = degree_quantities(small_weighted)
    assert abs(delta_prime_a(small_weighted, 0.0) - deg.delta_prime) < 1e-12
    assert abs(delta_prime_a(small_weighted, 1.0) - deg.delta_tilde) < 1e-12


def test_delta_prime_a_monotone(small_weighted):
    grid = [delta_prime_a(small_weighted, a) for a in np.linspace(0, 1, 9)]
    # weaker damping as a grows, so the interpolated degree cannot shrink
    assert all(x <= y * (1 + 1e-12) for x, y in zip(grid, grid[1:]))


def test_induced_subgraph_keeps_weights(triangle):
    sub = induced_subgraph(triangle, [0, 1])
    assert sub.n == 2
    assert sub.m == 1
    assert sub.edges[0][2] == 1.0


def test_json_round_trip(small_weighted):
    blob = json.dumps(graph_to_json(small_weighted), sort_keys=True)
    back = graph_from_json(json.loads(blob))
    assert back.n == small_weighted.n
    assert back.edges == small_weighted.edges


def test_parse_edge_lines_with_comments():
    g = parse_edge_lines("# header\n0 1 2.0 0.5\n\n1 2 -1 0  # tail\n")
    assert g.n == 3
    assert g.edges[0][2] == complex(2.0, 0.5)
    assert g.edges[1][2] == complex(-1.0, 0.0)


@settings(max_examples=60, deadline=None)
@given(
    re=st.floats(-3, 3, allow_nan=False),
    im=st.floats(-3, 3, allow_nan=False),
)
def test_prime_view_matches_damped_magnitude(re, im):
    w = complex(re, im)
    g = build_graph(range(2), [(0, 1, w)])
    damped = transform_weights(g, EdgeWeightView("prime")).edges[0][2]
    want = min(abs(w), abs(w) / max(abs(1 + w), 1e-300))
    assert damped.imag == 0.0
    assert abs(damped.real - want) <= 1e-12 * (1.0 + want)
