import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tuttezero import (
    BadLambda,
    NoConvergence,
    OutOfDomain,
    build_graph,
    f_closed,
    f_lambda_series,
    f_lambda_variational,
    g_ratio,
    graph_bounds,
    kstar_lambda,
    kstar_psi,
    lambert_w,
    sokal_K,
)
from tuttezero.bounds import variational_objective
from tuttezero.families import cycle_graph, path_graph


# ---------------------------------------------------------------------------
# Lambert W

def test_lambert_defining_identity_sweep():
    xs = np.concatenate([
        np.linspace(-1 / math.e + 1e-12, 1, 400),
        np.geomspace(1, 1e6, 200),
    ])
    for x in xs:
        w = lambert_w(float(x))
        assert abs(w * math.exp(w) - x) <= 1e-14 * max(1.0, abs(x))


def test_lambert_inverse_of_x_exp_x():
    for v in (-0.9, -0.5, 0.0, 0.3, 1.0, 2.5, 7.0):
        assert abs(lambert_w(v * math.exp(v)) - v) < 1e-13 * max(1.0, abs(v))


def test_lambert_branch_point():
    assert abs(lambert_w(-1 / math.e) + 1.0) < 1e-7
    with pytest.raises(OutOfDomain):
        lambert_w(-0.5)


def test_lambert_known_values():
    assert abs(lambert_w(math.e) - 1.0) < 1e-15
    assert abs(lambert_w(0.0)) == 0.0
    assert abs(lambert_w(1.0) - 0.5671432904097838) < 1e-14


# ---------------------------------------------------------------------------
# the named constants

def test_sokal_constant_value_and_ceiling():
    k = sokal_K()
    assert abs(k - 7.963906075890002502) < 1e-9
    assert k <= 7.963907


def test_sokal_routes_agree():
    assert abs(sokal_K("variational") - sokal_K("series")) < 1e-9


def test_kstar_at_one():
    assert abs(kstar_psi(1.0) - 6.907651697774449218) < 1e-12


def test_kstar_lambda_zero_closed_form():
    w = lambert_w(2 * math.e)
    assert abs(kstar_lambda(0.0) - w / (2 * (w - 1) ** 2)) < 1e-9
    assert abs(kstar_lambda(0.0) - 4.892888) < 1e-5


def test_kstar_psi_routes_agree_spot():
    for psi in (1.0, 2.0, 10.0, 100.0):
        a = kstar_psi(psi, "lambert")
        b = kstar_psi(psi, "variational")
        c = kstar_psi(psi, "series")
        tol = 1e-9 * max(1.0, a)
        assert abs(a - b) < tol and abs(a - c) < tol


def test_kstar_psi_linear_ceiling():
    for psi in (0.5, 1.0, 3.0, 30.0, 1000.0):
        assert kstar_psi(psi) <= 4 * psi + 3 * math.sqrt(psi) + 1e-9


def test_kstar_psi_increasing():
    vals = [kstar_psi(p) for p in np.geomspace(0.2, 200, 25)]
    assert all(a < b for a, b in zip(vals, vals[1:]))


def test_kstar_lambda_affine_ceiling():
    for lam in (0.0, 0.25, 0.5, 0.75, 1.0):
        assert kstar_lambda(lam) <= 5 + 2 * lam + 1e-9


def test_kstar_lambda_domain():
    with pytest.raises(OutOfDomain):
        kstar_lambda(1.5)
    with pytest.raises(OutOfDomain):
        kstar_lambda(-0.1)


# ---------------------------------------------------------------------------
# F across routes

def test_closed_forms_match_lambert_expressions():
    beta = 0.7
    w0 = lambert_w((1 + beta) * math.e)
    w1 = lambert_w(math.e / (1 + beta))
    assert abs(f_closed(0, beta) - beta / (1 + beta) * w0 / (w0 - 1) ** 2) < 1e-15
    assert abs(f_closed(1, beta) - beta * w1 / (1 - w1) ** 2) < 1e-15


def test_closed_form_needs_integer_ends():
    with pytest.raises(BadLambda):
        f_closed(0.5, 1.0)


@settings(max_examples=25, deadline=None)
@given(
    lam=st.floats(0, 1, allow_nan=False),
    beta=st.floats(0.05, 20, allow_nan=False),
)
def test_series_and_variational_agree_random(lam, beta):
    a = f_lambda_series(lam, beta)
    b = f_lambda_variational(lam, beta)
    assert abs(a - b) <= 1e-9 * max(1.0, abs(b))


def test_variational_profile_is_unimodal():
    # the reduced objective has one interior minimum; scan a fine grid
    lam, beta = 0.6, 1.7
    ys = np.linspace(1 + 1e-6, 1 + beta - 1e-6, 4001)
    vals = [variational_objective(lam, beta, y) for y in ys]
    drops = sum(1 for a, b in zip(vals, vals[1:]) if b < a - 1e-13)
    rises = sum(1 for a, b in zip(vals, vals[1:]) if b > a + 1e-13)
    first_rise = next(i for i, (a, b) in enumerate(zip(vals, vals[1:])) if b > a + 1e-13)
    last_drop = max(i for i, (a, b) in enumerate(zip(vals, vals[1:])) if b < a - 1e-13)
    assert drops and rises
    assert last_drop < first_rise  # every descent precedes every ascent


def test_expansion_residual_order():
    # F1 - (4/b + 3 - 7b/48 + 17b^2/192) should shrink like b^3
    def resid(b):
        return abs(f_closed(1, b) - (4 / b + 3 - 7 * b / 48 + 17 * b * b / 192))

    r1, r2 = resid(0.02), resid(0.04)
    assert 6.0 < r2 / r1 < 10.5


def test_g_ratio_endpoints():
    assert abs(g_ratio(1.0) - 1.0) < 1e-12
    # small lambda: g tends to Kstar_0 / 4
    assert abs(g_ratio(1e-5) - 4.892888 / 4.0) < 1e-3


def test_g_ratio_ceiling_on_unit_interval():
    top = kstar_lambda(1.0) / 4.0
    for lam in np.linspace(0.05, 1.0, 20):
        assert g_ratio(float(lam)) <= top + 1e-9


def test_g_ratio_domain():
    with pytest.raises(OutOfDomain):
        g_ratio(0.0)


# ---------------------------------------------------------------------------
# per-graph bounds

def test_graph_bounds_single_edge_hand_checked():
    w = 10.0
    b = graph_bounds(path_graph(2, w))
    assert abs(b.delta - 10.0) < 1e-15
    assert abs(b.delta_prime - 10.0 / 11.0) < 1e-14
    assert abs(b.psi - 11.0) < 1e-12
    assert abs(b.radius_general - kstar_psi(11.0) * (10.0 / 11.0)) < 1e-9
    assert b.radius_simple is not None
    want = kstar_lambda(b.lam) * math.sqrt(11.0) * b.delta_tilde
    assert abs(b.radius_simple - want) < 1e-9 * want
    assert b.radius_subcritical is None
    assert not b.all_subcritical


def test_graph_bounds_subcritical_cycle():
    g = cycle_graph(4, -0.5 + 0.0j)
    b = graph_bounds(g)
    assert b.all_subcritical
    # two edges of strength 1/2 at each vertex
    assert abs(b.radius_subcritical - sokal_K() * 1.0) < 1e-9


def test_interpolated_radius_endpoints():
    g = cycle_graph(4, 2.0 + 1.5j)
    b = graph_bounds(g)
    assert b.radius_interpolated is not None
    assert abs(b.radius_interpolated(0.0) - b.radius_general) < 1e-6 * b.radius_general
    assert abs(b.radius_interpolated(1.0) - b.radius_simple) < 1e-6 * b.radius_simple


def test_interpolated_radius_profile_smooth():
    # no monotonicity law holds in a (either endpoint can be the sharper
    # one), but the profile is positive and moves gradually
    g = cycle_graph(5, 3.0 - 2.0j)
    b = graph_bounds(g)
    vals = [b.radius_interpolated(a) for a in np.linspace(0, 1, 11)]
    assert all(v > 0 for v in vals)
    assert all(abs(x - y) < 0.2 * max(x, y) for x, y in zip(vals, vals[1:]))


def test_multigraph_has_no_simple_radius():
    g = build_graph(range(2), [(0, 1, 1.0), (0, 1, 2.0)])
    b = graph_bounds(g)
    assert b.radius_simple is None
    assert b.radius_interpolated is None


def test_bound_set_to_json_keys():
    b = graph_bounds(path_graph(3, 1.0 + 1.0j))
    blob = b.to_json()
    for key in ("K", "psi", "delta", "delta_prime", "delta_tilde",
                "radius_general", "radius_simple", "radius_subcritical",
                "radius_interpolated", "all_subcritical", "lambda"):
        assert key in blob
