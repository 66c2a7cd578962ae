"""Disc constants and radii for the zero-free regions.

The partition function of a weighted graph has no zeros in q outside a
disc whose radius is a universal constant times a weighted maximum
degree.  Three families of constants appear:

* K, for graphs with every |1+w_e| <= 1, via the classical condition
  with denominator alpha,
* Kstar(psi), valid for arbitrary complex weights, scaling the damped
  degree Delta' and growing linearly in the vertex factor psi,
* Kstar_lambda, the sharper constant for simple graphs, indexed by the
  degree ratio lambda = Delta'/Delta~.

Each constant is the least L for which an inner infimum over a free
parameter alpha of a weighted exponential series drops below a target.
The series route evaluates that definition directly with a certified
geometric tail bound.  The variational route reduces the infimum to a
one-dimensional minimization in y = closed-form change of variable, and
at lambda in {0, 1} the minimum collapses to an expression in the real
Lambert W function.  All routes agree to 1e-9 and the tests insist on it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable

import numpy as np
from scipy.optimize import brentq, minimize_scalar
from scipy.special import gammaln

from .errors import BadLambda, NoConvergence, OutOfDomain
from .graph import WeightedGraph, degree_quantities, delta_prime_a

_E = math.e
_SERIES_CAP = 5000


# ---------------------------------------------------------------------------
# Lambert W, principal branch on the real axis

def lambert_w(x: float) -> float:
    """Principal-branch W(x) for real x >= -1/e, by Halley iteration.

    Initial guesses: the branch-point square-root series near -1/e, the
    Maclaurin series up to x <= 1, and log x - log log x beyond.  The
    defining residual w e^w - x is driven to machine precision.
    """
    x = float(x)
    xmin = -1.0 / _E
    if x < xmin - 1e-14:
        raise OutOfDomain(f"lambert_w needs x >= -1/e, got {x}")
    if x < xmin:
        x = xmin
    s2 = 2.0 * (_E * x + 1.0)
    if s2 < 0.0:
        s2 = 0.0
    if s2 < 1e-12:
        s = math.sqrt(s2)
        return -1.0 + s - s2 / 6.0 + (11.0 / 72.0) * s * s2 / 2.0
    if x < -0.3:
        w = -1.0 + math.sqrt(s2) - s2 / 6.0
    elif x <= 1.0:
        w = x * (1.0 + x * (-1.0 + x * (1.5 - (8.0 / 3.0) * x)))
        if w <= -1.0:
            w = -0.99
    else:
        lx = math.log(x)
        w = lx - math.log(lx)
    prev = prev2 = math.nan
    for _ in range(100):
        ew = math.exp(w)
        f = w * ew - x
        denom = ew * (w + 1.0) - (w + 2.0) * f / (2.0 * w + 2.0)
        step = f / denom
        prev2, prev = prev, w
        w -= step
        # the iteration can land in a one-ulp two-cycle; both states are done
        if abs(step) <= 1e-16 * (1.0 + abs(w)) or w == prev or w == prev2:
            return w
    raise NoConvergence(f"lambert_w failed to converge at x = {x}")


# ---------------------------------------------------------------------------
# series route: least L with  inf_alpha  sum / denom(alpha) <= target

def _series_partial_tail(alpha: float, L: float, lam: float, scale: float, N: int):
    """Partial sum over n = 2..N of e^{alpha n} scale^n a_n / L^{n-1} with
    a_n = (1+(n-1)lam)^{n-2} / (n-1)!, plus a certified tail bound.

    The coefficient ratio a_{n+1}/a_n never exceeds e*(lam + 1/n), so from
    N on the term ratio is at most rho = e^{alpha} * scale * e * (lam+1/N) / L
    and the tail beyond N is at most t_N * rho / (1 - rho) when rho < 1.
    """
    n = np.arange(2.0, N + 1.0)
    logt = (
        n * (alpha + math.log(scale))
        + (n - 2.0) * np.log1p((n - 1.0) * lam)
        - gammaln(n)
        - (n - 1.0) * math.log(L)
    )
    t = np.exp(logt)
    partial = float(np.sum(t))
    rho = math.exp(alpha) * scale * _E * (lam + 1.0 / N) / L
    if rho < 1.0:
        tail = float(t[-1]) * rho / (1.0 - rho)
    else:
        tail = math.inf
    return partial, tail


def _series_decision(L: float, lam: float, scale: float, denom_kind: str,
                     target: float, n_cap: int) -> str:
    """Certified three-way answer to: is inf_alpha sum/denom <= target?

    The objective is log-convex in alpha, so a bounded scalar minimization
    of the truncated sum is trusted to locate the infimum; the tail bound
    then settles the comparison, or reports "ambiguous" when it cannot.
    """
    denom = math.expm1 if denom_kind == "expm1" else float

    N = 300
    while True:
        arg = L / (scale * _E * (lam + 1.0 / N))
        alpha_hi = min(50.0, math.log(arg) - 1e-12) if arg > 0 else -math.inf
        if alpha_hi <= 1e-6:
            if lam > 0.0 and L <= scale * lam * _E:
                return "no"  # divergent for every alpha
        else:
            def lower_obj(a: float) -> float:
                p, _ = _series_partial_tail(a, L, lam, scale, N)
                return p / denom(a)

            res = minimize_scalar(
                lower_obj, bounds=(1e-6, alpha_hi), method="bounded",
                options={"xatol": 1e-12, "maxiter": 300},
            )
            a_star = float(res.x)
            p, tail = _series_partial_tail(a_star, L, lam, scale, N)
            d = denom(a_star)
            if (p + tail) / d <= target:
                return "yes"
            if p / d > target * (1.0 + 1e-12):
                return "no"
        if N >= n_cap:
            return "ambiguous"
        N = min(n_cap, 3 * N)


def _series_threshold(lam: float, scale: float, denom_kind: str,
                      target: float, n_cap: int = _SERIES_CAP) -> float:
    """Bisection on L down to relative width 1e-13 (at most 80 steps)."""
    lo = max(1e-9, scale * lam * _E * (1.0 + 1e-12))
    hi = (4.0 / target + 2.0 + 2.0 * lam) * max(1.0, scale) ** 2
    for _ in range(60):
        if _series_decision(hi, lam, scale, denom_kind, target, n_cap) == "yes":
            break
        hi *= 2.0
    else:
        raise NoConvergence("series threshold: no upper bracket found")
    if _series_decision(lo, lam, scale, denom_kind, target, n_cap) == "yes":
        raise NoConvergence("series threshold: lower bracket already satisfies")
    for _ in range(80):
        if hi - lo <= 1e-11 * max(1.0, hi):
            break
        mid = 0.5 * (lo + hi)
        d = _series_decision(mid, lam, scale, denom_kind, target, n_cap)
        if d == "yes":
            hi = mid
        elif d == "no":
            lo = mid
        elif hi - lo <= 1e-9 * max(1.0, hi):
            break  # undecidable only inside the agreement tolerance
        else:
            raise NoConvergence(
                f"series threshold: tail bound cannot certify at L = {mid}"
            )
    return 0.5 * (lo + hi)


def f_lambda_series(lam: float, beta: float) -> float:
    """F_lambda(beta) straight from its series definition.

    Least L such that some alpha > 0 puts
    (e^alpha - 1)^{-1} sum_{n>=2} e^{alpha n} L^{-(n-1)}
    (1+(n-1)lam)^{n-2}/(n-1)!  at or below beta.
    """
    if lam < 0.0:
        raise OutOfDomain(f"lambda must be >= 0, got {lam}")
    if beta <= 0.0:
        raise OutOfDomain(f"beta must be > 0, got {beta}")
    return _series_threshold(lam, 1.0, "expm1", beta)


# ---------------------------------------------------------------------------
# variational route

def f_lambda_variational(lam: float, beta: float) -> float:
    """F_lambda(beta) = min over 1 < y < 1+beta of beta y^lam / ((1+beta-y) log y).

    The objective blows up at both endpoints and is unimodal inside; a
    bounded golden/parabolic minimization locates the minimum to 1e-13
    in y, which pins the value to machine accuracy.
    """
    if lam < 0.0:
        raise OutOfDomain(f"lambda must be >= 0, got {lam}")
    if beta <= 0.0:
        raise OutOfDomain(f"beta must be > 0, got {beta}")

    def obj(y: float) -> float:
        return beta * y ** lam / ((1.0 + beta - y) * math.log(y))

    eps = 1e-12 * min(1.0, beta)
    res = minimize_scalar(
        obj, bounds=(1.0 + eps, 1.0 + beta - eps), method="bounded",
        options={"xatol": 1e-13, "maxiter": 500},
    )
    return float(res.fun)


def f_closed(lam: float, beta: float) -> float:
    """Lambert-form values F_0 and F_1; other lambda raise BadLambda.

    F_0(beta) = beta/(1+beta) * W((1+beta)e) / (W((1+beta)e) - 1)^2
    F_1(beta) = beta * W(e/(1+beta)) / (1 - W(e/(1+beta)))^2
    """
    if beta <= 0.0:
        raise OutOfDomain(f"beta must be > 0, got {beta}")
    if lam == 0:
        w = lambert_w((1.0 + beta) * _E)
        return beta / (1.0 + beta) * w / (w - 1.0) ** 2
    if lam == 1:
        w = lambert_w(_E / (1.0 + beta))
        return beta * w / (1.0 - w) ** 2
    raise BadLambda(f"closed form exists only at lambda 0 or 1, got {lam}")


# ---------------------------------------------------------------------------
# the named constants

def kstar_psi(psi: float, route: str = "lambert") -> float:
    """Kstar(psi), the disc constant multiplying Delta' for vertex factor psi.

    Routes: "lambert" (default) evaluates W(e/(1+psi^{-1/2})) / (1-W)^2;
    "variational" minimizes y/((1+psi^{-1/2}-y) log y); "series" solves the
    defining threshold with coefficients psi^{n/2} n^{n-1}/n!.  All agree
    to 1e-9, and Kstar(psi) <= 4 psi + 3 sqrt(psi).
    """
    if psi <= 0.0:
        raise OutOfDomain(f"psi must be > 0, got {psi}")
    b = psi ** -0.5
    if route == "lambert":
        w = lambert_w(_E / (1.0 + b))
        return w / (1.0 - w) ** 2
    if route == "variational":
        return math.sqrt(psi) * f_lambda_variational(1.0, b)
    if route == "series":
        return _series_threshold(1.0, math.sqrt(psi), "expm1", 1.0)
    raise OutOfDomain(f"unknown route {route!r}")


def kstar_lambda(lam: float) -> float:
    """Kstar_lambda = F_lambda(1), the simple-graph constant; 0 <= lambda <= 1.

    Satisfies Kstar_lambda <= 5 + 2 lambda, with Kstar_0 about 4.892888
    and Kstar_1 = Kstar(1) about 6.907652.
    """
    if not (0.0 <= lam <= 1.0):
        raise OutOfDomain(f"lambda must lie in [0, 1], got {lam}")
    return f_lambda_variational(lam, 1.0)


@lru_cache(maxsize=8)
def sokal_K(route: str = "variational") -> float:
    """The classical constant K for the regime with every |1+w_e| <= 1.

    "variational": min over a > 0 of (a + e^a) / log(1 + a e^{-a}).
    "series": least L with inf_alpha alpha^{-1} sum_{n>=2} e^{alpha n}
    L^{-(n-1)} n^{n-1}/n! <= 1.  Both give 7.963906075890... and the
    value is below the rigorous ceiling 7.963907.
    """
    if route == "variational":
        def obj(a: float) -> float:
            return (a + math.exp(a)) / math.log1p(a * math.exp(-a))

        res = minimize_scalar(
            obj, bounds=(1e-8, 10.0), method="bounded",
            options={"xatol": 1e-12, "maxiter": 500},
        )
        return float(res.fun)
    if route == "series":
        return _series_threshold(1.0, 1.0, "alpha", 1.0)
    raise OutOfDomain(f"unknown route {route!r}")


def g_ratio(lam: float) -> float:
    """g(lambda) = F_lambda(1) / (lambda F_1(lambda)), for lambda > 0.

    Compares the simple-graph disc against the general disc when the
    degree ratio equals lambda.  Tends to Kstar_0/4 as lambda -> 0+, dips
    below 1 near lambda 3.7, and returns to 1 from below as lambda grows.
    """
    if lam <= 0.0:
        raise OutOfDomain(f"g_ratio needs lambda > 0, got {lam}")
    return f_lambda_variational(lam, 1.0) / (lam * f_closed(1, lam))


# ---------------------------------------------------------------------------
# per-graph radii

@dataclass(frozen=True)
class BoundSet:
    """Zero-free disc data for one weighted graph.

    radius_general = Kstar(psi) * Delta' always holds; radius_simple =
    Kstar_lambda * sqrt(psi) * Delta~ needs a simple graph and is None
    otherwise (also when Delta~ = 0, where no nonzero roots exist).
    radius_interpolated(a) sweeps a one-parameter family between the two;
    it is None unless the graph is simple with some nonzero weight.
    """

    K: float
    kstar_psi: float
    kstar_lambda: float | None
    psi: float
    delta: float
    delta_prime: float
    delta_tilde: float
    lam: float | None
    radius_general: float
    radius_simple: float | None
    radius_interpolated: Callable[[float], float] | None
    all_subcritical: bool
    radius_subcritical: float | None

    def to_json(self) -> dict:
        interp = None
        if self.radius_interpolated is not None:
            interp = {str(a): self.radius_interpolated(a) for a in (0.0, 0.25, 0.5, 0.75, 1.0)}
        return {
            "K": self.K,
            "kstar_psi": self.kstar_psi,
            "kstar_lambda": self.kstar_lambda,
            "psi": self.psi,
            "delta": self.delta,
            "delta_prime": self.delta_prime,
            "delta_tilde": self.delta_tilde,
            "lambda": self.lam,
            "radius_general": self.radius_general,
            "radius_simple": self.radius_simple,
            "radius_interpolated": interp,
            "all_subcritical": self.all_subcritical,
            "radius_subcritical": self.radius_subcritical,
        }


def graph_bounds(g: WeightedGraph) -> BoundSet:
    """Evaluate every applicable zero-free disc radius for g."""
    deg = degree_quantities(g)
    K = sokal_K()
    kpsi = kstar_psi(deg.psi)
    r_general = kpsi * deg.delta_prime

    lam = deg._lam
    klam = None
    r_simple = None
    if g.is_simple and lam is not None:
        klam = kstar_lambda(lam)
        r_simple = klam * math.sqrt(deg.psi) * deg.delta_tilde

    interp = None
    if g.is_simple and deg.delta_prime > 0.0:
        psi = deg.psi
        dprime = deg.delta_prime

        def radius_interpolated(a: float) -> float:
            da = delta_prime_a(g, a)
            if da <= 0.0:
                return 0.0
            lam_a = dprime / da
            beta_a = psi ** (-(1.0 - a) / 2.0)
            return da * math.sqrt(psi) * f_lambda_variational(lam_a, beta_a)

        interp = radius_interpolated

    subcrit = all(abs(1 + w) <= 1.0 + 1e-12 for w in g.weights())
    r_subcritical = K * deg.delta if subcrit else None

    return BoundSet(
        K=K,
        kstar_psi=kpsi,
        kstar_lambda=klam,
        psi=deg.psi,
        delta=deg.delta,
        delta_prime=deg.delta_prime,
        delta_tilde=deg.delta_tilde,
        lam=lam,
        radius_general=r_general,
        radius_simple=r_simple,
        radius_interpolated=interp,
        all_subcritical=subcrit,
        radius_subcritical=r_subcritical,
    )


def variational_objective(lam: float, beta: float, y: float) -> float:
    """The inner objective of the variational route, for profile scans."""
    if not (1.0 < y < 1.0 + beta):
        raise OutOfDomain(f"y must lie in (1, 1+beta), got {y}")
    return beta * y ** lam / ((1.0 + beta - y) * math.log(y))


def gkfp_alpha_refine(phi_values: Callable[[float], tuple[float, float]],
                      lo: float, hi: float) -> float:
    """Root of a derivative on a bracket, for minimizers located elsewhere.

    phi_values(alpha) returns (value, derivative); only the derivative is
    used here.  Falls back to the midpoint if no sign change is present.
    """
    dlo = phi_values(lo)[1]
    dhi = phi_values(hi)[1]
    if dlo == 0.0:
        return lo
    if dhi == 0.0:
        return hi
    if dlo * dhi > 0.0:
        return 0.5 * (lo + hi)
    return float(brentq(lambda a: phi_values(a)[1], lo, hi, xtol=1e-15, rtol=8.9e-16))
