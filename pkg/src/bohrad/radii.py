"""Radius solvers, the closed-form catalog, and sharpness machinery.

Every radius here is the smallest positive root of a weight-series equation
on (0, 1):

    analytic        (2/p)      * Phi_1(r) = (1+gamma) * phi_0(r)
    harmonic        2 (1+k)    * Phi_1(r) = p (1+gamma) * phi_0(r)
    subordination   2 (1+k)    * Phi_1(r) = phi_0(r)

For power weights these have elementary roots; the catalog stores every such
closed form, and solve_radius provides the matching bracketed bisection so
the two routes can always be compared.  Sharpness is checked operationally:
just beyond a radius, some member of the extremal family must push its
functional past the threshold phi_0(r) (times the distance d for the
subordination case).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Sequence

from .errors import HypothesisError, NoRootError, ParameterError
from .extremal import ExtremalParams, harmonic_extremal, mobius_extremal, subordination_extremal
from .functionals import (
    LambdaWeight,
    harmonic_functional,
    lambda_zero,
    q_functional,
    refined_functional,
)
from .weights import WeightFamily, tail_value, weight_at

SCAN_STEP = 1e-3
_R_LOW = 1e-9
_R_HIGH = 1.0 - 1e-9
_MAX_BISECT = 200
_GAP_TOL = 1e-14

DEFAULT_A_GRID = (0.9, 0.99, 0.999, 0.9999)


@dataclass(frozen=True)
class RadiusResult:
    """A solved radius: value, how it was found, and the bisection evidence."""

    value: float
    method: str
    residual: float
    bracket: tuple[float, float]
    iterations: int


@dataclass(frozen=True)
class SharpnessWitness:
    """Extremal parameter and point where a functional exceeds its threshold."""

    a: float
    r: float
    functional_value: float
    threshold: float


@dataclass(frozen=True)
class BohrProblem:
    """A Bohr-type inequality packaged for probing.

    evaluate(a, r) runs the functional on the extremal member with parameter
    a; threshold(r) is the bound the inequality asserts.  Problems whose
    extremal family has no free parameter ignore a.
    """

    evaluate: Callable[[float, float], float]
    threshold: Callable[[float], float]
    name: str = "bohr-problem"


def _check_gamma(gamma: float) -> None:
    if not 0.0 <= gamma < 1.0:
        raise ParameterError(f"gamma must lie in [0, 1), got {gamma}")


def _check_p(p: float) -> None:
    if not 0.0 < p <= 2.0:
        raise ParameterError(f"exponent p must lie in (0, 2], got {p}")


def _check_k(k: float) -> None:
    if not 0.0 <= k <= 1.0:
        raise ParameterError(f"dilatation bound k must lie in [0, 1], got {k}")


def solve_radius(
    family: WeightFamily,
    lhs_scale: float,
    rhs_scale: float,
    tol: float = 1e-12,
) -> RadiusResult:
    """Smallest r in (0, 1) with lhs_scale * Phi_1(r) = rhs_scale * phi_0(r).

    Scans outward in steps of 1e-3 for the first sign change of the gap
    lhs_scale * Phi_1 - rhs_scale * phi_0 (negative below the radius), then
    bisects the bracket down to tol.
    """
    if lhs_scale <= 0.0 or rhs_scale <= 0.0:
        raise ParameterError("both equation scales must be positive")
    if tol <= 0.0:
        raise ParameterError(f"tol must be positive, got {tol}")

    tail = family._tail
    rule = family._rule

    def gap(r: float) -> float:
        phi1 = tail(1, r) if tail is not None else tail_value(family, 1, r, _GAP_TOL)
        return lhs_scale * phi1 - rhs_scale * rule(0, r)

    lo = _R_LOW
    glo = gap(lo)
    if glo > 0.0:
        raise HypothesisError(
            "weight-series condition already fails as r -> 0+; no positive radius exists"
        )
    hi = None
    steps = int(1.0 / SCAN_STEP)
    for i in range(1, steps + 1):
        r = min(i * SCAN_STEP, _R_HIGH)
        g = gap(r)
        if g >= 0.0:
            hi, ghi = r, g
            break
        lo, glo = r, g
        if r >= _R_HIGH:
            break
    if hi is None:
        if gap(_R_HIGH) >= 0.0:
            hi = _R_HIGH
        else:
            raise NoRootError("gap never changes sign on (0, 1); the series stays subcritical")

    iterations = 0
    while hi - lo > 2.0 * tol and iterations < _MAX_BISECT:
        mid = 0.5 * (lo + hi)
        if gap(mid) < 0.0:
            lo = mid
        else:
            hi = mid
        iterations += 1
    value = 0.5 * (lo + hi)
    return RadiusResult(
        value=value,
        method="bisection",
        residual=gap(value),
        bracket=(lo, hi),
        iterations=iterations,
    )


def analytic_radius(family: WeightFamily, p: float, gamma: float, tol: float = 1e-12) -> RadiusResult:
    """Radius of the refined analytic inequality: root of (2/p) Phi_1 = (1+gamma) phi_0.

    The root does not involve Lambda: the refinement term only tightens the
    inequality below the radius and vanishes along the extremal family limit.
    """
    _check_p(p)
    _check_gamma(gamma)
    return solve_radius(family, 2.0 / p, 1.0 + gamma, tol)


def harmonic_radius(
    family: WeightFamily, p: float, gamma: float, k: float, tol: float = 1e-12
) -> RadiusResult:
    """Root of 2 (1+k) Phi_1(r) = p (1+gamma) phi_0(r)."""
    _check_p(p)
    _check_gamma(gamma)
    _check_k(k)
    return solve_radius(family, 2.0 * (1.0 + k), p * (1.0 + gamma), tol)


def subordination_radius(family: WeightFamily, k: float, tol: float = 1e-12) -> RadiusResult:
    """Root of 2 (1+k) Phi_1(r) = phi_0(r)."""
    _check_k(k)
    return solve_radius(family, 2.0 * (1.0 + k), 1.0, tol)


def hypergeom_radius(
    a: float, b: float, c: float, p: float, gamma: float, tol: float = 1e-12
) -> RadiusResult:
    """Root of |2F1(a,b;c;x) - 1| = (1+gamma) p / 2 on (0, 1).

    Same-signed series coefficients (validated by the weight family) make
    |F - 1| equal the tail sum of the hypergeometric weights, so this reduces
    to an analytic radius for that family.
    """
    family = WeightFamily.hypergeometric(a, b, c)
    return analytic_radius(family, p, gamma, tol)


# --- closed-form catalog ----------------------------------------------


def _cf_classical(gamma: float) -> float:
    _check_gamma(gamma)
    return (1.0 + gamma) / (3.0 + gamma)


def _cf_power(p: float, gamma: float) -> float:
    _check_p(p)
    _check_gamma(gamma)
    P = p * (1.0 + gamma)
    return P / (2.0 + P)


def _cf_even(p: float, gamma: float) -> float:
    _check_p(p)
    _check_gamma(gamma)
    P = p * (1.0 + gamma)
    return math.sqrt(P / (2.0 + P))


def _cf_odd(p: float, gamma: float) -> float:
    _check_p(p)
    _check_gamma(gamma)
    P = p * (1.0 + gamma)
    return (math.sqrt(1.0 + P * P) - 1.0) / P


def _cf_linear_shift(p: float, gamma: float) -> float:
    _check_p(p)
    _check_gamma(gamma)
    P = p * (1.0 + gamma)
    return 1.0 - math.sqrt(2.0 / (P + 2.0))


def _cf_weighted_n(p: float, gamma: float) -> float:
    _check_p(p)
    _check_gamma(gamma)
    P = p * (1.0 + gamma)
    return (P + 1.0 - math.sqrt(2.0 * P + 1.0)) / P


def _cf_harmonic_p1(gamma: float, k: float) -> float:
    _check_gamma(gamma)
    _check_k(k)
    return (1.0 + gamma) / (3.0 + 2.0 * k + gamma)


def _cf_harmonic_p2(gamma: float, k: float) -> float:
    _check_gamma(gamma)
    _check_k(k)
    return (1.0 + gamma) / (2.0 + k + gamma)


def _cf_binomial(p: float, gamma: float, y: float) -> float:
    _check_p(p)
    _check_gamma(gamma)
    if y <= 0.0:
        raise ParameterError(f"binomial exponent y must be positive, got {y}")
    P = p * (1.0 + gamma)
    return 1.0 - (2.0 / (2.0 + P)) ** (1.0 / y)


def _cf_subordination(K: float) -> float:
    if K < 1.0:
        raise ParameterError(f"quasiconformality constant K must be >= 1, got {K}")
    return (K + 1.0) / (5.0 * K + 1.0)


_CATALOG: dict[str, Callable[..., float]] = {
    "classical": _cf_classical,
    "power": _cf_power,
    "even": _cf_even,
    "odd": _cf_odd,
    "linear_shift": _cf_linear_shift,
    "weighted_n": _cf_weighted_n,
    "harmonic_p1": _cf_harmonic_p1,
    "harmonic_p2": _cf_harmonic_p2,
    "binomial": _cf_binomial,
    "subordination": _cf_subordination,
}


def closed_form_radius(case: str, **params: float) -> float:
    """Catalog of elementary radius formulas, named by the setting they solve.

    classical     power weights, p = 1:           (1+g)/(3+g)
    power         power weights:                  P/(2+P), P = p (1+g)
    even          even powers:                    sqrt(P/(2+P))
    odd           odd powers, unit head:          (sqrt(1+P^2)-1)/P
    linear_shift  (n+1) r^n from n >= 1:          1 - sqrt(2/(P+2))
    weighted_n    n r^n from n >= 1:              (P+1-sqrt(2P+1))/P
    harmonic_p1   power weights, harmonic, p = 1: (1+g)/(3+2k+g)
    harmonic_p2   power weights, harmonic, p = 2: (1+g)/(2+k+g)
    binomial      weights of (1-x)^{-y}:          1 - (2/(2+P))^{1/y}
    subordination power weights, K-q.c.:          (K+1)/(5K+1)
    """
    try:
        formula = _CATALOG[case]
    except KeyError:
        raise ParameterError(
            f"unknown catalog case {case!r}; choose from {sorted(_CATALOG)}"
        ) from None
    try:
        return formula(**params)
    except TypeError as exc:
        raise ParameterError(f"bad parameters for catalog case {case!r}: {exc}") from None


def catalog_solver(case: str, tol: float = 1e-12, **params: float) -> RadiusResult:
    """Bisection counterpart of each catalog entry (same equation, no formula)."""
    if case == "classical":
        return analytic_radius(WeightFamily.power(), 1.0, params["gamma"], tol)
    if case == "power":
        return analytic_radius(WeightFamily.power(), params["p"], params["gamma"], tol)
    if case == "even":
        return analytic_radius(WeightFamily.even(), params["p"], params["gamma"], tol)
    if case == "odd":
        return analytic_radius(WeightFamily.odd_with_unit_head(), params["p"], params["gamma"], tol)
    if case == "linear_shift":
        return analytic_radius(WeightFamily.shifted_linear(1), params["p"], params["gamma"], tol)
    if case == "weighted_n":
        return analytic_radius(WeightFamily.power_alpha(1.0, 1), params["p"], params["gamma"], tol)
    if case == "harmonic_p1":
        return harmonic_radius(WeightFamily.power(), 1.0, params["gamma"], params["k"], tol)
    if case == "harmonic_p2":
        return harmonic_radius(WeightFamily.power(), 2.0, params["gamma"], params["k"], tol)
    if case == "binomial":
        return hypergeom_radius(params["y"], 1.0, 1.0, params["p"], params["gamma"], tol)
    if case == "subordination":
        K = params["K"]
        if K < 1.0:
            raise ParameterError(f"quasiconformality constant K must be >= 1, got {K}")
        k = (K - 1.0) / (K + 1.0)
        return subordination_radius(WeightFamily.power(), k, tol)
    raise ParameterError(f"unknown catalog case {case!r}; choose from {sorted(_CATALOG)}")


# --- problems, sharpness, empirical radius ----------------------------


def analytic_problem(
    family: WeightFamily,
    p: float,
    gamma: float,
    lam: LambdaWeight = lambda_zero,
) -> BohrProblem:
    """Refined functional on the Moebius extremal family vs phi_0(r)."""
    _check_p(p)
    _check_gamma(gamma)

    def evaluate(a: float, r: float) -> float:
        stream = mobius_extremal(ExtremalParams(a=a, gamma=gamma))
        return refined_functional(stream, family, p, gamma, lam, r)

    return BohrProblem(
        evaluate=evaluate,
        threshold=lambda r: weight_at(family, 0, r),
        name=f"analytic(p={p}, gamma={gamma})",
    )


def harmonic_problem(family: WeightFamily, p: float, gamma: float, k: float) -> BohrProblem:
    """Harmonic functional on the k-dilated extremal family vs phi_0(r)."""
    _check_p(p)
    _check_gamma(gamma)
    _check_k(k)

    def evaluate(a: float, r: float) -> float:
        fmap = harmonic_extremal(ExtremalParams(a=a, gamma=gamma, k=k))
        return harmonic_functional(fmap, family, p, r)

    return BohrProblem(
        evaluate=evaluate,
        threshold=lambda r: weight_at(family, 0, r),
        name=f"harmonic(p={p}, gamma={gamma}, k={k})",
    )


def subordination_problem(family: WeightFamily, k: float) -> BohrProblem:
    """Tail functional on the fixed subordination extremal vs d * phi_0(r)."""
    _check_k(k)
    witness = subordination_extremal(k)

    def evaluate(a: float, r: float) -> float:
        return q_functional(witness.fmap, family, r)

    return BohrProblem(
        evaluate=evaluate,
        threshold=lambda r: witness.distance * weight_at(family, 0, r),
        name=f"subordination(k={k})",
    )


def sharpness_probe(
    radius: float,
    problem: BohrProblem,
    eps: float = 0.01,
    a_grid: Sequence[float] = DEFAULT_A_GRID,
) -> SharpnessWitness | None:
    """Hunt for a violation at r = radius + eps.

    Returns the first extremal parameter in a_grid whose functional exceeds
    the threshold there, or None when the whole grid stays below it (which is
    what must happen whenever radius + eps is still at most the true radius).
    """
    if eps <= 0.0:
        raise ParameterError(f"eps must be positive, got {eps}")
    r = radius + eps
    if not 0.0 < r < 1.0:
        raise ParameterError(f"probe point radius+eps={r} must lie in (0, 1)")
    threshold = problem.threshold(r)
    for a in a_grid:
        value = problem.evaluate(a, r)
        if value > threshold:
            return SharpnessWitness(a=a, r=r, functional_value=value, threshold=threshold)
    return None


def empirical_bohr_radius(
    problem: BohrProblem,
    a_grid: Sequence[float] = DEFAULT_A_GRID,
    r_tol: float = 1e-9,
) -> float:
    """Largest r at which every grid member still satisfies the inequality.

    Bisects the first sign change of max_a(functional - threshold) over r.
    The result upper-bounds the true radius and converges to it as the grid
    refines toward a -> 1-.
    """
    if r_tol <= 0.0:
        raise ParameterError(f"r_tol must be positive, got {r_tol}")
    if not a_grid:
        raise ParameterError("a_grid must be nonempty")

    def excess(r: float) -> float:
        return max(problem.evaluate(a, r) - problem.threshold(r) for a in a_grid)

    lo = _R_LOW
    if excess(lo) > 0.0:
        raise NoRootError("inequality already fails as r -> 0+")
    hi = None
    steps = int(1.0 / SCAN_STEP)
    for i in range(1, steps + 1):
        r = min(i * SCAN_STEP, _R_HIGH)
        if excess(r) > 0.0:
            hi = r
            break
        lo = r
        if r >= _R_HIGH:
            break
    if hi is None:
        return _R_HIGH
    while hi - lo > r_tol:
        mid = 0.5 * (lo + hi)
        if excess(mid) > 0.0:
            hi = mid
        else:
            lo = mid
    return 0.5 * (lo + hi)
