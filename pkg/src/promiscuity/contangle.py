"""Contangle (squared log-negativity) closed forms for the four-mode family.

The four-mode states treated here are built from two squeezing degrees
(a, s); see four_mode.build_state for the construction.  For every
bipartition of interest the contangle reduces to g[m^2] where

    g[x] = arcsinh^2(sqrt(x - 1)),   x >= 1,

and m is the square root of the determinant of the reduced one-mode
covariance matrix of the relevant pure-state decomposition.  Mode labels
in this module are the 1-based labels 1..4 of the family definition:
modes 1, 2 form the first squeezed pair, modes 3, 4 the second, and the
middle pair 2, 3 carries the interpair squeezing.

Natural logarithms throughout, so the pair contangles come out as
4a^2 and the pair-block contangle as 4s^2 in squared-nat units.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from . import gaussian

M_CLAMP_TOL = 1e-9
MONOGAMY_TOL = 1e-9

PAIRS = ((1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4))
PROBES = (1, 2, 3, 4)
_SQUEEZED_PAIRS = {(1, 2), (3, 4)}
_SEPARABLE_PAIRS = {(1, 3), (1, 4), (2, 4)}


@dataclass(frozen=True)
class SqueezingParams:
    """Squeezing degrees of the four-mode family: pair strength a, interpair s."""

    a: float
    s: float

    def __post_init__(self) -> None:
        for name, value in (("a", self.a), ("s", self.s)):
            if not (isinstance(value, (int, float)) and math.isfinite(value)):
                raise ValueError(f"squeezing degree {name} must be a finite number")
            if value < 0:
                raise ValueError(f"squeezing degree {name} must be non-negative, got {value}")


@dataclass(frozen=True)
class StrongMonogamyResult:
    residual: float
    tripartite_bound: float
    ok: bool


@dataclass(frozen=True)
class EntanglementReport:
    """Bundle of every contangle statistic of one four-mode state.

    Closed-form values, with the spectral cross-checks folded into
    `consistent` / `max_route_deviation` by four_mode.full_report.
    Pair keys are sorted 1-based tuples; probe keys are 1-based labels.
    """

    params: SqueezingParams
    pairwise_contangle: dict[tuple[int, int], float]
    one_vs_rest_contangle: dict[int, float]
    interpair_contangle: float
    residual: float
    tripartite_bound: float
    monogamy_ok: bool
    strong_monogamy_ok: bool
    near_threshold: bool
    consistent: bool
    max_route_deviation: float


def g_function(x: float) -> float:
    """g[x] = arcsinh^2(sqrt(x - 1)); monotone, g[1] = 0.

    Inputs in [1 - 1e-9, 1) are clamped to 1 (determinants of reduced
    one-mode blocks dip below 1 only by float noise); anything lower is
    rejected as unphysical.
    """
    if not math.isfinite(x):
        raise ValueError("g_function argument must be finite")
    if x < 1.0 - M_CLAMP_TOL:
        raise ValueError(f"g_function argument must be >= 1, got {x}")
    return math.asinh(math.sqrt(max(x, 1.0) - 1.0)) ** 2


def separability_threshold(s: float) -> float:
    """Pair-strength a above which the middle pair 2, 3 turns separable."""
    return math.asinh(math.sqrt(math.tanh(s)))


def _normalize_pair(pair) -> tuple[int, int]:
    try:
        i, j = sorted(pair)
    except (TypeError, ValueError):
        raise ValueError(f"pair must hold exactly two mode labels, got {pair!r}")
    if i == j or not {i, j} <= {1, 2, 3, 4}:
        raise ValueError(f"pair must be two distinct labels from 1..4, got {pair!r}")
    return (i, j)


def _clamp_m(m: float) -> float:
    # determinant square roots in [1 - tol, 1) count as exactly 1
    return 1.0 if 1.0 - M_CLAMP_TOL <= m < 1.0 else m


def pairwise_m(params: SqueezingParams, pair) -> float:
    """sqrt-det parameter m_{i|j} of a two-mode reduction, >= 1.

    The squeezed pairs {1,2} and {3,4} give cosh(2a) independently of s.
    The cross pairs {1,3}, {2,4}, {1,4} are separable for every (a, s),
    so m = 1.  The middle pair {2,3} is entangled only below the
    threshold a < arcsinh(sqrt(tanh s)), where it takes a quotient form
    that joins the separable branch continuously at the threshold.
    """
    i, j = _normalize_pair(pair)
    a, s = params.a, params.s
    if (i, j) in _SQUEEZED_PAIRS:
        return math.cosh(2 * a)
    if (i, j) in _SEPARABLE_PAIRS:
        return 1.0
    if a >= separability_threshold(s):
        return 1.0
    num = (
        -1.0
        + 2.0 * math.cosh(2 * a) ** 2 * math.cosh(s) ** 2
        + 3.0 * math.cosh(2 * s)
        - 4.0 * math.sinh(a) ** 2 * math.sinh(2 * s)
    )
    den = 4.0 * (math.cosh(a) ** 2 + math.exp(2 * s) * math.sinh(a) ** 2)
    return _clamp_m(num / den)


def pairwise_contangle(params: SqueezingParams, pair) -> float:
    """Contangle of a two-mode reduction; {1,2} and {3,4} give exactly 4a^2."""
    i, j = _normalize_pair(pair)
    if (i, j) in _SQUEEZED_PAIRS:
        return 4.0 * params.a * params.a
    if (i, j) in _SEPARABLE_PAIRS:
        return 0.0
    m = pairwise_m(params, (i, j))
    return g_function(m * m)


def one_vs_rest_m(params: SqueezingParams, probe: int) -> float:
    """sqrt-det of the one-mode reduction of the probe mode.

    Probes 1 and 4 (outer modes) give cosh^2 a + cosh(2s) sinh^2 a;
    probes 2 and 3 (middle modes) give sinh^2 a + cosh(2s) cosh^2 a.
    """
    if probe not in PROBES:
        raise ValueError(f"probe must be a mode label in 1..4, got {probe!r}")
    a, s = params.a, params.s
    if probe in (1, 4):
        return math.cosh(a) ** 2 + math.cosh(2 * s) * math.sinh(a) ** 2
    return math.sinh(a) ** 2 + math.cosh(2 * s) * math.cosh(a) ** 2


def one_vs_rest_contangle(params: SqueezingParams, probe: int) -> float:
    """Contangle across the probe-vs-rest bipartition of the pure state."""
    m = one_vs_rest_m(params, probe)
    return g_function(m * m)


def interpair_contangle(params: SqueezingParams) -> float:
    """Contangle across the (12)|(34) pair-block cut: exactly 4s^2."""
    return 4.0 * params.s * params.s


def residual_contangle(params: SqueezingParams) -> float:
    """Residual contangle of probe 1: g[m_{1|rest}^2] - 4a^2.

    Everything not accounted for by the pairwise term; zero on both axes
    (a = 0 or s = 0) and strictly positive inside the quadrant.  Float
    cancellation can land within -1e-9 of zero, which is clamped to 0.
    """
    value = one_vs_rest_contangle(params, 1) - pairwise_contangle(params, (1, 2))
    if value < -MONOGAMY_TOL:
        raise ArithmeticError(
            f"residual contangle {value} below tolerance at a={params.a}, s={params.s}"
        )
    return max(0.0, value)


def monogamy_residual(params: SqueezingParams) -> float:
    """Minimum slack of the sharing inequality over the inequivalent probes.

    Probe 1 keeps g[m_{1|rest}^2] - tau_{1|2}; probe 2 keeps
    g[m_{2|rest}^2] - tau_{1|2} - tau_{2|3}.  Probes 4 and 3 duplicate
    them by the mode-exchange symmetry.  Both quantities must stay above
    -MONOGAMY_TOL; the probe-1 branch attains the minimum throughout the
    sampled parameter range.
    """
    tau_pair = pairwise_contangle(params, (1, 2))
    probe1 = one_vs_rest_contangle(params, 1) - tau_pair
    probe2 = (
        one_vs_rest_contangle(params, 2)
        - tau_pair
        - pairwise_contangle(params, (2, 3))
    )
    smallest = min(probe1, probe2)
    if smallest < -MONOGAMY_TOL:
        raise ArithmeticError(
            f"monogamy violated ({smallest}) at a={params.a}, s={params.s}"
        )
    return smallest


def _bound_m_3_vs_12(params: SqueezingParams) -> float:
    ratio = (math.tanh(params.s) / math.cosh(params.a)) ** 2
    return (1.0 + ratio) / (1.0 - ratio)


def _bound_m_1_vs_23(params: SqueezingParams) -> float:
    return math.cosh(params.a) ** 2 + _bound_m_3_vs_12(params) * math.sinh(params.a) ** 2


def tripartite_bound(params: SqueezingParams) -> float:
    """Upper bound on the genuine tripartite contangle of modes 1, 2, 3.

    min of g[m_bound_{1|(23)}^2] - tau_{1|2} and g[m_bound_{3|(12)}^2]
    - tau_{2|3}, where the bound-m values are sqrt-dets of the pure
    three-mode state returned by bounding_tripartite_state.  Non-negative,
    zero at s = 0, and decreasing in a at fixed s > 0.
    """
    term1 = g_function(_bound_m_1_vs_23(params) ** 2) - pairwise_contangle(params, (1, 2))
    term2 = g_function(_bound_m_3_vs_12(params) ** 2) - pairwise_contangle(params, (2, 3))
    return max(0.0, min(term1, term2))


def bounding_tripartite_state(params: SqueezingParams) -> gaussian.CovarianceMatrix:
    """Pure three-mode state that majorizes the 1, 2, 3 reduction.

    Built from a pair squeezer of degree a on modes 1, 2 followed by an
    interpair squeezer of degree t = arccosh(m_bound_{3|(12)}) / 2 on
    modes 2, 3, acting on vacuum.  The defining property, checked in the
    test suite, is that reduce(state, {1,2,3}) - sigma_p is positive
    semidefinite for the matching four-mode state.
    """
    t = 0.5 * math.acosh(max(1.0, _bound_m_3_vs_12(params)))
    transform = gaussian.compose(
        gaussian.two_mode_squeezer(0, 1, params.a, 3),
        gaussian.two_mode_squeezer(1, 2, t, 3),
    )
    return gaussian.apply(transform, gaussian.vacuum_cm(3))


def strong_monogamy_check(params: SqueezingParams) -> StrongMonogamyResult:
    """Residual vs tripartite bound: ok iff residual >= bound >= 0.

    Comparisons carry a MONOGAMY_TOL slack.  A true result certifies that
    the residual entanglement not stored in pairs exceeds everything the
    three-mode reductions could account for, i.e. genuine four-partite
    entanglement bracketed from below.
    """
    residual = residual_contangle(params)
    bound = tripartite_bound(params)
    ok = residual >= bound - MONOGAMY_TOL and bound >= -MONOGAMY_TOL
    return StrongMonogamyResult(residual=residual, tripartite_bound=bound, ok=ok)
