"""Self-contained property suites behind the `verify` CLI command.

Each suite sweeps a parameter grid and counts independent checks; the
first failure is recorded with the parameter point that produced it.
The suites intentionally recompute everything through both the
closed-form and the spectral route, so a corruption of either layer
(wrong log base, wrong squeezer convention, broken partial transpose)
surfaces as a counted failure rather than silent drift.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from . import contangle, four_mode, gaussian, qudit
from .config import GridConfig

# spectral-vs-closed agreement on squared log-negativities
ROUTE_TOL = 1e-7
# slack for monotonicity and sign checks on sampled grids
SLACK = 1e-12
# margin around the middle-pair threshold where verdicts are not scored
THRESHOLD_MARGIN = 1e-6
PSD_SLACK = -1e-8

QUDIT_DIMS = tuple(range(4, 44, 4))
NONGAUSSIANITY_DIMS = tuple(range(4, 100, 4))


@dataclass
class SuiteResult:
    name: str
    checks: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def check(self, condition: bool, point: str) -> None:
        self.checks += 1
        if not condition:
            self.failures.append(point)


def _params_grid(cfg: GridConfig) -> list[contangle.SqueezingParams]:
    return [
        contangle.SqueezingParams(a, s)
        for a in cfg.a_values()
        for s in cfg.s_values()
    ]


def suite_gaussian_invariants(cfg: GridConfig) -> SuiteResult:
    """Symplectic structure, purity, involution, side-swap symmetry."""
    result = SuiteResult("gaussian_invariants")
    omega = gaussian.symplectic_form(4)
    probe = gaussian.ModePartition(frozenset({0}), frozenset({1, 2, 3}))
    sample = [cfg.a_values()[k] for k in sorted({0, len(cfg.a_values()) // 2, len(cfg.a_values()) - 1})]
    for a in sample:
        for s in sample:
            params = contangle.SqueezingParams(a, s)
            state = four_mode.build_state(params)
            point = f"a={a:.6g} s={s:.6g}"
            squeezer = gaussian.two_mode_squeezer(1, 2, s, 4).data
            result.check(
                float(np.abs(squeezer @ omega @ squeezer.T - omega).max()) <= 1e-10,
                f"symplectic defect at {point}",
            )
            result.check(state.is_pure(1e-9), f"purity lost at {point}")
            double_pt = gaussian.partial_transpose(
                gaussian.partial_transpose(state, probe), probe
            )
            result.check(
                float(np.abs(double_pt.data - state.data).max()) == 0.0,
                f"partial transpose not involutive at {point}",
            )
            result.check(
                abs(
                    gaussian.log_negativity(state, probe)
                    - gaussian.log_negativity(state, probe.swapped())
                )
                <= 1e-10,
                f"side-swap asymmetry at {point}",
            )
            swap = gaussian.permute_modes(state, (3, 2, 1, 0))
            result.check(
                float(np.abs(swap.data - state.data).max()) <= 1e-9,
                f"mode-exchange symmetry broken at {point}",
            )
    return result


def suite_one_vs_rest_agreement(cfg: GridConfig) -> SuiteResult:
    """Closed-form g[m^2] vs squared spectral log-negativity, all probes."""
    result = SuiteResult("one_vs_rest_agreement")
    for params in _params_grid(cfg):
        state = four_mode.build_state(params)
        for probe in contangle.PROBES:
            rest = frozenset(m - 1 for m in contangle.PROBES if m != probe)
            spectral = gaussian.log_negativity(
                state, gaussian.ModePartition(frozenset({probe - 1}), rest)
            )
            closed = contangle.one_vs_rest_contangle(params, probe)
            result.check(
                abs(spectral * spectral - closed) <= ROUTE_TOL,
                f"probe {probe} at a={params.a:.6g} s={params.s:.6g}",
            )
    return result


def suite_interpair_agreement(cfg: GridConfig) -> SuiteResult:
    """Pair-block contangle equals 4s^2 spectrally."""
    result = SuiteResult("interpair_agreement")
    pairblock = gaussian.ModePartition(frozenset({0, 1}), frozenset({2, 3}))
    for params in _params_grid(cfg):
        spectral = gaussian.log_negativity(four_mode.build_state(params), pairblock)
        result.check(
            abs(spectral * spectral - contangle.interpair_contangle(params)) <= 1e-8,
            f"a={params.a:.6g} s={params.s:.6g}",
        )
    return result


def suite_pair_separability(cfg: GridConfig) -> SuiteResult:
    """PPT verdicts match the closed-form separability rules.

    Points within THRESHOLD_MARGIN of the middle-pair threshold are
    skipped for the verdict and instead checked for nu_min = 1.
    """
    result = SuiteResult("pair_separability")
    for params in _params_grid(cfg):
        state = four_mode.build_state(params)
        point = f"a={params.a:.6g} s={params.s:.6g}"
        threshold = contangle.separability_threshold(params.s)
        for pair in contangle.PAIRS:
            if pair == (2, 3) and abs(params.a - threshold) <= THRESHOLD_MARGIN:
                continue
            closed = contangle.pairwise_m(params, pair) == 1.0
            spectral = four_mode.pair_ppt_separable(state, *pair)
            result.check(spectral == closed, f"pair {pair} at {point}")
    for s in cfg.s_values():
        if s <= 0.0:
            continue
        at_threshold = contangle.SqueezingParams(contangle.separability_threshold(s), s)
        reduced = gaussian.reduce(four_mode.build_state(at_threshold), [1, 2])
        nu_min = float(
            gaussian.symplectic_eigenvalues(
                gaussian.partial_transpose(
                    reduced, gaussian.ModePartition(frozenset({0}), frozenset({1}))
                )
            ).min()
        )
        result.check(abs(nu_min - 1.0) <= 1e-7, f"threshold nu_min at s={s:.6g}")
    return result


def suite_monogamy(cfg: GridConfig) -> SuiteResult:
    """Sharing inequality holds and the probe-1 branch attains the minimum."""
    result = SuiteResult("monogamy")
    for params in _params_grid(cfg):
        point = f"a={params.a:.6g} s={params.s:.6g}"
        slack = contangle.monogamy_residual(params)
        result.check(slack >= -contangle.MONOGAMY_TOL, f"negative slack at {point}")
        probe1 = contangle.one_vs_rest_contangle(params, 1) - contangle.pairwise_contangle(
            params, (1, 2)
        )
        result.check(probe1 <= slack + SLACK, f"probe-1 branch not minimal at {point}")
    return result


def suite_strong_monogamy(cfg: GridConfig) -> SuiteResult:
    """residual >= tripartite bound >= 0 everywhere on the grid."""
    result = SuiteResult("strong_monogamy")
    for params in _params_grid(cfg):
        outcome = contangle.strong_monogamy_check(params)
        point = f"a={params.a:.6g} s={params.s:.6g}"
        result.check(outcome.ok, f"chain fails at {point}")
        result.check(
            outcome.residual >= outcome.tripartite_bound - contangle.MONOGAMY_TOL,
            f"residual below bound at {point}",
        )
        result.check(outcome.tripartite_bound >= 0.0, f"negative bound at {point}")
    big = contangle.tripartite_bound(contangle.SqueezingParams(5.0, 1.0))
    result.check(big < 0.01, f"bound at a=5 s=1 not vanishing: {big:.6g}")
    return result


def suite_bounding_state(cfg: GridConfig) -> SuiteResult:
    """reduce(gamma, {1,2,3}) majorizes the bounding three-mode state."""
    result = SuiteResult("bounding_state")
    for params in _params_grid(cfg):
        if params.a <= 0.0 or params.s <= 0.0:
            continue
        reduced = gaussian.reduce(four_mode.build_state(params), [0, 1, 2])
        bound_state = contangle.bounding_tripartite_state(params)
        min_eig = float(np.linalg.eigvalsh(reduced.data - bound_state.data).min())
        result.check(
            min_eig >= PSD_SLACK,
            f"min eig {min_eig:.3e} at a={params.a:.6g} s={params.s:.6g}",
        )
    return result


def suite_shape(cfg: GridConfig) -> SuiteResult:
    """Trend checks along fixed-s rays of the (a, s) grid.

    The residual grows strictly with a whenever s > 0 and stays flat at
    zero for s = 0.  The tripartite bound is NOT globally monotone in a:
    it vanishes identically at a = 0 (the probe mode decouples there, so
    the genuine tripartite entanglement it caps is zero), climbs to a
    single interior peak as the middle pair approaches disentanglement,
    and decays toward zero beyond it.  Each row is therefore checked for
    exact zero at a = 0, unimodality (non-decreasing up to the row peak,
    non-increasing after), and a decaying far tail.
    """
    result = SuiteResult("shape")
    a_values = cfg.a_values()
    for s in cfg.s_values():
        residuals = [
            contangle.residual_contangle(contangle.SqueezingParams(a, s)) for a in a_values
        ]
        bounds = [
            contangle.tripartite_bound(contangle.SqueezingParams(a, s)) for a in a_values
        ]
        if a_values[0] == 0.0:
            result.check(bounds[0] == 0.0, f"bound not exactly zero at a=0 s={s:.6g}")
        peak = max(range(len(bounds)), key=bounds.__getitem__)
        for k in range(len(a_values) - 1):
            point = f"s={s:.6g} a={a_values[k]:.6g}->{a_values[k + 1]:.6g}"
            if s > 0.0:
                result.check(residuals[k + 1] > residuals[k] + SLACK, f"residual not increasing at {point}")
            else:
                result.check(abs(residuals[k + 1] - residuals[k]) <= SLACK, f"residual not flat at {point}")
            if k < peak:
                result.check(bounds[k + 1] >= bounds[k] - SLACK, f"bound dips before its peak at {point}")
            else:
                result.check(bounds[k + 1] <= bounds[k] + SLACK, f"bound rises after its peak at {point}")
    growth = contangle.residual_contangle(
        contangle.SqueezingParams(6.0, 1.0)
    ) - contangle.residual_contangle(contangle.SqueezingParams(3.0, 1.0))
    result.check(growth > 10.0, f"residual growth 3->6 too small: {growth:.6g}")
    return result


def suite_inseparability(cfg: GridConfig) -> SuiteResult:
    """Full inseparability iff both squeezing degrees are positive."""
    result = SuiteResult("inseparability")
    values = sorted({cfg.a_values()[0], cfg.a_values()[-1], cfg.a_values()[len(cfg.a_values()) // 2]})
    for a in values:
        for s in values:
            params = contangle.SqueezingParams(a, s)
            expected = a > 0.0 and s > 0.0
            result.check(
                four_mode.full_inseparability_check(params) == expected,
                f"a={a:.6g} s={s:.6g}",
            )
    return result


def suite_report_consistency(cfg: GridConfig) -> SuiteResult:
    """full_report flags every sampled point consistent."""
    result = SuiteResult("report_consistency")
    values = sorted({cfg.a_values()[0], cfg.a_values()[-1], cfg.a_values()[len(cfg.a_values()) // 2]})
    for a in values:
        for s in values:
            report = four_mode.full_report(contangle.SqueezingParams(a, s))
            result.check(report.consistent, f"a={a:.6g} s={s:.6g}")
            result.check(report.monogamy_ok, f"monogamy flag at a={a:.6g} s={s:.6g}")
    return result


def suite_qudit_tangles(_: GridConfig) -> SuiteResult:
    """Exact tangle identities for d in QUDIT_DIMS."""
    result = SuiteResult("qudit_tangles")
    for d in QUDIT_DIMS:
        report = qudit.tangle_report(d)
        point = f"d={d}"
        result.check(report.three_tangle == Fraction(d, 4), f"three-tangle at {point}")
        result.check(report.pairwise_tangle == Fraction(d, 9), f"pairwise tangle at {point}")
        result.check(
            report.one_vs_rest_tangle == Fraction(17 * d, 36), f"one-vs-rest at {point}"
        )
        result.check(report.monogamy_gap == 0, f"monogamy gap at {point}")
    ghz_rest = qudit.one_vs_rest_tangle_qubit(qudit.ghz3(), 0)
    w_rest = qudit.one_vs_rest_tangle_qubit(qudit.w3(), 0)
    w_pair = qudit.concurrence(qudit.reduced_density(qudit.w3(), [0, 1])) ** 2
    result.check(abs(ghz_rest - 1.0) <= 1e-10, "GHZ per-copy one-vs-rest")
    result.check(abs(w_rest - 8.0 / 9.0) <= 1e-10, "W per-copy one-vs-rest")
    result.check(abs(w_pair - 4.0 / 9.0) <= 1e-10, "W per-copy pair tangle")
    return result


def suite_nongaussianity(_: GridConfig) -> SuiteResult:
    """Value, bounds and limit of the non-Gaussianity gap."""
    result = SuiteResult("nongaussianity")
    result.check(abs(qudit.nongaussianity(4) - 0.48242) <= 1e-5, "value at d=4")
    values = [qudit.nongaussianity(d) for d in NONGAUSSIANITY_DIMS]
    for d, value in zip(NONGAUSSIANITY_DIMS, values):
        result.check(value >= 0.48, f"below 0.48 at d={d}")
        result.check(value <= 0.5 + SLACK, f"above 1/2 at d={d}")
    for k in range(len(values) - 1):
        result.check(
            values[k + 1] > values[k] - SLACK,
            f"not increasing at d={NONGAUSSIANITY_DIMS[k]}",
        )
    result.check(abs(qudit.nongaussianity(200) - 0.5) < 1e-10, "limit at d=200")
    return result


def suite_squashed(_: GridConfig) -> SuiteResult:
    """Squashed-entanglement bounds and the positivity witness."""
    result = SuiteResult("squashed")
    for d in QUDIT_DIMS:
        bounds = qudit.squashed_bounds(d)
        point = f"d={d}"
        result.check(
            abs(bounds.one_vs_rest - 0.47956 * d) <= 1e-4 * d, f"one-vs-rest at {point}"
        )
        result.check(bounds.tripartite_lower == Fraction(d, 4), f"tripartite at {point}")
        result.check(bounds.pairwise_witness > 0.29, f"witness at {point}")
    return result


SUITES = (
    suite_gaussian_invariants,
    suite_one_vs_rest_agreement,
    suite_interpair_agreement,
    suite_pair_separability,
    suite_monogamy,
    suite_strong_monogamy,
    suite_bounding_state,
    suite_shape,
    suite_inseparability,
    suite_report_consistency,
    suite_qudit_tangles,
    suite_nongaussianity,
    suite_squashed,
)


def run_all(cfg: GridConfig) -> list[SuiteResult]:
    """Run every suite; a suite that raises is reported as a failed check.

    Corruption severe enough to crash a suite (e.g. a hard monogamy
    violation) must still surface as a countable failure, not as a
    traceback that aborts the whole battery.
    """
    results = []
    for suite in SUITES:
        try:
            results.append(suite(cfg))
        except Exception as exc:
            crashed = SuiteResult(suite.__name__.removeprefix("suite_"))
            crashed.check(False, f"suite raised {exc!r}")
            results.append(crashed)
    return results
