"""Builder and entanglement reports for the four-mode squeezed family.

A family member gamma(a, s) is prepared from vacuum by squeezing the
outer pairs and then the middle pair:

    gamma = S_34(a) S_12(a) S_23(s) S_23(s)^T S_12(a)^T S_34(a)^T

with 1-based mode labels as in the contangle module.  Every state is
pure and invariant under the simultaneous exchange 1<->4, 2<->3.

User-facing mode labels are 1-based; the gaussian layer underneath is
0-based.
"""
from __future__ import annotations

from . import contangle, gaussian
from .contangle import EntanglementReport, SqueezingParams

ROUTE_TOL = 1e-6
THRESHOLD_FLAG_TOL = 1e-6
WITNESS_TOL = 1e-9
# verdict comparisons are skipped when either route sits within its own
# margin of the separability boundary: closed contangle below FAINT_TAU,
# or PT eigenvalue gap 1 - nu_min below PPT_MARGIN.  The two bands are
# not linearly related (tau ~ gap^2 on pure reductions, tau ~ gap on
# mixed ones), so both must be checked.
FAINT_TAU = 1e-6
PPT_MARGIN = 1e-6

# 1-based label pairs of the three squeezers, in application order
_SQUEEZER_LABELS = ((3, 4), (1, 2), (2, 3))


def build_state(params: SqueezingParams) -> gaussian.CovarianceMatrix:
    """Covariance matrix of gamma(a, s); rejects negative squeezing degrees."""
    degrees = {(3, 4): params.a, (1, 2): params.a, (2, 3): params.s}
    transform = gaussian.compose(
        *(
            gaussian.two_mode_squeezer(i - 1, j - 1, degrees[(i, j)], 4)
            for (i, j) in _SQUEEZER_LABELS
        )
    )
    return gaussian.apply(transform, gaussian.vacuum_cm(4))


def _pair_partition(i: int, j: int) -> gaussian.ModePartition:
    return gaussian.ModePartition(frozenset({i - 1}), frozenset({j - 1}))


def _probe_partition(probe: int) -> gaussian.ModePartition:
    rest = frozenset(m - 1 for m in contangle.PROBES if m != probe)
    return gaussian.ModePartition(frozenset({probe - 1}), rest)


_PAIRBLOCK = gaussian.ModePartition(frozenset({0, 1}), frozenset({2, 3}))
_TWO_VS_TWO = (
    _PAIRBLOCK,
    gaussian.ModePartition(frozenset({0, 2}), frozenset({1, 3})),
    gaussian.ModePartition(frozenset({0, 3}), frozenset({1, 2})),
)


def pair_ppt_separable(state: gaussian.CovarianceMatrix, i: int, j: int) -> bool:
    """PPT verdict for the reduced pair (1-based labels i, j)."""
    reduced = gaussian.reduce(state, [i - 1, j - 1])
    return gaussian.is_ppt_separable(
        reduced, gaussian.ModePartition(frozenset({0}), frozenset({1}))
    )


def full_report(params: SqueezingParams) -> EntanglementReport:
    """All contangle statistics of gamma(a, s), cross-checked spectrally.

    The closed forms fill the report; independently, log-negativities and
    PPT verdicts are recomputed from the covariance matrix.  Any value
    deviating beyond ROUTE_TOL, or any verdict mismatch, marks the report
    inconsistent instead of raising.  Points within THRESHOLD_FLAG_TOL of
    the middle-pair separability threshold are flagged near_threshold and
    exempted from the hard verdict comparison, as are pairs whose
    entanglement is too faint for either route to certify (see FAINT_TAU
    and PPT_MARGIN).
    """
    state = build_state(params)

    pairwise = {pair: contangle.pairwise_contangle(params, pair) for pair in contangle.PAIRS}
    one_rest = {p: contangle.one_vs_rest_contangle(params, p) for p in contangle.PROBES}
    interpair = contangle.interpair_contangle(params)
    monogamy_min = contangle.monogamy_residual(params)
    strong = contangle.strong_monogamy_check(params)

    deviations = [
        abs(gaussian.log_negativity(state, _probe_partition(p)) ** 2 - one_rest[p])
        for p in contangle.PROBES
    ]
    deviations.append(abs(gaussian.log_negativity(state, _PAIRBLOCK) ** 2 - interpair))

    near = abs(params.a - contangle.separability_threshold(params.s)) < THRESHOLD_FLAG_TOL
    verdicts_ok = True
    pair_cut = gaussian.ModePartition(frozenset({0}), frozenset({1}))
    for (i, j) in contangle.PAIRS:
        if near and (i, j) == (2, 3):
            continue
        closed_tau = pairwise[(i, j)]
        if 0.0 < closed_tau <= FAINT_TAU:
            continue
        nu_min = float(
            gaussian.symplectic_eigenvalues(
                gaussian.partial_transpose(
                    gaussian.reduce(state, [i - 1, j - 1]), pair_cut
                )
            ).min()
        )
        if 0.0 < 1.0 - nu_min <= PPT_MARGIN:
            continue
        spectral_separable = nu_min >= 1.0 - gaussian.SEPARABILITY_TOL
        if spectral_separable != (closed_tau == 0.0):
            verdicts_ok = False

    max_deviation = max(deviations)
    return EntanglementReport(
        params=params,
        pairwise_contangle=pairwise,
        one_vs_rest_contangle=one_rest,
        interpair_contangle=interpair,
        residual=strong.residual,
        tripartite_bound=strong.tripartite_bound,
        monogamy_ok=monogamy_min >= -contangle.MONOGAMY_TOL,
        strong_monogamy_ok=strong.ok,
        near_threshold=near,
        consistent=verdicts_ok and max_deviation <= ROUTE_TOL,
        max_route_deviation=max_deviation,
    )


def full_inseparability_check(params: SqueezingParams) -> bool:
    """True iff every one of the 7 global bipartitions carries entanglement.

    Witnessed by log-negativity > WITNESS_TOL; holds exactly when both
    squeezing degrees are strictly positive.
    """
    state = build_state(params)
    partitions = [_probe_partition(p) for p in contangle.PROBES] + list(_TWO_VS_TWO)
    return all(gaussian.log_negativity(state, part) > WITNESS_TOL for part in partitions)
