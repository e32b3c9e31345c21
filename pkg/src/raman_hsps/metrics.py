"""Purity and efficiency of the heralded source.

``purity_efficiency`` is the exact route: it reads a :class:`CorrelationSet`.
The ``*_limits`` functions are the asymptotic approximations, kept apart for
documentation and cross-checks. Regime choice is always the caller's.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from .correlations import BackgroundParams, CorrelationSet, Scenario
from .errors import DegenerateInputError, ParameterDomainError
from .extsource import ExternalSourceStats, eval_g2, eval_g3

# "x << y" is taken as x <= y / VALIDITY_MARGIN when refusing limit calls
VALIDITY_MARGIN = 10.0


class Herald(str, Enum):
    STOKES = "stokes"  # one Stokes photon heralds the anti-Stokes channel
    ANTI_STOKES = "anti-stokes"


class DelayRegime(str, Enum):
    SMALL = "small"
    LARGE = "large"


class BackgroundRegime(str, Enum):
    HIGH_SNR = "high-snr"
    LOW_SNR = "low-snr"
    STOKES_SWAMPED = "stokes-swamped"


@dataclass(frozen=True)
class SourceFigures:
    purity: float
    efficiency: float
    scenario: Scenario = Scenario.IDEAL
    herald: Herald = Herald.STOKES


def purity_efficiency(c: CorrelationSet, herald: Herald = Herald.STOKES) -> SourceFigures:
    """Heralded g2(0) and efficiency from a correlation set.

    Stokes heralding uses ``g3_s1a2 / g2_cross**2``; anti-Stokes heralding
    uses ``g3_s2a1 / g2_cross**2`` and needs the anti-Stokes-first branch.
    Efficiency is ``g2_cross`` in both cases.
    """
    herald = Herald(herald)
    if c.g2_cross <= 0:
        raise DegenerateInputError("g2_cross is zero; purity is undefined")
    if herald is Herald.ANTI_STOKES and not c.anti_stokes_first:
        raise ParameterDomainError(
            "anti-Stokes heralding needs the anti-Stokes-first branch (tau < 0 or anti_stokes_first=True)"
        )
    if herald is Herald.STOKES and c.anti_stokes_first:
        raise ParameterDomainError("Stokes heralding needs the Stokes-first branch (tau >= 0)")
    g3 = c.g3_s1a2 if herald is Herald.STOKES else c.g3_s2a1
    return SourceFigures(g3 / c.g2_cross ** 2, c.g2_cross, c.scenario, herald)


def ideal_limits(n_v, src=None, herald: Herald = Herald.STOKES) -> SourceFigures:
    """Leading-order figures of the ideal source for ``n_v << 1``.

    Stokes heralding reaches purity ``4 n g3/g2**2`` with efficiency ``g2/n``;
    heralding on anti-Stokes gives ``2 g3/g2**2`` and ``g2``.
    """
    src = src or ExternalSourceStats.coherent()
    g2, g3 = eval_g2(src, 0.0), eval_g3(src, 0.0)
    if Herald(herald) is Herald.STOKES:
        return SourceFigures(4.0 * n_v * g3 / g2 ** 2, g2 / n_v, Scenario.IDEAL, Herald.STOKES)
    return SourceFigures(2.0 * g3 / g2 ** 2, g2, Scenario.IDEAL, Herald.ANTI_STOKES)


def delay_limits(n_v, gamma_v, tau, src=None, regime: DelayRegime = DelayRegime.SMALL) -> SourceFigures:
    """Stokes-heralded figures at delay ``tau`` in the short- or long-delay regime."""
    src = src or ExternalSourceStats.coherent()
    g2, g3 = eval_g2(src, tau), eval_g3(src, tau)
    if DelayRegime(regime) is DelayRegime.SMALL:
        grow = math.exp(2.0 * gamma_v * tau)
        return SourceFigures(4.0 * n_v * g3 / g2 ** 2 * grow, g2 / n_v / grow, Scenario.DELAY)
    return SourceFigures(2.0 * g3 / g2 ** 2, g2, Scenario.DELAY)


def incoherent_limits(n_v, M, src=None) -> SourceFigures:
    """Large-ensemble figures for an incoherent drive; ``x = g2 / (M n)``."""
    src = src or ExternalSourceStats.coherent()
    x = eval_g2(src, 0.0) / (M * n_v)
    return SourceFigures((2.0 + 4.0 * x) / (1.0 + x) ** 2, 1.0 + x, Scenario.INCOHERENT)


def background_limits(bg: BackgroundParams, base: SourceFigures, regime: BackgroundRegime,
                      n_v, src=None) -> SourceFigures:
    """Asymptotic figures with background light.

    ``HIGH_SNR`` needs both SNRs >> 1, ``LOW_SNR`` both SNRs << sqrt(n_v),
    ``STOKES_SWAMPED`` needs SNR_St << n_v and SNR_aSt >> 1. Calls outside
    these regions raise :class:`ParameterDomainError`.
    """
    regime = BackgroundRegime(regime)
    src = src or ExternalSourceStats.coherent()
    s_st, s_ast = bg.snr_st, bg.snr_ast
    k = VALIDITY_MARGIN
    if regime is BackgroundRegime.HIGH_SNR:
        if min(s_st, s_ast) < k:
            raise ParameterDomainError(f"high-SNR limit needs both SNRs >= {k}")
        return SourceFigures(base.purity * (1.0 + 1.0 / s_st),
                             base.efficiency * (1.0 - 1.0 / s_st - 1.0 / s_ast),
                             Scenario.BACKGROUND)
    if regime is BackgroundRegime.LOW_SNR:
        if max(s_st, s_ast) > math.sqrt(n_v) / k:
            raise ParameterDomainError(f"low-SNR limit needs both SNRs <= sqrt(n_v)/{k}")
        return SourceFigures(bg.g2_bg_ast, 1.0, Scenario.BACKGROUND)
    if s_st > n_v / k or s_ast < k:
        raise ParameterDomainError(f"Stokes-swamped limit needs SNR_St <= n_v/{k} and SNR_aSt >= {k}")
    return SourceFigures(2.0 * eval_g2(src, 0.0), 1.0, Scenario.BACKGROUND)
