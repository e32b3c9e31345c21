"""Closed-form Stokes/anti-Stokes correlators for each degradation scenario.

Every constructor returns a :class:`CorrelationSet`: the cross-correlators the
heralding metrics need plus the single-band autocorrelations that complete the
joint photon table. Scenarios are not composable; each one models a single
imperfection on top of the ideal source.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from enum import Enum

from .errors import ParameterDomainError
from .extsource import ExternalSourceStats, eval_g2, eval_g3


class Scenario(str, Enum):
    IDEAL = "ideal"
    DELAY = "delay"
    INCOHERENT = "incoherent"
    BACKGROUND = "background"


@dataclass(frozen=True)
class CorrelationSet:
    """Normalized correlators at one delay.

    ``g3_s1a2`` is ``g_{St(1) aSt(2)}`` and ``g3_s2a1`` is ``g_{St(2) aSt(1)}``.
    ``anti_stokes_first`` tells which time ordering the cross-correlators
    belong to; at ``tau == 0`` both branches exist and this flag picks one.
    """

    g2_cross: float
    g3_s1a2: float
    g3_s2a1: float
    g2_st_auto: float
    g2_ast_auto: float
    g3_st_auto: float
    g3_ast_auto: float
    tau: float = 0.0
    scenario: Scenario = Scenario.IDEAL
    anti_stokes_first: bool = False

    def __post_init__(self):
        for name in ("g2_cross", "g3_s1a2", "g3_s2a1", "g2_st_auto",
                     "g2_ast_auto", "g3_st_auto", "g3_ast_auto"):
            v = getattr(self, name)
            if not (math.isfinite(v) and v >= 0):
                raise ParameterDomainError(f"{name} must be finite and >= 0, got {v}")

    def value(self, m1, m2):
        """Correlator of order (m1, m2); orders with a single photon are 1."""
        table = {
            (1, 0): 1.0, (0, 1): 1.0,
            (1, 1): self.g2_cross,
            (1, 2): self.g3_s1a2, (2, 1): self.g3_s2a1,
            (2, 0): self.g2_st_auto, (0, 2): self.g2_ast_auto,
            (3, 0): self.g3_st_auto, (0, 3): self.g3_ast_auto,
        }
        return table[(m1, m2)]


@dataclass(frozen=True)
class BackgroundParams:
    """Uncorrelated background light at the Stokes and anti-Stokes frequencies.

    SNRs are signal-to-background intensity ratios. The third-order
    background autocorrelations only enter the single-band autocorrelators
    (the joint table), never the heralded purity; they default to thermal
    light.
    """

    snr_st: float
    snr_ast: float
    g2_bg_ast: float = 2.0
    g2_bg_st: float = 2.0
    g3_bg_ast: float = 6.0
    g3_bg_st: float = 6.0

    def __post_init__(self):
        for name in ("snr_st", "snr_ast"):
            v = getattr(self, name)
            if not (v > 0 and math.isfinite(v)):
                raise ParameterDomainError(f"{name} must be positive and finite, got {v}")
        for name in ("g2_bg_ast", "g2_bg_st", "g3_bg_ast", "g3_bg_st"):
            v = getattr(self, name)
            if not (v >= 0 and math.isfinite(v)):
                raise ParameterDomainError(f"{name} must be finite and >= 0, got {v}")


def _check_nv(n_v):
    if not (n_v > 0 and math.isfinite(n_v)):
        raise ParameterDomainError(f"n_v must be positive and finite, got {n_v}")


def _bunching(n_v):
    # (1 + n_v) / n_v written to avoid forming 1 + n_v first
    return 1.0 / n_v + 1.0


def auto_correlations(n_v, src=None):
    """Single-band autocorrelations ``(g2_st, g2_ast, g3_st, g3_ast)`` of one molecule.

    The thermal phonon field gives the Gaussian factors 2! and 3!, the drive
    contributes its own moments at zero delay; the occupancy drops out.
    """
    _check_nv(n_v)
    src = src or ExternalSourceStats.coherent()
    g2 = 2.0 * eval_g2(src, 0.0)
    g3 = 6.0 * eval_g3(src, 0.0)
    return g2, g2, g3, g3


def ideal_correlations(n_v, gamma_v, tau, src=None, *, anti_stokes_first=None) -> CorrelationSet:
    """Correlators with all molecules inside the drive's coherence radius.

    For ``tau > 0`` (Stokes detected first)::

        g2_cross = g2_drive(tau) (1 + (1 + n)/n exp(-2 gamma tau))
        g3       = 2 g3_drive(tau) (1 + 2 (1 + n)/n exp(-2 gamma tau))

    and for ``tau < 0`` the same with ``n/(1 + n)`` and ``|tau|``. Both third
    order cross-correlators share one form within a branch. At ``tau == 0``
    the Stokes-first branch is returned unless ``anti_stokes_first=True``.
    """
    _check_nv(n_v)
    if not (gamma_v > 0 and math.isfinite(gamma_v)):
        raise ParameterDomainError(f"gamma_v must be positive and finite, got {gamma_v}")
    if not math.isfinite(tau):
        raise ParameterDomainError(f"tau must be finite, got {tau}")
    if anti_stokes_first is None:
        anti_stokes_first = tau < 0
    elif (tau > 0 and anti_stokes_first) or (tau < 0 and not anti_stokes_first):
        raise ParameterDomainError("anti_stokes_first contradicts the sign of tau")
    src = src or ExternalSourceStats.coherent()

    a = abs(tau)
    ratio = n_v / (1.0 + n_v) if anti_stokes_first else _bunching(n_v)
    decay = math.exp(-2.0 * gamma_v * a)
    g2 = eval_g2(src, a) * (1.0 + ratio * decay)
    g3 = 2.0 * eval_g3(src, a) * (1.0 + 2.0 * ratio * decay)
    g2a, g2b, g3a, g3b = auto_correlations(n_v, src)
    return CorrelationSet(
        g2_cross=g2, g3_s1a2=g3, g3_s2a1=g3,
        g2_st_auto=g2a, g2_ast_auto=g2b, g3_st_auto=g3a, g3_ast_auto=g3b,
        tau=float(tau),
        scenario=Scenario.IDEAL if tau == 0 else Scenario.DELAY,
        anti_stokes_first=anti_stokes_first,
    )


def incoherent_correlations(n_v, M, src=None) -> CorrelationSet:
    """Zero-delay correlators of ``M`` molecules driven by mutually incoherent fields.

    Each molecule sees an independent, zero-mean drive with the statistics of
    ``src``. ``M = 1`` reproduces :func:`ideal_correlations` at ``tau = 0``.
    ``M`` may be any real number >= 1 so sweeps can treat it as continuous.
    """
    _check_nv(n_v)
    if not (M >= 1 and math.isfinite(M)):
        raise ParameterDomainError(f"molecule count must be >= 1, got {M}")
    src = src or ExternalSourceStats.coherent()
    g2d, g3d = eval_g2(src, 0.0), eval_g3(src, 0.0)
    r = _bunching(n_v)
    inv = 1.0 / M
    g2 = 1.0 - inv + g2d * inv * (1.0 + r)
    g3 = (2.0 * (1.0 - inv) * (1.0 - 2.0 * inv)
          + 2.0 * g2d * inv * (1.0 - inv) * (3.0 + 2.0 * r)
          + 2.0 * g3d * inv * inv * (1.0 + 2.0 * r))
    # single band: sum of M independent thermal-times-drive fields
    g2_auto = 2.0 * (1.0 - inv) + 2.0 * g2d * inv
    g3_auto = (6.0 * g3d * inv * inv + 18.0 * g2d * (1.0 - inv) * inv
               + 6.0 * (1.0 - inv) * (1.0 - 2.0 * inv))
    return CorrelationSet(
        g2_cross=g2, g3_s1a2=g3, g3_s2a1=g3,
        g2_st_auto=g2_auto, g2_ast_auto=g2_auto, g3_st_auto=g3_auto, g3_ast_auto=g3_auto,
        tau=0.0, scenario=Scenario.INCOHERENT,
    )


def _mixed_auto2(g2_sig, g2_bg, snr):
    return (g2_sig * snr * snr + 4.0 * snr + g2_bg) / (1.0 + snr) ** 2


def _mixed_auto3(g3_sig, g2_sig, g2_bg, g3_bg, snr):
    s = snr
    return (g3_sig * s ** 3 + 9.0 * g2_sig * s * s + 9.0 * g2_bg * s + g3_bg) / (1.0 + s) ** 3


def _mixed_cross3(g3, g2_cross, g2_auto_double, g2_bg_double, s_single, s_double):
    """Cross-correlator with one photon in band "single", two in band "double"."""
    ss, sd = s_single, s_double
    signal = (g3 + 4.0 * g2_cross / sd + g2_auto_double / ss) * ss * sd * sd
    return ((signal + 4.0 * sd) / ((1.0 + ss) * (1.0 + sd) ** 2)
            + g2_bg_double / (1.0 + sd) ** 2)


def background_correlations(base: CorrelationSet, bg: BackgroundParams, src=None) -> CorrelationSet:
    """Add uncorrelated background light to a zero-delay correlation set.

    Background at either frequency is uncorrelated with the Raman light and
    with the other band. The cross-correlator becomes::

        1 + (g2 - 1) S_St S_aSt / ((1 + S_St)(1 + S_aSt))

    and the third-order cross-correlators pick up signal-background mixing
    terms plus the background's own bunching. ``src`` is accepted for
    symmetry with the other constructors; the drive enters through
    ``base``'s autocorrelators.
    """
    if base.tau != 0.0 or base.scenario not in (Scenario.IDEAL,):
        raise ParameterDomainError("background is applied to an ideal zero-delay correlation set")
    s_st, s_ast = bg.snr_st, bg.snr_ast
    w = s_st * s_ast / ((1.0 + s_st) * (1.0 + s_ast))
    g2 = 1.0 + (base.g2_cross - 1.0) * w
    g3_s1a2 = _mixed_cross3(base.g3_s1a2, base.g2_cross, base.g2_ast_auto, bg.g2_bg_ast, s_st, s_ast)
    g3_s2a1 = _mixed_cross3(base.g3_s2a1, base.g2_cross, base.g2_st_auto, bg.g2_bg_st, s_ast, s_st)
    return replace(
        base,
        g2_cross=g2,
        g3_s1a2=g3_s1a2,
        g3_s2a1=g3_s2a1,
        g2_st_auto=_mixed_auto2(base.g2_st_auto, bg.g2_bg_st, s_st),
        g2_ast_auto=_mixed_auto2(base.g2_ast_auto, bg.g2_bg_ast, s_ast),
        g3_st_auto=_mixed_auto3(base.g3_st_auto, base.g2_st_auto, bg.g2_bg_st, bg.g3_bg_st, s_st),
        g3_ast_auto=_mixed_auto3(base.g3_ast_auto, base.g2_ast_auto, bg.g2_bg_ast, bg.g3_bg_ast, s_ast),
        scenario=Scenario.BACKGROUND,
    )
