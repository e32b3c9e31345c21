import math

import numpy as np
import pytest

from raman_hsps import (
    BackgroundParams,
    DegenerateInputError,
    ExternalSourceStats,
    Herald,
    ParameterDomainError,
    background_correlations,
    background_limits,
    delay_limits,
    ideal_correlations,
    ideal_limits,
    incoherent_correlations,
    incoherent_limits,
    purity_efficiency,
)
from raman_hsps.metrics import BackgroundRegime, DelayRegime


def test_ideal_stokes_herald(n_room):
    f = purity_efficiency(ideal_correlations(n_room, 1e12, 0.0))
    assert f.purity == pytest.approx(1.34286777002950e-3, rel=1e-12)
    assert f.efficiency == pytest.approx(2978.19974730901, rel=1e-12)
    lim = ideal_limits(n_room)
    assert lim.purity == pytest.approx(f.purity, rel=0.05)
    assert lim.efficiency == pytest.approx(f.efficiency, rel=0.05)


def test_ideal_anti_stokes_herald(n_room):
    c = ideal_correlations(n_room, 1e12, 0.0, anti_stokes_first=True)
    f = purity_efficiency(c, Herald.ANTI_STOKES)
    assert f.purity == pytest.approx(1.99999977, rel=1e-8)
    assert f.efficiency == pytest.approx(1.00033589, rel=1e-8)
    lim = ideal_limits(n_room, herald="anti-stokes")
    assert lim.purity == 2.0 and lim.efficiency == 1.0


def test_herald_branch_mismatch_refused(n_room):
    with pytest.raises(ParameterDomainError):
        purity_efficiency(ideal_correlations(n_room, 1.0, 0.0), Herald.ANTI_STOKES)
    with pytest.raises(ParameterDomainError):
        purity_efficiency(ideal_correlations(n_room, 1.0, -1.0), Herald.STOKES)


def test_zero_cross_correlation_is_degenerate():
    c = ideal_correlations(1e-3, 1.0, 0.0, ExternalSourceStats.constant(0.0, 0.0))
    with pytest.raises(DegenerateInputError):
        purity_efficiency(c)


def test_delay_half_lifetime(n_room):
    f = purity_efficiency(ideal_correlations(n_room, 1.0, 0.5))
    assert f.purity == pytest.approx(3.64713659e-3, rel=1e-8)
    lim = delay_limits(n_room, 1.0, 0.5)
    assert lim.purity == pytest.approx(3.65335940e-3, rel=1e-8)
    assert lim.purity == pytest.approx(f.purity, rel=0.05)
    assert lim.efficiency == pytest.approx(f.efficiency, rel=0.05)


def test_delay_long_limit(n_room):
    f = purity_efficiency(ideal_correlations(n_room, 1.0, 12.0))
    lim = delay_limits(n_room, 1.0, 12.0, regime=DelayRegime.LARGE)
    assert lim.purity == pytest.approx(f.purity, rel=0.05)
    assert lim.efficiency == pytest.approx(f.efficiency, rel=0.05)


def test_purity_degrades_monotonically_with_delay(n_room):
    p = [purity_efficiency(ideal_correlations(n_room, 1.0, t)).purity for t in np.linspace(0, 6, 61)]
    assert np.all(np.diff(p) > 0)
    assert p[-1] < 2.0


def test_purity_degrades_monotonically_with_ensemble_size(n_room):
    p = [purity_efficiency(incoherent_correlations(n_room, m)).purity for m in np.geomspace(1, 1e6, 40)]
    assert np.all(np.diff(p) > 0)
    assert p[-1] == pytest.approx(2.0, rel=0.01)


def test_incoherent_values(n_room):
    f = purity_efficiency(incoherent_correlations(n_room, 55))
    assert f.purity == pytest.approx(0.0718965659, rel=1e-8)
    assert incoherent_limits(n_room, 55).purity == pytest.approx(0.0719200676, rel=1e-8)
    big = incoherent_limits(n_room, 1e4)
    assert big.purity == pytest.approx(1.89478950, rel=1e-8)
    assert purity_efficiency(incoherent_correlations(n_room, 1e4)).purity == pytest.approx(big.purity, rel=1e-3)


@pytest.mark.parametrize("M", [10, 100, 1e3, 1e4, 1e5])
def test_incoherent_limit_within_five_percent(n_room, M):
    exact = purity_efficiency(incoherent_correlations(n_room, M))
    lim = incoherent_limits(n_room, M)
    assert lim.purity == pytest.approx(exact.purity, rel=0.05)
    assert lim.efficiency == pytest.approx(exact.efficiency, rel=0.05)


def _bg(n, snr_st, snr_ast, **kw):
    base = ideal_correlations(n, 1.0, 0.0)
    bg = BackgroundParams(snr_st, snr_ast, **kw)
    return bg, purity_efficiency(base), purity_efficiency(background_correlations(base, bg))


def test_background_purity_values(n_room):
    _, _, f = _bg(n_room, 10.0, 10.0)
    assert f.purity == pytest.approx(1.62469817e-3, rel=1e-8)
    _, _, f = _bg(n_room, 0.1, 0.1)
    assert f.purity == pytest.approx(0.153169177, rel=1e-8)


@pytest.mark.parametrize("snr", [100.0, 1e3, 1e4])
def test_high_snr_limit(n_room, snr):
    bg, base, f = _bg(n_room, snr, snr)
    lim = background_limits(bg, base, BackgroundRegime.HIGH_SNR, n_room)
    assert lim.purity == pytest.approx(f.purity, rel=0.05)
    assert lim.efficiency == pytest.approx(f.efficiency, rel=0.05)


def test_low_snr_limit(n_room):
    bg, base, f = _bg(n_room, 1e-5, 1e-5, g2_bg_ast=1.6)
    lim = background_limits(bg, base, "low-snr", n_room)
    assert lim.purity == pytest.approx(f.purity, rel=0.10)
    assert lim.efficiency == pytest.approx(f.efficiency, rel=0.10)


def test_stokes_swamped_limit(n_room):
    bg, base, f = _bg(n_room, 1e-6, 1e3)
    lim = background_limits(bg, base, "stokes-swamped", n_room)
    assert lim.purity == pytest.approx(f.purity, rel=0.10)
    assert lim.efficiency == pytest.approx(f.efficiency, rel=0.10)


@pytest.mark.parametrize("regime, snr_st, snr_ast", [
    ("high-snr", 3.0, 100.0),
    ("low-snr", 0.1, 1e-5),
    ("stokes-swamped", 1e-3, 1e3),
    ("stokes-swamped", 1e-6, 2.0),
])
def test_limits_refuse_outside_their_regime(n_room, regime, snr_st, snr_ast):
    bg, base, _ = _bg(n_room, snr_st, snr_ast)
    with pytest.raises(ParameterDomainError):
        background_limits(bg, base, regime, n_room)


def test_background_degrades_purity_monotonically(n_room):
    p = [_bg(n_room, s, s)[2].purity for s in np.geomspace(1e-3, 1e3, 50)]
    assert np.all(np.diff(p) < 0)
    assert p[0] == pytest.approx(2.0, rel=0.02)


def test_figures_are_finite_for_extreme_occupancy():
    for n in (1e-12, 1e3):
        f = purity_efficiency(ideal_correlations(n, 1.0, 0.0))
        assert math.isfinite(f.purity) and math.isfinite(f.efficiency)
