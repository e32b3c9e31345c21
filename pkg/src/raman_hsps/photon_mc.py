"""Joint photon-number table and Monte Carlo detection with postselection.

The table keeps every outcome with at most three photons in total, each
entry proportional to the matching normalized correlator. Vacuum takes the
remaining probability mass.

Seeding: a run with seed ``s`` split into ``k`` chunks draws chunk ``i``
from ``numpy.random.default_rng(SeedSequence(s).spawn(k)[i])``, i.e. seed
sequence ``SeedSequence(s, spawn_key=(i,))``. Counts are merged by addition,
so results depend only on the seed and the chunk layout.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import asdict, dataclass, field

import numpy as np

from .correlations import CorrelationSet
from .errors import DegenerateInputError, LowIntensityError, ParameterDomainError
from .metrics import Herald

OUTCOMES = ((0, 0), (1, 0), (0, 1), (2, 0), (1, 1), (0, 2), (3, 0), (2, 1), (1, 2), (0, 3))
MAX_NONVACUUM = 0.1
TRUNCATION_WARN = 0.01
DEFAULT_MU = 1e-4
DEFAULT_CHUNK = 1_000_000


class TruncationWarning(UserWarning):
    """Estimated mass of the dropped four-photon terms is not negligible."""


@dataclass(frozen=True)
class JointPhotonTable:
    mu_st: float
    mu_ast: float
    p: dict
    truncation_estimate: float = 0.0

    def __getitem__(self, key):
        return self.p.get(tuple(key), 0.0)

    @property
    def nonvacuum_mass(self) -> float:
        return sum(v for k, v in self.p.items() if k != (0, 0))

    def probabilities(self):
        return np.array([self[k] for k in OUTCOMES])

    def as_matrix(self):
        """``p[n_st, n_ast]`` as a 4x4 array (zeros above the truncation)."""
        m = np.zeros((4, 4))
        for (a, b), v in self.p.items():
            m[a, b] = v
        return m


def build_table(c: CorrelationSet, mu_st=DEFAULT_MU, mu_ast=DEFAULT_MU) -> JointPhotonTable:
    """Joint probabilities ``mu_st**a mu_ast**b g_(a,b) / (a! b!)`` for ``1 <= a + b <= 3``.

    ``mu`` are mean photon counts per window (detector efficiency times
    intensity). Raises :class:`LowIntensityError` if the non-vacuum mass
    exceeds 0.1; warns with :class:`TruncationWarning` when the dropped
    four-photon mass, extrapolated geometrically from orders two and three,
    exceeds 1 % of the retained non-vacuum mass.
    """
    if not (mu_st >= 0 and mu_ast >= 0 and math.isfinite(mu_st) and math.isfinite(mu_ast)):
        raise ParameterDomainError("mean counts must be finite and nonnegative")
    p = {}
    for a, b in OUTCOMES[1:]:
        v = mu_st ** a * mu_ast ** b * c.value(a, b) / (math.factorial(a) * math.factorial(b))
        if v > 1.0:
            raise LowIntensityError(f"p[{a}][{b}] = {v:.3g} exceeds 1", entry=(a, b))
        p[(a, b)] = v
    rest = sum(p.values())
    if rest > MAX_NONVACUUM:
        worst = max(p, key=p.get)
        raise LowIntensityError(
            f"non-vacuum mass {rest:.3g} exceeds {MAX_NONVACUUM}; largest entry p[{worst[0]}][{worst[1]}]"
            f" = {p[worst]:.3g}",
            entry=worst,
        )
    p[(0, 0)] = 1.0 - rest
    by_order = [sum(v for (a, b), v in p.items() if a + b == k) for k in (2, 3)]
    est = by_order[1] ** 2 / by_order[0] if by_order[0] > 0 else 0.0
    if rest > 0 and est > TRUNCATION_WARN * rest:
        warnings.warn(
            f"estimated four-photon mass {est:.3g} is {est / rest:.1%} of retained non-vacuum mass",
            TruncationWarning,
            stacklevel=2,
        )
    return JointPhotonTable(float(mu_st), float(mu_ast), p, est)


def _herald_row(t: JointPhotonTable, herald: Herald):
    if Herald(herald) is Herald.STOKES:
        return [t[(1, n)] for n in range(3)]
    return [t[(n, 1)] for n in range(3)]


def conditional_distribution(t: JointPhotonTable, herald: Herald = Herald.STOKES) -> np.ndarray:
    """Bayes posterior of the partner photon number (0, 1, 2) given one herald photon."""
    row = np.array(_herald_row(t, herald))
    total = row.sum()
    if total <= 0:
        raise DegenerateInputError("herald outcome has zero probability")
    return row / total


def purity_from_conditional(q) -> float:
    """``2 q2 q0 / q1**2``: heralded g2(0) with the herald-only outcome as reference.

    The extra ``q0`` makes this independent of how the conditional vector is
    normalized; it reduces to ``2 q2 / q1**2`` when ``q0`` is close to 1.
    """
    q0, q1, q2 = q
    if q1 <= 0:
        raise DegenerateInputError("no single-photon probability after heralding")
    return 2.0 * q2 * q0 / q1 ** 2


def efficiency_from_conditional(q, p_partner_alone) -> float:
    """Heralded single-photon probability over the unheralded one, ``q1 / (q0 p_partner)``."""
    q0, q1, _ = q
    if q0 <= 0 or p_partner_alone <= 0:
        raise DegenerateInputError("efficiency undefined for zero reference probability")
    return q1 / (q0 * p_partner_alone)


def table_figures(t: JointPhotonTable, herald: Herald = Herald.STOKES):
    """(purity, efficiency) computed from the table alone."""
    q = conditional_distribution(t, herald)
    alone = t[(0, 1)] if Herald(herald) is Herald.STOKES else t[(1, 0)]
    return purity_from_conditional(q), efficiency_from_conditional(q, alone)


@dataclass
class McEstimate:
    purity: float
    purity_stderr: float
    efficiency: float
    efficiency_stderr: float
    herald_count: int
    trial_count: int
    seed: int
    mode: str
    counts: dict = field(default_factory=dict)
    no_heralds: bool = False

    def to_dict(self):
        d = asdict(self)
        d["counts"] = {_count_key(k): int(v) for k, v in self.counts.items()}
        return d


def _count_key(k):
    return f"{k[0]},{k[1]}" if isinstance(k, tuple) else str(k)


def _log_stderr(counts, exponents, total):
    """Delta-method relative stderr of ``prod (N_i/total)**a_i`` for multinomial counts."""
    s = sum(a * a / n for n, a in zip(counts, exponents))
    s -= sum(exponents) ** 2 / total
    return math.sqrt(max(s, 0.0))


def _ratio_estimates(n0, n1, n2, total, p_alone):
    """Purity and efficiency (with stderr) from herald-conditioned counts."""
    if n1 == 0 or n0 == 0:
        return math.nan, math.nan, math.nan, math.nan
    purity = 2.0 * n2 * n0 / n1 ** 2
    # zero two-photon events: estimate is exactly 0 and the delta method has nothing to say
    purity_se = purity * _log_stderr((n0, n1, n2), (1, -2, 1), total) if n2 else math.nan
    eff = n1 / (n0 * p_alone) if p_alone > 0 else math.nan
    return purity, purity_se, eff, eff * _log_stderr((n0, n1), (-1, 1), total)


def _chunk_sizes(total, chunk):
    chunk = max(int(chunk), 1)
    full, rem = divmod(int(total), chunk)
    return [chunk] * full + ([rem] if rem else [])


def _multinomial_counts(probs, total, seed, chunk):
    probs = np.clip(np.asarray(probs, dtype=float), 0.0, None)
    probs = probs / probs.sum()
    sizes = _chunk_sizes(total, chunk)
    children = np.random.SeedSequence(seed).spawn(len(sizes))
    counts = np.zeros(len(probs), dtype=np.int64)
    for size, ss in zip(sizes, children):
        counts += np.random.default_rng(ss).multinomial(size, probs)
    return counts


def sample_unconditional(t: JointPhotonTable, trials, seed=0, herald: Herald = Herald.STOKES,
                         chunk=DEFAULT_CHUNK) -> McEstimate:
    """Draw ``trials`` detection windows from the full table and postselect on one herald photon.

    The efficiency reference probability is itself estimated from the
    partner-only counts.
    """
    if trials < 1:
        raise ParameterDomainError("trials must be >= 1")
    herald = Herald(herald)
    counts = _multinomial_counts(t.probabilities(), trials, seed, chunk)
    by = dict(zip(OUTCOMES, (int(c) for c in counts)))
    if herald is Herald.STOKES:
        n0, n1, n2, alone = by[(1, 0)], by[(1, 1)], by[(1, 2)], by[(0, 1)]
    else:
        n0, n1, n2, alone = by[(0, 1)], by[(1, 1)], by[(2, 1)], by[(1, 0)]
    heralds = n0 + n1 + n2
    est = McEstimate(math.nan, math.nan, math.nan, math.nan, heralds, int(trials), seed,
                     "unconditional", by, no_heralds=heralds == 0)
    if heralds == 0:
        return est
    purity, purity_se, _, _ = _ratio_estimates(n0, n1, n2, trials, 1.0)
    est.purity, est.purity_stderr = purity, purity_se
    if n1 and n0 and alone:
        est.efficiency = (n1 / n0) / (alone / trials)
        est.efficiency_stderr = est.efficiency * _log_stderr((n1, n0, alone), (1, -1, -1), trials)
    return est


def sample_heralded(t: JointPhotonTable, heralds, seed=0, herald: Herald = Herald.STOKES,
                    chunk=DEFAULT_CHUNK) -> McEstimate:
    """Sample partner photon numbers directly from the heralded distribution.

    Every trial is a herald event, so two-photon outcomes show up after
    ~1/p(2|1) heralds instead of ~1/(p(1, ·) p(2|1)) windows.
    """
    if heralds < 1:
        raise ParameterDomainError("heralds must be >= 1")
    herald = Herald(herald)
    q = conditional_distribution(t, herald)
    counts = _multinomial_counts(q, heralds, seed, chunk)
    n0, n1, n2 = (int(c) for c in counts)
    alone = t[(0, 1)] if herald is Herald.STOKES else t[(1, 0)]
    purity, purity_se, eff, eff_se = _ratio_estimates(n0, n1, n2, heralds, alone)
    return McEstimate(purity, purity_se, eff, eff_se, int(heralds), int(heralds), seed, "heralded",
                      {0: n0, 1: n1, 2: n2})
