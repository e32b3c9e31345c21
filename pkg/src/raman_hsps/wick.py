"""Brute-force correlators from Wick pairings of the thermal phonon field.

Every normalized Stokes/anti-Stokes correlator is rebuilt here from scratch:
the field operators are written out as an ordered string of phonon creation
and annihilation operators, the Gaussian moment of that string is summed over
all creator/annihilator matchings, and drive-field moments enter as scalar
multipliers. Nothing in this module calls into :mod:`raman_hsps.correlations`;
it exists to check those closed forms independently.

Conventions
-----------
* ``E_St`` carries ``b^dagger`` and ``E_aSt`` carries ``b``, so ``E_St^dagger``
  contributes an annihilator and ``E_aSt^dagger`` a creator.
* Daggered fields are sorted by increasing time, undaggered ones by
  decreasing time. Ties at equal time keep the written order
  ``E_St^dagger E_aSt^dagger ... E_aSt E_St`` (Stokes first), or the mirrored
  order when ``anti_stokes_first`` is set.
* Two-point kernels of the damped thermal oscillator::

      <b(t1) b^dagger(t2)> = (n + 1) exp(-i w (t1 - t2) - gamma |t1 - t2|)
      <b^dagger(t1) b(t2)> = n exp(+i w (t1 - t2) - gamma |t1 - t2|)

  and zero between different molecules.
"""

from __future__ import annotations

import cmath
import itertools
import math
import warnings
from collections import Counter
from dataclasses import dataclass

from .errors import UnsupportedOrderError
from .extsource import ExternalSourceStats, eval_g2, eval_g3

MAX_PAIRS = 3
MAX_MOLECULES = 6
SUPPORTED_ORDERS = frozenset({(1, 1), (1, 2), (2, 1), (2, 0), (0, 2), (3, 0), (0, 3), (1, 0), (0, 1)})


class UnbalancedStringWarning(UserWarning):
    """Operator string has unequal creator and annihilator counts; its moment is zero."""


@dataclass(frozen=True)
class PhononFactor:
    creates: bool
    time: float = 0.0
    molecule: int = 0


@dataclass(frozen=True)
class OperatorString:
    """Ordered product of phonon operators with a scalar drive-moment multiplier."""

    factors: tuple
    drive_factor: float = 1.0

    @classmethod
    def parse(cls, text, time=0.0):
        """Build an equal-time single-molecule string from e.g. ``"b+ b+ b b"``."""
        out = []
        for tok in text.split():
            if tok in ("b+", "bd", "b^dagger"):
                out.append(PhononFactor(True, time))
            elif tok == "b":
                out.append(PhononFactor(False, time))
            else:
                raise ValueError(f"unknown operator token {tok!r}")
        return cls(tuple(out))

    @property
    def creators(self):
        return [i for i, f in enumerate(self.factors) if f.creates]

    @property
    def annihilators(self):
        return [i for i, f in enumerate(self.factors) if not f.creates]

    @property
    def balanced(self) -> bool:
        return len(self.creators) == len(self.annihilators)


@dataclass(frozen=True)
class TwoPointTable:
    n_v: float
    gamma_v: float
    nu_v: float = 0.0

    @classmethod
    def from_params(cls, params):
        return cls(n_v=params.n_v, gamma_v=params.gamma_v, nu_v=params.nu_v)

    def kernel(self, left: PhononFactor, right: PhononFactor) -> complex:
        """Contraction of ``left`` standing to the left of ``right``."""
        if left.molecule != right.molecule or left.creates == right.creates:
            return 0j
        dt = left.time - right.time
        omega = 2.0 * math.pi * self.nu_v
        decay = math.exp(-self.gamma_v * abs(dt))
        if left.creates:
            return self.n_v * decay * cmath.exp(1j * omega * dt)
        return (self.n_v + 1.0) * decay * cmath.exp(-1j * omega * dt)


def matchings(s: OperatorString):
    """Yield every perfect matching of annihilators with creators as sorted position pairs."""
    ann, cre = s.annihilators, s.creators
    for perm in itertools.permutations(cre):
        yield tuple(tuple(sorted(p)) for p in zip(ann, perm))


def gaussian_moment(s: OperatorString, table: TwoPointTable) -> complex:
    """Expectation of the operator string in the stationary thermal phonon state.

    Sum over matchings of products of two-point kernels, times the string's
    drive multiplier. An unbalanced string returns ``0j`` and emits
    :class:`UnbalancedStringWarning`.
    """
    if not s.balanced:
        warnings.warn(
            f"unbalanced operator string ({len(s.creators)} creators, "
            f"{len(s.annihilators)} annihilators); moment is zero",
            UnbalancedStringWarning,
            stacklevel=2,
        )
        return 0j
    if len(s.creators) > MAX_PAIRS:
        raise UnsupportedOrderError(f"at most {MAX_PAIRS} creator/annihilator pairs are supported")
    f = s.factors
    total = 0j
    for m in matchings(s):
        term = 1 + 0j
        for i, j in m:
            term *= table.kernel(f[i], f[j])
            if term == 0:
                break
        total += term
    return total * s.drive_factor


# -- field strings ---------------------------------------------------------

@dataclass(frozen=True)
class _Field:
    stokes: bool
    dagger: bool
    time: float

    def phonon(self, molecule=0):
        # E_St ~ Omega b^dagger, E_aSt ~ Omega b
        return PhononFactor(creates=(self.stokes != self.dagger), time=self.time, molecule=molecule)


def field_string(m1, m2, tau, anti_stokes_first=False):
    """Fields of the time-ordered correlator, left to right."""
    t_st, t_ast = 0.0, float(tau)
    st_rank, ast_rank = (1, 0) if anti_stokes_first else (0, 1)
    left = [(t_st, st_rank, _Field(True, True, t_st))] * m1
    left += [(t_ast, ast_rank, _Field(False, True, t_ast))] * m2
    right = [(t_ast, ast_rank, _Field(False, False, t_ast))] * m2
    right += [(t_st, st_rank, _Field(True, False, t_st))] * m1
    left.sort(key=lambda x: (x[0], x[1]))
    right.sort(key=lambda x: (-x[0], -x[1]))
    return [x[2] for x in left] + [x[2] for x in right]


def _check_order(order):
    order = tuple(order)
    if order not in SUPPORTED_ORDERS:
        raise UnsupportedOrderError(f"unsupported correlator order {order}")
    return order


def _drive_moment(k, tau, src):
    if k <= 1:
        return 1.0
    if k == 2:
        return eval_g2(src, tau)
    if k == 3:
        return eval_g3(src, tau)
    raise UnsupportedOrderError(f"drive moment of order {k} not available")


def _table(params):
    if isinstance(params, TwoPointTable):
        return params
    return TwoPointTable.from_params(params)


def _check_real(z, what):
    if abs(z.imag) > 1e-12 * max(1.0, abs(z.real)):
        raise ArithmeticError(f"{what} has a non-negligible imaginary part: {z}")
    return z.real


def raman_correlator(order, tau, params, src=None, anti_stokes_first=False) -> float:
    """Normalized ``g_{St(m1) aSt(m2)}`` of a single molecule by Wick enumeration.

    ``params`` is a :class:`TwoPointTable` or anything with ``n_v``,
    ``gamma_v`` and ``nu_v`` attributes. ``tau`` is in seconds; positive
    means the Stokes photon is detected first.
    """
    m1, m2 = _check_order(order)
    src = src or ExternalSourceStats.coherent()
    table = _table(params)
    if m1 and m2:
        drive = _drive_moment(m1 + m2, abs(tau), src)
    else:
        drive = _drive_moment(m1 + m2, 0.0, src)
    fields = field_string(m1, m2, tau, anti_stokes_first)
    num = gaussian_moment(OperatorString(tuple(f.phonon() for f in fields), drive), table)
    den = 1.0
    for k, fields1 in ((m1, field_string(1, 0, 0.0)), (m2, field_string(0, 1, tau))):
        if k:
            one = gaussian_moment(OperatorString(tuple(f.phonon() for f in fields1)), table)
            den *= _check_real(one, "intensity") ** k
    return _check_real(num, "correlator") / den


def _ensemble_moment(fields, M, table, drive_of):
    """Sum over molecule labels of the field string; ``drive_of`` returns the drive factor."""
    total = 0j
    n = len(fields)
    for labels in itertools.product(range(M), repeat=n):
        balance = Counter()
        for f, j in zip(fields, labels):
            balance[j] += 1 if f.phonon().creates else -1
        if any(balance.values()):
            continue
        drive = drive_of(labels)
        if drive == 0.0:
            continue
        s = OperatorString(tuple(f.phonon(j) for f, j in zip(fields, labels)), drive)
        total += gaussian_moment(s, table)
    return total


def multi_molecule_correlator(order, M, params, src=None, *, tau=0.0,
                              coherent_drive=False, anti_stokes_first=False) -> float:
    """Normalized correlator of an ensemble of ``M`` molecules by index enumeration.

    Each field operator is a sum over molecules, so the correlator expands into
    ``M ** (2 (m1 + m2))`` labelled strings. Phonon contractions act within a
    molecule only.

    With ``coherent_drive=False`` the molecules see statistically independent
    drive fields of zero mean: a labelled term survives only if every molecule
    carries as many ``Omega^dagger`` as ``Omega`` factors, and it is weighted by
    the product of per-molecule drive moments ``g^(k_j)``. This incoherent case
    is defined at zero delay only. With ``coherent_drive=True`` all molecules
    share one drive field and every term carries ``g^(m1 + m2)(|tau|)``.
    """
    m1, m2 = _check_order(order)
    if not 1 <= M <= MAX_MOLECULES or int(M) != M:
        raise UnsupportedOrderError(f"enumeration supports 1 <= M <= {MAX_MOLECULES}, got {M}")
    if not coherent_drive and tau != 0.0:
        raise UnsupportedOrderError("incoherent drive enumeration is defined at zero delay only")
    src = src or ExternalSourceStats.coherent()
    table = _table(params)
    M = int(M)

    def drive_for(fields, delay):
        if coherent_drive:
            k_total = sum(1 for f in fields if f.dagger)
            g = _drive_moment(k_total, delay, src)
            return lambda labels: g

        def per_molecule(labels):
            dag = Counter(j for f, j in zip(fields, labels) if f.dagger)
            undag = Counter(j for f, j in zip(fields, labels) if not f.dagger)
            if dag != undag:
                return 0.0
            out = 1.0
            for k in dag.values():
                out *= _drive_moment(k, 0.0, src)
            return out

        return per_molecule

    delay = abs(tau) if (m1 and m2) else 0.0
    fields = field_string(m1, m2, tau, anti_stokes_first)
    num = _ensemble_moment(fields, M, table, drive_for(fields, delay))
    den = 1.0
    for k, fields1 in ((m1, field_string(1, 0, 0.0)), (m2, field_string(0, 1, 0.0))):
        if k:
            one = _ensemble_moment(fields1, M, table, drive_for(fields1, 0.0))
            den *= _check_real(one, "intensity") ** k
    return _check_real(num, "correlator") / den
