"""Second- and third-order autocorrelations of the external drive field."""

from __future__ import annotations

import csv
import math
from dataclasses import dataclass
from enum import Enum
from pathlib import Path

import numpy as np

from .errors import ConfigurationError


class SourceKind(str, Enum):
    COHERENT = "coherent"
    CONSTANT = "constant"
    TABULATED = "tabulated"


@dataclass(frozen=True)
class ExternalSourceStats:
    """Statistics of the drive field Omega(t) as functions of delay.

    Use the constructors :meth:`coherent`, :meth:`constant` and
    :meth:`tabulated` rather than building instances by hand.
    Tabulated grids are linearly interpolated and clamp outside their range.
    """

    kind: SourceKind = SourceKind.COHERENT
    g2_0: float = 1.0
    g3_0: float = 1.0
    tau_grid: tuple = ()
    g2_grid: tuple = ()
    g3_grid: tuple | None = None

    @classmethod
    def coherent(cls):
        return cls()

    @classmethod
    def constant(cls, g2_0, g3_0):
        if g2_0 < 0 or g3_0 < 0 or not (math.isfinite(g2_0) and math.isfinite(g3_0)):
            raise ConfigurationError("drive autocorrelations must be finite and nonnegative")
        return cls(kind=SourceKind.CONSTANT, g2_0=float(g2_0), g3_0=float(g3_0))

    @classmethod
    def tabulated(cls, tau, g2, g3=None):
        tau = tuple(float(t) for t in tau)
        g2 = tuple(float(v) for v in g2)
        if not tau:
            raise ConfigurationError("tabulated drive statistics need a non-empty grid")
        if len(g2) != len(tau) or (g3 is not None and len(g3) != len(tau)):
            raise ConfigurationError("tabulated columns must have equal length")
        if any(b <= a for a, b in zip(tau, tau[1:])):
            raise ConfigurationError("tabulated delay grid must be strictly increasing")
        if g3 is not None:
            g3 = tuple(float(v) for v in g3)
        for col in (g2, g3 or ()):
            if any(v < 0 or not math.isfinite(v) for v in col):
                raise ConfigurationError("tabulated autocorrelations must be finite and >= 0")
        return cls(kind=SourceKind.TABULATED, tau_grid=tau, g2_grid=g2, g3_grid=g3)

    @classmethod
    def from_csv(cls, path):
        """Load ``tau, g2[, g3]`` rows; blank lines and ``#`` comments are skipped.

        A first row that does not parse as numbers is treated as a header.
        """
        rows = []
        with open(Path(path), newline="") as fh:
            for rec in csv.reader(line for line in fh if line.strip() and not line.startswith("#")):
                try:
                    rows.append([float(x) for x in rec])
                except ValueError:
                    if rows:
                        raise ConfigurationError(f"non-numeric row in {path}: {rec}")
        if not rows:
            raise ConfigurationError(f"no data rows in {path}")
        ncol = {len(r) for r in rows}
        if ncol not in ({2}, {3}):
            raise ConfigurationError(f"{path}: expected 2 or 3 columns per row, got {sorted(ncol)}")
        cols = list(zip(*rows))
        return cls.tabulated(cols[0], cols[1], cols[2] if len(cols) == 3 else None)

    @property
    def is_coherent(self) -> bool:
        return self.kind is SourceKind.COHERENT

    def g2(self, tau=0.0) -> float:
        return eval_g2(self, tau)

    def g3(self, tau=0.0) -> float:
        return eval_g3(self, tau)

    def describe(self) -> str:
        if self.kind is SourceKind.CONSTANT:
            return f"constant(g2={self.g2_0!r},g3={self.g3_0!r})"
        if self.kind is SourceKind.TABULATED:
            return f"tabulated({len(self.tau_grid)} points)"
        return "coherent"


def _interp(src, column, tau):
    if not src.tau_grid:
        raise ConfigurationError("tabulated drive statistics have an empty grid")
    return float(np.interp(abs(tau), src.tau_grid, column))


def eval_g2(src: ExternalSourceStats, tau: float = 0.0) -> float:
    """g2 of the drive at delay ``|tau|`` (seconds)."""
    if not math.isfinite(tau):
        raise ConfigurationError(f"delay must be finite, got {tau}")
    if src.kind is SourceKind.COHERENT:
        return 1.0
    if src.kind is SourceKind.CONSTANT:
        return src.g2_0
    return _interp(src, src.g2_grid, tau)


def eval_g3(src: ExternalSourceStats, tau: float = 0.0) -> float:
    """g3 of the drive at delay ``|tau|`` (seconds)."""
    if not math.isfinite(tau):
        raise ConfigurationError(f"delay must be finite, got {tau}")
    if src.kind is SourceKind.COHERENT:
        return 1.0
    if src.kind is SourceKind.CONSTANT:
        return src.g3_0
    if src.g3_grid is None:
        raise ConfigurationError("tabulated drive has no g3 column")
    return _interp(src, src.g3_grid, tau)
