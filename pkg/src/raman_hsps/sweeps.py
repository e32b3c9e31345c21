"""Parameter sweeps and single-point evaluation, with CSV/JSON serialization.

A :class:`SweepResult` carries its full :class:`SweepSpec` as metadata, so
any emitted file can be re-run from its own header.
"""

from __future__ import annotations

import io
import json
import math
from dataclasses import dataclass, fields
from enum import Enum

import numpy as np

from . import __version__
from .constants import THZ
from .correlations import (
    BackgroundParams,
    background_correlations,
    ideal_correlations,
    incoherent_correlations,
)
from .errors import ConfigurationError, ParameterDomainError
from .extsource import ExternalSourceStats
from .metrics import Herald, purity_efficiency
from .params import thermal_occupancy

# used when the caller gives no absolute gamma_v: delays are then pure gamma_v * tau
NOMINAL_GAMMA_V = 1.0


class SweepKind(str, Enum):
    G2_CURVE = "g2-curve"
    DELAY = "delay"
    COHERENCE = "coherence"
    BACKGROUND = "background"


@dataclass(frozen=True)
class SweepSpec:
    kind: SweepKind
    axis_min: float
    axis_max: float
    points: int = 201
    log: bool = False
    temperature: float = 300.0
    nu_v_thz: float = 50.0
    gamma_v: float | None = None
    g2_omega: float = 1.0
    g3_omega: float = 1.0
    g2_bg: float = 2.0
    drive_csv: str | None = None

    def __post_init__(self):
        object.__setattr__(self, "kind", SweepKind(self.kind))
        if int(self.points) != self.points or self.points < 2:
            raise ConfigurationError(f"points must be an integer >= 2, got {self.points}")
        if not (math.isfinite(self.axis_min) and math.isfinite(self.axis_max)):
            raise ConfigurationError("axis bounds must be finite")
        if not self.axis_min < self.axis_max:
            raise ConfigurationError(f"axis min {self.axis_min} must be below max {self.axis_max}")
        if self.log and self.axis_min <= 0:
            raise ConfigurationError("log axis needs a positive minimum")
        if self.kind is SweepKind.COHERENCE and self.axis_min < 1:
            raise ConfigurationError("molecule count axis must start at >= 1")
        if self.kind is SweepKind.BACKGROUND and self.axis_min <= 0:
            raise ConfigurationError("SNR axis must be positive")
        if self.kind is SweepKind.DELAY and self.axis_min < 0:
            raise ConfigurationError("delay sweep covers Stokes-first delays (gamma_tau >= 0)")
        if (self.drive_csv and self.gamma_v is None
                and self.kind in (SweepKind.G2_CURVE, SweepKind.DELAY)):
            raise ConfigurationError("a tabulated drive needs an absolute gamma_v to convert delays")

    def axis(self):
        if self.log:
            return np.geomspace(self.axis_min, self.axis_max, int(self.points))
        return np.linspace(self.axis_min, self.axis_max, int(self.points))

    def source(self):
        if self.drive_csv:
            return ExternalSourceStats.from_csv(self.drive_csv)
        if self.g2_omega == 1.0 and self.g3_omega == 1.0:
            return ExternalSourceStats.coherent()
        return ExternalSourceStats.constant(self.g2_omega, self.g3_omega)

    @property
    def n_v(self):
        return thermal_occupancy(nu_v=self.nu_v_thz * THZ, temperature=self.temperature)

    def metadata(self):
        meta = {f.name: getattr(self, f.name) for f in fields(self)}
        meta["kind"] = self.kind.value
        return meta

    @classmethod
    def from_metadata(cls, meta):
        known = {f.name: f for f in fields(cls)}
        kwargs = {}
        for key, value in meta.items():
            if key not in known:
                continue
            kwargs[key] = _coerce(key, value)
        return cls(**kwargs)


def _coerce(key, value):
    if not isinstance(value, str):
        return value
    if key == "kind":
        return value
    if key == "log":
        return value.strip().lower() in ("1", "true", "yes")
    if key == "points":
        return int(value)
    if value in ("None", ""):
        return None
    if key == "drive_csv":
        return value
    return float(value)


@dataclass
class SweepResult:
    columns: list
    rows: list
    metadata: dict

    def column(self, name):
        i = self.columns.index(name)
        return np.array([r[i] for r in self.rows])


def run_sweep(spec: SweepSpec) -> SweepResult:
    """Evaluate the spec's scenario along its axis; rows come out in axis order."""
    n_v = spec.n_v
    src = spec.source()
    gamma = spec.gamma_v or NOMINAL_GAMMA_V
    xs = spec.axis()
    rows = []
    if spec.kind is SweepKind.G2_CURVE:
        columns = ["gamma_tau", "g2_cross"]
        for x in xs:
            c = ideal_correlations(n_v, gamma, float(x) / gamma, src)
            rows.append([float(x), c.g2_cross])
    elif spec.kind is SweepKind.DELAY:
        columns = ["gamma_tau", "purity", "efficiency"]
        for x in xs:
            f = purity_efficiency(ideal_correlations(n_v, gamma, float(x) / gamma, src))
            rows.append([float(x), f.purity, f.efficiency])
    elif spec.kind is SweepKind.COHERENCE:
        columns = ["molecules", "purity", "efficiency"]
        for x in xs:
            f = purity_efficiency(incoherent_correlations(n_v, float(x), src))
            rows.append([float(x), f.purity, f.efficiency])
    else:
        columns = ["snr", "purity", "efficiency"]
        base = ideal_correlations(n_v, gamma, 0.0, src)
        for x in xs:
            bg = BackgroundParams(float(x), float(x), g2_bg_ast=spec.g2_bg, g2_bg_st=spec.g2_bg)
            f = purity_efficiency(background_correlations(base, bg, src))
            rows.append([float(x), f.purity, f.efficiency])
    if spec.gamma_v is not None and spec.kind in (SweepKind.G2_CURVE, SweepKind.DELAY):
        columns.insert(1, "tau_s")
        rows = [[r[0], r[0] / spec.gamma_v, *r[1:]] for r in rows]
    for r in rows:
        if not all(math.isfinite(v) for v in r):
            raise ParameterDomainError(f"non-finite value in sweep row {r}")
    meta = {"tool": "raman_hsps", "version": __version__, **spec.metadata(), "n_v": n_v}
    return SweepResult(columns, rows, meta)


def run_point(scenario, *, temperature=300.0, nu_v_thz=50.0, gamma_v=NOMINAL_GAMMA_V,
              src=None, tau=0.0, molecules=None, snr_st=None, snr_ast=None, g2_bg=2.0,
              herald=Herald.STOKES):
    """Purity and efficiency at one parameter point of one scenario.

    ``scenario`` is ``"ideal"``, ``"delay"`` (uses ``tau`` in seconds),
    ``"incoherent"`` (uses ``molecules``) or ``"background"`` (uses the SNRs).
    """
    n_v = thermal_occupancy(nu_v=nu_v_thz * THZ, temperature=temperature)
    src = src or ExternalSourceStats.coherent()
    herald = Herald(herald)
    if scenario in ("ideal", "delay"):
        t = tau if scenario == "delay" else 0.0
        c = ideal_correlations(n_v, gamma_v, t, src, anti_stokes_first=herald is Herald.ANTI_STOKES)
    elif scenario == "incoherent":
        if molecules is None:
            raise ConfigurationError("incoherent scenario needs a molecule count")
        c = incoherent_correlations(n_v, molecules, src)
    elif scenario == "background":
        if snr_st is None:
            raise ConfigurationError("background scenario needs an SNR")
        snr_ast = snr_st if snr_ast is None else snr_ast
        bg = BackgroundParams(snr_st, snr_ast, g2_bg_ast=g2_bg, g2_bg_st=g2_bg)
        c = background_correlations(ideal_correlations(n_v, gamma_v, 0.0, src), bg, src)
    else:
        raise ConfigurationError(f"unknown scenario {scenario!r}")
    f = purity_efficiency(c, herald)
    return {"scenario": scenario, "herald": herald.value, "n_v": n_v,
            "purity": f.purity, "efficiency": f.efficiency}


# -- serialization ---------------------------------------------------------

def _fmt(v):
    if isinstance(v, float):
        return f"{v:.9g}"
    return str(v)


def _meta_value(v):
    if isinstance(v, Enum):
        return v.value
    if isinstance(v, float):
        return repr(v)
    return str(v)


def to_csv(columns, rows, metadata=None) -> str:
    """``#``-prefixed ``key=value`` metadata, a column-name row, then data at 9 significant digits."""
    buf = io.StringIO()
    for k, v in (metadata or {}).items():
        buf.write(f"# {k}={_meta_value(v)}\n")
    buf.write(",".join(columns) + "\n")
    for r in rows:
        buf.write(",".join(_fmt(v) for v in r) + "\n")
    return buf.getvalue()


def to_json(columns, rows, metadata=None) -> str:
    meta = {k: (v.value if isinstance(v, Enum) else v) for k, v in (metadata or {}).items()}
    return json.dumps({"metadata": meta, "columns": list(columns), "rows": rows}, indent=2) + "\n"


def render(result: SweepResult, fmt="csv") -> str:
    if fmt == "json":
        return to_json(result.columns, result.rows, result.metadata)
    return to_csv(result.columns, result.rows, result.metadata)


def parse_output(text, fmt="csv"):
    """Read back an emitted sweep: returns ``(metadata, columns, rows)``."""
    if fmt == "json":
        d = json.loads(text)
        return d["metadata"], d["columns"], d["rows"]
    meta, columns, rows = {}, None, []
    for line in text.splitlines():
        if line.startswith("#"):
            k, _, v = line[1:].strip().partition("=")
            meta[k] = v
        elif columns is None:
            columns = line.split(",")
        elif line:
            rows.append([float(x) for x in line.split(",")])
    return meta, columns, rows


def spec_from_output(text, fmt="csv") -> SweepSpec:
    meta, _, _ = parse_output(text, fmt)
    return SweepSpec.from_metadata(meta)

