"""Scaling fits on sweep output.

Three modes, one per near-critical regime signature:

* LogLogSlope: slope of log rho_bar vs log theta (or vs log(theta - theta_c)
  when the critical strength is positive).
* InverseThetaSlope: slope of log rho_bar vs 1/theta.
* NormalizedBand: max/min ratio of the per-n mean of c1 / n**(1/(gamma-1))
  across instance sizes (flat band = subcritical max-cluster scaling holds).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .analytics import critical_theta
from .errors import FitError

FIT_SCHEMA = "cl-fit-1"

MODE_LOGLOG = "LogLogSlope"
MODE_INVERSE_THETA = "InverseThetaSlope"
MODE_BAND = "NormalizedBand"

FIT_MODES = (MODE_LOGLOG, MODE_INVERSE_THETA, MODE_BAND)


@dataclass(frozen=True)
class FitReport:
    """Result of one fit, JSON-serializable via to_dict."""

    mode: str
    slope: float | None = None
    stderr: float | None = None
    intercept: float | None = None
    n_points: int = 0
    x_name: str = ""
    y_name: str = ""
    gamma: float | None = None
    theta_c: float | None = None
    band_ratio: float | None = None
    n_values: tuple = ()
    band_means: tuple = ()
    schema: str = field(default=FIT_SCHEMA)

    def to_dict(self) -> dict:
        return {
            "schema": self.schema,
            "mode": self.mode,
            "slope": self.slope,
            "stderr": self.stderr,
            "intercept": self.intercept,
            "n_points": self.n_points,
            "x_name": self.x_name,
            "y_name": self.y_name,
            "gamma": self.gamma,
            "theta_c": self.theta_c,
            "band_ratio": self.band_ratio,
            "n_values": list(self.n_values),
            "band_means": list(self.band_means),
        }


def fit_rows(rows, mode: str) -> FitReport:
    """Dispatch a fit mode over parsed sweep rows."""
    if mode == MODE_LOGLOG:
        return fit_loglog_slope(rows)
    if mode == MODE_INVERSE_THETA:
        return fit_inverse_theta_slope(rows)
    if mode == MODE_BAND:
        return fit_normalized_band(rows)
    raise FitError(f"unknown fit mode {mode!r}; expected one of {FIT_MODES}")


def fit_loglog_slope(rows) -> FitReport:
    """Least-squares slope of log rho_bar against log theta.

    When the critical strength is positive the abscissa is
    log(theta - theta_c) instead, the regime's natural coordinate.
    """
    gamma = _single_gamma(rows)
    theta_c = critical_theta(gamma)
    xs, ys = [], []
    for row in _ok_rows(rows):
        rho = row["rho_bar_analytic"]
        dt = row["theta"] - theta_c
        if rho is not None and rho > 0.0 and dt > 0.0:
            xs.append(math.log(dt))
            ys.append(math.log(rho))
    x_name = "log(theta - theta_c)" if theta_c > 0.0 else "log(theta)"
    slope, stderr, intercept = _least_squares(xs, ys)
    return FitReport(
        mode=MODE_LOGLOG,
        slope=slope,
        stderr=stderr,
        intercept=intercept,
        n_points=len(xs),
        x_name=x_name,
        y_name="log(rho_bar_analytic)",
        gamma=gamma,
        theta_c=theta_c,
    )


def fit_inverse_theta_slope(rows) -> FitReport:
    """Least-squares slope of log rho_bar against 1/theta."""
    gamma = _single_gamma(rows)
    xs, ys = [], []
    for row in _ok_rows(rows):
        rho = row["rho_bar_analytic"]
        if rho is not None and rho > 0.0 and row["theta"] > 0.0:
            xs.append(1.0 / row["theta"])
            ys.append(math.log(rho))
    slope, stderr, intercept = _least_squares(xs, ys)
    return FitReport(
        mode=MODE_INVERSE_THETA,
        slope=slope,
        stderr=stderr,
        intercept=intercept,
        n_points=len(xs),
        x_name="1/theta",
        y_name="log(rho_bar_analytic)",
        gamma=gamma,
        theta_c=critical_theta(gamma),
    )


def fit_normalized_band(rows) -> FitReport:
    """Spread of the normalized max-cluster statistic across instance sizes."""
    gamma = _single_gamma(rows)
    per_n: dict[int, list[float]] = {}
    for row in _ok_rows(rows):
        if row["n"] is not None and row["max_cluster_normalized"] is not None:
            per_n.setdefault(row["n"], []).append(row["max_cluster_normalized"])
    if len(per_n) < 2:
        raise FitError(
            f"band fit needs rows for at least 2 instance sizes, got {len(per_n)}"
        )
    n_values = tuple(sorted(per_n))
    means = tuple(float(np.mean(per_n[n])) for n in n_values)
    return FitReport(
        mode=MODE_BAND,
        n_points=sum(len(v) for v in per_n.values()),
        x_name="n",
        y_name="mean(max_cluster_normalized)",
        gamma=gamma,
        theta_c=critical_theta(gamma),
        band_ratio=max(means) / min(means),
        n_values=n_values,
        band_means=means,
    )


def fit_loglog_points(xs, ys) -> tuple:
    """Plain log-log regression on positive points (x, y)."""
    lx, ly = [], []
    for x, y in zip(xs, ys):
        if x > 0.0 and y > 0.0:
            lx.append(math.log(x))
            ly.append(math.log(y))
    return _least_squares(lx, ly)


def _least_squares(xs, ys) -> tuple:
    """(slope, stderr, intercept) of ordinary least squares; needs >= 3 points."""
    if len(xs) < 3:
        raise FitError(f"fit needs at least 3 points, got {len(xs)}")
    x = np.asarray(xs)
    y = np.asarray(ys)
    sxx = float(((x - x.mean()) ** 2).sum())
    if sxx == 0.0:
        raise FitError("fit abscissa is constant")
    slope = float(((x - x.mean()) * (y - y.mean())).sum() / sxx)
    intercept = float(y.mean() - slope * x.mean())
    resid = y - (slope * x + intercept)
    dof = len(xs) - 2
    sigma2 = float((resid**2).sum() / dof) if dof > 0 else 0.0
    stderr = math.sqrt(sigma2 / sxx)
    return slope, stderr, intercept


def _ok_rows(rows):
    return [row for row in rows if row.get("status", "ok") == "ok"]


def _single_gamma(rows) -> float:
    gammas = {row["gamma"] for row in _ok_rows(rows)}
    if not gammas:
        raise FitError("no usable rows (all failed or empty)")
    if len(gammas) != 1:
        raise FitError(f"fit needs a single gamma, found {sorted(gammas)}")
    return float(gammas.pop())
