"""Rayleigh-quotient sharpness estimation for the Hardy-type constants.

Each supported constant admits a one-dimensional reduced quotient in a
logarithmic variable: substituting f = t^(-s/2) w(log t) into the radial
energy turns the weighted Dirichlet/norm pair into

    quotient = s^2/4 + integral(w'^2) / integral(w^2)

exactly (the cross term integrates to zero over compact supports), and the
analogous substitutions handle the logarithmic and composite weights.  The
engine evaluates these reduced functionals by panelled Gauss-Legendre
quadrature for a window family w and drives the window toward the
extremizing regime along a schedule of widths.

Two window shapes are available: "gauss" (a Gaussian of scale 1/eps under
a wide plateau; quotients exceed the constant by about eps^2/2) and
"plain" (e^(eps u) on the family's own cutoff window, matching make_trial
exactly so full tensor quadrature can cross-check the reduction).
"""

from __future__ import annotations

import math

import numpy as np

from ..errors import AdmissibilityError, DomainError
from ..functions import TrialFamily, _plateau, _plateau_d, plateau_breaks
from ..reports import SharpnessResult, SuperweightParams

__all__ = ["estimate_sharpness", "DEFAULT_SCHEDULE"]

DEFAULT_SCHEDULE = (0.5, 0.2, 0.1, 0.05, 0.02)

_FAMILY_FOR = {
    "radial_hardy": "rho_power",
    "magnetic_grushin": "rho_power",
    "landau_hardy_sobolev": "inverse_power",
    "landau_log": "log_power",
    "landau_superweight": "power",
}

_PANEL_N = 240


def _gl_panels(edges, n=_PANEL_N):
    """Gauss-Legendre nodes/weights over consecutive panels [e0,e1],[e1,e2],..."""
    x, w = np.polynomial.legendre.leggauss(n)
    nodes, weights = [], []
    for lo, hi in zip(edges[:-1], edges[1:]):
        mid, half = 0.5 * (lo + hi), 0.5 * (hi - lo)
        nodes.append(mid + half * x)
        weights.append(half * w)
    return np.concatenate(nodes), np.concatenate(weights)


def _gauss_window(eps: float, center: float = 0.0):
    """Gaussian of scale 1/eps under a plateau of half-width 6/eps."""
    U = 6.0 / eps
    lo, hi = center - U, center + U
    b1, b2 = plateau_breaks(lo, hi)

    def val(u):
        return np.exp(-0.5 * (eps * (u - center)) ** 2) * _plateau(u, lo, hi)

    def der(u):
        g = np.exp(-0.5 * (eps * (u - center)) ** 2)
        return g * (_plateau_d(u, lo, hi)
                    - eps * eps * (u - center) * _plateau(u, lo, hi))

    return val, der, (lo, b1, b2, hi)


def _plain_window(eps: float, u_lo: float, u_hi: float):
    """e^(eps u) on the plateau window [u_lo, u_hi] — the make_trial shape."""
    b1, b2 = plateau_breaks(u_lo, u_hi)

    def val(u):
        return np.exp(eps * u) * _plateau(u, u_lo, u_hi)

    def der(u):
        return np.exp(eps * u) * (eps * _plateau(u, u_lo, u_hi)
                                  + _plateau_d(u, u_lo, u_hi))

    return val, der, (u_lo, b1, b2, u_hi)


def _power_quotient(base: float, val, der, edges) -> float:
    u, w = _gl_panels(edges)
    num = float(np.sum(w * der(u) ** 2))
    den = float(np.sum(w * val(u) ** 2))
    return base + num / den


def _log_quotient(val, der, edges) -> float:
    # w is log(-log r); the plane measure contributes exp(-2 e^w) on the
    # norm side, which is what confines the sharp regime to the unit disc.
    u, w = _gl_panels(edges)
    v, d = val(u), der(u)
    num = float(np.sum(w * (d - 0.5 * v) ** 2))
    den = float(np.sum(w * v * v * np.exp(-2.0 * np.exp(u))))
    return num / den


def _superweight_quotient(sw: SuperweightParams, c: float, val, der,
                          edges) -> float:
    log_a, log_b = math.log(sw.a), math.log(sw.b)
    t2, t3 = sw.theta2, sw.theta3

    def G(u):
        # (a e^(-theta2 u) + b)^theta3 without overflowing the inner power
        return np.exp(t3 * np.logaddexp(log_a - t2 * u, log_b))

    u, w = _gl_panels(edges)
    g = G(u)
    num = float(np.sum(w * g * (der(u) - c * val(u)) ** 2))
    den = float(np.sum(w * g * val(u) ** 2))
    return num / den


def estimate_sharpness(theorem_id: str, params, family: TrialFamily,
                       schedule=None, window: str = "gauss") -> SharpnessResult:
    """Drive a trial-family quotient toward a constant; report the schedule.

    params carries the constant's data: {"geom", "exps"} (plus "flux" for
    the magnetic case), {"theta1": ...} for the power-weight twisted bound,
    nothing for the logarithmic one, a SuperweightParams for the composite
    weights.  window="gauss" uses the engine's own near-extremal windows;
    window="plain" evaluates the exact make_trial shape on family.cutoff so
    the reduced quotient can be checked against full quadrature.
    """
    want = _FAMILY_FOR.get(theorem_id)
    if want is None:
        raise AdmissibilityError(f"no sharpness engine for {theorem_id!r}")
    if family.base != want:
        raise AdmissibilityError(
            f"{theorem_id} takes the {want} trial family, not {family.base}")
    if window not in ("gauss", "plain"):
        raise DomainError(f"unknown window {window!r}")
    if schedule is None:
        schedule = DEFAULT_SCHEDULE
    schedule = tuple(float(e) for e in schedule)
    if not schedule or any(e <= 0.0 for e in schedule):
        raise DomainError("schedule must be positive epsilons")

    run_params: dict = {"window": window, "family": family.base}
    lo, hi = family.cutoff

    if theorem_id in ("radial_hardy", "magnetic_grushin"):
        geom, exps = params["geom"], params["exps"]
        s = geom.hom_dim + exps.alpha1 - 2.0
        if s <= 0.0:
            raise AdmissibilityError("need Q + alpha1 - 2 > 0")
        base = 0.25 * s * s
        run_params.update(m=geom.m, k=geom.k, gamma=geom.gamma,
                          alpha1=exps.alpha1, alpha2=exps.alpha2)
        if theorem_id == "magnetic_grushin":
            beta = params["flux"].beta
            base += beta * beta
            run_params["beta"] = beta
        sharp = base
        points = []
        for eps in schedule:
            if window == "gauss":
                valdereg = _gauss_window(eps)
            else:
                valdereg = _plain_window(eps, math.log(lo), math.log(hi))
            points.append((eps, _power_quotient(base, *valdereg)))
        return SharpnessResult(theorem_id, points, sharp, run_params)

    if theorem_id == "landau_hardy_sobolev":
        t1 = float(params["theta1"])
        if t1 == 0.0:
            raise AdmissibilityError("need theta1 != 0")
        base = t1 * t1
        run_params["theta1"] = t1
        points = []
        for eps in schedule:
            if window == "gauss":
                valdereg = _gauss_window(eps)
            else:
                # trials r^(theta1 - eps) tilt the reduced window by -eps
                valdereg = _plain_window(-eps, math.log(lo), math.log(hi))
            points.append((eps, _power_quotient(base, *valdereg)))
        return SharpnessResult(theorem_id, points, base, run_params)

    if theorem_id == "landau_log":
        points = []
        for eps in schedule:
            if window == "gauss":
                U = 6.0 / eps
                W = 2.0 + 0.08 / eps
                valdereg = _gauss_window(eps, center=-(U + W))
            else:
                if not (0.0 < lo < hi < 1.0):
                    raise AdmissibilityError(
                        "logarithmic trials live inside the unit disc")
                w_lo, w_hi = math.log(-math.log(hi)), math.log(-math.log(lo))
                valdereg = _plain_window(eps, w_lo, w_hi)
            points.append((eps, _log_quotient(*valdereg)))
        return SharpnessResult(theorem_id, points, 0.25, run_params)

    # landau_superweight
    sw = params if isinstance(params, SuperweightParams) else None
    if sw is None:
        raise AdmissibilityError("composite-weight sharpness needs its parameters")
    c = 0.5 * (sw.theta2 * sw.theta3 - 2.0 * sw.theta4)
    if c < 0.0:
        raise AdmissibilityError("need a nonnegative main constant")
    sharp = c * c
    run_params.update(weights=sw.to_dict(), constant_reading="squared")
    points = []
    for eps in schedule:
        if window == "gauss":
            U = 6.0 / eps
            if sw.theta2 < 0.0:
                center = math.log(0.05) - U   # push toward the origin
            else:
                center = math.log(20.0) + U   # push toward infinity
            valdereg = _gauss_window(eps, center=center)
        else:
            valdereg = _plain_window(eps, math.log(lo), math.log(hi))
        points.append((eps, _superweight_quotient(sw, c, *valdereg)))
    return SharpnessResult(theorem_id, points, sharp, run_params)
