"""Verifiers for the twisted (Landau-type) inequalities on the plane.

The twisted gradient carries a radial profile psi(|z|) multiplying the
rotation field (-y, x); its squared norm is always assembled componentwise
in Cartesian form from the analytic polar partials, so left-hand sides are
the displayed integrands and nothing is simplified away.  Plane functions
are TestFunctions with k = 0; the x-radial real case generalizes to any
even dimension 2n through the sphere-factor reduction.
"""

from __future__ import annotations

import math

import numpy as np

from ..errors import AdmissibilityError, DomainError
from ..fields import RadialPotential
from ..functions import TestFunction
from ..quadrature import Domain, QuadratureSpec
from ..reports import IdentityReport, InequalityReport, SuperweightParams
from ._grids import (
    abs2,
    mode_zero_sq,
    polar_integral,
    require_phi_resolution,
    rx_integral,
    support_domain,
)
from .grushin import _require_real, _resolution

__all__ = [
    "check_twisted_polar_identity",
    "verify_landau",
    "verify_real_landau",
]


def _require_plane(f: TestFunction) -> None:
    if f.modes and f.k != 0:
        raise DomainError("plane functions carry no y-block (k = 0)")


def _twisted_sq(psi, f: TestFunction):
    """Density (r, phi, y) -> |twisted gradient of f|^2, componentwise."""

    def density(r, phi, y):
        fr, fphi, _ = f.partials_polar(r, phi, y)
        val = f.value_polar(r, phi, y)
        c, s = math.cos(phi), math.sin(phi)
        fx = c * fr - s * fphi / r
        fy = s * fr + c * fphi / r
        pv = np.asarray(psi(r))
        tx = fx - 1j * pv * (r * s) * val
        ty = fy + 1j * pv * (r * c) * val
        return abs2(tx) + abs2(ty)

    return density


def check_twisted_polar_identity(psi, kappa, f: TestFunction,
                                 spec: QuadratureSpec) -> IdentityReport:
    """Polar split of the twisted Dirichlet integral against a radial weight.

    lhs: componentwise |twisted grad f|^2 / kappa(r); rhs: the polar form
    (|df/dr|^2 + |df/dphi|^2/r^2 + psi^2 r^2 |f|^2) / kappa(r), i.e. the
    split without any angular cross contribution.
    """
    _require_plane(f)
    params = {"psi_kind": getattr(psi, "kind", "user"),
              "psi_params": list(getattr(psi, "params", ()))}
    if not f.modes:
        return IdentityReport("twisted_polar", 0.0, 0.0, params, _resolution(spec))
    require_phi_resolution(f, spec)
    dom = support_domain(f)
    tw = _twisted_sq(psi, f)

    def lhs_density(r, phi, y):
        return tw(r, phi, y) / np.asarray(kappa(r))

    def rhs_density(r, phi, y):
        fr, fphi, _ = f.partials_polar(r, phi, y)
        val = f.value_polar(r, phi, y)
        pv = np.asarray(psi(r))
        return (abs2(fr) + abs2(fphi) / r**2 + pv**2 * r**2 * abs2(val)) \
            / np.asarray(kappa(r))

    lhs = polar_integral(lhs_density, spec, dom)
    rhs = polar_integral(rhs_density, spec, dom)
    return IdentityReport("twisted_polar", lhs, rhs, params, _resolution(spec))


# ---------------------------------------------------------------------------
# The four weighted inequalities for the twisted gradient
# ---------------------------------------------------------------------------

_LANDAU_IDS = {
    "hardy_sobolev": "landau_hardy_sobolev",
    "log": "landau_log",
    "poincare": "landau_poincare",
    "superweight": "landau_superweight",
}


def verify_landau(variant: str, psi: RadialPotential,
                  params: SuperweightParams | None, f: TestFunction,
                  spec: QuadratureSpec,
                  domain: Domain | None = None) -> InequalityReport:
    """Weighted Hardy/Poincare bounds for the twisted gradient on the plane.

    variant selects the weight family:
      hardy_sobolev  power weights 1/|z|^(2 theta1), theta1 != 0
      log            log^2|z| against the constant 1/4
      poincare       bounded ball, constant 1/R^2
      superweight    (a + b|z|^theta2)^theta3 / |z|^(2 theta4) weights
    Every right-hand term of the corresponding display is evaluated,
    including the psi^2 term and the angular-defect remainder.
    """
    if variant not in _LANDAU_IDS:
        raise DomainError(f"unknown variant {variant!r}")
    theorem_id = _LANDAU_IDS[variant]
    _require_plane(f)

    # weight setup and admissibility per variant
    if variant == "hardy_sobolev":
        if params is None:
            raise AdmissibilityError("power-weight variant needs theta1")
        t1 = params.theta1 if isinstance(params, SuperweightParams) else float(params)
        if t1 == 0.0:
            raise AdmissibilityError("power-weight variant needs theta1 != 0")
        sharp = t1 * t1
    elif variant == "log":
        if f.modes and f.support()[1] > 1.0 + 1e-12:
            raise AdmissibilityError(
                "log-weighted bound needs support inside the closed unit disc")
        sharp = 0.25
    elif variant == "poincare":
        if domain is None or domain.kind != "ball":
            raise AdmissibilityError("bounded variant needs a ball domain")
        R = float(domain.R_Omega)
        if f.modes and f.support()[1] > R * (1.0 + 1e-12):
            raise AdmissibilityError("function must be supported inside the ball")
        sharp = 1.0 / (R * R)
    else:
        if params is None:
            raise AdmissibilityError("superweight variant needs its parameters")
        if not (2.0 * params.theta4 <= params.theta2 * params.theta3):
            raise AdmissibilityError("need 2*theta4 <= theta2*theta3")
        a, b = params.a, params.b
        t2, t3, t4 = params.theta2, params.theta3, params.theta4
        sharp = 0.5 * (t2 * t3 - 2.0 * t4)

    run_params = {"variant": variant,
                  "psi_kind": getattr(psi, "kind", "user"),
                  "psi_params": list(getattr(psi, "params", ()))}
    if variant == "hardy_sobolev":
        run_params["theta1"] = t1
    elif isinstance(params, SuperweightParams):
        run_params["weights"] = params.to_dict()
    if domain is not None and domain.kind == "ball":
        run_params["R"] = float(domain.R_Omega)
    res = _resolution(spec)
    if not f.modes:
        terms = {"main": 0.0, "psi_potential": 0.0, "mode_defect": 0.0}
        return InequalityReport(theorem_id, 0.0, terms, sharp, run_params, res)
    require_phi_resolution(f, spec)

    dom = support_domain(f) if domain is None else Domain(
        r_lo=f.support()[0], r_hi=f.support()[1], y_box=(),
        kind=domain.kind, R_Omega=domain.R_Omega,
        r_breaks=f.support()[3])
    tw = _twisted_sq(psi, f)
    f0_sq = mode_zero_sq(f)

    def wv(r):
        # the variant's base weight, gradient-side
        if variant == "hardy_sobolev":
            return r ** (-2.0 * t1)
        if variant == "log":
            return np.log(r) ** 2
        if variant == "poincare":
            return np.ones_like(r)
        return (a + b * r**t2) ** t3 * r ** (-2.0 * t4)

    def main_weight(r):
        if variant == "hardy_sobolev":
            return r ** (-2.0 * t1 - 2.0)
        if variant == "log":
            return np.ones_like(r)
        if variant == "poincare":
            return np.ones_like(r)
        return (a + b * r**t2) ** t3 * r ** (-2.0 * t4 - 2.0)

    def psi_weight(r):
        pv = np.asarray(psi(r)) ** 2
        if variant == "hardy_sobolev":
            return pv * r ** (-2.0 * t1 + 2.0)
        if variant == "log":
            return pv * r**2 * np.log(r) ** 2
        if variant == "poincare":
            return pv * r**2
        return pv * (a + b * r**t2) ** t3 * r ** (-2.0 * t4 + 2.0)

    def defect_weight(r):
        if variant == "log":
            return np.log(r) ** 2 / r**2
        return main_weight(r)

    lhs = polar_integral(lambda r, p_, y: wv(r) * tw(r, p_, y), spec, dom)
    main = sharp * polar_integral(
        lambda r, p_, y: main_weight(r) * abs2(f.value_polar(r, p_, y)), spec, dom)
    psi_term = polar_integral(
        lambda r, p_, y: psi_weight(r) * abs2(f.value_polar(r, p_, y)), spec, dom)
    defect = polar_integral(
        lambda r, p_, y: defect_weight(r)
        * (abs2(f.value_polar(r, p_, y)) - f0_sq(r, y)), spec, dom)

    terms = {"main": main, "psi_potential": psi_term, "mode_defect": defect}
    return InequalityReport(theorem_id, lhs, terms, sharp, run_params, res)


# ---------------------------------------------------------------------------
# Classical-field (psi = 1/2) statements for real functions
# ---------------------------------------------------------------------------

def _landau_radial_sq(f: TestFunction):
    """(r, y) -> |grad f|^2 + (r^2/4)|f|^2 for x-radial f (any even dim)."""

    def density(r, y):
        fr, _, _ = f.partials_polar(r, 0.0, y)
        val = f.value_polar(r, 0.0, y)
        return abs2(fr) + 0.25 * r**2 * abs2(val)

    return density


def verify_real_landau(variant: str, n: int, f: TestFunction,
                       spec: QuadratureSpec, Omega: Domain | None = None,
                       R: float | None = None):
    """Classical constant-field statements (psi = 1/2) for real functions.

    variant: identity (the Dirichlet + harmonic-potential split, n = 1),
    hardy ((n-1)^2 constant), critical (log-weighted, n = 1, needs
    R >= e * sup|z|), uncertainty (norm product vs the pointwise sqrt bound).
    """
    if n < 1:
        raise DomainError("need n >= 1")
    _require_plane(f)
    _require_real(f, "the classical-field statement")
    if n >= 2 and f.modes and not f.is_radial:
        raise AdmissibilityError("n >= 2 runs through the radial reduction")
    half = RadialPotential.constant(0.5)
    res = _resolution(spec)
    dim = 2 * n

    if variant == "critical" or (variant == "uncertainty" and n == 1):
        if f.modes:
            sup_z = f.support()[1]
            if Omega is not None:
                sup_z = float(Omega.R_Omega)
                if f.support()[1] > sup_z * (1.0 + 1e-12):
                    raise AdmissibilityError("function must be supported in Omega")
            R = math.e * sup_z if R is None else float(R)
            if R < math.e * sup_z * (1.0 - 1e-12):
                raise AdmissibilityError("need R >= e * sup|z| over the domain")

    params = {"n": n, "variant": variant}
    if R is not None:
        params["R"] = R

    if variant == "identity":
        if n != 1:
            raise DomainError("the split identity check runs on the plane (n=1)")
        if not f.modes:
            return IdentityReport("real_landau_identity", 0.0, 0.0, params, res)
        require_phi_resolution(f, spec)
        dom = support_domain(f)
        lhs = polar_integral(_twisted_sq(half, f), spec, dom)

        def plain_density(r, phi, y):
            fr, fphi, _ = f.partials_polar(r, phi, y)
            return abs2(fr) + abs2(fphi) / r**2

        rhs = polar_integral(plain_density, spec, dom) + polar_integral(
            lambda r, p_, y: 0.25 * r**2 * abs2(f.value_polar(r, p_, y)), spec, dom)
        return IdentityReport("real_landau_identity", lhs, rhs, params, res)

    if variant == "hardy":
        sharp = float((n - 1) ** 2)
        if not f.modes:
            return InequalityReport("real_landau_hardy", 0.0,
                                    {"main": 0.0, "psi_potential": 0.0},
                                    sharp, params, res)
        if n == 1:
            require_phi_resolution(f, spec)
            dom = support_domain(f)
            lhs = polar_integral(_twisted_sq(half, f), spec, dom)
            main = sharp * polar_integral(
                lambda r, p_, y: abs2(f.value_polar(r, p_, y)) / r**2, spec, dom)
            pot = polar_integral(
                lambda r, p_, y: 0.25 * r**2 * abs2(f.value_polar(r, p_, y)),
                spec, dom)
        else:
            dom = support_domain(f)
            lhs = rx_integral(_landau_radial_sq(f), spec, dom, dim)
            main = sharp * rx_integral(
                lambda r, y: abs2(f.value_polar(r, 0.0, y)) / r**2, spec, dom, dim)
            pot = rx_integral(
                lambda r, y: 0.25 * r**2 * abs2(f.value_polar(r, 0.0, y)),
                spec, dom, dim)
        return InequalityReport("real_landau_hardy", lhs,
                                {"main": main, "psi_potential": pot},
                                sharp, params, res)

    if variant == "critical":
        if n != 1:
            raise DomainError("the log-weighted bound is stated on the plane")
        sharp = 0.25
        if not f.modes:
            return InequalityReport("real_landau_critical", 0.0,
                                    {"main": 0.0, "psi_potential": 0.0},
                                    sharp, params, res)
        require_phi_resolution(f, spec)
        dom = support_domain(f)
        lhs = polar_integral(_twisted_sq(half, f), spec, dom)
        main = sharp * polar_integral(
            lambda r, p_, y: abs2(f.value_polar(r, p_, y))
            / (r**2 * np.log(R / r) ** 2), spec, dom)
        pot = polar_integral(
            lambda r, p_, y: 0.25 * r**2 * abs2(f.value_polar(r, p_, y)), spec, dom)
        return InequalityReport("real_landau_critical", lhs,
                                {"main": main, "psi_potential": pot},
                                sharp, params, res)

    if variant == "uncertainty":
        sharp = 1.0
        if not f.modes:
            return InequalityReport("real_landau_uncertainty", 0.0, {"main": 0.0},
                                    sharp, params, res)
        dom = support_domain(f)
        if n == 1:
            require_phi_resolution(f, spec)
            grad_sq = polar_integral(_twisted_sq(half, f), spec, dom)
            norm_sq = polar_integral(
                lambda r, p_, y: abs2(f.value_polar(r, p_, y)), spec, dom)

            def bound_density(r, phi, y):
                root = np.sqrt(0.25 / (r**2 * np.log(R / r) ** 2) + 0.25 * r**2)
                return root * abs2(f.value_polar(r, phi, y))

            main = polar_integral(bound_density, spec, dom)
        else:
            grad_sq = rx_integral(_landau_radial_sq(f), spec, dom, dim)
            norm_sq = rx_integral(
                lambda r, y: abs2(f.value_polar(r, 0.0, y)), spec, dom, dim)

            def bound_density(r, y):
                root = np.sqrt((n - 1) ** 2 / r**2 + 0.25 * r**2)
                return root * abs2(f.value_polar(r, 0.0, y))

            main = rx_integral(bound_density, spec, dom, dim)
        lhs = math.sqrt(max(grad_sq, 0.0)) * math.sqrt(max(norm_sq, 0.0))
        return InequalityReport("real_landau_uncertainty", lhs, {"main": main},
                                sharp, params, res)

    raise DomainError(f"unknown variant {variant!r}")
