"""Static catalog of the checkable statements: ids, constants, conditions."""

from __future__ import annotations

__all__ = ["THEOREMS", "IDENTITIES", "list_theorems"]

# theorem_id -> (constant formula, admissibility conditions)
THEOREMS = {
    "radial_hardy": (
        "((Q+a1-2)/2)^2",
        "Q+a1-2 > 0, m+g*a2 > 0; radial f",
    ),
    "magnetic_grushin": (
        "((Q+a1-2)/2)^2 + b^2",
        "Q+a1-2 > 0, m+g*a2 > 0; real f",
    ),
    "ab_hardy": (
        "((a1+k(g+1))/2)^2 + b^2",
        "m = 2, a1+k(g+1) > 0, and a2+2g > 0 (thm2) or a2*g+2 > 0 (corollary)",
    ),
    "uncertainty_grushin": (
        "(((Q+a1-2)/2)^2 + b^2)^(1/2)",
        "as magnetic_grushin; norms halve the weight exponents",
    ),
    "uncertainty_ab": (
        "(((a1+k(g+1))/2)^2 + b^2)^(1/2)",
        "m = 2, a1+k(g+1) > 0, a2*g+2 > 0",
    ),
    "landau_hardy_sobolev": (
        "theta1^2",
        "theta1 != 0",
    ),
    "landau_log": (
        "1/4",
        "support inside the closed unit disc",
    ),
    "landau_poincare": (
        "1/R^2",
        "bounded ball of radius R containing the support",
    ),
    "landau_superweight": (
        "(t2*t3 - 2*t4)/2",
        "a, b > 0, t2*t3 < 0, 2*t4 <= t2*t3",
    ),
    "radial_p_weighted": (
        "|p/(Q - theta*p)|",
        "p > 1, theta*p != Q; radial f",
    ),
    "radial_p_log": (
        "p",
        "p > 1; radial f",
    ),
    "radial_p_poincare": (
        "R*p/Q",
        "p > 1, support inside [0, R]; radial f",
    ),
    "radial_p_superweight": (
        "(Q - p*t4 + t2*t3 - p)/p",
        "p > 1, a, b > 0, t2*t3 < 0, p*t4 - t2*t3 <= Q - p; radial f",
    ),
    "real_landau_hardy": (
        "(n-1)^2",
        "n >= 1; real f (radial for n >= 2)",
    ),
    "real_landau_critical": (
        "1/4",
        "n = 1, R >= e * sup|z| over the domain; real f",
    ),
    "real_landau_uncertainty": (
        "1 (norm product vs pointwise bound)",
        "n >= 1; real f; R as in real_landau_critical when n = 1",
    ),
    "constant_field": (
        "(n(2+g)+a1-2)/2 as printed; squared reading also evaluated",
        "m = k = n, n(2+g)+a1-2 > 0, n+a2*g > 0; real radial f",
    ),
}

# identity_id -> description
IDENTITIES = {
    "grushin_ibp": "shifted-gradient expansion of the anisotropic Dirichlet form",
    "twisted_polar": "polar split of the twisted Dirichlet integral over kappa",
    "real_landau_identity": "Dirichlet + harmonic-potential split on the plane",
}


def list_theorems() -> str:
    """Stable text table of every checkable statement."""
    width = max(len(k) for k in list(THEOREMS) + list(IDENTITIES))
    lines = ["margin checks:"]
    for tid, (const, cond) in THEOREMS.items():
        lines.append(f"  {tid:<{width}}  constant: {const}")
        lines.append(f"  {'':<{width}}  requires: {cond}")
    lines.append("identity checks:")
    for iid, desc in IDENTITIES.items():
        lines.append(f"  {iid:<{width}}  {desc}")
    return "\n".join(lines)
