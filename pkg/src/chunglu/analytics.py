"""Deterministic giant-component mathematics.

Everything here is a pure function of its inputs (no RNG): the power-law
weight profile, its integrals, the critical kernel strength, the
survival-mass function g and its fixed point, the survival profile, the
giant fraction, the near-critical asymptotic laws, and the Erdos-Renyi
closed-form fixed point.

Integrals are evaluated with adaptive Gauss-Kronrod quadrature (QUADPACK
via scipy), always on a substituted integrand that tames the integrable
endpoint singularity of the weight profile.  The raw-form integrands are
kept available so tests can confirm both routes agree.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import exp, expm1, log

from scipy.integrate import quad

from .errors import BracketError, QuadratureError, UnsupportedRegimeError
from .params import DEFAULT_QUADRATURE, ModelParams, QuadratureConfig

_MAX_BISECTIONS = 400


@dataclass(frozen=True)
class FixedPointSolution:
    """Solution of a = theta * g(a) for one (gamma, theta), plus diagnostics.

    a_theta is the largest nonnegative fixed point, rho_bar the giant
    fraction it induces, residual the defect |a - theta*g(a)| at the
    returned point.
    """

    a_theta: float
    rho_bar: float
    theta_c: float
    residual: float
    iterations: int
    converged: bool


def _quad(f, lo, hi, cfg: QuadratureConfig, points=None) -> float:
    """Adaptive quadrature; raises QuadratureError when the estimate is bad."""
    out = quad(
        f,
        lo,
        hi,
        epsabs=cfg.abs_tol,
        epsrel=cfg.rel_tol,
        limit=cfg.max_subdivisions,
        full_output=1,
        points=points,
    )
    value, abserr = out[0], out[1]
    if len(out) > 3:
        requested = max(cfg.abs_tol, cfg.rel_tol * abs(value))
        if abserr > requested:
            raise QuadratureError(
                f"quadrature did not converge: {out[3]} "
                f"(achieved {abserr:.3e}, requested {requested:.3e})",
                achieved=abserr,
                requested=requested,
            )
    return value


def weight(x: float, gamma: float) -> float:
    """Power-law vertex weight x**(-1/(gamma-1)) on (0, 1]."""
    _check_gamma(gamma)
    if not 0.0 < x <= 1.0:
        raise ValueError(f"weight profile is defined on (0, 1], got x={x}")
    return x ** (-1.0 / (gamma - 1.0))


def weight_integral(gamma: float) -> float:
    """Mean weight B = integral of the profile over (0,1) = (gamma-1)/(gamma-2)."""
    _check_gamma(gamma)
    return (gamma - 1.0) / (gamma - 2.0)


def critical_theta(gamma: float) -> float:
    """Kernel strength where the giant component appears.

    Equals the reciprocal of the profile's second moment, which diverges
    for gamma <= 3; there the critical strength is exactly 0.  Closed form
    for gamma > 3: (gamma-3)/(gamma-1).
    """
    _check_gamma(gamma)
    if gamma <= 3.0:
        return 0.0
    return (gamma - 3.0) / (gamma - 1.0)


def weight_moment_quadrature(
    gamma: float, power: int, cfg: QuadratureConfig = DEFAULT_QUADRATURE
) -> float:
    """integral of weight(x)**power dx over (0,1), by quadrature.

    Substituted via z = x**(1/(gamma-1)), which turns the integrand into
    (gamma-1) * z**(gamma-2-power); finite only for power < gamma - 1.
    """
    _check_gamma(gamma)
    if power >= gamma - 1.0:
        raise ValueError(
            f"weight moment of order {power} diverges for gamma={gamma}"
        )
    e = gamma - 2.0 - power
    return (gamma - 1.0) * _quad(lambda z: z**e, 0.0, 1.0, cfg)


def _exp_remainder3(y: float) -> float:
    """exp(-y) - 1 + y - y**2/2, without cancellation for small y."""
    if y > 0.7:
        return exp(-y) - 1.0 + y - 0.5 * y * y
    term = -(y * y * y) / 6.0
    total = term
    k = 4
    while abs(term) > 1e-20 * abs(total):
        term *= -y / k
        total += term
        k += 1
    return total


def _power_integral(x: float, e: float) -> float:
    """integral over (x,1) of y**e dy for 0 < x < 1, any real e."""
    if abs(e + 1.0) < 1e-12:
        return -log(x)
    return -expm1((e + 1.0) * log(x)) / (e + 1.0)


def survival_mass(
    x: float, gamma: float, cfg: QuadratureConfig = DEFAULT_QUADRATURE
) -> float:
    """g(x): weight-weighted probability mass reached at exploration intensity x.

    g(x) = integral over b in (0,1) of w(b) * (1 - exp(-x * w(b))) db with
    w the weight profile.  Computed on substituted forms that tame the b->0
    singularity of w.  The substitution z = b**(1/(gamma-1)) gives

        g(x) = (gamma-1) * integral_0^1 z**(gamma-3) * (1 - exp(-x/z)) dz.

    For small x and gamma <= 3.5 the mass of that integrand concentrates in
    a boundary layer at z ~ x that adaptive subdivision cannot reach, so the
    further substitution z = x/y is applied,

        g(x) = (gamma-1) * x**(gamma-2) * integral_x^inf y**(1-gamma) * (1 - exp(-y)) dy,

    with the power-law part of the head integrated in closed form and only a
    smooth remainder left to quadrature.  Nondecreasing and concave in x,
    with g(0) = 0 and g(x) -> B as x -> infinity.
    """
    _check_gamma(gamma)
    if x < 0.0:
        raise ValueError(f"intensity must be >= 0, got {x}")
    if x == 0.0:
        return 0.0
    if x >= 1.0 or gamma > 3.5:
        e = gamma - 3.0

        def integrand(z: float) -> float:
            return z**e * -expm1(-x / z)

        return (gamma - 1.0) * _quad(integrand, 0.0, 1.0, cfg)
    # head over (x,1): y**(1-gamma)*(1-exp(-y)) = y**(2-gamma) - y**(3-gamma)/2
    #                  - y**(1-gamma)*(exp(-y)-1+y-y^2/2)
    e = 1.0 - gamma
    head = _power_integral(x, 2.0 - gamma) - 0.5 * _power_integral(x, 3.0 - gamma)
    head -= _quad(lambda y: y**e * _exp_remainder3(y), x, 1.0, cfg)
    tail = _quad(lambda y: y**e * -expm1(-y), 1.0, float("inf"), cfg)
    return (gamma - 1.0) * x ** (gamma - 2.0) * (head + tail)


def survival_mass_raw(
    x: float, gamma: float, cfg: QuadratureConfig = DEFAULT_QUADRATURE
) -> float:
    """g(x) on the unsubstituted integrand; cross-check for survival_mass."""
    _check_gamma(gamma)
    if x < 0.0:
        raise ValueError(f"intensity must be >= 0, got {x}")
    if x == 0.0:
        return 0.0
    e = -1.0 / (gamma - 1.0)

    def integrand(b: float) -> float:
        w = b**e
        return w * -expm1(-x * w)

    return _quad(integrand, 0.0, 1.0, cfg)


def survival_mass_prefactor(
    gamma: float, cfg: QuadratureConfig = DEFAULT_QUADRATURE
) -> float:
    """Constant C in g(x) ~ (gamma-1) * C * x**(gamma-2) as x -> 0.

    C = integral over (0, inf) of y**(1-gamma) * (1 - exp(-y)) dy, finite
    exactly for 2 < gamma < 3 (equal to -Gamma(2-gamma)); outside that
    band the integral diverges and a domain error is raised so callers
    must branch on regime explicitly.
    """
    if not 2.0 < gamma < 3.0:
        raise ValueError(
            f"prefactor integral only converges for 2 < gamma < 3, got {gamma}"
        )
    e = 1.0 - gamma

    def integrand(y: float) -> float:
        return y**e * -expm1(-y)

    head = _quad(integrand, 0.0, 1.0, cfg)
    tail = _quad(integrand, 1.0, float("inf"), cfg)
    return head + tail


def giant_fraction_from_intensity(
    a: float, gamma: float, cfg: QuadratureConfig = DEFAULT_QUADRATURE
) -> float:
    """Fraction of vertices whose exploration survives at intensity a.

    integral over (0,1) of 1 - exp(-a * w(x)) dx, evaluated on the same
    substitutions as survival_mass: the z-form
    (gamma-1) * integral z**(gamma-2) * (1 - exp(-a/z)) dz for a >= 1 or
    gamma > 3, and for small a with gamma <= 3 the y-form
    (gamma-1) * a**(gamma-1) * integral_a^inf y**(-gamma) * (1 - exp(-y)) dy
    with the power-law head integrated in closed form.
    """
    _check_gamma(gamma)
    if a < 0.0:
        raise ValueError(f"intensity must be >= 0, got {a}")
    if a == 0.0:
        return 0.0
    if a >= 1.0 or gamma > 3.0:
        e = gamma - 2.0

        def integrand(z: float) -> float:
            return z**e * -expm1(-a / z)

        return (gamma - 1.0) * _quad(integrand, 0.0, 1.0, cfg)
    e = -gamma
    head = _power_integral(a, 1.0 - gamma) - 0.5 * _power_integral(a, 2.0 - gamma)
    head -= _quad(lambda y: y**e * _exp_remainder3(y), a, 1.0, cfg)
    tail = _quad(lambda y: y**e * -expm1(-y), 1.0, float("inf"), cfg)
    return (gamma - 1.0) * a ** (gamma - 1.0) * (head + tail)


def solve_fixed_point(
    params: ModelParams,
    cfg: QuadratureConfig = DEFAULT_QUADRATURE,
    root_tol: float = 1e-12,
) -> FixedPointSolution:
    """Largest nonnegative root of a = theta * g(a), plus the giant fraction.

    Subcritical strengths (theta <= critical) admit only the zero root and
    return it exactly.  Above critical, concavity of g through the origin
    guarantees a unique positive root, bracketed inside (0, theta*B] and
    found by bisection; bisection is chosen because the slope of g at 0 is
    unbounded for gamma <= 3, which ruins Newton steps.
    """
    if not params.is_chung_lu:
        raise ValueError("fixed-point solve applies to the chung-lu variant only")
    gamma, theta = params.gamma, params.theta
    theta_c = critical_theta(gamma)
    if theta <= theta_c or theta == 0.0:
        return FixedPointSolution(
            a_theta=0.0,
            rho_bar=0.0,
            theta_c=theta_c,
            residual=0.0,
            iterations=0,
            converged=True,
        )

    def defect(a: float) -> float:
        return a - theta * survival_mass(a, gamma, cfg)

    hi = theta * weight_integral(gamma)
    f_hi = defect(hi)
    # Probe the lower end downward from hi: any point below the positive
    # root has negative defect, and probing keeps g evaluated at magnitudes
    # where the relative tolerance governs (a fixed tiny endpoint would sit
    # below the absolute quadrature noise for near-critical strengths).
    lo, f_lo = hi, f_hi
    while f_lo >= 0.0 and lo > 1e-280 * hi:
        lo /= 16.0
        f_lo = defect(lo)
        if abs(f_lo) <= root_tol:
            rho_bar = giant_fraction_from_intensity(lo, gamma, cfg)
            return FixedPointSolution(
                a_theta=lo,
                rho_bar=min(rho_bar, 1.0),
                theta_c=theta_c,
                residual=abs(f_lo),
                iterations=0,
                converged=True,
            )
    if not (f_lo < 0.0 <= f_hi):
        raise BracketError(
            "no sign change on the bisection bracket: "
            f"defect({lo:.3e})={f_lo:.3e}, defect({hi:.3e})={f_hi:.3e} "
            f"(gamma={gamma}, theta={theta}, theta_c={theta_c})"
        )
    a, residual = hi, abs(f_hi)
    iterations = 0
    converged = False
    while iterations < _MAX_BISECTIONS:
        mid = 0.5 * (lo + hi)
        if not lo < mid < hi:
            # interval shrank to adjacent floats without hitting root_tol
            a, residual = mid, abs(defect(mid))
            break
        f_mid = defect(mid)
        iterations += 1
        if abs(f_mid) <= root_tol:
            a, residual, converged = mid, abs(f_mid), True
            break
        if f_mid < 0.0:
            lo = mid
        else:
            hi = mid
    rho_bar = giant_fraction_from_intensity(a, gamma, cfg)
    return FixedPointSolution(
        a_theta=a,
        rho_bar=min(rho_bar, 1.0),
        theta_c=theta_c,
        residual=residual,
        iterations=iterations,
        converged=converged,
    )


def survival_profile(
    a: float, solution: FixedPointSolution, params: ModelParams
) -> float:
    """Probability that exploration from a type-a vertex never dies out.

    1 - exp(-a_theta * w(a)); identically 0 when the fixed point is 0.
    """
    if not params.is_chung_lu:
        raise ValueError("survival profile applies to the chung-lu variant only")
    if not 0.0 < a <= 1.0:
        raise ValueError(f"vertex type must lie in (0, 1], got {a}")
    if solution.a_theta == 0.0:
        return 0.0
    return -expm1(-solution.a_theta * weight(a, params.gamma))


def asymptotic_giant_fraction(
    params: ModelParams,
    constant: float = 1.0,
    cfg: QuadratureConfig = DEFAULT_QUADRATURE,
) -> float:
    """Leading-order giant fraction near the critical strength.

    Three regimes:

    * 2 < gamma < 3: B * ((gamma-1) * C * theta)**(1/(3-gamma)) with C the
      prefactor integral; the exponent is 1/(3-gamma).
    * gamma = 3: constant * exp(-1/(2*theta)); the multiplicative constant
      is not computable in closed form and is supplied by the caller.
    * gamma > 4: B * (2*g'(0) / (-g''(0) * theta_c)) * (theta - theta_c),
      with g'(0) and g''(0) evaluated by quadrature.

    For 3 < gamma <= 4 the second-order expansion of g needs g''(0), which
    is minus the third weight moment and diverges there; no closed law is
    exposed and UnsupportedRegimeError is raised.
    """
    if not params.is_chung_lu:
        raise ValueError("asymptotic law applies to the chung-lu variant only")
    gamma, theta = params.gamma, params.theta
    b = weight_integral(gamma)
    if 2.0 < gamma < 3.0:
        if theta <= 0.0:
            return 0.0
        c = survival_mass_prefactor(gamma, cfg)
        return constant * b * ((gamma - 1.0) * c * theta) ** (1.0 / (3.0 - gamma))
    if gamma == 3.0:
        if theta <= 0.0:
            return 0.0
        return constant * exp(-1.0 / (2.0 * theta))
    if gamma <= 4.0:
        raise UnsupportedRegimeError(
            "no closed asymptotic for 3 < gamma <= 4: the curvature of g at 0 "
            "diverges (third weight moment is infinite)"
        )
    theta_c = critical_theta(gamma)
    if theta <= theta_c:
        return 0.0
    gp0 = weight_moment_quadrature(gamma, 2, cfg)
    gpp0 = -weight_moment_quadrature(gamma, 3, cfg)
    slope = b * 2.0 * gp0 / (-gpp0 * theta_c)
    return constant * slope * (theta - theta_c)


def erdos_renyi_giant_fraction(lam: float, tol: float = 1e-12) -> float:
    """Giant fraction rho of the constant kernel: solves 1 - rho = exp(-lam*rho).

    rho = 1 - zeta with zeta the smallest fixed point of
    zeta = exp(-lam*(1-zeta)) in [0, 1]; identically 0 for lam <= 1.
    """
    if lam < 0.0:
        raise ValueError(f"lam must be >= 0, got {lam}")
    if lam <= 1.0:
        return 0.0

    def defect(rho: float) -> float:
        return 1.0 - rho - exp(-lam * rho)

    lo, hi = tol, 1.0
    # defect > 0 just above 0 (slope lam-1 > 0), defect(1) = -exp(-lam) < 0
    for _ in range(_MAX_BISECTIONS):
        mid = 0.5 * (lo + hi)
        f_mid = defect(mid)
        if abs(f_mid) <= tol:
            return mid
        if f_mid > 0.0:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def _check_gamma(gamma: float) -> None:
    if not gamma > 2.0:
        raise ValueError(f"gamma must be > 2, got {gamma}")
