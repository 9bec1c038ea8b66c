"""Semi-analytic planar benchmarks.

The Lifshitz formula for the pressure between two identical half-spaces, its
nonretarded / ideal-mirror / thermal asymptotics, the Casimir-Polder limits
for a small polarizable object, and the planar scattered Green's tensor
components whose Matsubara sums give the per-component reference forces used
to measure the time-domain scheme's error.

Everything here lives on the imaginary frequency axis; it is benchmark
machinery, deliberately separate from the production time-domain path.
"""

import math
from dataclasses import dataclass

import mpmath
import numpy as np

from tdcasimir.constants import CONSTANTS
from tdcasimir.excitation import Temperature
from tdcasimir.materials import (
    DrudeModel,
    eps_imag_axis,
    eps_imag_axis_minus_one,
    fresnel_imag_axis,
)
from tdcasimir.quadrature import gauss_legendre, integrate_semi_infinite, matsubara_sum

ZETA3 = 1.202056903159594   # Riemann zeta(3)
# Nonretarded ideal-plasma coefficient (60/pi^3) * int_0^inf Li3((1+2u^2)^-2) du,
# evaluated once with mpmath to 15 digits.
ETA_NONRETARDED = 1.1933440522794639

# Log-mapped Gauss-Legendre grid for T = 0 frequency integrals: xi spans
# (c/2L) * exp([LOG_LO, LOG_HI]); the omitted [0, xi_min] sliver contributes
# O(e^LOG_LO) relative since the weighted integrands stay finite at xi = 0.
_T0_LOG_LO, _T0_LOG_HI = -26.0, 4.2
_T0_POINTS = 320


@dataclass(frozen=True)
class PlanarSystem:
    """Two identical Drude half-spaces separated by a vacuum gap L (meters)."""

    material: DrudeModel
    L: float
    temp: Temperature

    def __post_init__(self):
        if self.L <= 0:
            raise ValueError("gap width L must be positive")


@dataclass(frozen=True)
class ReferenceComponent:
    """One reference force-per-area component f_bar (N/m^2)."""

    sigma: str      # "E" | "H"
    comp: str       # "par" | "perp"
    z: float        # evaluation height in the gap (m)
    value: float


def _t0_frequency_grid(L, n=_T0_POINTS):
    """Nodes/weights for int_0^inf dxi via xi = (c/2L) e^v on a GL grid in v."""
    rule = gauss_legendre(n)
    half = 0.5 * (_T0_LOG_HI - _T0_LOG_LO)
    v = _T0_LOG_LO + half * (rule.nodes + 1.0)
    xi = (CONSTANTS.c / (2.0 * L)) * np.exp(v)
    w = half * rule.weights * xi  # includes dxi = xi dv
    return xi, w


class _HalfspaceScatter:
    """Cancellation-safe round-trip factors for one (xi, q) pair.

    Exposes, per polarization, the single- and double-reflection ratios

        A_minus = (2 r^2 xL - r xz) / D      (parallel TM-slot combination)
        A_plus  = (2 r^2 xL + r xz) / D
        lifshitz = r^2 xL / D

    with xL = e^(-2 kappa L), xz = e^(-2 kappa z) + e^(-2 kappa (L-z)) and
    D = 1 - r^2 xL.  Small-kappa*L evaluation uses expm1 differences and the
    exact r -+ 1 forms, so nothing cancels as xi -> 0.
    """

    def __init__(self, eps_minus_1, xi, q, L, z):
        c = CONSTANTS.c
        eps = 1.0 + eps_minus_1
        k2 = (xi / c) ** 2
        self.kappa = kappa = math.sqrt(q * q + k2)
        kappa_m = math.sqrt(q * q + eps * k2)
        self.x_L = math.exp(-2.0 * kappa * L)
        self._L, self._z = L, z
        # r, r-1, r+1 per polarization; the r numerators use difference-of-
        # squares forms so nothing cancels when eps*k2 << q^2 or eps -> 1
        d_te = kappa + kappa_m
        d_tm = eps * kappa + kappa_m
        r_te = -eps_minus_1 * k2 / (d_te * d_te)
        r_tm = eps_minus_1 * ((eps + 1.0) * q * q + eps * k2) / (d_tm * d_tm)
        self._r = {
            "TE": (r_te, -2.0 * kappa_m / d_te, 2.0 * kappa / d_te),
            "TM": (r_tm, -2.0 * kappa_m / d_tm, 2.0 * eps * kappa / d_tm),
        }

    def _denom(self, pol):
        r, rm1, rp1 = self._r[pol]
        return -math.expm1(-2.0 * self.kappa * self._L) - rm1 * rp1 * self.x_L

    def lifshitz(self, pol):
        r = self._r[pol][0]
        return r * r * self.x_L / self._denom(pol)

    def _xz_split(self):
        """Returns (xz, 2 xL - xz) without cancellation."""
        kappa, L, z = self.kappa, self._L, self._z
        if 2.0 * kappa * L < 1.0:
            diff = -self.x_L * (math.expm1(2.0 * kappa * (L - z)) + math.expm1(2.0 * kappa * z))
            return 2.0 * self.x_L - diff, diff
        xz = math.exp(-2.0 * kappa * z) + math.exp(-2.0 * kappa * (L - z))
        return xz, 2.0 * self.x_L - xz

    def a_minus(self, pol):
        r, rm1, _ = self._r[pol]
        _, diff = self._xz_split()
        return r * (2.0 * rm1 * self.x_L + diff) / self._denom(pol)

    def a_plus(self, pol):
        r, _, rp1 = self._r[pol]
        xz, diff = self._xz_split()
        # 2 r xL + xz = 2 (r+1) xL - (2 xL - xz)
        return r * (2.0 * rp1 * self.x_L - diff) / self._denom(pol)


_SMALL_Q_RULE = None


def _q_integral(f, xi, L, tol):
    """Integrate f over q in (0, inf) for the planar integrands.

    When xi/c sits far below the geometric scale 1/L, the crossover of
    kappa = sqrt(q^2 + xi^2/c^2) at q ~ xi/c forms a boundary layer the
    adaptive map cannot see; that piece is split off onto a fixed Gauss rule
    and the smooth remainder goes through the semi-infinite transform.
    """
    global _SMALL_Q_RULE
    c = CONSTANTS.c
    geo = 0.5 / L
    k = xi / c
    if k >= 0.01 * geo:
        value, _ = integrate_semi_infinite(f, scale=max(k, geo), tol=tol)
        return value
    a = 10.0 * k
    head = 0.0
    if a > 0.0:
        if _SMALL_Q_RULE is None:
            _SMALL_Q_RULE = gauss_legendre(32)
        qs = 0.5 * a * (_SMALL_Q_RULE.nodes + 1.0)
        head = 0.5 * a * sum(w * f(q) for q, w in zip(qs, _SMALL_Q_RULE.weights))
    tail, _ = integrate_semi_infinite(lambda x: f(a + x), scale=geo, tol=tol)
    return head + tail


def _lifshitz_q_integral(sys, xi, tol):
    """q-integral of the Lifshitz integrand sum_u 2 kappa r^2 e^(-2 kappa L)/(1 - ...)."""
    L = sys.L
    em1 = eps_imag_axis_minus_one(sys.material, xi)

    def integrand(q):
        sc = _HalfspaceScatter(em1, xi, q, L, 0.5 * L)
        return q * 2.0 * sc.kappa * (sc.lifshitz("TE") + sc.lifshitz("TM"))

    return _q_integral(integrand, xi, L, tol)


def _lifshitz_q_integral_static(L):
    """m = 0 term for Drude: r_TM = 1, r_TE = 0, kappa = q; closed form zeta(3)/2L^3."""
    return ZETA3 / (2.0 * L**3)


def lifshitz_pressure(sys, tol=1e-9):
    """Casimir pressure between the half-spaces (N/m^2, negative = attractive).

    Finite T sums the primed Matsubara series; T = 0 integrates over
    imaginary frequency on a log-mapped Gauss-Legendre grid.
    """
    pref = -1.0 / (2.0 * math.pi)
    if sys.temp.is_zero:
        xi, w = _t0_frequency_grid(sys.L)
        acc = sum(wi * _lifshitz_q_integral(sys, x, tol) for x, wi in zip(xi, w))
        return pref * CONSTANTS.hbar / (2.0 * math.pi) * acc

    def term(m, xi_m):
        if m == 0:
            return _lifshitz_q_integral_static(sys.L)
        return _lifshitz_q_integral(sys, xi_m, tol)

    total = matsubara_sum(term, sys.temp, tol=max(tol, 1e-12))
    return pref * CONSTANTS.k_B * sys.temp.kelvin * total


def nonretarded_pressure(sys, tol=1e-10):
    """Nonretarded (van der Waals) pressure -(hbar/8 pi^2 L^3) int Li3(...) dxi.

    Temperature-independent by construction.
    """
    m = sys.material

    def integrand(xi):
        eps = eps_imag_axis(m, xi)
        z = ((eps - 1.0) / (eps + 1.0)) ** 2
        return float(mpmath.polylog(3, z))

    value, _ = integrate_semi_infinite(integrand, scale=m.omega_p, tol=tol)
    return -CONSTANTS.hbar / (8.0 * math.pi**2 * sys.L**3) * value


def nonretarded_pressure_drude(sys):
    """Closed Drude form of the nonretarded limit, valid for Gamma << omega_p."""
    m, L = sys.material, sys.L
    lam_p = m.plasma_wavelength()
    c = CONSTANTS.c
    bracket = ETA_NONRETARDED * L / lam_p - 15.0 * ZETA3 / math.pi**4 * m.gamma_d * L / c
    return -CONSTANTS.hbar * c * math.pi**2 / (240.0 * L**4) * bracket


def ideal_casimir_pressure(L):
    """Perfect-mirror zero-temperature pressure -hbar c pi^2 / (240 L^4)."""
    if L <= 0:
        raise ValueError("L must be positive")
    return -CONSTANTS.hbar * CONSTANTS.c * math.pi**2 / (240.0 * L**4)


def thermal_pressure(L, temp):
    """Classical thermal limit -zeta(3) k_B T / (8 pi L^3)."""
    if L <= 0:
        raise ValueError("L must be positive")
    if temp.is_zero:
        raise ValueError("thermal limit requires T > 0")
    return -ZETA3 * CONSTANTS.k_B * temp.kelvin / (8.0 * math.pi * L**3)


def cp_force_thermal(L, temp, alpha0):
    """Casimir-Polder thermal limit -(3/16 pi)(k_B T/eps_0) alpha(0)/L^4 (N)."""
    return -3.0 / (16.0 * math.pi) * CONSTANTS.k_B * temp.kelvin / CONSTANTS.eps_0 * alpha0 / L**4


def cp_force_retarded(L, alpha0):
    """Retarded zero-T Casimir-Polder force -(3/8 pi^2)(hbar c/eps_0) alpha(0)/L^5 (N)."""
    return -3.0 / (8.0 * math.pi**2) * CONSTANTS.hbar * CONSTANTS.c / CONSTANTS.eps_0 * alpha0 / L**5


# -- planar Green's tensor components ----------------------------------------

def _greens_weighted_q_integrand(sys, sigma, comp, z, xi, q, em1):
    """q-integrand of (xi^2/c^2) G(z, i xi): the stress-weighted Green's tensor.

    The (kappa c/xi)^2 and (q c/xi)^2 prefactors of the raw tensor combine
    with the xi^2/c^2 weight into kappa^2 and q^2, which keeps the integrand
    well conditioned down to xi = 0.  The magnetic tensor follows from the
    electric one by exchanging the TE and TM reflection coefficients (the
    paper's extra c^2 belongs to its dimensionless unit system and must not
    be applied in SI).
    """
    c = CONSTANTS.c
    sc = _HalfspaceScatter(em1, xi, q, sys.L, z)
    tm_slot, te_slot = ("TM", "TE") if sigma == "E" else ("TE", "TM")

    if comp == "par":
        return (1.0 / (8.0 * math.pi)) * (q / sc.kappa) * (
            sc.kappa**2 * sc.a_minus(tm_slot) + (xi / c) ** 2 * sc.a_plus(te_slot)
        )
    if comp == "perp":
        return -(1.0 / (4.0 * math.pi)) * (q / sc.kappa) * q * q * sc.a_plus(tm_slot)
    raise ValueError(f"comp must be 'par' or 'perp', got {comp!r}")


def greens_planar(sigma, comp, z, sys, xi, tol=1e-9):
    """Scattered Green's tensor component G(z, i xi) between the plates (1/m).

    Requires 0 <= z <= L and xi > 0; the m = 0 Matsubara term only exists in
    the weighted combination used by reference_f.
    """
    if not 0.0 <= z <= sys.L:
        raise ValueError("z must lie within the gap [0, L]")
    if xi <= 0:
        raise ValueError("greens_planar requires xi > 0; m = 0 is handled in reference_f")
    return (CONSTANTS.c / xi) ** 2 * _greens_weighted(sys, sigma, comp, z, xi, tol)


def _greens_weighted(sys, sigma, comp, z, xi, tol):
    """(xi^2/c^2) G(z, i xi), finite down to xi = 0."""
    L = sys.L
    if xi > 0.0:
        em1 = eps_imag_axis_minus_one(sys.material, xi)
        return _q_integral(
            lambda q: _greens_weighted_q_integrand(sys, sigma, comp, z, xi, q, em1), xi, L, tol
        )

    # static limit: kappa = q, Drude r_TM -> 1, r_TE -> 0; only the electric
    # TM-weighted pieces survive (magnetic swaps them away)
    if sigma == "H":
        return 0.0

    def integrand(q):
        x_L = math.exp(-2.0 * q * L)
        x_z = math.exp(-2.0 * q * z) + math.exp(-2.0 * q * (L - z))
        denom = -math.expm1(-2.0 * q * L)
        if comp == "par":
            return (1.0 / (8.0 * math.pi)) * q * q * (2.0 * x_L - x_z) / denom
        return -(1.0 / (4.0 * math.pi)) * q * q * (2.0 * x_L + x_z) / denom

    value, _ = integrate_semi_infinite(integrand, scale=0.5 / L, tol=tol)
    return value


def reference_f(sigma, comp, z, sys, tol=1e-9):
    """Reference force-per-area component f_bar = -2 k_B T sum'_m (xi_m^2/c^2) G.

    T = 0 replaces the sum by -(hbar/pi) int_0^inf dxi of the same weighted
    integrand.  Returns a ReferenceComponent.
    """
    if not 0.0 <= z <= sys.L:
        raise ValueError("z must lie within the gap [0, L]")
    if sys.temp.is_zero:
        xi, w = _t0_frequency_grid(sys.L)
        acc = sum(wi * _greens_weighted(sys, sigma, comp, z, x, tol) for x, wi in zip(xi, w))
        value = -CONSTANTS.hbar / math.pi * acc
    else:
        total = matsubara_sum(
            lambda m, xi_m: _greens_weighted(sys, sigma, comp, z, xi_m, tol),
            sys.temp,
            tol=max(tol, 1e-12),
        )
        value = -2.0 * CONSTANTS.k_B * sys.temp.kelvin * total
    return ReferenceComponent(sigma=sigma, comp=comp, z=z, value=value)


def reference_components(sys, z=None, tol=1e-9):
    """All four (sigma, comp) reference components at height z (default L/2)."""
    z = 0.5 * sys.L if z is None else z
    return {
        (sigma, comp): reference_f(sigma, comp, z, sys, tol=tol)
        for sigma in ("E", "H")
        for comp in ("par", "perp")
    }
