"""Dipole source current profiles and the thermal convolution kernels.

The source current is an exponentially damped polynomial,

    j(tau) = j0 (gamma tau)^(s-1) [s - chi gamma tau] exp(-gamma tau) Theta(tau),

whose first two derivatives vanish at tau = 0 for s >= 4.  The same profile
fixes the temperature-dependent kernel that weights scattered fields in the
stress-tensor convolution.  At finite temperature the kernel is a primed
Matsubara sum with a closed form in negative-order polylogarithms; at T = 0
it collapses to a finite sum of pure power laws.
"""

import math
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from tdcasimir.constants import CONSTANTS

# Below this gamma*tau the closed form hands over to the short-time power law;
# the relative error of the asymptote there is O(gamma*tau) ~ 1e-6.
SHORT_TIME_CROSSOVER = 1e-6


@dataclass(frozen=True)
class SourceProfile:
    """Damped-polynomial dipole current parameters.

    sigma is "E" or "H"; chi defaults to 1 for electric and 0 for magnetic
    sources (the magnetic chi = 1 choice ruins long-time convergence and is
    supported only for demonstration).
    """

    sigma: str
    j0: float = 1.0
    gamma: float = 1.0
    s: int = 4
    chi: int = field(default=-1)

    def __post_init__(self):
        if self.sigma not in ("E", "H"):
            raise ValueError(f"sigma must be 'E' or 'H', got {self.sigma!r}")
        if self.s < 4:
            raise ValueError("s >= 4 required so j, j', j'' vanish at tau = 0")
        if self.gamma <= 0 or self.j0 <= 0:
            raise ValueError("gamma and j0 must be positive")
        if self.chi == -1:
            object.__setattr__(self, "chi", 1 if self.sigma == "E" else 0)
        if self.chi not in (0, 1):
            raise ValueError("chi must be 0 or 1")

    @property
    def g0_tilde(self):
        """Kernel scale gamma^3 / (2 pi j0 s!)."""
        return self.gamma**3 / (2.0 * math.pi * self.j0 * math.factorial(self.s))


@dataclass(frozen=True)
class Temperature:
    """Bath temperature with the derived Matsubara scales."""

    kelvin: float

    def __post_init__(self):
        if self.kelvin < 0:
            raise ValueError("temperature must be >= 0 K")

    @property
    def is_zero(self):
        return self.kelvin == 0.0

    @property
    def omega_th(self):
        """First Matsubara spacing 2 pi k_B T / hbar (0.0 at T = 0)."""
        return 2.0 * math.pi * CONSTANTS.k_B * self.kelvin / CONSTANTS.hbar

    @property
    def lambda_th(self):
        """Thermal wavelength hbar c / (k_B T); inf at T = 0."""
        if self.is_zero:
            return math.inf
        return CONSTANTS.hbar * CONSTANTS.c / (CONSTANTS.k_B * self.kelvin)

    def xi(self, m):
        """m-th Matsubara frequency m * omega_th."""
        return m * self.omega_th


def default_gamma(gap):
    """Pulse decay rate c/(2 L) for minimum surface separation L (meters)."""
    if gap <= 0:
        raise ValueError("gap must be positive")
    return CONSTANTS.c / (2.0 * gap)


def t_star(p):
    """Crossover time [(s+1)!]^(1/(s+chi)) / gamma between the kernel's rising
    and trailing flanks."""
    return math.factorial(p.s + 1) ** (1.0 / (p.s + p.chi)) / p.gamma


def j_time(p, tau):
    """Source current at time tau; identically zero for tau <= 0."""
    tau = np.asarray(tau, dtype=float)
    x = p.gamma * tau
    val = p.j0 * np.where(x > 0, x, 0.0) ** (p.s - 1) * (p.s - p.chi * x) * np.exp(-np.clip(x, 0, None))
    val = np.where(x > 0, val, 0.0)
    return val if val.ndim else float(val)


def j_time_prime(p, tau):
    """First time derivative of j_time (analytic)."""
    tau = np.asarray(tau, dtype=float)
    x = np.clip(p.gamma * tau, 0, None)
    s, chi = p.s, p.chi
    xm2 = np.where(x > 0, x, 1.0) ** (s - 2)
    poly = s * (s - 1) - (chi * s + s) * x + chi * x * x
    val = p.j0 * p.gamma * xm2 * poly * np.exp(-x)
    val = np.where(p.gamma * np.asarray(tau) > 0, val, 0.0)
    return val if val.ndim else float(val)


def j_time_antiderivative(p, tau):
    """Closed-form integral of the current from 0 to tau (the dipole moment)."""
    tau = np.asarray(tau, dtype=float)
    x = np.clip(p.gamma * tau, 0, None)
    s, chi = p.s, p.chi
    val = (p.j0 / p.gamma) * (s * _lower_gamma_int(s - 1, x) - chi * _lower_gamma_int(s, x))
    val = np.where(np.asarray(tau) > 0, val, 0.0)
    return val if val.ndim else float(val)


def _lower_gamma_int(n, x):
    """int_0^x u^n e^-u du = n! (1 - e^-x sum_{k<=n} x^k/k!) for integer n."""
    acc = np.zeros_like(x)
    term = np.ones_like(x)
    for k in range(n + 1):
        if k > 0:
            term = term * x / k
        acc = acc + term
    return math.factorial(n) * (1.0 - np.exp(-x) * acc)


def j_freq(p, zeta):
    """Fourier transform j0 s! gamma^(s-1) [(1-chi) gamma - i zeta]/(gamma - i zeta)^(s+1).

    Valid in the closed upper half-plane; the pole sits at zeta = -i gamma.
    """
    zeta = np.asarray(zeta, dtype=complex)
    if np.any(zeta.imag < -1e-12 * p.gamma):
        raise ValueError("j_freq is defined on the closed upper half-plane only")
    g = p.gamma
    val = (
        p.j0
        * math.factorial(p.s)
        * g ** (p.s - 1)
        * ((1 - p.chi) * g - 1j * zeta)
        / (g - 1j * zeta) ** (p.s + 1)
    )
    return val if val.ndim else complex(val)


def matsubara_residue_ratio(p, xi):
    """xi / j^sigma(i xi) for xi >= 0, the weight of each Matsubara term.

    Finite at xi = 0 for chi = 1 (the xi cancels); zero at xi = 0 for chi = 0.
    """
    xi = np.asarray(xi, dtype=float)
    g = p.gamma
    denom = p.j0 * math.factorial(p.s) * g ** (p.s - 1)
    if p.chi == 1:
        val = (g + xi) ** (p.s + 1) / denom
    else:
        val = xi * (g + xi) ** p.s / denom
    return val if val.ndim else float(val)


# -- negative-order polylogarithms ------------------------------------------

@lru_cache(maxsize=None)
def _eulerian_row(l):
    """Eulerian numbers A(l, 0..l-1) as exact integers.

    A(1) = [1]; A(n, k) = (k+1) A(n-1, k) + (n-k) A(n-1, k-1).
    """
    row = (1,)
    for n in range(2, l + 1):
        prev = row
        row = tuple(
            ((k + 1) * prev[k] if k < len(prev) else 0)
            + ((n - k) * prev[k - 1] if 1 <= k <= len(prev) else 0)
            for k in range(n)
        )
    return row


def polylog_neg(l, x):
    """Li_{-l}(x) for integer l >= 0 and 0 < x < 1, via exact rational forms.

    Li_0(x) = x/(1-x); higher negative orders follow the derivative
    recurrence and evaluate as Eulerian-number polynomials over (1-x)^(l+1).
    """
    if l < 0:
        raise ValueError("order must be >= 0")
    x = np.asarray(x, dtype=float)
    if np.any((x <= 0) | (x >= 1)):
        raise ValueError("polylog_neg requires 0 < x < 1")
    val = _polylog_neg_ratio(l, x, 1.0 - x)
    return val if val.ndim else float(val)


def polylog_neg_exp(l, y):
    """Li_{-l}(e^-y) for y > 0, using expm1 so 1 - e^-y never cancels."""
    y = np.asarray(y, dtype=float)
    if np.any(y <= 0):
        raise ValueError("polylog_neg_exp requires y > 0")
    val = _polylog_neg_ratio(l, np.exp(-y), -np.expm1(-y))
    return val if val.ndim else float(val)


def _polylog_neg_ratio(l, x, one_minus_x):
    if l == 0:
        return x / one_minus_x
    num = np.zeros_like(np.asarray(x, dtype=float))
    for k, a in enumerate(_eulerian_row(l)):
        num = num + a * x ** (l - k)
    return num / one_minus_x ** (l + 1)


# -- kernel Im{g_T(-tau)} ----------------------------------------------------

def kernel_im(p, temp, tau):
    """Kernel value Im{g_T(-tau)} for tau > 0 (scalar or array).

    Finite temperature uses the closed polylogarithm form; T = 0 uses the
    pure power-law sums.  Below gamma*tau = 1e-6 the short-time asymptote
    takes over.  Always positive.
    """
    tau = np.asarray(tau, dtype=float)
    if np.any(tau <= 0):
        raise ValueError("kernel diverges at tau <= 0")
    scalar = tau.ndim == 0
    tau = np.atleast_1d(tau)

    out = np.empty_like(tau)
    short = p.gamma * tau < SHORT_TIME_CROSSOVER
    if np.any(short):
        out[short] = kernel_short_time(p, tau[short])
    rest = ~short
    if np.any(rest):
        if temp.is_zero:
            out[rest] = _kernel_zero_t(p, tau[rest])
        else:
            out[rest] = _kernel_finite_t(p, temp, tau[rest])
    return float(out[0]) if scalar else out


def _kernel_finite_t(p, temp, tau):
    g0 = p.g0_tilde
    ratio = temp.omega_th / p.gamma
    y = temp.omega_th * tau
    s = p.s
    if p.chi == 1:
        acc = np.full_like(tau, 0.5 * ratio)
        for l in range(s + 2):
            acc += math.comb(s + 1, l) * ratio ** (l + 1) * polylog_neg_exp(l, y)
    else:
        acc = np.zeros_like(tau)
        for l in range(s + 1):
            acc += math.comb(s, l) * ratio ** (l + 2) * polylog_neg_exp(l + 1, y)
    return g0 * acc


def _kernel_zero_t(p, tau):
    g0 = p.g0_tilde
    x = p.gamma * tau
    s = p.s
    acc = np.zeros_like(tau)
    if p.chi == 1:
        for l in range(s + 2):
            acc += math.comb(s + 1, l) * math.factorial(l) / x ** (l + 1)
    else:
        for l in range(s + 1):
            acc += math.comb(s, l) * math.factorial(l + 1) / x ** (l + 2)
    return g0 * acc


def kernel_im_matsubara(p, temp, tau, tol=1e-14, max_terms=2_000_000):
    """Brute-force truncated Matsubara sum for the kernel (T > 0 only).

    (omega_th/2pi) * [R(0)/2 + sum_{m>=1} R(xi_m) e^(-xi_m tau)], with
    R = xi/j(i xi); truncation once the term bound drops below tol times
    the partial sum.
    """
    if temp.is_zero:
        raise ValueError("Matsubara form needs T > 0; use kernel_im's T = 0 branch")
    if tau <= 0:
        raise ValueError("kernel diverges at tau <= 0")
    w = temp.omega_th
    total = 0.5 * matsubara_residue_ratio(p, 0.0)
    # terms grow like m^(s+1) before the exponential wins; force the sum past
    # the turnover at m ~ (s+2)/(w tau)
    m_turn = int((p.s + 2) / (w * tau)) + 1
    chunk = 256
    m = 1
    while m <= max_terms:
        ms = np.arange(m, m + chunk, dtype=float)
        terms = matsubara_residue_ratio(p, ms * w) * np.exp(-ms * w * tau)
        total += terms.sum()
        m += chunk
        if m > m_turn and terms[-1] < tol * total:
            break
    else:
        raise RuntimeError("kernel Matsubara sum did not converge")
    return (w / (2.0 * math.pi)) * total


def kernel_short_time(p, tau):
    """Short-time divergence g0 (s+1)!/(gamma tau)^(s+2); sigma- and T-independent."""
    tau = np.asarray(tau, dtype=float)
    val = p.g0_tilde * math.factorial(p.s + 1) / (p.gamma * tau) ** (p.s + 2)
    return val if val.ndim else float(val)


@dataclass(frozen=True)
class KernelAsymptote:
    """Long-time kernel behavior: a constant, an exponential decay, or a
    power law coefficient/(gamma tau)^exponent."""

    kind: str  # "constant" | "exponential" | "power_law"
    coefficient: float
    rate: float = 0.0      # decay rate for "exponential"
    exponent: int = 0      # power for "power_law"

    def __call__(self, tau):
        if self.kind == "constant":
            return self.coefficient * np.ones_like(np.asarray(tau, dtype=float))
        if self.kind == "exponential":
            return self.coefficient * np.exp(-self.rate * np.asarray(tau, dtype=float))
        return self.coefficient / np.asarray(tau, dtype=float) ** self.exponent


def kernel_long_time(p, temp):
    """Long-time asymptote of the kernel as a KernelAsymptote descriptor.

    chi = 1: constant g0 omega_th/(2 gamma) at T > 0, ~g0/(gamma tau) at T = 0.
    chi = 0: exponential exp(-omega_th tau) at T > 0, ~g0/(gamma tau)^2 at T = 0.
    """
    g0 = p.g0_tilde
    if temp.is_zero:
        if p.chi == 1:
            return KernelAsymptote("power_law", g0 / p.gamma, exponent=1)
        return KernelAsymptote("power_law", g0 / p.gamma**2, exponent=2)
    ratio = temp.omega_th / p.gamma
    if p.chi == 1:
        return KernelAsymptote("constant", g0 * 0.5 * ratio)
    coeff = g0 * sum(math.comb(p.s, l) * ratio ** (l + 2) for l in range(p.s + 1))
    return KernelAsymptote("exponential", coeff, rate=temp.omega_th)
