"""Dispersive material models and derived scattering quantities.

The Drude model is the single built-in dispersion model.  Everything a
consumer needs is exposed through a small evaluation contract: permittivity
on the real and imaginary frequency axes, Fresnel reflection coefficients at
imaginary frequencies, the Clausius-Mossotti polarizability, and the
auxiliary-differential-equation coefficients used by the time-domain solver.
"""

import math
from dataclasses import dataclass

import numpy as np

from tdcasimir.constants import CONSTANTS


@dataclass(frozen=True)
class DrudeModel:
    """Drude metal: eps(omega) = 1 - omega_p^2 / (omega (omega + i Gamma)).

    Parameters
    ----------
    omega_p : float
        Plasma frequency in rad/s, > 0.
    gamma_d : float
        Damping rate in rad/s, >= 0.
    """

    omega_p: float
    gamma_d: float

    def __post_init__(self):
        if not self.omega_p > 0:
            raise ValueError(f"omega_p must be positive, got {self.omega_p}")
        if self.gamma_d < 0:
            raise ValueError(f"gamma_d must be non-negative, got {self.gamma_d}")

    def plasma_wavelength(self):
        """2 pi c / omega_p in meters."""
        return 2.0 * math.pi * CONSTANTS.c / self.omega_p

    def ade_coefficients(self, ell_0=None):
        """Dimensionless (omega_p^2, gamma) for the solver's polarization-current
        ODE dJ/dt = omega_p^2 E - gamma J, in units with c = ell_0 = 1."""
        ell_0 = CONSTANTS.ell_0 if ell_0 is None else ell_0
        scale = ell_0 / CONSTANTS.c
        return (self.omega_p * scale) ** 2, self.gamma_d * scale


# Silver parameters used throughout the benchmark configurations.
SILVER = DrudeModel(omega_p=1.39e16, gamma_d=3.23e13)


def eps_real_axis(m, omega):
    """Complex permittivity at real angular frequency omega (rad/s).

    omega may be negative or complex (upper half-plane); omega = 0 is the
    Drude pole and is rejected.
    """
    omega = np.asarray(omega, dtype=complex) if np.ndim(omega) else complex(omega)
    if np.any(omega == 0):
        raise ValueError("omega = 0 is a pole of the Drude permittivity")
    return 1.0 - m.omega_p**2 / (omega * (omega + 1j * m.gamma_d))


def eps_imag_axis(m, xi):
    """Real permittivity eps(i xi) for xi > 0 (rad/s); always > 1."""
    return 1.0 + eps_imag_axis_minus_one(m, xi)


def eps_imag_axis_minus_one(m, xi):
    """eps(i xi) - 1 computed directly; exact even when eps - 1 underflows."""
    xi = np.asarray(xi, dtype=float) if np.ndim(xi) else float(xi)
    if np.any(xi <= 0):
        raise ValueError("eps(i xi) requires xi > 0")
    return m.omega_p**2 / (xi * (xi + m.gamma_d))


def fresnel_imag_axis(m, pol, xi, q):
    """Half-space Fresnel reflection coefficient at imaginary frequency i*xi.

    Parameters
    ----------
    m : DrudeModel
    pol : str
        "TE" or "TM".
    xi : float
        Imaginary frequency in rad/s, > 0.
    q : float or ndarray
        In-plane wave number in 1/m, >= 0.

    Notes
    -----
    With kappa = sqrt(q^2 + xi^2/c^2) and kappa_m = sqrt(q^2 + eps(i xi) xi^2/c^2),
    both square roots on the positive real branch:

        r_TE = (kappa - kappa_m) / (kappa + kappa_m)
        r_TM = (eps kappa - kappa_m) / (eps kappa + kappa_m)
    """
    if xi <= 0:
        raise ValueError("fresnel_imag_axis requires xi > 0")
    q = np.asarray(q, dtype=float) if np.ndim(q) else float(q)
    if np.any(q < 0):
        raise ValueError("q must be non-negative")
    k2 = (xi / CONSTANTS.c) ** 2
    eps = eps_imag_axis(m, xi)
    kappa = np.sqrt(q * q + k2)
    kappa_m = np.sqrt(q * q + eps * k2)
    if pol == "TE":
        return (kappa - kappa_m) / (kappa + kappa_m)
    if pol == "TM":
        return (eps * kappa - kappa_m) / (eps * kappa + kappa_m)
    raise ValueError(f"polarization must be 'TE' or 'TM', got {pol!r}")


def polarizability_cm(m, volume, xi):
    """Clausius-Mossotti polarizability 3 eps_0 V (eps - 1)/(eps + 2) at i*xi.

    xi = 0 is evaluated in the Drude limit eps -> infinity, giving 3 eps_0 V.
    Result in SI units (F m^2).
    """
    if volume <= 0:
        raise ValueError("volume must be positive")
    if xi < 0:
        raise ValueError("xi must be non-negative")
    if xi == 0:
        return 3.0 * CONSTANTS.eps_0 * volume
    eps = eps_imag_axis(m, xi)
    return 3.0 * CONSTANTS.eps_0 * volume * (eps - 1.0) / (eps + 2.0)
