"""Physical constants and the internal unit system.

All solver-internal quantities are dimensionless: lengths are scaled by
``ell0`` (1 nm), fields by ``E0`` (1 V/m) and times by ``ell0/c``.  SI
conversion happens at module boundaries only.
"""

from dataclasses import dataclass

import scipy.constants as sc


@dataclass(frozen=True)
class PhysicalConstants:
    """SI constants plus the field/length reference scales."""

    hbar: float = sc.hbar
    c: float = sc.c
    k_B: float = sc.k
    eps_0: float = sc.epsilon_0
    # CODATA mu_0 is measured post-2019 and misses c^2 eps_0 mu_0 = 1 by
    # ~1.2e-12; derive it instead so the scaled unit system is exact.
    mu_0: float = 1.0 / (sc.epsilon_0 * sc.c**2)
    E_0: float = 1.0          # reference field strength, V/m
    ell_0: float = 1.0e-9     # reference length, m

    @property
    def Z_0(self):
        """Vacuum impedance sqrt(mu_0/eps_0)."""
        return (self.mu_0 / self.eps_0) ** 0.5

    @property
    def t_0(self):
        """Reference time ell_0/c in seconds."""
        return self.ell_0 / self.c

    def check(self):
        """Verify c^2 eps_0 mu_0 = 1 to 1e-12 relative."""
        residual = abs(self.c**2 * self.eps_0 * self.mu_0 - 1.0)
        if residual > 1e-12:
            raise ValueError(f"inconsistent constants: c^2*eps0*mu0 - 1 = {residual:g}")
        return True


CONSTANTS = PhysicalConstants()
