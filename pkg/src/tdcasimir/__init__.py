"""Time-domain Casimir force toolkit.

Computes Casimir--Lifshitz forces between macroscopic bodies by running
classical dipole-scattering simulations with a nodal discontinuous-Galerkin
Maxwell solver and convolving the recorded scattered fields with closed-form
thermal kernels.  Semi-analytic planar references (Lifshitz formula, planar
Green's tensors) validate every stage.
"""

from tdcasimir.constants import CONSTANTS, PhysicalConstants
from tdcasimir.materials import DrudeModel, SILVER

__all__ = ["CONSTANTS", "PhysicalConstants", "DrudeModel", "SILVER"]

__version__ = "0.1.0"
