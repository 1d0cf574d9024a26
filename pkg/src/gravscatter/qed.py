"""Low-energy photon-photon scattering elements from the electron loop.

Only the two cross-polarized elements that feed the entangled-state cross
section are provided. Reduced values are expressed in units of
4 alpha^2 E^4 / (45 m^4 c^8); with the phase convention used here the
elements are purely imaginary with negative imaginary part, and they never
vanish on 0 <= theta <= pi, which is what makes the relative phase of the
two cross elements well defined everywhere.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from scipy import constants as _const

__all__ = [
    "QedContext",
    "qed_element_1212",
    "qed_element_1221",
]

_ELECTRON_REST_ENERGY = float(_const.m_e * _const.c ** 2)
_FINE_STRUCTURE = float(_const.fine_structure)


@dataclass(frozen=True)
class QedContext:
    """Electron-scale inputs for the loop-induced cross section.

    Defaults are the CODATA values; override either field to study parameter
    sensitivity. ``compton_wavelength`` is the reduced Compton wavelength
    hbar c / (m c^2), about 3.86e-13 m for the physical electron.
    """

    electron_mass_energy: float = _ELECTRON_REST_ENERGY
    fine_structure_constant: float = _FINE_STRUCTURE

    def __post_init__(self):
        if not self.electron_mass_energy > 0.0:
            raise ValueError(
                f"electron mass energy must be positive, got {self.electron_mass_energy}")
        if not self.fine_structure_constant > 0.0:
            raise ValueError(
                f"fine structure constant must be positive, got {self.fine_structure_constant}")

    @property
    def compton_wavelength(self) -> float:
        return _const.hbar * _const.c / self.electron_mass_energy


def qed_element_1212(theta: float) -> complex:
    """Cross-polarized loop element, -i (31 + 22 cos + 3 cos^2) in reduced units."""
    c = math.cos(theta)
    return complex(0.0, -(31.0 + 22.0 * c + 3.0 * c * c))


def qed_element_1221(theta: float) -> complex:
    """Swapped-output partner, equal to the 1212 element at pi - theta."""
    return qed_element_1212(math.pi - theta)
