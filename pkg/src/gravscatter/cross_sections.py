"""Differential cross sections in reduced and SI units.

The gravitational cross sections come out as pure angle functions times
l_P^4 / lambda^2, with l_P the Planck length and lambda = hbar c / E the
photon wavelength in the center-of-momentum frame; functions named dcs_*
return the reduced angle function unless stated otherwise. The general rule
connecting an initial two-photon polarization state with coefficients c and
the reduced amplitude matrix m is

    dcs = (1/4) sum_{out} | sum_{in} c[in] m[in, out] |^2,

and the closed forms below are what that contraction collapses to for the
unpolarized average and for the two-term superposition family. The electron
loop channel carries its own SI prefactor built from the fine-structure
constant and the electron Compton wavelength, so those values are returned
directly in m^2 per steradian.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from enum import Enum

import numpy as np
from scipy import constants as _const

from .amplitudes import AmplitudeMatrix, closed_form_element
from .qed import QedContext

__all__ = [
    "PhysicalConstants",
    "DEFAULT_CONSTANTS",
    "TwoPhotonPolState",
    "Units",
    "DcsCurve",
    "dcs_averaged",
    "dcs_entangled_pqg",
    "dcs_general_state",
    "relative_phase",
    "qed_bracket",
    "dcs_entangled_qed",
    "si_convert",
]


@dataclass(frozen=True)
class PhysicalConstants:
    """SI inputs for unit conversion; defaults are the CODATA values."""

    newton_constant: float = float(_const.G)
    hbar: float = float(_const.hbar)
    c: float = float(_const.c)

    def __post_init__(self):
        for name in ("newton_constant", "hbar", "c"):
            if not getattr(self, name) > 0.0:
                raise ValueError(f"{name} must be positive, got {getattr(self, name)}")

    @property
    def planck_length(self) -> float:
        """sqrt(G hbar / c^3), about 1.616e-35 m."""
        return math.sqrt(self.newton_constant * self.hbar / self.c ** 3)


DEFAULT_CONSTANTS = PhysicalConstants()


class TwoPhotonPolState:
    """Initial two-photon polarization state in the linear basis.

    The constructor accepts arbitrary normalized coefficients c[xi1-1][xi2-1]
    over the four product states |xi1, xi2>. The two-parameter family

        cos(phi) |1, 2> + e^{i rho} sin(phi) |2, 1>

    is built through ``from_angles`` with phi in [0, pi/2] and rho in
    [-pi/2, 3 pi/2); phi = 0 or pi/2 is a product state, and phi = pi/4 with
    rho = 0 or pi gives the symmetric or antisymmetric Bell state. States
    built directly from coefficients report ``phi``/``rho`` as None and only
    work with ``dcs_general_state``.
    """

    NORMALIZATION_TOL = 1e-12

    __slots__ = ("_coefficients", "_phi", "_rho")

    def __init__(self, coefficients):
        array = np.array(coefficients, dtype=np.complex128)
        if array.shape != (2, 2):
            raise ValueError(f"expected coefficient shape (2, 2), got {array.shape}")
        if not np.all(np.isfinite(array)):
            raise ValueError("state coefficients must be finite")
        norm = float(np.sum(np.abs(array) ** 2))
        if abs(norm - 1.0) > self.NORMALIZATION_TOL:
            raise ValueError(f"squared coefficients must sum to 1, got {norm!r}")
        array.flags.writeable = False
        self._coefficients = array
        self._phi = None
        self._rho = None

    @classmethod
    def from_angles(cls, phi: float, rho: float) -> "TwoPhotonPolState":
        phi = float(phi)
        rho = float(rho)
        if not 0.0 <= phi <= math.pi / 2:
            raise ValueError(f"phi must lie in [0, pi/2], got {phi}")
        if not -math.pi / 2 <= rho < 3 * math.pi / 2:
            raise ValueError(f"rho must lie in [-pi/2, 3 pi/2), got {rho}")
        coefficients = np.zeros((2, 2), dtype=np.complex128)
        coefficients[0, 1] = math.cos(phi)
        coefficients[1, 0] = cmath.exp(1j * rho) * math.sin(phi)
        state = cls(coefficients)
        state._phi = phi
        state._rho = rho
        return state

    @classmethod
    def psi_plus(cls) -> "TwoPhotonPolState":
        """Symmetric Bell state, phi = pi/4 and rho = 0."""
        return cls.from_angles(math.pi / 4, 0.0)

    @classmethod
    def psi_minus(cls) -> "TwoPhotonPolState":
        """Antisymmetric Bell state, phi = pi/4 and rho = pi."""
        return cls.from_angles(math.pi / 4, math.pi)

    @property
    def coefficients(self) -> np.ndarray:
        return self._coefficients

    @property
    def phi(self):
        return self._phi

    @property
    def rho(self):
        return self._rho

    @property
    def interference_weight(self):
        """sin(2 phi) cos(rho), the knob every closed form depends on; None if general."""
        if self._phi is None:
            return None
        return math.sin(2.0 * self._phi) * math.cos(self._rho)

    def __repr__(self):
        if self._phi is not None:
            return f"TwoPhotonPolState.from_angles({self._phi!r}, {self._rho!r})"
        return f"TwoPhotonPolState({self._coefficients.tolist()!r})"


class Units(Enum):
    REDUCED = "reduced"
    SI = "si"


@dataclass(frozen=True)
class DcsCurve:
    """Sampled cross-section curve with unit bookkeeping.

    ``theory`` tags the source ("pqg" or "qed"), ``state`` is the (phi, rho)
    pair or None for the unpolarized average, and ``wavelength`` must be set
    whenever the values are SI.
    """

    thetas: np.ndarray
    values: np.ndarray
    units: Units
    theory: str
    state: tuple | None = None
    wavelength: float | None = None

    def __post_init__(self):
        thetas = np.array(self.thetas, dtype=np.float64)
        values = np.array(self.values, dtype=np.float64)
        if thetas.ndim != 1 or thetas.size == 0:
            raise ValueError("thetas must be a non-empty 1-D array")
        if values.shape != thetas.shape:
            raise ValueError(
                f"values shape {values.shape} does not match thetas shape {thetas.shape}")
        if not np.all(np.isfinite(thetas)) or not np.all(np.isfinite(values)):
            raise ValueError("curve samples must be finite")
        if not np.all(np.diff(thetas) > 0.0):
            raise ValueError("thetas must be strictly increasing")
        if thetas[0] <= 0.0 or thetas[-1] >= math.pi:
            raise ValueError("thetas must lie strictly between 0 and pi")
        if np.any(values < 0.0):
            raise ValueError("cross-section values must be non-negative")
        if not isinstance(self.units, Units):
            raise ValueError(f"units must be a Units member, got {self.units!r}")
        if self.theory not in ("pqg", "qed"):
            raise ValueError(f"theory must be 'pqg' or 'qed', got {self.theory!r}")
        if self.units is Units.SI and self.wavelength is None:
            raise ValueError("SI curves must record the wavelength they were built at")
        if self.wavelength is not None and not self.wavelength > 0.0:
            raise ValueError(f"wavelength must be positive, got {self.wavelength}")
        thetas.flags.writeable = False
        values.flags.writeable = False
        object.__setattr__(self, "thetas", thetas)
        object.__setattr__(self, "values", values)


def _check_theta(theta: float) -> float:
    theta = float(theta)
    if not math.isfinite(theta) or not 0.0 < theta < math.pi:
        raise ValueError(f"theta must lie strictly between 0 and pi, got {theta}")
    return theta


def _interference_weight(state: TwoPhotonPolState) -> float:
    weight = state.interference_weight
    if weight is None:
        raise ValueError(
            "closed form needs the (phi, rho) two-term family; general "
            "coefficient states go through dcs_general_state")
    return weight


def dcs_averaged(theta: float) -> float:
    """Polarization-averaged reduced cross section.

    32 [1 + cos^16(theta/2) + sin^16(theta/2)] / sin^4(theta), which equals
    one quarter of the mean of |m|^2 over the 16 elements.
    """
    theta = _check_theta(theta)
    half = 0.5 * theta
    numerator = 1.0 + math.cos(half) ** 16 + math.sin(half) ** 16
    return 32.0 * numerator / math.sin(theta) ** 4


def dcs_entangled_pqg(theta: float, state: TwoPhotonPolState) -> float:
    """Reduced cross section for the two-term superposition family.

    With w = sin(2 phi) cos(rho) and g = cos(theta) + cos^3(theta),

        dcs = (8 / sin^4 theta) [4 (1 + w) + (1 - w) g^2].

    The w = +1 Bell state doubles the product-state value at theta = pi/2
    and the w = -1 one shuts the right-angle rate off entirely.
    """
    theta = _check_theta(theta)
    weight = _interference_weight(state)
    g = math.cos(theta) + math.cos(theta) ** 3
    bracket = 4.0 * (1.0 + weight) + (1.0 - weight) * g * g
    return 8.0 * bracket / math.sin(theta) ** 4


def dcs_general_state(theta: float, state: TwoPhotonPolState,
                      matrix: AmplitudeMatrix) -> float:
    """Reduced cross section for arbitrary normalized coefficients.

    Evaluates (1/4) sum_{out} |sum_{in} c m|^2 against the supplied
    amplitude matrix, which must have been built at the same angle.
    """
    theta = _check_theta(theta)
    if abs(matrix.theta - theta) > 1e-9:
        raise ValueError(
            f"matrix was built at theta={matrix.theta!r}, asked to evaluate at {theta!r}")
    outgoing = np.einsum("ij,ijkl->kl", state.coefficients, matrix.values)
    return 0.25 * float(np.sum(np.abs(outgoing) ** 2))


def relative_phase(theta: float, element=None) -> float:
    """Phase difference arg m(theta) - arg m(pi - theta), wrapped to (-pi, pi].

    ``element`` maps an angle to one complex amplitude element and defaults
    to the gravitational cross-polarized closed form, for which the result is
    identically zero; the loop-induced elements share that property. Raises
    if either element is too small to carry a phase.
    """
    theta = _check_theta(theta)
    if element is None:
        element = lambda angle: complex(closed_form_element((1, 2, 1, 2), angle))
    forward = complex(element(theta))
    backward = complex(element(math.pi - theta))
    if min(abs(forward), abs(backward)) < 1e-12:
        raise ValueError("relative phase is undefined where the element vanishes")
    difference = cmath.phase(forward) - cmath.phase(backward)
    if difference > math.pi:
        difference -= 2.0 * math.pi
    elif difference <= -math.pi:
        difference += 2.0 * math.pi
    return difference


def qed_bracket(theta: float, state: TwoPhotonPolState) -> float:
    """Angle factor of the loop-induced cross section, prefactor stripped.

    (1 + w) (31 + 3 cos^2)^2 + (1 - w) (22 cos)^2 with w the interference
    weight; defined on the closed interval [0, pi] since the loop elements
    have no pole.
    """
    weight = _interference_weight(state)
    c = math.cos(theta)
    return ((1.0 + weight) * (31.0 + 3.0 * c * c) ** 2
            + (1.0 - weight) * (22.0 * c) ** 2)


def dcs_entangled_qed(theta: float, state: TwoPhotonPolState,
                      wavelength: float, context: QedContext | None = None) -> float:
    """Loop-induced cross section in m^2 per steradian for the two-term family.

    The SI prefactor is alpha^4 lambda_C^8 / (2 * 45^2 * (2 pi)^2 lambda^6)
    with lambda_C the reduced electron Compton wavelength and lambda the
    photon wavelength in meters.
    """
    if context is None:
        context = QedContext()
    if not wavelength > 0.0:
        raise ValueError(f"wavelength must be positive, got {wavelength}")
    alpha = context.fine_structure_constant
    compton = context.compton_wavelength
    prefactor = (alpha ** 4 / (2.0 * 45.0 ** 2 * (2.0 * math.pi) ** 2)
                 * compton ** 8 / wavelength ** 6)
    return prefactor * qed_bracket(theta, state)


def si_convert(reduced: float, wavelength: float,
               constants: PhysicalConstants | None = None) -> float:
    """Reduced gravitational value times l_P^4 / lambda^2, in m^2 per steradian."""
    if constants is None:
        constants = DEFAULT_CONSTANTS
    if not wavelength > 0.0:
        raise ValueError(f"wavelength must be positive, got {wavelength}")
    lp = constants.planck_length
    return float(reduced) * lp ** 4 / wavelength ** 2
