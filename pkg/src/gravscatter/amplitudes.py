"""Tree-level graviton-exchange amplitudes for photon-photon scattering.

Every amplitude here is reduced: the matrix element is divided by the overall
coupling-squared-times-energy-squared scale, leaving a pure function of the
scattering angle. Three exchange topologies contribute,

    t: photon 1 -> 3 at one vertex, 2 -> 4 at the other, q = p1 - p3,
    u: photon 1 -> 4 and 2 -> 3,                         q = p1 - p4,
    s: 1 and 2 annihilate, 3 and 4 emerge,               q = p1 + p2.

Crossed legs enter the vertex with their momentum sign flipped; the vertex
is strictly bilinear in its two momenta, so the flips at the two s-channel
vertices cancel in the product and the summed amplitude is insensitive to
that bookkeeping. The closed-form element table is the reference the diagram
evaluator must land on, entry by entry. The overall sign choice and two
corrections to commonly printed vertex formulas are recorded in ERRATA.md.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache

import numpy as np

from .kinematics import KinematicConfig
from .lorentz import METRIC, FourVector, Rank4Tensor, contract_rank4_vectors, minkowski_dot

__all__ = [
    "POLE_TOLERANCE",
    "PoleError",
    "DiagramChannel",
    "AmplitudeMatrix",
    "vertex_tensor",
    "graviton_propagator_numerator",
    "diagram_amplitude",
    "amplitude_sum",
    "diagram_sum_matrix",
    "closed_form_element",
    "closed_form_matrix",
]

POLE_TOLERANCE = 1e-10

# The conventional diagram rule carries an overall minus sign; evaluated as
# written it reproduces the negative of the reference element table, so the
# reduced amplitudes here use +1. See ERRATA.md.
_DIAGRAM_SIGN = 1.0


class PoleError(ValueError):
    """Squared exchange momentum fell inside the massless-propagator pole window."""


class DiagramChannel(Enum):
    """Exchange topology of a single tree diagram."""

    T_CHANNEL = "t"
    U_CHANNEL = "u"
    S_CHANNEL = "s"


@dataclass(frozen=True)
class AmplitudeMatrix:
    """All 16 reduced amplitudes at one angle, indexed by polarization labels.

    ``values[a, b, c, d]`` holds the element for incoming labels (a+1, b+1)
    and outgoing labels (c+1, d+1); ``element`` does the 1-based lookup.
    """

    theta: float
    values: np.ndarray

    def __post_init__(self):
        array = np.array(self.values, dtype=np.complex128)
        if array.shape != (2, 2, 2, 2):
            raise ValueError(f"expected shape (2, 2, 2, 2), got {array.shape}")
        if not np.all(np.isfinite(array)):
            raise ValueError("amplitude entries must be finite")
        array.flags.writeable = False
        object.__setattr__(self, "values", array)

    def element(self, xi1: int, xi2: int, xi3: int, xi4: int) -> complex:
        labels = (xi1, xi2, xi3, xi4)
        for label in labels:
            if label not in (1, 2):
                raise ValueError(f"polarization labels must be 1 or 2, got {labels}")
        return complex(self.values[xi1 - 1, xi2 - 1, xi3 - 1, xi4 - 1])


def _check_pols(pols) -> tuple[int, int, int, int]:
    pols = tuple(pols)
    if len(pols) != 4 or any(label not in (1, 2) for label in pols):
        raise ValueError(f"expected four polarization labels from {{1, 2}}, got {pols!r}")
    return pols


def vertex_tensor(p_out: FourVector, p_in: FourVector, *,
                  perturbation: float = 0.0) -> Rank4Tensor:
    """Two-photon-graviton vertex T_{mu nu beta alpha}(p_out, p_in).

    Index layout: (mu, nu) couple to the graviton, beta to the outgoing
    photon's polarization and alpha to the incoming one's. With q = p_out
    and p = p_in the five contributions are

        T =   q_alpha p_mu eta_{beta nu} + (mu <-> nu)
            + p_beta  q_mu eta_{alpha nu} + (mu <-> nu)
            - eta_{alpha beta} (q_mu p_nu + p_mu q_nu)
            + (q . p) eta_{mu nu} eta_{alpha beta} - eta_{mu nu} p_beta q_alpha
            - (q . p) (eta_{mu alpha} eta_{nu beta} + eta_{mu beta} eta_{nu alpha}).

    The result is symmetric under mu <-> nu and bilinear in the two momenta,
    so feeding a sign-flipped momentum for a crossed leg just flips the sign
    of the whole tensor. ``perturbation`` rescales the final metric-pair term
    by (1 + perturbation); it exists purely as a negative control for the
    verification gate and must stay 0 in physics use.
    """
    out_low = METRIC @ p_out.components
    in_low = METRIC @ p_in.components
    dot = minkowski_dot(p_out, p_in)
    t = np.einsum("a,m,bn->mnba", out_low, in_low, METRIC)
    t += np.einsum("a,n,bm->mnba", out_low, in_low, METRIC)
    t += np.einsum("b,m,an->mnba", in_low, out_low, METRIC)
    t += np.einsum("b,n,am->mnba", in_low, out_low, METRIC)
    t -= np.einsum("ab,m,n->mnba", METRIC, out_low, in_low)
    t -= np.einsum("ab,m,n->mnba", METRIC, in_low, out_low)
    t += dot * np.einsum("mn,ab->mnba", METRIC, METRIC)
    t -= np.einsum("mn,b,a->mnba", METRIC, in_low, out_low)
    metric_pair = np.einsum("ma,nb->mnba", METRIC, METRIC)
    metric_pair += np.einsum("mb,na->mnba", METRIC, METRIC)
    t -= dot * (1.0 + float(perturbation)) * metric_pair
    return Rank4Tensor(t)


@lru_cache(maxsize=1)
def graviton_propagator_numerator() -> Rank4Tensor:
    """Harmonic-gauge spin-2 numerator P_{mu nu alpha beta}.

    P = (eta_{mu alpha} eta_{nu beta} + eta_{mu beta} eta_{nu alpha}
         - eta_{mu nu} eta_{alpha beta}) / 2,
    stored with index order (mu, nu, alpha, beta). Tracing the first pair
    with the inverse metric gives -eta_{alpha beta}.
    """
    p = np.einsum("ma,nb->mnab", METRIC, METRIC)
    p += np.einsum("mb,na->mnab", METRIC, METRIC)
    p -= np.einsum("mn,ab->mnab", METRIC, METRIC)
    return Rank4Tensor(0.5 * p)


# Per channel: two legs, each (photon on the out slot, momentum fed to the out
# slot, photon on the in slot, momentum fed to the in slot), then the exchange
# momentum. Crossed legs appear with flipped momentum signs.
def _channel_legs(channel: DiagramChannel, config: KinematicConfig):
    p1, p2, p3, p4 = config.p1, config.p2, config.p3, config.p4
    if channel is DiagramChannel.T_CHANNEL:
        return (3, p3, 1, p1), (4, p4, 2, p2), p1 - p3
    if channel is DiagramChannel.U_CHANNEL:
        return (4, p4, 1, p1), (3, p3, 2, p2), p1 - p4
    if channel is DiagramChannel.S_CHANNEL:
        return (2, -p2, 1, p1), (3, p3, 4, -p4), p1 + p2
    raise TypeError(f"expected a DiagramChannel, got {channel!r}")


def _vertex_block(tensor: Rank4Tensor, eps_out: FourVector,
                  eps_in: FourVector) -> np.ndarray:
    """Graviton-side rank-2 block: polarizations fill the photon slots."""
    return contract_rank4_vectors(tensor, eps_out, eps_in, slots=(2, 3))


def _couple_blocks(block1: np.ndarray, block2: np.ndarray) -> float:
    """Contract two raised vertex blocks through the propagator numerator."""
    numerator = graviton_propagator_numerator().components
    return float(np.einsum("mn,mnab,ab->", block1, numerator, block2))


def _raise_block(block: np.ndarray) -> np.ndarray:
    return METRIC @ block @ METRIC


def diagram_amplitude(channel: DiagramChannel, config: KinematicConfig,
                      pols, *, vertex_perturbation: float = 0.0) -> complex:
    """Reduced amplitude of a single exchange topology.

    ``pols`` holds the four polarization labels in photon order. The vertex
    is transverse in both photon slots, so each topology is separately
    insensitive to gauge shifts; it still takes all three to reproduce the
    reference table.
    """
    pols = _check_pols(pols)
    leg1, leg2, q = _channel_legs(channel, config)
    q2 = minkowski_dot(q, q)
    if abs(q2) < POLE_TOLERANCE:
        raise PoleError(
            f"{channel.value}-channel exchange momentum squared {q2:.3e} lies "
            f"within {POLE_TOLERANCE} of the pole"
        )
    blocks = []
    for photon_out, momentum_out, photon_in, momentum_in in (leg1, leg2):
        tensor = vertex_tensor(momentum_out, momentum_in,
                               perturbation=vertex_perturbation)
        eps_out = config.polarization(photon_out, pols[photon_out - 1])
        eps_in = config.polarization(photon_in, pols[photon_in - 1])
        blocks.append(_raise_block(_vertex_block(tensor, eps_out, eps_in)))
    value = _DIAGRAM_SIGN * _couple_blocks(blocks[0], blocks[1]) / q2
    return complex(value)


def amplitude_sum(config: KinematicConfig, pols, *,
                  vertex_perturbation: float = 0.0) -> complex:
    """Sum of the t, u and s exchange diagrams for one polarization pattern."""
    return sum(
        diagram_amplitude(channel, config, pols,
                          vertex_perturbation=vertex_perturbation)
        for channel in DiagramChannel
    )


def diagram_sum_matrix(config: KinematicConfig, *,
                       vertex_perturbation: float = 0.0) -> AmplitudeMatrix:
    """Three-channel sum for all 16 polarization patterns at once.

    Equivalent to calling ``amplitude_sum`` pattern by pattern, but each of
    the six vertex tensors is built once and reused across patterns.
    """
    values = np.zeros((2, 2, 2, 2), dtype=np.complex128)
    for channel in DiagramChannel:
        leg1, leg2, q = _channel_legs(channel, config)
        q2 = minkowski_dot(q, q)
        if abs(q2) < POLE_TOLERANCE:
            raise PoleError(
                f"{channel.value}-channel exchange momentum squared {q2:.3e} "
                f"lies within {POLE_TOLERANCE} of the pole"
            )
        raised = []
        for photon_out, momentum_out, photon_in, momentum_in in (leg1, leg2):
            tensor = vertex_tensor(momentum_out, momentum_in,
                                   perturbation=vertex_perturbation)
            blocks = {}
            for label_out, label_in in itertools.product((1, 2), repeat=2):
                eps_out = config.polarization(photon_out, label_out)
                eps_in = config.polarization(photon_in, label_in)
                blocks[label_out, label_in] = _raise_block(
                    _vertex_block(tensor, eps_out, eps_in))
            raised.append((photon_out, photon_in, blocks))
        out1, in1, blocks1 = raised[0]
        out2, in2, blocks2 = raised[1]
        for pattern in itertools.product((1, 2), repeat=4):
            b1 = blocks1[pattern[out1 - 1], pattern[in1 - 1]]
            b2 = blocks2[pattern[out2 - 1], pattern[in2 - 1]]
            index = tuple(label - 1 for label in pattern)
            values[index] += _DIAGRAM_SIGN * _couple_blocks(b1, b2) / q2
    return AmplitudeMatrix(config.theta, values)


def closed_form_element(pols, theta: float) -> float:
    """Reference value of one reduced amplitude element.

    With c = cos(theta), the eight non-vanishing patterns share a 1/sin^2
    factor multiplying

        1111, 2222:  -9 - 6 c^2 - c^4
        1122, 2211:   7 - 6 c^2 - c^4
        1212, 2121:  -8 - 4 c - 4 c^3
        1221, 2112:  -8 + 4 c + 4 c^3

    Any pattern with an odd number of in-plane labels vanishes identically,
    since the one-sided reflection of the scattering plane flips its sign.
    """
    pols = _check_pols(pols)
    theta = float(theta)
    if not math.isfinite(theta) or not 0.0 < theta < math.pi:
        raise ValueError(f"theta must lie strictly between 0 and pi, got {theta}")
    if sum(pols) % 2 == 1:
        return 0.0
    c = math.cos(theta)
    sin_sq = math.sin(theta) ** 2
    numerators = {
        (1, 1, 1, 1): -9.0 - 6.0 * c * c - c ** 4,
        (2, 2, 2, 2): -9.0 - 6.0 * c * c - c ** 4,
        (1, 1, 2, 2): 7.0 - 6.0 * c * c - c ** 4,
        (2, 2, 1, 1): 7.0 - 6.0 * c * c - c ** 4,
        (1, 2, 1, 2): -8.0 - 4.0 * c - 4.0 * c ** 3,
        (2, 1, 2, 1): -8.0 - 4.0 * c - 4.0 * c ** 3,
        (1, 2, 2, 1): -8.0 + 4.0 * c + 4.0 * c ** 3,
        (2, 1, 1, 2): -8.0 + 4.0 * c + 4.0 * c ** 3,
    }
    return numerators[pols] / sin_sq


def closed_form_matrix(theta: float) -> AmplitudeMatrix:
    """All 16 closed-form elements packed into an AmplitudeMatrix."""
    values = np.zeros((2, 2, 2, 2), dtype=np.complex128)
    for pattern in itertools.product((1, 2), repeat=4):
        index = tuple(label - 1 for label in pattern)
        values[index] = closed_form_element(pattern, theta)
    return AmplitudeMatrix(float(theta), values)
