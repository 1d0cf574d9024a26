"""Command-line interface.

Subcommands cover amplitude tables, gravitational and loop-induced cross
section scans, coincidence-fringe scans, SI magnitude summaries and the
verification gate that replays the diagram evaluation against the closed
forms. All angles are radians. Exit codes: 0 on success, 1 when verification
fails, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import itertools
import json
import math
import sys
from dataclasses import dataclass

import numpy as np

from .amplitudes import (
    amplitude_sum,
    closed_form_element,
    closed_form_matrix,
    diagram_sum_matrix,
)
from .coincidence import CoincidenceQuery, coincidence_factor
from .cross_sections import (
    TwoPhotonPolState,
    dcs_averaged,
    dcs_entangled_pqg,
    dcs_entangled_qed,
    qed_bracket,
    si_convert,
)
from .kinematics import com_config, gauge_shift

__all__ = ["VerifyReport", "build_verify_report", "build_parser", "main"]

DEFAULT_THETA_MIN = 0.01
DEFAULT_THETA_MAX = math.pi - 0.01
VERIFY_THETA_MIN = 0.05
VERIFY_THETA_MAX = math.pi - 0.05

# The "figure3" unit choice rescales reduced values by this plotting divisor.
_FIGURE_UNITS_DIVISOR = 80.0

_PATTERNS = tuple(itertools.product((1, 2), repeat=4))
_PATTERN_NAMES = tuple("".join(str(label) for label in pattern) for pattern in _PATTERNS)


def _fmt(value: float) -> str:
    return format(float(value), ".9g")


def _emit(text: str, path: str | None) -> None:
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as handle:
            handle.write(text)


def _csv_text(header: list[str], rows: list[list[float]]) -> str:
    lines = [",".join(header)]
    for row in rows:
        lines.append(",".join(_fmt(value) for value in row))
    return "\n".join(lines) + "\n"


def _json_text(payload: dict) -> str:
    return json.dumps(payload, indent=2) + "\n"


def _theta_grid(args, parser) -> np.ndarray:
    if not 0.0 < args.theta_min < args.theta_max < math.pi:
        parser.error("need 0 < --theta-min < --theta-max < pi")
    if args.samples < 2:
        parser.error("--samples must be at least 2")
    return np.linspace(args.theta_min, args.theta_max, args.samples)


def _canonical_states() -> tuple[TwoPhotonPolState, TwoPhotonPolState, TwoPhotonPolState]:
    return (TwoPhotonPolState.from_angles(0.0, 0.0),
            TwoPhotonPolState.psi_plus(),
            TwoPhotonPolState.psi_minus())


# ---------------------------------------------------------------------------
# verification gate

@dataclass
class VerifyReport:
    """Outcome of replaying the diagram evaluation against the closed forms."""

    theta_min: float
    theta_max: float
    samples: int
    tolerance: float
    gauge_tolerance: float
    pattern_deviations: dict[str, float]
    zero_patterns: tuple[str, ...]
    gauge_deviation: float

    @property
    def passed(self) -> bool:
        if any(dev > self.tolerance for dev in self.pattern_deviations.values()):
            return False
        return self.gauge_deviation <= self.gauge_tolerance


def build_verify_report(theta_min: float = VERIFY_THETA_MIN,
                        theta_max: float = VERIFY_THETA_MAX,
                        samples: int = 100,
                        tolerance: float = 1e-9,
                        gauge_tolerance: float = 1e-9,
                        vertex_perturbation: float = 0.0,
                        seed: int = 20) -> VerifyReport:
    """Compare the three-diagram sum with the closed forms over a grid.

    Non-vanishing patterns are scored by relative deviation; the eight
    identically-zero patterns are scored against the largest element at the
    same angle. A deterministic gauge-shift suite then replaces each photon's
    polarization by a shifted one and measures how much the summed amplitude
    moves. ``vertex_perturbation`` is forwarded to the vertex builder so the
    gate can demonstrate that it actually catches a broken vertex.
    """
    grid = np.linspace(theta_min, theta_max, samples)
    deviations = {name: 0.0 for name in _PATTERN_NAMES}
    zero_patterns = []
    for pattern, name in zip(_PATTERNS, _PATTERN_NAMES):
        if sum(pattern) % 2 == 1:
            zero_patterns.append(name)
    for theta in grid:
        config = com_config(float(theta))
        reference = closed_form_matrix(float(theta))
        computed = diagram_sum_matrix(config, vertex_perturbation=vertex_perturbation)
        scale = float(np.max(np.abs(reference.values)))
        for pattern, name in zip(_PATTERNS, _PATTERN_NAMES):
            want = reference.element(*pattern)
            got = computed.element(*pattern)
            if abs(want) > 0.0:
                deviation = abs(got - want) / abs(want)
            else:
                deviation = abs(got) / scale
            if deviation > deviations[name]:
                deviations[name] = deviation
    rng = np.random.default_rng(seed)
    gauge_deviation = 0.0
    nonzero = [p for p in _PATTERNS if sum(p) % 2 == 0]
    for theta in np.linspace(theta_min, theta_max, 10):
        config = com_config(float(theta))
        for pattern in nonzero:
            base = amplitude_sum(config, pattern,
                                 vertex_perturbation=vertex_perturbation)
            for photon in (1, 2, 3, 4):
                xi = float(rng.uniform(-10.0, 10.0))
                label = pattern[photon - 1]
                shifted_vec = gauge_shift(config.polarization(photon, label),
                                          config.momentum(photon), xi)
                shifted = config.replaced_polarization(photon, label, shifted_vec)
                moved = amplitude_sum(shifted, pattern,
                                      vertex_perturbation=vertex_perturbation)
                deviation = abs(moved - base) / abs(base)
                if deviation > gauge_deviation:
                    gauge_deviation = deviation
    return VerifyReport(
        theta_min=float(theta_min),
        theta_max=float(theta_max),
        samples=int(samples),
        tolerance=float(tolerance),
        gauge_tolerance=float(gauge_tolerance),
        pattern_deviations=deviations,
        zero_patterns=tuple(zero_patterns),
        gauge_deviation=float(gauge_deviation),
    )


def _verify_text(report: VerifyReport) -> str:
    lines = ["diagram sum vs closed-form reference"]
    lines.append(
        f"grid: {report.samples} angles in [{report.theta_min:.6g}, "
        f"{report.theta_max:.6g}]; tolerance {report.tolerance:g}, "
        f"gauge tolerance {report.gauge_tolerance:g}")
    for name in _PATTERN_NAMES:
        deviation = report.pattern_deviations[name]
        status = "PASS" if deviation <= report.tolerance else "FAIL"
        tag = "  (identically zero)" if name in report.zero_patterns else ""
        lines.append(f"  m_{name}  max deviation {deviation:.2e}  {status}{tag}")
    gauge_status = "PASS" if report.gauge_deviation <= report.gauge_tolerance else "FAIL"
    lines.append(
        f"gauge shifts: max deviation {report.gauge_deviation:.2e}  {gauge_status}")
    lines.append(f"result: {'PASS' if report.passed else 'FAIL'}")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# subcommand handlers

def _run_amp_table(args, parser) -> int:
    grid = _theta_grid(args, parser)
    header = ["theta"] + [f"m_{name}" for name in _PATTERN_NAMES]
    rows = []
    for theta in grid:
        row = [float(theta)]
        row.extend(closed_form_element(pattern, float(theta)) for pattern in _PATTERNS)
        rows.append(row)
    if args.format == "csv":
        _emit(_csv_text(header, rows), args.output)
    else:
        payload = {
            "command": "amp-table",
            "theta": [float(t) for t in grid],
            "elements": {
                name: [row[1 + k] for row in rows]
                for k, name in enumerate(_PATTERN_NAMES)
            },
        }
        _emit(_json_text(payload), args.output)
    return 0


def _run_dcs_scan(args, parser) -> int:
    grid = _theta_grid(args, parser)
    if args.units == "si" and args.wavelength is None:
        parser.error("--lambda is required with --units si")
    if args.wavelength is not None and not args.wavelength > 0.0:
        parser.error("--lambda must be positive")
    product, plus, minus = _canonical_states()

    def convert(value: float) -> float:
        if args.units == "si":
            return si_convert(value, args.wavelength)
        if args.units == "figure3":
            return value / _FIGURE_UNITS_DIVISOR
        return value

    rows = []
    for theta in grid:
        theta = float(theta)
        rows.append([
            theta,
            convert(dcs_entangled_pqg(theta, product)),
            convert(dcs_entangled_pqg(theta, plus)),
            convert(dcs_entangled_pqg(theta, minus)),
            convert(dcs_averaged(theta)),
        ])
    header = ["theta", "dcs_product", "dcs_psi_plus", "dcs_psi_minus", "dcs_averaged"]
    if args.format == "csv":
        _emit(_csv_text(header, rows), args.output)
    else:
        payload = {
            "command": "dcs-scan",
            "units": args.units,
            "wavelength_m": args.wavelength,
            "theta": [row[0] for row in rows],
            "dcs_product": [row[1] for row in rows],
            "dcs_psi_plus": [row[2] for row in rows],
            "dcs_psi_minus": [row[3] for row in rows],
            "dcs_averaged": [row[4] for row in rows],
        }
        _emit(_json_text(payload), args.output)
    return 0


def _run_qed_scan(args, parser) -> int:
    grid = _theta_grid(args, parser)
    if args.units == "figure3":
        parser.error("figure3 units apply to the gravitational scan only")
    if args.units == "si" and args.wavelength is None:
        parser.error("--lambda is required with --units si")
    if args.wavelength is not None and not args.wavelength > 0.0:
        parser.error("--lambda must be positive")
    product, plus, minus = _canonical_states()

    def value(theta: float, state: TwoPhotonPolState) -> float:
        if args.units == "si":
            return dcs_entangled_qed(theta, state, args.wavelength)
        return qed_bracket(theta, state)

    rows = []
    for theta in grid:
        theta = float(theta)
        rows.append([
            theta,
            value(theta, product),
            value(theta, plus),
            value(theta, minus),
        ])
    header = ["theta", "dcs_product", "dcs_psi_plus", "dcs_psi_minus"]
    if args.format == "csv":
        _emit(_csv_text(header, rows), args.output)
    else:
        payload = {
            "command": "qed-scan",
            "units": args.units,
            "wavelength_m": args.wavelength,
            "theta": [row[0] for row in rows],
            "dcs_product": [row[1] for row in rows],
            "dcs_psi_plus": [row[2] for row in rows],
            "dcs_psi_minus": [row[3] for row in rows],
        }
        _emit(_json_text(payload), args.output)
    return 0


def _run_coincidence_scan(args, parser) -> int:
    if not args.delta_min < args.delta_max:
        parser.error("need --delta-min < --delta-max")
    if args.samples < 2:
        parser.error("--samples must be at least 2")
    try:
        state = TwoPhotonPolState.from_angles(args.phi, args.rho)
    except ValueError as error:
        parser.error(str(error))
    grid = np.linspace(args.delta_min, args.delta_max, args.samples)
    rows = [[float(delta), coincidence_factor(CoincidenceQuery(float(delta), state))]
            for delta in grid]
    if args.format == "csv":
        _emit(_csv_text(["delta", "factor"], rows), args.output)
    else:
        payload = {
            "command": "coincidence-scan",
            "phi": args.phi,
            "rho": args.rho,
            "delta": [row[0] for row in rows],
            "factor": [row[1] for row in rows],
        }
        _emit(_json_text(payload), args.output)
    return 0


def _run_verify(args, parser) -> int:
    if not 0.0 < args.theta_min < args.theta_max < math.pi:
        parser.error("need 0 < --theta-min < --theta-max < pi")
    if args.samples < 2:
        parser.error("--samples must be at least 2")
    report = build_verify_report(
        theta_min=args.theta_min,
        theta_max=args.theta_max,
        samples=args.samples,
        tolerance=args.tolerance,
        gauge_tolerance=args.gauge_tolerance,
        vertex_perturbation=args.perturb_vertex,
        seed=args.seed,
    )
    if args.format == "json":
        payload = {
            "command": "verify",
            "passed": report.passed,
            "samples": report.samples,
            "theta_min": report.theta_min,
            "theta_max": report.theta_max,
            "tolerance": report.tolerance,
            "gauge_tolerance": report.gauge_tolerance,
            "pattern_deviations": report.pattern_deviations,
            "identically_zero": list(report.zero_patterns),
            "gauge_deviation": report.gauge_deviation,
        }
        _emit(_json_text(payload), args.output)
    else:
        _emit(_verify_text(report), args.output)
    return 0 if report.passed else 1


def _run_si(args, parser) -> int:
    if not args.wavelength > 0.0:
        parser.error("--lambda must be positive")
    if args.theory == "pqg":
        # Peak of the right-angle Bell-state rate: reduced value 32 times the
        # Planck-length conversion.
        value = si_convert(32.0, args.wavelength)
        label = "32 l_P^4 / lambda^2"
    else:
        value = dcs_entangled_qed(0.0, TwoPhotonPolState.psi_plus(), args.wavelength)
        label = "loop prefactor times the maximal angle bracket"
    exponent = math.floor(math.log10(value))
    if args.format == "json":
        payload = {
            "command": "si",
            "theory": args.theory,
            "wavelength_m": args.wavelength,
            "dcs_scale_m2_sr": value,
            "exponent": exponent,
        }
        _emit(_json_text(payload), args.output)
    else:
        text = (f"theory: {args.theory}\n"
                f"wavelength_m: {_fmt(args.wavelength)}\n"
                f"scale: {label}\n"
                f"dcs_scale_m2_sr: {value:.6e}\n"
                f"exponent: {exponent}\n")
        _emit(text, args.output)
    return 0


# ---------------------------------------------------------------------------
# parser assembly

def _add_theta_options(sub, theta_min=DEFAULT_THETA_MIN, theta_max=DEFAULT_THETA_MAX):
    sub.add_argument("--theta-min", type=float, default=theta_min,
                     help="grid start in radians (default %(default).6g)")
    sub.add_argument("--theta-max", type=float, default=theta_max,
                     help="grid end in radians (default %(default).6g)")
    sub.add_argument("--samples", type=int, default=100,
                     help="number of grid points (default %(default)s)")


def _add_output_options(sub, formats=("csv", "json")):
    sub.add_argument("--format", choices=formats, default=formats[0],
                     help="output format (default %(default)s)")
    sub.add_argument("--output", metavar="PATH", default=None,
                     help="write to PATH instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gravscatter",
        description="Graviton-mediated photon-photon scattering cross sections "
                    "for polarization-entangled photon pairs.",
    )
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")

    amp = sub.add_parser("amp-table",
                         help="tabulate the 16 closed-form amplitude elements")
    _add_theta_options(amp)
    _add_output_options(amp)
    amp.set_defaults(handler=_run_amp_table)

    dcs = sub.add_parser("dcs-scan",
                         help="gravitational cross sections for the canonical states")
    _add_theta_options(dcs)
    dcs.add_argument("--units", choices=("reduced", "si", "figure3"),
                     default="reduced",
                     help="reduced l_P^4/lambda^2 multiples, SI m^2/sr, or the "
                          "reduced values divided by 80 (default %(default)s)")
    dcs.add_argument("--lambda", dest="wavelength", type=float, default=None,
                     metavar="METERS", help="photon wavelength, needed for SI units")
    _add_output_options(dcs)
    dcs.set_defaults(handler=_run_dcs_scan)

    qed = sub.add_parser("qed-scan",
                         help="electron-loop cross sections for the canonical states")
    _add_theta_options(qed)
    qed.add_argument("--units", choices=("reduced", "si", "figure3"), default="si",
                     help="prefactor-stripped bracket or SI m^2/sr (default %(default)s)")
    qed.add_argument("--lambda", dest="wavelength", type=float, default=None,
                     metavar="METERS", help="photon wavelength, needed for SI units")
    _add_output_options(qed)
    qed.set_defaults(handler=_run_qed_scan)

    coin = sub.add_parser("coincidence-scan",
                          help="joint-detection modulation versus the phase delta")
    coin.add_argument("--phi", type=float, default=math.pi / 4,
                      help="superposition angle in [0, pi/2] (default pi/4)")
    coin.add_argument("--rho", type=float, default=0.0,
                      help="relative phase in [-pi/2, 3pi/2) (default %(default)s)")
    coin.add_argument("--delta-min", type=float, default=0.0,
                      help="phase grid start (default %(default)s)")
    coin.add_argument("--delta-max", type=float, default=2.0 * math.pi,
                      help="phase grid end (default 2 pi)")
    coin.add_argument("--samples", type=int, default=100,
                      help="number of grid points (default %(default)s)")
    _add_output_options(coin)
    coin.set_defaults(handler=_run_coincidence_scan)

    verify = sub.add_parser("verify",
                            help="replay the diagram evaluation against the closed forms")
    _add_theta_options(verify, theta_min=VERIFY_THETA_MIN, theta_max=VERIFY_THETA_MAX)
    verify.add_argument("--tolerance", type=float, default=1e-9,
                        help="per-element relative tolerance (default %(default)g)")
    verify.add_argument("--gauge-tolerance", type=float, default=1e-9,
                        help="gauge-shift relative tolerance (default %(default)g)")
    verify.add_argument("--perturb-vertex", type=float, default=0.0,
                        help="rescale one vertex term by (1+x); a nonzero value "
                             "must make the gate fail")
    verify.add_argument("--seed", type=int, default=20,
                        help="seed for the gauge-shift draws (default %(default)s)")
    _add_output_options(verify, formats=("text", "json"))
    verify.set_defaults(handler=_run_verify)

    si = sub.add_parser("si", help="SI magnitude summary at a given wavelength")
    si.add_argument("--lambda", dest="wavelength", type=float, required=True,
                    metavar="METERS", help="photon wavelength")
    si.add_argument("--theory", choices=("pqg", "qed"), default="pqg",
                    help="which scale to report (default %(default)s)")
    _add_output_options(si, formats=("text", "json"))
    si.set_defaults(handler=_run_si)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    return args.handler(args, parser)


if __name__ == "__main__":
    sys.exit(main())
