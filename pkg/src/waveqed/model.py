"""Physical parameters, Gaussian pulse amplitudes, and free-field quantities.

Conventions used throughout the package:

* hbar = 1; momenta are wavenumbers, energies are frequencies.
* The qubit sits at x = 0 and couples with strength ``g`` to right-moving
  (transmitted, "l") and left-moving (reflected, "r") waveguide continua
  with linearized dispersion +/- v_g * p around the carrier.
* The decay rate into the guide is ``gamma = 4 pi g^2 / v_g``.
* Ingoing light moves to the right.  A single-photon wavepacket has the
  Gaussian momentum amplitude

      alpha(p) = (w^(1/2) / pi^(1/4)) exp(-w^2 p^2 / 2 - i p x0),   x0 < 0,

  and its delayed copy is beta(p) = alpha(p) exp(i p L), i.e. a pulse of
  identical shape centered a distance L behind the first one.
* The two-photon input is nu * b_dag(beta) b_dag(alpha) |vac> with
  nu = (1 + |chi|^2)^(-1/2) and chi = <1_alpha|1_beta> the single-photon
  overlap.  For n_photons != 2 the input is the n-photon Fock state built
  from alpha alone (L must be zero).

Everything here is a pure function of its value arguments and therefore
thread-safe.  Units are whatever consistent system the caller chooses; the
CLI layer nondimensionalizes to w = v_g = 1 (so the pulse bandwidth
Omega = v_g / w is 1).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

FOUR_PI = 4.0 * np.pi

# Pulse must start essentially clear of the qubit so that all correlators
# can be initialized to zero at t = 0 (amplitude at the origin <= e^-18).
MIN_OFFSET_WIDTHS = 6.0


class ConfigurationError(ValueError):
    """Invalid physical parameters, grids, or run configuration."""


@dataclass(frozen=True)
class ModelParams:
    """Waveguide-qubit constants.

    gamma : qubit decay rate into the guide (frequency units)
    delta : qubit detuning from the carrier frequency
    v_g   : group velocity (length / time), > 0
    """

    gamma: float
    delta: float = 0.0
    v_g: float = 1.0

    def __post_init__(self):
        problems = self.validate()
        if problems:
            raise ConfigurationError("; ".join(problems))

    def validate(self) -> list[str]:
        out = []
        if not self.gamma >= 0.0:
            out.append(f"gamma must be >= 0, got {self.gamma}")
        if not self.v_g > 0.0:
            out.append(f"v_g must be > 0, got {self.v_g}")
        return out

    @property
    def g(self) -> float:
        """Coupling strength, g = sqrt(gamma * v_g / 4 pi)."""
        return np.sqrt(self.gamma * self.v_g / FOUR_PI)

    def bandwidth(self, spec: "PulseSpec") -> float:
        """Spectral width Omega = v_g / w of the ingoing pulses."""
        return self.v_g / spec.w


@dataclass(frozen=True)
class PulseSpec:
    """Geometry of the ingoing Gaussian wavepackets.

    w         : spatial 1/e half-width (length), > 0
    x0        : initial center of the leading pulse, < 0 and |x0| >= 6 w
    L         : separation of the trailing pulse, >= 0
    n_photons : 1 (single alpha photon), 2 (alpha-beta pair), or n >= 3
                (identical wavepackets, requires L = 0)
    """

    w: float
    x0: float
    L: float = 0.0
    n_photons: int = 2

    def __post_init__(self):
        problems = self.validate()
        if problems:
            raise ConfigurationError("; ".join(problems))

    def validate(self) -> list[str]:
        out = []
        if not self.w > 0.0:
            out.append(f"pulse width w must be > 0, got {self.w}")
        if not self.x0 < 0.0:
            out.append(f"pulse center x0 must be < 0, got {self.x0}")
        if not self.L >= 0.0:
            out.append(f"pulse separation L must be >= 0, got {self.L}")
        if self.w > 0.0 and abs(self.x0) < MIN_OFFSET_WIDTHS * self.w:
            out.append(
                f"|x0| must be >= {MIN_OFFSET_WIDTHS:g} w so the pulse is "
                f"clear of the qubit at t = 0 (got x0 = {self.x0}, w = {self.w})"
            )
        if not (isinstance(self.n_photons, (int, np.integer)) and self.n_photons >= 1):
            out.append(f"n_photons must be a positive integer, got {self.n_photons!r}")
        elif self.n_photons != 2 and self.L != 0.0:
            out.append("pulse separation L is only meaningful for n_photons = 2")
        return out


@dataclass(frozen=True)
class TimeGrid:
    """Uniform time grid t_k = k dt, k = 0..K, with K dt = t_max exactly."""

    t_max: float
    dt: float

    def __post_init__(self):
        problems = self.validate()
        if problems:
            raise ConfigurationError("; ".join(problems))

    def validate(self) -> list[str]:
        out = []
        if not self.dt > 0.0:
            out.append(f"dt must be > 0, got {self.dt}")
        elif not self.t_max > 0.0:
            out.append(f"t_max must be > 0, got {self.t_max}")
        else:
            k = self.t_max / self.dt
            if abs(k - round(k)) > 1e-9 * max(k, 1.0):
                out.append(
                    f"t_max = {self.t_max} is not an integer multiple of dt = {self.dt}"
                )
        return out

    @property
    def n_steps(self) -> int:
        return int(round(self.t_max / self.dt))

    @property
    def times(self) -> np.ndarray:
        return np.arange(self.n_steps + 1) * self.dt

    @classmethod
    def from_step(cls, t_max: float, dt: float) -> "TimeGrid":
        """Grid with the given step, t_max rounded up to the next node."""
        n = max(1, int(np.ceil(t_max / dt - 1e-12)))
        return cls(t_max=n * dt, dt=dt)

    @classmethod
    def auto(
        cls,
        params: ModelParams,
        spec: PulseSpec,
        t_max: float,
        points_per_scale: int = 50,
    ) -> "TimeGrid":
        """Step resolving the fastest of pulse transit, decay, and detuning.

        dt = min(w/v_g, 1/gamma, 1/(|delta| + Omega)) / points_per_scale.
        """
        omega = params.bandwidth(spec)
        scales = [spec.w / params.v_g, 1.0 / (abs(params.delta) + omega)]
        if params.gamma > 0.0:
            scales.append(1.0 / params.gamma)
        return cls.from_step(t_max, min(scales) / points_per_scale)


# ----------------------------------------------------------------------
# Momentum-space amplitudes and their integrals
# ----------------------------------------------------------------------

def default_momentum_grid(spec: PulseSpec, span: float = 8.0, n: int = 513) -> np.ndarray:
    """Uniform grid on [-span/w, span/w]; the amplitude tail there is e^-32."""
    return np.linspace(-span / spec.w, span / spec.w, n)


def amplitude_alpha(p, spec: PulseSpec) -> np.ndarray:
    """Momentum amplitude of the leading pulse."""
    p = np.asarray(p, dtype=float)
    pref = np.sqrt(spec.w) / np.pi ** 0.25
    return pref * np.exp(-0.5 * (spec.w * p) ** 2 - 1j * p * spec.x0)


def amplitude_beta(p, spec: PulseSpec) -> np.ndarray:
    """Momentum amplitude of the trailing pulse, alpha(p) e^{i p L}."""
    p = np.asarray(p, dtype=float)
    return amplitude_alpha(p, spec) * np.exp(1j * p * spec.L)


def envelope_a(t, spec: PulseSpec, v_g: float = 1.0) -> np.ndarray:
    """Closed-form pulse envelope A(t) = integral dp e^{-i v_g p t} alpha(p).

    For the Gaussian family this is real:
    A(t) = sqrt(2) pi^(1/4) w^(-1/2) exp(-(x0 + v_g t)^2 / 2 w^2).
    Defined for all real t (no support clipping).
    """
    t = np.asarray(t, dtype=float)
    pref = np.sqrt(2.0) * np.pi ** 0.25 / np.sqrt(spec.w)
    return pref * np.exp(-((spec.x0 + v_g * t) ** 2) / (2.0 * spec.w ** 2))


def envelope_b(t, spec: PulseSpec, v_g: float = 1.0) -> np.ndarray:
    """Envelope of the trailing pulse, B(t) = A(t - L / v_g)."""
    t = np.asarray(t, dtype=float)
    return envelope_a(t - spec.L / v_g, spec, v_g)


def envelope_a_quad(t, spec: PulseSpec, v_g: float = 1.0, p=None) -> np.ndarray:
    """Quadrature path for A(t); must agree with envelope_a to ~1e-8."""
    if p is None:
        p = default_momentum_grid(spec)
    t = np.atleast_1d(np.asarray(t, dtype=float))
    phases = np.exp(-1j * v_g * np.outer(t, p))
    vals = np.trapezoid(phases * amplitude_alpha(p, spec), p, axis=1)
    return vals if vals.size > 1 else vals[0]


def envelope_b_quad(t, spec: PulseSpec, v_g: float = 1.0, p=None) -> np.ndarray:
    if p is None:
        p = default_momentum_grid(spec)
    t = np.atleast_1d(np.asarray(t, dtype=float))
    phases = np.exp(-1j * v_g * np.outer(t, p))
    vals = np.trapezoid(phases * amplitude_beta(p, spec), p, axis=1)
    return vals if vals.size > 1 else vals[0]


def overlap_chi(spec: PulseSpec, p=None) -> complex:
    """Single-photon overlap chi = integral dp alpha*(p) beta(p), by quadrature.

    Kept as a quadrature so non-Gaussian amplitudes could reuse the machinery;
    for Gaussians chi is real and equals exp(-L^2 / 4 w^2).
    """
    if p is None:
        # >= 32 points per oscillation period 2 pi / L of the integrand
        n = max(513, 1 + int(np.ceil(82.0 * spec.L / spec.w)))
        p = default_momentum_grid(spec, n=n)
    integrand = np.conj(amplitude_alpha(p, spec)) * amplitude_beta(p, spec)
    return complex(np.trapezoid(integrand, p))


def normalization_nu(spec: PulseSpec, chi: complex | None = None) -> float:
    """Two-photon normalization nu = (1 + |chi|^2)^(-1/2)."""
    if chi is None:
        chi = overlap_chi(spec)
    return 1.0 / np.sqrt(1.0 + abs(chi) ** 2)


# ----------------------------------------------------------------------
# Position-space wavefunctions and free-field quantities
# ----------------------------------------------------------------------

def _wavefunction(x, spec: PulseSpec) -> np.ndarray:
    """phi(x) = (2 pi)^(-1/2) integral dp e^{ipx} alpha(p); unit L2 norm."""
    x = np.asarray(x, dtype=float)
    pref = 1.0 / (np.pi ** 0.25 * np.sqrt(spec.w))
    return pref * np.exp(-((x - spec.x0) ** 2) / (2.0 * spec.w ** 2))


def initial_density(x, spec: PulseSpec) -> np.ndarray:
    """Photon density of the input state at t = 0; integrates to n_photons.

    For the two-photon pair state the overlap adds an interference bump at
    the midpoint x0 - L/2 on top of the two single-photon humps.
    """
    x = np.asarray(x, dtype=float)
    if spec.n_photons != 2:
        return spec.n_photons * _wavefunction(x, spec) ** 2
    chi = overlap_chi(spec)
    nu2 = 1.0 / (1.0 + abs(chi) ** 2)
    phi_a = _wavefunction(x, spec)
    phi_b = _wavefunction(x + spec.L, spec)
    cross = 2.0 * np.real(chi * phi_a * np.conj(phi_b))
    return nu2 * (phi_a ** 2 + phi_b ** 2 + cross)


def free_phase_space(x, p, t, spec: PulseSpec, v_g: float = 1.0) -> np.ndarray:
    """Phase-space density of the freely propagating input; >= 0 for Gaussians.

    A function of (x - v_g t, p) only.  Broadcasts over x and p.  Momentum
    integration recovers initial_density shifted by v_g t; the (x, p) double
    integral equals n_photons.
    """
    x = np.asarray(x, dtype=float)
    p = np.asarray(p, dtype=float)
    big_x = x - spec.x0 - v_g * np.asarray(t, dtype=float)
    env_p = np.exp(-((spec.w * p) ** 2))
    if spec.n_photons != 2:
        return spec.n_photons / np.pi * env_p * np.exp(-(big_x / spec.w) ** 2)
    chi = overlap_chi(spec)
    nu2 = 1.0 / (1.0 + abs(chi) ** 2)
    l_ = spec.L
    terms = (
        np.exp(-((big_x / spec.w) ** 2))
        + np.exp(-(((big_x + l_) / spec.w) ** 2))
        + 2.0 * np.cos(p * l_) * chi.real * np.exp(-(((big_x + l_ / 2.0) / spec.w) ** 2))
    )
    return nu2 / np.pi * env_p * terms
