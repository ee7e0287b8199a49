"""Few-photon pulses scattering off a two-level system in a 1D waveguide."""

__version__ = "0.1.0"
