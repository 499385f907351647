"""Flux-controlled two-transmon gate simulation in the time-dependent
dispersive frame: model-variant propagators, gate-fidelity statistics, and
the second-order Magnus closed form for the fidelity difference."""

from ._core import (
    Experiment,
    __version__,
    annihilation,
    default_config,
    gate_fidelity,
    sample_angles,
    target_unitary,
    unitarity_defect,
)

__all__ = [
    "Experiment",
    "__version__",
    "annihilation",
    "default_config",
    "gate_fidelity",
    "sample_angles",
    "target_unitary",
    "unitarity_defect",
]
